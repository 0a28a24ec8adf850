#include "doctest.h"

#include <stdexcept>
#include "qrcss/css.hpp"
#include "qrcss/divisibility.hpp"

using namespace qrcss;

namespace {

// the 15-qubit quantum Reed-Muller X-stabilizers: row i marks the numbers
// 1..15 whose i-th binary digit is set; weight 8 each
BitMatrix rm15_sx() {
    BitMatrix m(4, 15);
    for (size_t i = 0; i < 4; i++)
        for (size_t j = 1; j <= 15; j++)
            if ((j >> i) & 1) m.row(i).set(j - 1, true);
    return m;
}

// exhaustive span oracle: every element weight divisible by `mod`
bool span_divisible(const BitMatrix& m, unsigned mod) {
    BitMatrix basis = rref(m).mat;
    size_t r = basis.rows();
    REQUIRE(r <= 22);
    BitVector cur(m.cols());
    for (uint64_t i = 1; i < (uint64_t(1) << r); i++) {
        int bit = 0;
        uint64_t x = i;
        while (!(x & 1)) {
            x >>= 1;
            bit++;
        }
        cur ^= basis.row(size_t(bit));
        if (cur.weight() % mod != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("doubly even span checks") {
    CssCode steane = css_from_self_dual(extend_parity(build_qr(7)));
    CHECK(is_doubly_even_span(steane.sx).passed);

    BitMatrix bad = BitMatrix::from_strings({"1100"});
    DivisibilityReport rep = is_doubly_even_span(bad);
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].rows == std::vector<size_t>{0});
    CHECK(rep.violations[0].residue == 2);

    CHECK(is_doubly_even_span(BitMatrix(0, 5)).passed);
}

TEST_CASE("triply even span checks") {
    CHECK(is_triply_even_span(rm15_sx()).passed);
    CHECK(is_triply_even_span(BitMatrix(0, 3)).passed);

    CssCode golay = css_from_self_dual(extend_parity(build_qr(23)));
    DivisibilityReport rep = is_triply_even_span(golay.sx);
    CHECK_FALSE(rep.passed);  // the Golay dual has weight-12 rows
    CHECK(is_doubly_even_span(golay.sx).passed);
}

TEST_CASE("triply even implies doubly even") {
    BitMatrix m = rm15_sx();
    CHECK(is_triply_even_span(m).passed);
    CHECK(is_doubly_even_span(m).passed);
}

TEST_CASE("triorthogonality") {
    BitMatrix g = rm15_sx();
    g.append_row(BitVector::ones(15));  // logical as the odd row
    CHECK(is_triorthogonal(g, {4}));
    CHECK_FALSE(is_triorthogonal(g, {}));  // row 4 has odd weight but is not designated

    BitMatrix two = BitMatrix::from_strings({"1100", "0110"});
    CHECK_FALSE(is_triorthogonal(two, {}));  // single shared position

    CHECK(is_triorthogonal(BitMatrix(0, 4), {}));
    CHECK_THROWS_AS(is_triorthogonal(two, {5}), std::out_of_range);
}

TEST_CASE("logical overlap divisibility") {
    CssCode steane = css_from_self_dual(extend_parity(build_qr(7)));
    CHECK(logical_overlap_divisibility(steane.sx, steane.lx, 2));

    CHECK(logical_overlap_divisibility(rm15_sx(), BitVector::ones(15), 4));

    // a single-bit overlap against one generator breaks modulus 2
    BitMatrix m = BitMatrix::from_strings({"1111000"});
    BitVector lx = BitVector::from_string("1000111");
    CHECK_FALSE(logical_overlap_divisibility(m, lx, 2));
}

TEST_CASE("span sampling agrees with the generator criterion") {
    CssCode steane = css_from_self_dual(extend_parity(build_qr(7)));
    Splitmix64 rng(99);
    for (int s = 0; s < 10000; s++)
        CHECK(random_span_element(steane.sx, rng).weight() % 4 == 0);
    BitMatrix m = rm15_sx();
    for (int s = 0; s < 10000; s++)
        CHECK(random_span_element(m, rng).weight() % 8 == 0);
}

TEST_CASE("generator criterion equals exhaustive span enumeration") {
    // structured and random self-orthogonal matrices, both outcomes exercised
    Splitmix64 rng(2024);
    int doubly_pass = 0, doubly_fail = 0;
    for (int trial = 0; trial < 25; trial++) {
        size_t cols = 6 + rng.below(14);
        size_t rows = 1 + rng.below(8);
        BitMatrix m(rows, cols);
        for (size_t i = 0; i < rows; i++)
            for (size_t j = 0; j < cols; j++)
                if (rng.next() & 1) m.row(i).set(j, true);
        // duplicate columns to force self-orthogonality: v -> (v|v)
        BitMatrix so(rows, 2 * cols);
        for (size_t i = 0; i < rows; i++)
            for (size_t j = 0; j < cols; j++)
                if (m.row(i).get(j)) {
                    so.row(i).set(j, true);
                    so.row(i).set(cols + j, true);
                }
        CHECK(is_doubly_even_span(so).passed == span_divisible(so, 4));
        CHECK(is_triply_even_span(so).passed == span_divisible(so, 8));
        (is_doubly_even_span(so).passed ? doubly_pass : doubly_fail)++;
    }
    CHECK(doubly_pass > 0);  // (v|v) always has weight 0 mod 2; often mod 4 too
}
