#include "doctest.h"

#include <stdexcept>
#include "qrcss/css.hpp"

#include <cmath>

using namespace qrcss;

TEST_CASE("steane code from the extended [8,4,4]") {
    CssCode q = css_from_self_dual(extend_parity(build_qr(7)));
    CHECK(q.n == 7);
    CHECK(q.k == 1);
    CHECK(q.sx.rows() == 3);
    CHECK(q.sz == q.sx);
    CHECK(q.lx == BitVector::ones(7));
    CHECK(q.lz == BitVector::ones(7));
    CssValidation v = validate_css(q);
    CHECK(v.all_pass);
    CHECK(v.recomputed_k == 1);
}

TEST_CASE("golay and larger members") {
    CssCode q23 = css_from_self_dual(extend_parity(build_qr(23)));
    CHECK(q23.n == 23);
    CHECK(q23.k == 1);
    CHECK(q23.sx.rows() == 11);
    CHECK(validate_css(q23).all_pass);

    CssCode q47 = css_from_self_dual(extend_parity(build_qr(47)));
    CHECK(q47.n == 47);
    CHECK(q47.k == 1);
    CHECK(q47.sx.rows() == 23);
    CHECK(validate_css(q47).all_pass);
}

TEST_CASE("construction rejects bad inputs") {
    CHECK_THROWS_AS(css_from_self_dual(build_qr(7)), std::invalid_argument);  // not self-dual

    // self-dual but only singly even: span{11}
    ClassicalCode rep2;
    rep2.n = 2;
    rep2.generator = BitMatrix::from_strings({"11"});
    CHECK(is_self_dual(rep2));
    CHECK_THROWS_AS(css_from_self_dual(rep2), std::invalid_argument);
}

TEST_CASE("validate_css flags a logical living in the stabilizer span") {
    CssCode q = css_from_self_dual(extend_parity(build_qr(7)));
    q.lx = q.sx.row(0);
    CssValidation v = validate_css(q);
    CHECK_FALSE(v.all_pass);
    CHECK_FALSE(v.check("lx not in stabilizer span"));
    CHECK_FALSE(v.check("lx anticommutes with lz"));
}

TEST_CASE("trivial one-qubit code validates") {
    CssCode q;
    q.n = 1;
    q.sx = BitMatrix(0, 1);
    q.sz = BitMatrix(0, 1);
    q.lx = BitVector::ones(1);
    q.lz = BitVector::ones(1);
    q.k = 1;
    CssValidation v = validate_css(q);
    CHECK(v.all_pass);
    CHECK(v.recomputed_k == 1);
}

TEST_CASE("gamma exponent") {
    CssCode q15;
    q15.n = 15;
    q15.k = 1;
    // log_3(15), frozen from independent arithmetic: ln 15 / ln 3
    CHECK(gamma_exponent(q15, 3) == doctest::Approx(2.4649735207).epsilon(1e-9));
    CHECK(std::round(gamma_exponent(q15, 3) * 1000) / 1000 == 2.465);

    CssCode q49;
    q49.n = 49;
    q49.k = 1;
    // log_5(49) = 2 ln 7 / ln 5
    CHECK(gamma_exponent(q49, 5) == doctest::Approx(2.4181239102).epsilon(1e-9));
    CHECK(std::round(gamma_exponent(q49, 5) * 1000) / 1000 == 2.418);

    CssCode flat;
    flat.n = 6;
    flat.k = 6;
    CHECK(gamma_exponent(flat, 4) == 0.0);

    CHECK_THROWS_AS(gamma_exponent(q15, 1), std::invalid_argument);
}
