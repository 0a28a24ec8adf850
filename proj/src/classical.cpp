#include "qrcss/classical.hpp"

#include <stdexcept>

#include "qrcss/gf2poly.hpp"

namespace qrcss {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::PaperTable: return "paper-table";
        case Provenance::Certified: return "certified";
        case Provenance::Witnessed: return "witnessed";
        case Provenance::Unverified: return "unverified";
    }
    return "?";
}

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; d++)
        if (p % d == 0) return false;
    return true;
}

ClassicalCode build_qr(uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("build_qr: p must be prime");
    uint64_t m8 = p % 8;
    if (m8 != 1 && m8 != 7)
        throw std::invalid_argument("build_qr: need p = +-1 mod 8 (2 must be a quadratic residue)");

    // Nonzero quadratic residues mod p.
    std::vector<bool> is_qr(p, false);
    for (uint64_t i = 1; i < p; i++) is_qr[(i * i) % p] = true;
    std::vector<size_t> qr_exps;
    for (uint64_t r = 1; r < p; r++)
        if (is_qr[r]) qr_exps.push_back(size_t(r));

    // theta(x) = sum of x^r over residues r is an idempotent mod x^p - 1
    // (2 is a residue, so squaring permutes the exponent set). gcd with
    // x^p - 1 extracts the generator polynomial of the cyclic code it spans;
    // exactly one of theta, 1 + theta yields the degree-(p-1)/2 divisor.
    Gf2Poly theta = Gf2Poly::from_exponents(qr_exps);
    Gf2Poly xp1 = Gf2Poly::x_n_minus_1(size_t(p));
    long want = long((p - 1) / 2);
    Gf2Poly g1 = poly_gcd(theta, xp1);
    Gf2Poly g = g1;
    if (g1.degree() != want) {
        Gf2Poly g2 = poly_gcd(theta + Gf2Poly::one(), xp1);
        if (g2.degree() != want)
            throw std::runtime_error("build_qr: no degree-(p-1)/2 idempotent divisor found");
        g = g2;
    }

    size_t n = size_t(p);
    size_t k = (n + 1) / 2;
    BitMatrix gen(0, n);
    for (size_t i = 0; i < k; i++) {
        BitVector row(n);
        for (size_t j = 0; j <= size_t(g.degree()); j++)
            if (g.coeff(j)) row.set(i + j, true);  // deg g + k - 1 < p: no wraparound
        gen.append_row(std::move(row));
    }
    ClassicalCode code;
    code.n = n;
    code.generator = std::move(gen);
    code.label = "qr" + std::to_string(p);
    return code;
}

ClassicalCode extend_parity(const ClassicalCode& c) {
    ClassicalCode out;
    out.n = c.n + 1;
    out.generator = BitMatrix(0, c.n + 1);
    for (size_t i = 0; i < c.generator.rows(); i++) {
        const BitVector& r = c.generator.row(i);
        out.generator.append_row(r.appended(r.weight() & 1));
    }
    out.label = c.label + "e";
    return out;
}

ClassicalCode puncture(const ClassicalCode& c, size_t position) {
    if (position >= c.n) throw std::out_of_range("puncture: position out of range");
    if (c.n == 1) throw std::invalid_argument("puncture: refusing to puncture to length 0");
    BitMatrix m(0, c.n - 1);
    for (size_t i = 0; i < c.generator.rows(); i++)
        m.append_row(c.generator.row(i).erased(position));
    ClassicalCode out;
    out.n = c.n - 1;
    out.generator = rref(m).mat;  // re-reduce: puncturing can drop rank
    out.label = c.label + "p";
    return out;
}

ClassicalCode dual(const ClassicalCode& c) {
    ClassicalCode out;
    out.n = c.n;
    out.generator = kernel_basis(c.generator);
    out.label = c.label + "d";
    return out;
}

bool is_self_dual(const ClassicalCode& c) {
    return rowspace_equal(c.generator, dual(c).generator);
}

bool is_doubly_even_classical(const ClassicalCode& c) {
    const BitMatrix& g = c.generator;
    for (size_t i = 0; i < g.rows(); i++) {
        if (g.row(i).weight() % 4 != 0) return false;
        for (size_t j = i + 1; j < g.rows(); j++)
            if (overlap2(g.row(i), g.row(j)) % 2 != 0) return false;
    }
    return true;
}

bool is_weakly_self_dual(const ClassicalCode& c) {
    // the code sits inside its own dual: every pair of generator rows
    // (including a row with itself) has even overlap
    const BitMatrix& g = c.generator;
    for (size_t i = 0; i < g.rows(); i++)
        for (size_t j = i; j < g.rows(); j++)
            if (overlap2(g.row(i), g.row(j)) % 2 != 0) return false;
    return true;
}

size_t type2_distance_upper(size_t n) {
    if (n % 8 != 0)
        throw std::invalid_argument("type2_distance_upper: type-II lengths are multiples of 8");
    return 4 * (n / 24) + 4;
}

bool eqr_lower_holds(size_t n, size_t d) {
    return (long long)(d) * (long long)(d) - 3 * (long long)(d) + 4 >= (long long)(n);
}

FamilyBounds css_family_bounds_for_n(size_t n) {
    if (n == 0) throw std::invalid_argument("css_family_bounds_for_n: need n >= 1");
    FamilyBounds b;
    b.n = n;
    b.d_upper = 4 * ((n + 1) / 24) + 3;
    b.d_lower_witness =
        (long long)(b.d_upper) * (long long)(b.d_upper) - 3 * (long long)(b.d_upper) + 4 -
        (long long)(n);
    return b;
}

FamilyBounds css_family_bounds_for_d(size_t d) {
    if (d == 0) throw std::invalid_argument("css_family_bounds_for_d: need d >= 1");
    FamilyBounds b;
    b.d_upper = d;
    b.n = d * d - d + 1;  // max length compatible with the family inequality
    b.d_lower_witness = (long long)(d) * (long long)(d) - 3 * (long long)(d) + 4 -
                        (long long)(b.n);
    return b;
}

std::vector<uint64_t> qr_prime_scan(uint64_t limit) {
    std::vector<uint64_t> out;
    for (uint64_t p = 7; p <= limit; p += 8)
        if (is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace qrcss
