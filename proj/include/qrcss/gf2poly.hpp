#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qrcss {

/// Dense polynomial over GF(2), coefficients packed lowest-degree first.
/// Degrees stay small here (below a QR prime length), so schoolbook
/// arithmetic is plenty.
class Gf2Poly {
  public:
    Gf2Poly() = default;  // zero polynomial
    static Gf2Poly one() { return x_pow(0); }
    static Gf2Poly x_pow(size_t k);
    /// x^n + 1 (equal to x^n - 1 over GF(2)).
    static Gf2Poly x_n_minus_1(size_t n);
    static Gf2Poly from_exponents(std::initializer_list<size_t> exps);
    static Gf2Poly from_exponents(const std::vector<size_t>& exps);

    bool is_zero() const { return w_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const;
    bool coeff(size_t i) const;
    void flip_coeff(size_t i);

    Gf2Poly operator+(const Gf2Poly& o) const;
    Gf2Poly operator*(const Gf2Poly& o) const;
    bool operator==(const Gf2Poly&) const = default;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& num, const Gf2Poly& den);

    std::string to_string() const;  // e.g. "x^3 + x + 1"

  private:
    std::vector<uint64_t> w_;  // normalized: highest word nonzero
    void trim();
};

/// Monic gcd; rejects gcd(0, 0).
Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b);
/// a * b mod m.
Gf2Poly poly_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m);
bool poly_divides(const Gf2Poly& d, const Gf2Poly& n);

}  // namespace qrcss
