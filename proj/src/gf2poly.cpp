#include "qrcss/gf2poly.hpp"

#include <bit>
#include <stdexcept>

namespace qrcss {

void Gf2Poly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Gf2Poly Gf2Poly::x_pow(size_t k) {
    Gf2Poly p;
    p.w_.assign(k / 64 + 1, 0);
    p.w_[k / 64] = uint64_t(1) << (k % 64);
    return p;
}

Gf2Poly Gf2Poly::x_n_minus_1(size_t n) {
    Gf2Poly p = x_pow(n);
    p.flip_coeff(0);
    return p;
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<size_t> exps) {
    Gf2Poly p;
    for (size_t e : exps) p.flip_coeff(e);
    return p;
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<size_t>& exps) {
    Gf2Poly p;
    for (size_t e : exps) p.flip_coeff(e);
    return p;
}

long Gf2Poly::degree() const {
    if (w_.empty()) return -1;
    return long(64 * (w_.size() - 1) + 63 - std::countl_zero(w_.back()));
}

bool Gf2Poly::coeff(size_t i) const {
    size_t q = i / 64;
    return q < w_.size() && ((w_[q] >> (i % 64)) & 1);
}

void Gf2Poly::flip_coeff(size_t i) {
    size_t q = i / 64;
    if (q >= w_.size()) w_.resize(q + 1, 0);
    w_[q] ^= uint64_t(1) << (i % 64);
    trim();
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly r;
    r.w_.resize(std::max(w_.size(), o.w_.size()), 0);
    for (size_t i = 0; i < r.w_.size(); i++) {
        uint64_t a = i < w_.size() ? w_[i] : 0;
        uint64_t b = i < o.w_.size() ? o.w_[i] : 0;
        r.w_[i] = a ^ b;
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    Gf2Poly r;
    r.w_.assign(w_.size() + o.w_.size(), 0);
    for (size_t i = 0; i <= size_t(degree()); i++) {
        if (!coeff(i)) continue;
        // r += o << i
        size_t wq = i / 64, wr = i % 64;
        for (size_t j = 0; j < o.w_.size(); j++) {
            r.w_[j + wq] ^= o.w_[j] << wr;
            if (wr) r.w_[j + wq + 1] ^= o.w_[j] >> (64 - wr);
        }
    }
    r.trim();
    return r;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& num, const Gf2Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("Gf2Poly::divmod: division by zero");
    Gf2Poly rem = num, quot;
    long dd = den.degree();
    while (rem.degree() >= dd) {
        size_t shift = size_t(rem.degree() - dd);
        quot.flip_coeff(shift);
        rem = rem + den * x_pow(shift);
    }
    return {quot, rem};
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (long i = degree(); i >= 0; i--) {
        if (!coeff(size_t(i))) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("poly_gcd: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Gf2Poly r = Gf2Poly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;  // leading coefficient is always 1 over GF(2)
}

Gf2Poly poly_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) {
    return Gf2Poly::divmod(a * b, m).second;
}

bool poly_divides(const Gf2Poly& d, const Gf2Poly& n) {
    if (d.is_zero()) return n.is_zero();
    return Gf2Poly::divmod(n, d).second.is_zero();
}

}  // namespace qrcss
