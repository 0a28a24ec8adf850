#include "qrcss/divisibility.hpp"

#include <stdexcept>

namespace qrcss {

DivisibilityReport is_doubly_even_span(const BitMatrix& m) {
    DivisibilityReport rep;
    rep.level = 2;
    for (size_t i = 0; i < m.rows(); i++) {
        unsigned r = m.row(i).weight() % 4;
        if (r) rep.violations.push_back({{i}, r});
    }
    for (size_t i = 0; i < m.rows(); i++)
        for (size_t j = i + 1; j < m.rows(); j++) {
            unsigned r = overlap2(m.row(i), m.row(j)) % 2;
            if (r) rep.violations.push_back({{i, j}, r});
        }
    rep.passed = rep.violations.empty();
    return rep;
}

DivisibilityReport is_triply_even_span(const BitMatrix& m) {
    DivisibilityReport rep;
    rep.level = 3;
    for (size_t i = 0; i < m.rows(); i++) {
        unsigned r = m.row(i).weight() % 8;
        if (r) rep.violations.push_back({{i}, r});
    }
    for (size_t i = 0; i < m.rows(); i++)
        for (size_t j = i + 1; j < m.rows(); j++) {
            unsigned r = overlap2(m.row(i), m.row(j)) % 4;
            if (r) rep.violations.push_back({{i, j}, r});
        }
    for (size_t i = 0; i < m.rows(); i++)
        for (size_t j = i + 1; j < m.rows(); j++)
            for (size_t l = j + 1; l < m.rows(); l++) {
                unsigned r = overlap3(m.row(i), m.row(j), m.row(l)) % 2;
                if (r) rep.violations.push_back({{i, j, l}, r});
            }
    rep.passed = rep.violations.empty();
    return rep;
}

bool is_triorthogonal(const BitMatrix& m, const std::vector<size_t>& odd_rows) {
    std::vector<bool> odd(m.rows(), false);
    for (size_t i : odd_rows) {
        if (i >= m.rows()) throw std::out_of_range("is_triorthogonal: row index out of range");
        odd[i] = true;
    }
    for (size_t i = 0; i < m.rows(); i++)
        if ((m.row(i).weight() % 2 == 1) != odd[i]) return false;
    for (size_t i = 0; i < m.rows(); i++)
        for (size_t j = i + 1; j < m.rows(); j++)
            if (overlap2(m.row(i), m.row(j)) % 2 != 0) return false;
    for (size_t i = 0; i < m.rows(); i++)
        for (size_t j = i + 1; j < m.rows(); j++)
            for (size_t l = j + 1; l < m.rows(); l++)
                if (overlap3(m.row(i), m.row(j), m.row(l)) % 2 != 0) return false;
    return true;
}

BitVector random_span_element(const BitMatrix& m, Splitmix64& rng) {
    BitVector v(m.cols());
    if (m.rows() == 0) return v;
    for (size_t i = 0; i < m.rows(); i += 64) {
        uint64_t bits = rng.next();
        for (size_t j = i; j < std::min(m.rows(), i + 64); j++)
            if ((bits >> (j - i)) & 1) v ^= m.row(j);
    }
    return v;
}

bool logical_overlap_divisibility(const BitMatrix& sx, const BitVector& lx, unsigned modulus) {
    if (sx.cols() != lx.size() && sx.rows() > 0)
        throw std::invalid_argument("logical_overlap_divisibility: length mismatch");
    if (modulus == 0) return false;

    for (size_t i = 0; i < sx.rows(); i++)
        if (overlap2(lx, sx.row(i)) % modulus != 0) return false;
    if (modulus >= 4) {
        // pairwise corrections: |(s_i + s_j) & lx| stays 0 mod `modulus` only
        // when the triple overlaps with lx are even
        for (size_t i = 0; i < sx.rows(); i++)
            for (size_t j = i + 1; j < sx.rows(); j++)
                if (overlap3(lx, sx.row(i), sx.row(j)) % (modulus / 2) != 0) return false;
    }

    // independent cross-check: coset weights constant mod 2*modulus
    size_t base = (lx.weight()) % (2 * modulus);
    Splitmix64 rng(0x10f2c5u ^ (uint64_t(modulus) << 32));
    const int samples = 10000;
    for (int s = 0; s < samples; s++) {
        BitVector v = random_span_element(sx, rng);
        v ^= lx;
        if (v.weight() % (2 * modulus) != base) return false;
    }
    return true;
}

}  // namespace qrcss
