#pragma once

#include <cstdint>
#include <vector>

#include "qrcss/bits.hpp"

namespace qrcss {

/// One failed divisibility condition: the witnessing row tuple and the
/// offending residue.
struct DivisibilityViolation {
    std::vector<size_t> rows;
    unsigned residue = 0;
};

struct DivisibilityReport {
    int level = 0;  // 2 = doubly even, 3 = triply even
    bool passed = false;
    std::vector<DivisibilityViolation> violations;
};

/// Every span element has weight divisible by 4. Decided on generators:
/// row weights = 0 mod 4 and pairwise overlaps even; exact for the span by
/// the inclusion-exclusion weight identity.
DivisibilityReport is_doubly_even_span(const BitMatrix& m);

/// Every span element has weight divisible by 8: row weights = 0 mod 8,
/// pairwise overlaps = 0 mod 4, triple overlaps even.
DivisibilityReport is_triply_even_span(const BitMatrix& m);

/// Bravyi-Haah triorthogonality: pairwise and triple overlaps of distinct
/// rows even, designated rows odd weight, the rest even weight.
bool is_triorthogonal(const BitMatrix& m, const std::vector<size_t>& odd_rows);

/// Phase-constancy certificate for the logical coset lx + span(sx): every
/// generator overlap with lx is 0 mod `modulus` and (for modulus 4) the
/// pairwise-corrected sums vanish, so coset weights are constant mod
/// 2*modulus. Cross-checked by random coset sampling.
bool logical_overlap_divisibility(const BitMatrix& sx, const BitVector& lx, unsigned modulus);

/// Random span element, for sampling-based cross-checks. Deterministic in the
/// rng state (splitmix64).
struct Splitmix64 {
    uint64_t state = 0;
    explicit Splitmix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform value in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        uint64_t lim = ~uint64_t(0) - ~uint64_t(0) % bound;
        uint64_t v;
        do {
            v = next();
        } while (v >= lim);
        return v % bound;
    }
};

BitVector random_span_element(const BitMatrix& m, Splitmix64& rng);

}  // namespace qrcss
