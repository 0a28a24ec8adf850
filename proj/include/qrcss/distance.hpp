#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qrcss/bits.hpp"
#include "qrcss/classical.hpp"
#include "qrcss/css.hpp"

namespace qrcss {

enum class DistanceMethod { Enumeration, Bz, IsdSample };

std::string to_string(DistanceMethod m);

struct SearchEffort {
    uint64_t candidates = 0;     // enumeration/sampling candidates examined
    double wall_seconds = 0.0;   // reported, never part of file output
};

/// Certified-lower / witnessed-upper distance result. The witness, when
/// present, has been re-verified independently: correct weight, inside the
/// search span, outside the excluded span.
struct DistanceReport {
    size_t lower = 0;
    size_t upper = 0;
    bool upper_found = false;  // false: no witness, `upper` meaningless
    bool certified = false;    // lower == upper with verified witness
    std::optional<BitVector> witness;
    DistanceMethod method = DistanceMethod::Bz;
    SearchEffort effort;
    uint64_t seed = 0;
};

struct SearchBudget {
    uint64_t max_candidates = 10'000'000;
    unsigned threads = 0;  // 0 = hardware default (capped)
};

/// Exact minimum distance when enumeration completes within budget, else a
/// certified lower bound from completed weight levels plus the best witnessed
/// upper bound.
DistanceReport classical_min_distance(const ClassicalCode& c, const SearchBudget& budget);

/// Minimum weight over { shift + s : s in rowspace(span) }; for shift inside
/// the span this degenerates to the nonzero-minimum of the span itself.
DistanceReport coset_min_weight(const BitMatrix& span, const BitVector& shift,
                                const SearchBudget& budget);

struct CssDistanceResult {
    DistanceReport dx;
    DistanceReport dz;
    size_t d = 0;          // min of the two (when both have results)
    bool certified = false;
};

/// dZ = min weight of ker(S_X) \ rowspace(S_Z); dX symmetric.
CssDistanceResult css_distance(const CssCode& q, const SearchBudget& budget);

/// Monte-Carlo information-set sampling upper bound (Lee-Brickell style);
/// deterministic given seed, never claims certification.
DistanceReport isd_upper_bound(const BitMatrix& span, const BitVector& shift, uint64_t trials,
                               uint64_t seed);

namespace detail {

/// Shared search core: minimum weight over rowspace(basis) \ rowspace(excluded)
/// (excluded must be a subspace of the basis span; empty means "exclude the
/// zero word only").
DistanceReport min_weight_search(const BitMatrix& basis, const BitMatrix& excluded,
                                 const SearchBudget& budget);

/// Brute-force oracle for tests: enumerates all 2^rows combinations.
size_t naive_min_weight(const BitMatrix& basis, const BitMatrix& excluded);

}  // namespace detail

}  // namespace qrcss
