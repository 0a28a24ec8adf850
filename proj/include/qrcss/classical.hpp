#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrcss/bits.hpp"

namespace qrcss {

/// Where a claimed distance came from. Claims are bookkeeping only; nothing in
/// a verification path ever trusts them.
enum class Provenance { PaperTable, Certified, Witnessed, Unverified };

std::string to_string(Provenance p);

struct DistanceClaim {
    size_t d = 0;
    Provenance source = Provenance::Unverified;
};

/// Classical linear binary code carried by a full-row-rank generator matrix.
struct ClassicalCode {
    size_t n = 0;
    BitMatrix generator;
    std::string label;
    std::optional<DistanceClaim> claimed_distance;

    size_t k() const { return generator.rows(); }
};

/// Bound bundle for family planning: length, distance upper
/// bound, and the residue of the quadratic lower-bound inequality.
struct FamilyBounds {
    size_t n = 0;
    size_t d_upper = 0;
    long long d_lower_witness = 0;  // d^2 - 3d + 4 - n evaluated at d_upper
};

bool is_prime(uint64_t p);

/// Quadratic-residue cyclic code of prime length p with p = +-1 mod 8,
/// dimension (p+1)/2. The generator polynomial is the degree-(p-1)/2 divisor
/// of x^p - 1 obtained from the residue-sum idempotent via gcd.
ClassicalCode build_qr(uint64_t p);

/// Append one parity column making every generator row even weight.
ClassicalCode extend_parity(const ClassicalCode& c);

/// Remove a column and re-reduce to full rank. Puncturing to length 0 is
/// rejected.
ClassicalCode puncture(const ClassicalCode& c, size_t position);

ClassicalCode dual(const ClassicalCode& c);

bool is_self_dual(const ClassicalCode& c);
/// Every generator row weight divisible by 4 and all pairwise overlaps even;
/// equivalent to every span element having weight divisible by 4.
bool is_doubly_even_classical(const ClassicalCode& c);
/// C is contained in dual(C): all generator-row overlaps (including row
/// weights) are even.
bool is_weakly_self_dual(const ClassicalCode& c);

/// Type-II self-dual distance cap 4*floor(n/24) + 4 (n must be 0 mod 8).
size_t type2_distance_upper(size_t n);
/// Extended-QR lower-bound inequality d^2 - 3d + 4 >= n.
bool eqr_lower_holds(size_t n, size_t d);

/// Quantum-family planning bounds for a given code length n:
/// d <= 4*floor((n+1)/24) + 3.
FamilyBounds css_family_bounds_for_n(size_t n);
/// ... and for a given distance d: n <= d^2 - d + 1.
FamilyBounds css_family_bounds_for_d(size_t d);

/// All primes p <= limit with p = 7 mod 8, ascending.
std::vector<uint64_t> qr_prime_scan(uint64_t limit);

}  // namespace qrcss
