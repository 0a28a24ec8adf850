#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrcss/css.hpp"
#include "qrcss/distance.hpp"

namespace qrcss {

/// Mixed X-stabilizer row (a|b|c) spanning both copies of code 1 and the
/// code-2 block. `c` always lies in the logical-X coset of code 2, which is
/// what excludes bare code-2 logicals from the combined code.
struct SeamSpec {
    BitVector a;  // length n1
    BitVector b;  // length n1
    BitVector c;  // length n2
};

/// Residues of one attempted seam against the triply even conditions.
struct SeamAttempt {
    int stage = 0;
    unsigned weight_mod8 = 0;       // seam row weight residue
    unsigned worst_pair_mod4 = 0;   // worst pairwise-overlap residue
    unsigned worst_triple_mod2 = 0; // worst triple-overlap residue
    bool ok() const { return weight_mod8 == 0 && worst_pair_mod4 == 0 && worst_triple_mod2 == 0; }
};

struct SeamSearchResult {
    std::optional<SeamSpec> seam;
    std::vector<SeamAttempt> attempts;  // capped residue table of failures
    uint64_t candidates = 0;
};

struct DoublingDiagnostics {
    enum class Status { Success, SeamObstruction };
    Status status = Status::SeamObstruction;
    std::vector<SeamAttempt> residues;
    std::optional<SeamSpec> seam;
    size_t n3 = 0;
    size_t k = 1;
    std::optional<size_t> claimed_distance;  // min(d1, d2 + 2) when claims given
    uint64_t seam_candidates = 0;
};

/// Staged search for a valid seam: (i) the plain (lx1 | 0 | lx2) row,
/// (ii) low-weight coset replacements of c, (iii) (a, b) pairs over the
/// code-1 logical coset and stabilizer span. Obstruction is data, not error.
SeamSearchResult seam_search(const CssCode& q1, const CssCode& q2, const SearchBudget& budget);

/// Doubling map: doubly even [[n1,1,d1]] + triply even [[n2,1,d2]] ->
/// triply even [[2*n1+n2, 1, min(d1, d2+2)]] (distance recorded as a claim,
/// certified separately by the distance engine). Preconditions are enforced;
/// a missing seam comes back as diagnostics with an empty code.
std::pair<std::optional<CssCode>, DoublingDiagnostics> double_code(
    const CssCode& q1, const CssCode& q2, const SearchBudget& budget,
    std::optional<size_t> d1_claim = std::nullopt, std::optional<size_t> d2_claim = std::nullopt);

/// [[1,1,1]]: one qubit, no stabilizers.
CssCode seed_trivial();

/// [[17,1,5]]: square-octagon lattice patch, embedded and re-validated at
/// first use (k, stabilizer symmetry, double evenness, certified distance 5).
CssCode seed_color17();

struct ChainEntry {
    std::string label;
    size_t n1 = 0, n2 = 0, n3 = 0;
    size_t d1 = 0, d2 = 0;
    size_t claimed_d = 0;
    std::string q1_label, q2_label;
    bool attempted = false;    // doubling actually run (predecessor existed)
    bool constructed = false;  // seam found, code built and verified
    std::optional<CssCode> code;
    DoublingDiagnostics diag;
};

/// The table chain: [[15]], [[49]], [[95]], then each QR code twice.
/// Obstructed steps carry diagnostics and the chain continues on claimed
/// parameters only.
std::vector<ChainEntry> build_table_chain(uint64_t limit_p, const SearchBudget& seam_budget);

/// QR primes used by the catalog chain (excludes the p = 7 mod 8 primes
/// whose extended codes fall short of best-known distances).
const std::vector<uint64_t>& table_primes();
/// Claimed CSS distance for a table prime (paper-table provenance).
size_t table_prime_distance(uint64_t p);

}  // namespace qrcss
