#include "qrcss/doubling.hpp"

#include <algorithm>
#include <stdexcept>

#include "qrcss/divisibility.hpp"

namespace qrcss {

namespace {

SeamAttempt check_seam(const CssCode& q1, const CssCode& q2, const BitVector& a,
                       const BitVector& b, const BitVector& c, int stage) {
    SeamAttempt at;
    at.stage = stage;
    at.weight_mod8 = unsigned((a.weight() + b.weight() + c.weight()) % 8);

    unsigned pair = 0;
    for (size_t i = 0; i < q1.sx.rows(); i++) {
        const BitVector& g = q1.sx.row(i);
        pair = std::max(pair, unsigned((overlap2(a, g) + overlap2(b, g)) % 4));
    }
    for (size_t i = 0; i < q2.sx.rows(); i++)
        pair = std::max(pair, unsigned(overlap2(c, q2.sx.row(i)) % 4));
    at.worst_pair_mod4 = pair;

    unsigned triple = 0;
    for (size_t i = 0; i < q1.sx.rows(); i++)
        for (size_t j = i + 1; j < q1.sx.rows(); j++) {
            const BitVector &g = q1.sx.row(i), &g2 = q1.sx.row(j);
            triple = std::max(triple, unsigned((overlap3(a, g, g2) + overlap3(b, g, g2)) % 2));
        }
    for (size_t i = 0; i < q2.sx.rows(); i++)
        for (size_t j = i + 1; j < q2.sx.rows(); j++)
            triple = std::max(triple,
                              unsigned(overlap3(c, q2.sx.row(i), q2.sx.row(j)) % 2));
    at.worst_triple_mod2 = triple;
    return at;
}

void record_attempt(std::vector<SeamAttempt>& table, const SeamAttempt& at) {
    for (const SeamAttempt& t : table)
        if (t.stage == at.stage && t.weight_mod8 == at.weight_mod8 &&
            t.worst_pair_mod4 == at.worst_pair_mod4 && t.worst_triple_mod2 == at.worst_triple_mod2)
            return;  // one row per distinct residue pattern
    if (table.size() < 16) table.push_back(at);
}

// combinations of up to two generator rows, in deterministic order
std::vector<BitVector> small_combos(const BitMatrix& m, bool include_empty) {
    std::vector<BitVector> out;
    if (include_empty) out.push_back(BitVector(m.cols()));
    for (size_t i = 0; i < m.rows(); i++) out.push_back(m.row(i));
    for (size_t i = 0; i < m.rows(); i++)
        for (size_t j = i + 1; j < m.rows(); j++) out.push_back(m.row(i) ^ m.row(j));
    return out;
}

}  // namespace

SeamSearchResult seam_search(const CssCode& q1, const CssCode& q2, const SearchBudget& budget) {
    SeamSearchResult res;
    BitVector zero1(q1.n);

    auto try_seam = [&](const BitVector& a, const BitVector& b, const BitVector& c,
                        int stage) -> bool {
        res.candidates++;
        SeamAttempt at = check_seam(q1, q2, a, b, c, stage);
        if (at.ok()) {
            res.seam = SeamSpec{a, b, c};
            return true;
        }
        record_attempt(res.attempts, at);
        return false;
    };

    // stage (i): the plain seam
    if (try_seam(q1.lx, zero1, q2.lx, 1)) return res;

    // stage (ii): low-weight replacements of c within the code-2 logical coset
    std::vector<BitVector> c_list;
    for (const BitVector& h : small_combos(q2.sx, false)) c_list.push_back(q2.lx ^ h);
    std::stable_sort(c_list.begin(), c_list.end(),
                     [](const BitVector& x, const BitVector& y) { return x.weight() < y.weight(); });
    for (const BitVector& c : c_list) {
        if (res.candidates >= budget.max_candidates) return res;
        if (try_seam(q1.lx, zero1, c, 2)) return res;
    }

    // stage (iii): vary both code-1 blocks; a stays in the code-1 logical coset
    std::vector<BitVector> s_list = small_combos(q1.sx, true);
    c_list.insert(c_list.begin(), q2.lx);
    for (size_t si = 0; si < s_list.size(); si++) {
        for (size_t ti = 0; ti < s_list.size(); ti++) {
            for (const BitVector& c : c_list) {
                if (si == 0 && ti == 0) break;  // stages (i)/(ii) covered these
                if (res.candidates >= budget.max_candidates) return res;
                if (try_seam(q1.lx ^ s_list[si], s_list[ti], c, 3)) return res;
            }
        }
    }
    return res;
}

std::pair<std::optional<CssCode>, DoublingDiagnostics> double_code(
    const CssCode& q1, const CssCode& q2, const SearchBudget& budget,
    std::optional<size_t> d1_claim, std::optional<size_t> d2_claim) {
    CssValidation v1 = validate_css(q1), v2 = validate_css(q2);
    if (!v1.all_pass || v1.recomputed_k != 1)
        throw std::invalid_argument("double_code: first input is not a valid k=1 CSS code");
    if (!v2.all_pass || v2.recomputed_k != 1)
        throw std::invalid_argument("double_code: second input is not a valid k=1 CSS code");
    if (!is_doubly_even_span(q1.sx).passed)
        throw std::invalid_argument("double_code: first input is not doubly even");
    if (!is_triply_even_span(q2.sx).passed)
        throw std::invalid_argument("double_code: second input is not triply even");

    DoublingDiagnostics diag;
    diag.n3 = 2 * q1.n + q2.n;
    diag.k = 1;
    if (d1_claim && d2_claim) diag.claimed_distance = std::min(*d1_claim, *d2_claim + 2);

    SeamSearchResult sr = seam_search(q1, q2, budget);
    diag.residues = sr.attempts;
    diag.seam_candidates = sr.candidates;
    if (!sr.seam) {
        diag.status = DoublingDiagnostics::Status::SeamObstruction;
        return {std::nullopt, diag};
    }
    diag.status = DoublingDiagnostics::Status::Success;
    diag.seam = sr.seam;

    const size_t n3 = diag.n3;
    BitVector zero1(q1.n), zero2(q2.n);
    BitMatrix sx3(0, n3);
    for (size_t i = 0; i < q1.sx.rows(); i++) {
        const BitVector& g = q1.sx.row(i);
        sx3.append_row(g.concat(g).concat(zero2));
    }
    for (size_t i = 0; i < q2.sx.rows(); i++)
        sx3.append_row(zero1.concat(zero1).concat(q2.sx.row(i)));
    sx3.append_row(sr.seam->a.concat(sr.seam->b).concat(sr.seam->c));

    BitVector lx3 = q1.lx.concat(q1.lx).concat(q2.lx);
    BitMatrix stacked = sx3;
    stacked.append_row(lx3);
    BitMatrix sz3 = kernel_basis(stacked);

    BitMatrix kx = kernel_basis(sx3);
    BitVector lz3;
    for (size_t i = 0; i < kx.rows(); i++) {
        if (overlap2(kx.row(i), lx3) % 2 == 1) {
            lz3 = kx.row(i);
            break;
        }
    }
    if (lz3.size() == 0) throw std::logic_error("double_code: no anticommuting Z logical found");

    CssCode out;
    out.n = n3;
    out.sx = std::move(sx3);
    out.sz = std::move(sz3);
    out.lx = std::move(lx3);
    out.lz = std::move(lz3);
    out.k = n3 - rank(out.sx) - rank(out.sz);
    out.label = "double(" + q1.label + ", " + q2.label + ")";

    if (!is_triply_even_span(out.sx).passed)
        throw std::logic_error("double_code: output failed triply even check");
    CssValidation v3 = validate_css(out);
    if (!v3.all_pass || v3.recomputed_k != 1)
        throw std::logic_error("double_code: output failed CSS validation");
    return {out, diag};
}

CssCode seed_trivial() {
    CssCode q;
    q.n = 1;
    q.sx = BitMatrix(0, 1);
    q.sz = BitMatrix(0, 1);
    q.lx = BitVector::ones(1);
    q.lz = BitVector::ones(1);
    q.k = 1;
    q.label = "[[1,1,1]]";
    return q;
}

CssCode seed_color17() {
    static const CssCode validated = [] {
        // Faces of a 17-vertex patch of the square-octagon (4.8.8) lattice:
        // one interior octagon plus seven weight-four boundary faces. The
        // patch is a distance-five degenerate code.
        BitMatrix faces = BitMatrix::from_index_rows(17, {{0, 1, 3, 4},
                                                          {0, 2, 3, 7},
                                                          {3, 4, 7, 8, 9, 10, 13, 14},
                                                          {1, 4, 5, 8},
                                                          {5, 6, 8, 10},
                                                          {11, 12, 15, 16},
                                                          {9, 12, 13, 15},
                                                          {13, 14, 15, 16}});
        // all-ones is a valid logical pair: odd weight, even overlap with
        // every face (a weight-5 representative exists; coset minima are what
        // the distance engine reports)
        BitVector logical = BitVector::ones(17);
        CssCode q;
        q.n = 17;
        q.sx = faces;
        q.sz = faces;
        q.lx = logical;
        q.lz = logical;
        q.k = 17 - 2 * rank(faces);
        q.label = "[[17,1,5]]";

        CssValidation v = validate_css(q);
        if (!v.all_pass || v.recomputed_k != 1)
            throw std::logic_error("seed_color17: embedded data failed CSS validation");
        if (!is_doubly_even_span(q.sx).passed)
            throw std::logic_error("seed_color17: embedded data not doubly even");
        CssDistanceResult d = css_distance(q, SearchBudget{1 << 20});
        if (!d.certified || d.d != 5)
            throw std::logic_error("seed_color17: embedded data failed distance check");
        return q;
    }();
    return validated;
}

const std::vector<uint64_t>& table_primes() {
    static const std::vector<uint64_t> primes = {7, 23, 47, 79, 103, 167, 191, 199};
    return primes;
}

size_t table_prime_distance(uint64_t p) {
    switch (p) {
        case 7: return 3;
        case 23: return 7;
        case 47: return 11;
        case 79: return 15;
        case 103: return 19;
        case 167: return 23;
        case 191: return 27;
        case 199: return 31;
    }
    throw std::invalid_argument("table_prime_distance: not a table prime");
}

std::vector<ChainEntry> build_table_chain(uint64_t limit_p, const SearchBudget& seam_budget) {
    if (limit_p < 7) throw std::invalid_argument("build_table_chain: need limit_p >= 7");

    struct Source {
        CssCode code;
        size_t d;
    };
    std::vector<Source> sources;
    for (uint64_t p : table_primes()) {
        if (p > limit_p) break;
        CssCode q = css_from_self_dual(extend_parity(build_qr(p)));
        size_t d = table_prime_distance(p);
        q.label = "[[" + std::to_string(q.n) + ",1," + std::to_string(d) + "]]";
        int copies = p >= 47 ? 2 : 1;  // each large QR code doubles twice in the table
        for (int i = 0; i < copies; i++) sources.push_back({q, d});
        if (p == 7 && limit_p >= 17) sources.push_back({seed_color17(), 5});
    }

    std::vector<ChainEntry> chain;
    CssCode t = seed_trivial();
    bool have_code = true;
    size_t t_n = 1, t_d = 1;
    std::string t_label = t.label;

    for (const Source& src : sources) {
        ChainEntry e;
        e.n1 = src.code.n;
        e.d1 = src.d;
        e.n2 = t_n;
        e.d2 = t_d;
        e.n3 = 2 * e.n1 + e.n2;
        e.claimed_d = std::min(e.d1, e.d2 + 2);
        e.q1_label = src.code.label;
        e.q2_label = t_label;
        e.label = "[[" + std::to_string(e.n3) + ",1," + std::to_string(e.claimed_d) + "]]";

        if (have_code) {
            e.attempted = true;
            auto [code3, diag] = double_code(src.code, t, seam_budget, e.d1, e.d2);
            e.diag = std::move(diag);
            if (code3) {
                e.constructed = true;
                code3->label = e.label;
                e.code = std::move(*code3);
                t = *e.code;
            } else {
                have_code = false;  // later steps continue on claimed parameters
            }
        }
        t_n = e.n3;
        t_d = e.claimed_d;
        t_label = e.label;
        chain.push_back(std::move(e));
    }
    return chain;
}

}  // namespace qrcss
