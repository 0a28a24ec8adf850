#include "qrcss/distance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "qrcss/divisibility.hpp"

namespace qrcss {

std::string to_string(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::Enumeration: return "enumeration";
        case DistanceMethod::Bz: return "bz";
        case DistanceMethod::IsdSample: return "isd-sample";
    }
    return "?";
}

namespace detail {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

uint64_t binom_saturating(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
        if (r > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
    }
    return uint64_t(r);
}

// contiguous row words for the enumeration hot loop
struct FlatRows {
    size_t nrows = 0, cols = 0, nwords = 0;
    std::vector<uint64_t> data;

    FlatRows() = default;
    explicit FlatRows(const BitMatrix& m)
        : nrows(m.rows()), cols(m.cols()), nwords(BitVector::words_for(m.cols())) {
        data.assign(nrows * nwords, 0);
        for (size_t i = 0; i < nrows; i++) {
            auto w = m.row(i).words();
            std::copy(w.begin(), w.end(), data.begin() + i * nwords);
        }
    }
    const uint64_t* row(size_t i) const { return data.data() + i * nwords; }
};

BitVector to_bitvector(const uint64_t* words, size_t cols) {
    BitVector v(cols);
    std::copy(words, words + BitVector::words_for(cols), v.words().begin());
    return v;
}

// best candidate of one enumeration pass; ties broken by scan order, i.e.
// lexicographic index tuple, so results do not depend on the thread count
struct Candidate {
    size_t weight = SIZE_MAX;
    std::vector<size_t> tuple;
    std::vector<uint64_t> value;

    bool beats(const Candidate& o) const {
        if (weight != o.weight) return weight < o.weight;
        return tuple < o.tuple;
    }
};

// Enumerates XORs of exactly `level` distinct rows whose first index is
// congruent to `stride_off` mod `stride`; candidates lighter than the running
// threshold are membership-tested against `excl` (may be null).
void enumerate_level(const FlatRows& m, unsigned level, size_t stride_off, size_t stride,
                     const SpanReducer* excl, size_t threshold, Candidate& best) {
    const size_t k = m.nrows, W = m.nwords;
    if (level == 0 || level > k) return;
    std::vector<uint64_t> acc((level + 1) * W, 0);
    std::vector<size_t> idx(level);
    size_t local = threshold;

    auto leaf = [&](const uint64_t* word) {
        size_t w = 0;
        for (size_t j = 0; j < W; j++) w += std::popcount(word[j]);
        if (w >= local) return;
        if (excl && excl->contains(to_bitvector(word, m.cols))) return;
        local = w;
        best.weight = w;
        best.tuple.assign(idx.begin(), idx.begin() + level);
        best.value.assign(word, word + W);
    };

    auto rec = [&](auto&& self, unsigned depth, size_t start) -> void {
        const uint64_t* prev = acc.data() + depth * W;
        uint64_t* cur = acc.data() + (depth + 1) * W;
        size_t limit = k - (level - depth - 1);
        for (size_t i = start; i < limit; i++) {
            idx[depth] = i;
            const uint64_t* r = m.row(i);
            for (size_t j = 0; j < W; j++) cur[j] = prev[j] ^ r[j];
            if (depth + 1 == level)
                leaf(cur);
            else
                self(self, depth + 1, i + 1);
        }
    };

    uint64_t* first = acc.data() + W;
    for (size_t i = stride_off; i + (level - 1) < k; i += stride) {
        idx[0] = i;
        const uint64_t* r = m.row(i);
        for (size_t j = 0; j < W; j++) first[j] = r[j];
        if (level == 1)
            leaf(first);
        else
            rec(rec, 1, i + 1);
    }
}

// one quasi-systematic generator per disjoint pivot set
struct InfoSet {
    FlatRows rows;
    size_t rank = 0;        // pivots inside this set's fresh columns
    size_t deficiency = 0;  // basis dimension minus rank
    unsigned completed = 0; // highest fully enumerated weight level
};

std::vector<InfoSet> build_information_sets(const BitMatrix& basis, size_t max_sets) {
    size_t k = basis.rows(), n = basis.cols();
    std::vector<bool> used(n, false);
    std::vector<InfoSet> sets;
    while (sets.size() < max_sets) {
        std::vector<size_t> order;
        order.reserve(n);
        for (size_t c = 0; c < n; c++)
            if (!used[c]) order.push_back(c);
        size_t fresh = order.size();
        if (fresh == 0) break;
        for (size_t c = 0; c < n; c++)
            if (used[c]) order.push_back(c);
        RrefResult rr = rref_ordered(basis, order);
        // pivots are discovered fresh-columns-first; count how many landed there
        size_t r = 0;
        while (r < rr.pivots.size() && !used[rr.pivots[r]]) r++;
        if (r == 0) break;
        for (size_t i = 0; i < r; i++) used[rr.pivots[i]] = true;
        InfoSet s;
        s.rows = FlatRows(rr.mat);
        s.rank = r;
        s.deficiency = k - r;
        sets.push_back(std::move(s));
        if (r < k) break;  // deficient set: later sets add nothing stronger
    }
    return sets;
}

unsigned pick_thread_count(const SearchBudget& budget) {
    if (budget.threads) return budget.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(hw, 1u, 8u);
}

// Lee-Brickell scan over random information sets; deterministic in the seed.
// Shared by isd_upper_bound and the witness prepass of the exact search.
Candidate isd_scan(const BitMatrix& basis, const SpanReducer* excl, uint64_t trials,
                   uint64_t seed, uint64_t& candidates) {
    const size_t k = basis.rows(), n = basis.cols();
    const unsigned p = k > 130 ? 2 : 3;
    Splitmix64 rng(seed);
    Candidate best;
    std::vector<size_t> perm(n);
    for (size_t trial = 0; trial < trials; trial++) {
        for (size_t i = 0; i < n; i++) perm[i] = i;
        for (size_t i = n; i > 1; i--) std::swap(perm[i - 1], perm[rng.below(i)]);
        RrefResult rr = rref_ordered(basis, perm);
        FlatRows flat(rr.mat);
        for (unsigned level = 1; level <= std::min<size_t>(p, k); level++) {
            candidates += binom_saturating(k, level);
            Candidate round;
            enumerate_level(flat, level, 0, 1, excl, best.weight, round);
            if (round.weight < best.weight) {
                best.weight = round.weight;
                best.value = round.value;
            }
        }
    }
    best.tuple.clear();
    return best;
}

}  // namespace

DistanceReport min_weight_search(const BitMatrix& basis_in, const BitMatrix& excluded,
                                 const SearchBudget& budget) {
    auto t0 = Clock::now();
    BitMatrix basis = rref(basis_in).mat;
    const size_t k = basis.rows();
    if (k == 0) throw std::invalid_argument("min_weight_search: zero-dimensional search space");

    SpanReducer excl;
    const SpanReducer* excl_ptr = nullptr;
    if (excluded.rows() > 0) {
        excl = SpanReducer(excluded);
        SpanReducer span(basis);
        for (size_t i = 0; i < excluded.rows(); i++)
            if (!span.contains(excluded.row(i)))
                throw std::invalid_argument("min_weight_search: excluded span not inside basis span");
        if (excl.rank() >= k)
            throw std::invalid_argument("min_weight_search: nothing left outside excluded span");
        excl_ptr = &excl;
    }

    std::vector<InfoSet> sets = build_information_sets(basis, 8);
    const unsigned nthreads = pick_thread_count(budget);

    auto certified_bound = [&]() {
        size_t b = 0;
        for (const InfoSet& s : sets)
            if (s.completed + 1 > s.deficiency) b += s.completed + 1 - s.deficiency;
        return b;
    };

    uint64_t used = 0;
    // witness prepass: the level-by-level bound can close before the ordered
    // enumeration stumbles on a minimum-weight vector, so seed the upper
    // bound from a few randomized information sets first (at most a quarter
    // of the budget, so tiny budgets degrade to pure enumeration)
    Candidate best;
    {
        const unsigned p = k > 130 ? 2 : 3;
        uint64_t per_trial = 0;
        for (unsigned l = 1; l <= std::min<size_t>(p, k); l++)
            per_trial += binom_saturating(k, l);
        uint64_t trials =
            per_trial ? std::min<uint64_t>(30, budget.max_candidates / 4 / per_trial) : 0;
        if (trials) best = isd_scan(basis, excl_ptr, trials, 0x15d5eedULL, used);
    }
    bool fully_enumerated = false;

    for (unsigned level = 1; level <= k && !fully_enumerated; level++) {
        for (InfoSet& s : sets) {
            uint64_t size = binom_saturating(k, level);
            if (size == UINT64_MAX || size > budget.max_candidates - used) goto done;
            used += size;

            Candidate round;
            if (nthreads > 1 && size > 200'000) {
                std::vector<Candidate> parts(nthreads);
                std::vector<std::thread> pool;
                for (unsigned t = 0; t < nthreads; t++)
                    pool.emplace_back([&, t] {
                        enumerate_level(s.rows, level, t, nthreads, excl_ptr, best.weight,
                                        parts[t]);
                    });
                for (auto& th : pool) th.join();
                for (const Candidate& c : parts)
                    if (c.weight != SIZE_MAX && c.beats(round)) round = c;
            } else {
                enumerate_level(s.rows, level, 0, 1, excl_ptr, best.weight, round);
            }
            if (round.weight < best.weight) best = std::move(round);

            s.completed = level;
            if (level == k) fully_enumerated = true;  // one basis covered the whole span
            if (best.weight != SIZE_MAX && certified_bound() >= best.weight) goto done;
            if (fully_enumerated) break;
        }
    }
done:

    DistanceReport rep;
    rep.method = fully_enumerated ? DistanceMethod::Enumeration : DistanceMethod::Bz;
    rep.effort.candidates = used;
    size_t bound = certified_bound();
    if (best.weight != SIZE_MAX) {
        rep.upper = best.weight;
        rep.upper_found = true;
        rep.witness = to_bitvector(best.value.data(), basis.cols());
        if (fully_enumerated || bound >= best.weight) {
            rep.lower = best.weight;
            rep.certified = true;
        } else {
            rep.lower = std::min(bound, best.weight);
        }
    } else {
        rep.lower = bound;
    }

    // independent witness re-verification: weight, span membership, exclusion
    if (rep.witness) {
        bool ok = rep.witness->weight() == rep.upper &&
                  SpanReducer(basis).contains(*rep.witness) &&
                  (!excl_ptr || !excl_ptr->contains(*rep.witness));
        if (!ok) throw std::logic_error("min_weight_search: witness failed re-verification");
    }
    rep.effort.wall_seconds = seconds_since(t0);
    return rep;
}

}  // namespace detail

DistanceReport classical_min_distance(const ClassicalCode& c, const SearchBudget& budget) {
    if (c.generator.rows() == 0 || rank(c.generator) == 0)
        throw std::invalid_argument("classical_min_distance: zero-dimensional code");
    return detail::min_weight_search(c.generator, BitMatrix(0, c.n), budget);
}

DistanceReport coset_min_weight(const BitMatrix& span, const BitVector& shift,
                                const SearchBudget& budget) {
    if (span.rows() > 0 && span.cols() != shift.size())
        throw std::invalid_argument("coset_min_weight: length mismatch");

    if (span.rows() == 0 || rank(span) == 0) {
        // the coset is the single vector `shift`
        if (shift.none())
            throw std::invalid_argument("coset_min_weight: empty span with zero shift");
        DistanceReport rep;
        rep.method = DistanceMethod::Enumeration;
        rep.lower = rep.upper = shift.weight();
        rep.upper_found = rep.certified = true;
        rep.witness = shift;
        return rep;
    }

    if (SpanReducer(span).contains(shift)) {
        // shift absorbed: minimum over the span itself, zero excluded
        return detail::min_weight_search(span, BitMatrix(0, span.cols()), budget);
    }
    BitMatrix basis = span;
    basis.append_row(shift);
    return detail::min_weight_search(basis, span, budget);
}

CssDistanceResult css_distance(const CssCode& q, const SearchBudget& budget) {
    CssDistanceResult res;
    BitMatrix sx = q.sx.cols() == q.n ? q.sx : BitMatrix(0, q.n);
    BitMatrix sz = q.sz.cols() == q.n ? q.sz : BitMatrix(0, q.n);
    res.dz = detail::min_weight_search(kernel_basis(sx), sz, budget);
    res.dx = detail::min_weight_search(kernel_basis(sz), sx, budget);

    auto estimate = [](const DistanceReport& r) { return r.upper_found ? r.upper : r.lower; };
    res.d = std::min(estimate(res.dx), estimate(res.dz));
    res.certified = res.dx.certified && res.dz.certified;
    return res;
}

DistanceReport isd_upper_bound(const BitMatrix& span, const BitVector& shift, uint64_t trials,
                               uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("isd_upper_bound: need trials >= 1");
    auto t0 = std::chrono::steady_clock::now();

    BitMatrix basis;
    BitMatrix excluded(0, shift.size());
    if (span.rows() > 0 && SpanReducer(span).contains(shift)) {
        basis = rref(span).mat;
    } else {
        basis = span;
        basis.append_row(shift);
        basis = rref(basis).mat;
        excluded = span;
    }
    const size_t n = basis.cols();
    SpanReducer excl;
    const SpanReducer* excl_ptr = nullptr;
    if (excluded.rows() > 0) {
        excl = SpanReducer(excluded);
        excl_ptr = &excl;
    }

    uint64_t used = 0;
    detail::Candidate best = detail::isd_scan(basis, excl_ptr, trials, seed, used);

    DistanceReport rep;
    rep.method = DistanceMethod::IsdSample;
    rep.seed = seed;
    rep.lower = 0;  // sampling never certifies
    rep.effort.candidates = used;
    if (best.weight != SIZE_MAX) {
        rep.upper = best.weight;
        rep.upper_found = true;
        rep.witness = detail::to_bitvector(best.value.data(), n);
        bool ok = rep.witness->weight() == rep.upper && SpanReducer(basis).contains(*rep.witness) &&
                  (!excl_ptr || !excl_ptr->contains(*rep.witness));
        if (!ok) throw std::logic_error("isd_upper_bound: witness failed re-verification");
    }
    rep.effort.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace qrcss
