// Acceptance suite: drives the full pipeline end to end and prints one
// pass/fail line per criterion. Exit code 0 only if every criterion passes.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "qrcss/catalog.hpp"
#include "qrcss/cli.hpp"
#include "qrcss/divisibility.hpp"
#include "qrcss/gates.hpp"

using namespace qrcss;

namespace {

int failures = 0;

void line(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %d [%s]: %s%s%s\n", id, name.c_str(), pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!pass) failures++;
}

struct Check {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
    void note(const std::string& what) {
        detail << (detail.str().empty() ? "" : "; ") << what;
    }
};

// ---------------------------------------------------------------- criterion 1
void criterion1() {
    Check c;
    struct Row {
        uint64_t p;
        size_t n, k, d;
    };
    for (Row r : {Row{7, 8, 4, 4}, Row{23, 24, 12, 8}, Row{47, 48, 24, 12}}) {
        ClassicalCode e = extend_parity(build_qr(r.p));
        c.require(e.n == r.n && e.k() == r.k, "params [" + std::to_string(r.n) + "]");
        DistanceReport rep = classical_min_distance(e, SearchBudget{20'000'000});
        c.require(rep.certified && rep.upper == r.d,
                  "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "] certified d=" +
                      std::to_string(r.d));
    }

    // [80,40,16] within the extended multi-information-set budget
    ClassicalCode e80 = extend_parity(build_qr(79));
    DistanceReport r80 = classical_min_distance(e80, SearchBudget{100'000'000});
    c.require(r80.certified && r80.upper == 16, "[80,40] certified d=16");
    c.require(r80.effort.candidates <= 100'000'000, "[80,40] within 1e8 candidates");

    // larger members: witnessed upper bounds by sampling, lower as achieved
    struct Big {
        uint64_t p;
        size_t n, d;
    };
    for (Big b : {Big{103, 104, 20}, Big{167, 168, 24}, Big{191, 192, 28}, Big{199, 200, 32}}) {
        ClassicalCode e = extend_parity(build_qr(b.p));
        DistanceReport isd = isd_upper_bound(e.generator, BitVector(e.n), 400, 1000 + b.p);
        c.require(isd.upper_found && isd.upper == b.d,
                  "[" + std::to_string(b.n) + "] witnessed d<=" + std::to_string(b.d));
        DistanceReport part = classical_min_distance(e, SearchBudget{2'000'000});
        c.note("[" + std::to_string(b.n) + "] upper=" +
               (isd.upper_found ? std::to_string(isd.upper) : "-") +
               " lower>=" + std::to_string(part.lower));
    }
    line(1, "classical-qr-pipeline", c.ok, c.detail.str());
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
    Check c;
    struct Row {
        uint64_t p;
        size_t d;
        bool exact;
    };
    std::vector<Row> rows = {{7, 3, true},    {23, 7, true},   {47, 11, true},
                             {79, 15, false}, {103, 19, false}, {167, 23, false},
                             {191, 27, false}, {199, 31, false}};
    for (Row r : rows) {
        CssCode q = css_from_self_dual(extend_parity(build_qr(r.p)));
        std::string tag = "[[" + std::to_string(q.n) + "]]";
        c.require(q.k == 1 && validate_css(q).all_pass, tag + " valid k=1");
        c.require(is_doubly_even_span(q.sx).passed, tag + " doubly even");
        c.require(rowspace_equal(q.sx, q.sz), tag + " sx-space = sz-space");
        c.require(check_transversal_hadamard(q).preserves_codespace, tag + " H");
        c.require(check_transversal_diagonal(q, 2).preserves_codespace, tag + " S");

        if (r.exact) {
            CssDistanceResult res = css_distance(q, SearchBudget{50'000'000});
            c.require(res.certified && res.d == r.d,
                      tag + " certified d=" + std::to_string(r.d));
            // distance sandwich: d_css >= d(punctured) >= d(self-dual) - 1
            ClassicalCode sd = extend_parity(build_qr(r.p));
            DistanceReport dsd = classical_min_distance(sd, SearchBudget{20'000'000});
            DistanceReport dc =
                classical_min_distance(puncture(sd, sd.n - 1), SearchBudget{20'000'000});
            c.require(dsd.certified && dc.certified && res.d >= dc.upper &&
                          dc.upper >= dsd.upper - 1,
                      tag + " distance sandwich");
        } else {
            DistanceReport isd = isd_upper_bound(q.sz, q.lz, 400, 2000 + r.p);
            c.require(isd.upper_found && isd.upper == r.d,
                      tag + " witnessed d<=" + std::to_string(r.d));
            DistanceReport part = coset_min_weight(q.sz, q.lz, SearchBudget{2'000'000});
            c.note(tag + " upper=" + (isd.upper_found ? std::to_string(isd.upper) : "-") +
                   " lower>=" + std::to_string(part.lower));
        }
    }
    // the 17-qubit gap filler belongs to column 2 as well
    CssCode c17 = seed_color17();
    c.require(validate_css(c17).all_pass && is_doubly_even_span(c17.sx).passed &&
                  rowspace_equal(c17.sx, c17.sz) &&
                  check_transversal_hadamard(c17).preserves_codespace &&
                  check_transversal_diagonal(c17, 2).preserves_codespace,
              "[[17]] clifford checks");
    CssDistanceResult d17 = css_distance(c17, SearchBudget{1 << 20});
    c.require(d17.certified && d17.d == 5, "[[17]] certified d=5");
    line(2, "css-pipeline", c.ok, c.detail.str());
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
    Check c;
    std::vector<uint64_t> primes = qr_prime_scan(199);
    c.require(primes.size() == 12, "12 primes = 7 mod 8 up to 199");
    for (uint64_t p : primes) {
        ClassicalCode qr = build_qr(p);
        c.require(qr.k() == (p + 1) / 2, "dimension at p=" + std::to_string(p));
        ClassicalCode sd = extend_parity(qr);
        c.require(is_self_dual(sd) && is_doubly_even_classical(sd),
                  "type-II extension at p=" + std::to_string(p));
        ClassicalCode cperp = dual(puncture(sd, size_t(p)));
        bool de = is_doubly_even_classical(cperp);
        bool wsd = is_weakly_self_dual(cperp);
        c.require(de && wsd, "p=" + std::to_string(p));
    }
    line(3, "dual-containment-suite", c.ok, c.detail.str());
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
    Check c;
    c.require(type2_distance_upper(24) == 8, "type2 bound at 24");
    c.require(type2_distance_upper(48) == 12, "type2 bound at 48");

    const std::pair<size_t, size_t> col1[] = {{8, 4},   {24, 8},  {48, 12}, {80, 16},
                                              {104, 20}, {168, 24}, {192, 28}, {200, 32}};
    for (auto [n, d] : col1)
        c.require(eqr_lower_holds(n, d), "eqr lower inequality at n=" + std::to_string(n));

    // family bound admits every quantum member; tight through n = 103
    const std::pair<size_t, size_t> col2[] = {{7, 3},    {23, 7},   {47, 11}, {79, 15},
                                              {103, 19}, {167, 23}, {191, 27}, {199, 31}};
    for (auto [n, d] : col2) {
        size_t bound = css_family_bounds_for_n(n).d_upper;
        c.require(d <= bound, "family bound admits n=" + std::to_string(n));
        if (n <= 103)
            c.require(bound == d, "family bound tight at n=" + std::to_string(n));
    }
    c.require(css_family_bounds_for_d(7).n == 43, "length bound at d=7");
    line(4, "distance-bounds", c.ok, c.detail.str());
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
    Check c;
    std::vector<ChainEntry> chain = build_table_chain(199, SearchBudget{60'000});
    const size_t n3s[] = {15,  49,  95,  189, 283, 441, 599, 805,
                          1011, 1345, 1679, 2061, 2443, 2841, 3239};
    const size_t ds[] = {3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31};
    c.require(chain.size() == 15, "15 chain entries");
    for (size_t i = 0; i < chain.size() && i < 15; i++) {
        c.require(chain[i].n3 == 2 * chain[i].n1 + chain[i].n2 && chain[i].n3 == n3s[i],
                  "arithmetic at [[" + std::to_string(n3s[i]) + "]]");
        c.require(chain[i].claimed_d == ds[i], "claimed d at [[" + std::to_string(n3s[i]) + "]]");
    }

    // [[15]] and [[49]] certified
    for (size_t i : {size_t(0), size_t(1)}) {
        c.require(chain[i].constructed, chain[i].label + " constructed");
        if (!chain[i].constructed) continue;
        CssDistanceResult r = css_distance(*chain[i].code, SearchBudget{1u << 25});
        c.require(r.certified && r.d == ds[i],
                  chain[i].label + " certified d=" + std::to_string(ds[i]));
    }

    // [[95]] certified within the extended budget, triply even, k = 1
    c.require(chain[2].constructed, "[[95]] constructed");
    if (chain[2].constructed) {
        const CssCode& q95 = *chain[2].code;
        c.require(q95.k == 1 && validate_css(q95).all_pass, "[[95]] valid k=1");
        c.require(is_triply_even_span(q95.sx).passed, "[[95]] triply even");
        CssDistanceResult r = css_distance(q95, SearchBudget{250'000'000});
        c.require(r.certified && r.d == 7, "[[95]] certified d=7");
    }

    // [[189]]: either a verified seam or a documented mod-8 obstruction
    const ChainEntry& e189 = chain[3];
    if (e189.constructed) {
        c.require(is_triply_even_span(e189.code->sx).passed, "[[189]] triply even");
        DistanceReport isd = isd_upper_bound(e189.code->sz, e189.code->lz, 400, 189);
        c.require(isd.upper_found && isd.upper <= 9, "[[189]] witnessed d<=9");
    } else {
        c.require(e189.attempted, "[[189]] doubling attempted");
        c.require(e189.diag.status == DoublingDiagnostics::Status::SeamObstruction,
                  "[[189]] obstruction reported");
        c.require(!e189.diag.residues.empty(), "[[189]] residues documented");
        bool all_weight_blocked = !e189.diag.residues.empty();
        std::ostringstream res;
        for (const SeamAttempt& a : e189.diag.residues) {
            all_weight_blocked = all_weight_blocked && a.weight_mod8 != 0;
            res << " stage" << a.stage << ":w%8=" << a.weight_mod8;
        }
        c.require(all_weight_blocked, "[[189]] mod-8 weight residues nonzero");
        c.note("[[189]] seam obstruction:" + res.str() + " (" +
               std::to_string(e189.diag.seam_candidates) + " candidates)");
    }
    line(5, "doubling-chain", c.ok, c.detail.str());
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
    Check c;
    CssCode steane = css_from_self_dual(extend_parity(build_qr(7)));
    CssCode q15 = *double_code(steane, seed_trivial(), SearchBudget{10'000}).first;

    auto agree = [&](const CssCode& q, Gate g, unsigned lvl, bool expect,
                     const std::string& tag) {
        GateReport alg =
            g == Gate::H ? check_transversal_hadamard(q) : check_transversal_diagonal(q, lvl);
        GateReport sv = statevector_oracle(q, g);
        c.require(alg.preserves_codespace == expect, tag + " algebraic");
        c.require(sv.preserves_codespace == expect, tag + " statevector");
        c.require(alg.preserves_codespace == sv.preserves_codespace, tag + " agreement");
        if (expect && g != Gate::H)
            c.require(alg.relative_phase_eighths == sv.relative_phase_eighths,
                      tag + " phase agreement");
    };
    agree(steane, Gate::H, 0, true, "[[7]] H");
    agree(steane, Gate::S, 2, true, "[[7]] S");
    agree(steane, Gate::T, 3, false, "[[7]] T");
    agree(q15, Gate::T, 3, true, "[[15]] T");
    agree(q15, Gate::H, 0, false, "[[15]] H");
    line(6, "gate-verification", c.ok, c.detail.str());
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
    Check c;
    Splitmix64 gen(0xd17a);
    int checked = 0;

    auto span_divisible = [](const BitMatrix& m, unsigned mod) {
        BitMatrix basis = rref(m).mat;
        size_t r = basis.rows();
        BitVector cur(m.cols());
        for (uint64_t i = 1; i < (uint64_t(1) << r); i++) {
            int bit = 0;
            uint64_t x = i;
            while (!(x & 1)) {
                x >>= 1;
                bit++;
            }
            cur ^= basis.row(size_t(bit));
            if (cur.weight() % mod != 0) return false;
        }
        return true;
    };

    while (checked < 100) {
        size_t cols = 4 + gen.below(11);
        size_t rows = 1 + gen.below(10);
        // (v|v) duplication makes any random matrix self-orthogonal
        BitMatrix m(rows, 2 * cols);
        for (size_t i = 0; i < rows; i++)
            for (size_t j = 0; j < cols; j++)
                if (gen.next() & 1) {
                    m.row(i).set(j, true);
                    m.row(i).set(cols + j, true);
                }
        // pad with repeated rows up to <= 20 rows total
        size_t extra = gen.below(3);
        for (size_t t = 0; t < extra && m.rows() < 20 && m.rows() > 0; t++)
            m.append_row(m.row(gen.below(m.rows())));
        if (rank(m) > 18) continue;

        bool self_orth = true;
        for (size_t i = 0; i < m.rows() && self_orth; i++)
            for (size_t j = i; j < m.rows(); j++)
                if (overlap2(m.row(i), m.row(j)) % 2 != 0) {
                    self_orth = false;
                    break;
                }
        if (!self_orth) continue;

        bool gen2 = is_doubly_even_span(m).passed;
        bool gen3 = is_triply_even_span(m).passed;
        bool enum2 = span_divisible(m, 4);
        bool enum3 = span_divisible(m, 8);
        c.require(gen2 == enum2, "doubly even mismatch at case " + std::to_string(checked));
        c.require(gen3 == enum3, "triply even mismatch at case " + std::to_string(checked));
        checked++;
    }
    c.require(checked == 100, "100 cases");
    line(7, "divisibility-oracle-equivalence", c.ok, c.detail.str());
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
    Check c;
    CatalogOptions opts;
    opts.max_p = 23;
    opts.seed = 1;
    opts.exact_budget = 250'000'000;
    opts.isd_trials = 50;
    std::vector<CatalogEntry> entries = build_catalog(opts);
    bool saw15 = false, saw49 = false;
    for (const CatalogEntry& e : entries) {
        if (e.n == 15 && e.family == "triply-even") {
            saw15 = true;
            c.require(e.gamma == 2.465, "[[15]] gamma 2.465, got " + std::to_string(e.gamma));
        }
        if (e.n == 49) {
            saw49 = true;
            c.require(e.gamma == 2.418, "[[49]] gamma 2.418, got " + std::to_string(e.gamma));
        }
    }
    c.require(saw15 && saw49, "catalog contains [[15]] and [[49]]");

    // the catalog at this limit is exactly the expected rows
    std::vector<std::string> expect = {"[[7,1,3]]",  "[[17,1,5]]", "[[23,1,7]]",
                                       "[[15,1,3]]", "[[49,1,5]]", "[[95,1,7]]"};
    c.require(entries.size() == expect.size(), "six rows at max-p 23");
    for (size_t i = 0; i < entries.size() && i < expect.size(); i++)
        c.require(entries[i].label == expect[i], "row " + std::to_string(i) + " label");
    line(8, "gamma-metric", c.ok, c.detail.str());
}

// ---------------------------------------------------------------- criterion 9
void criterion9() {
    Check c;
    namespace fs = std::filesystem;
    std::string p1 = (fs::temp_directory_path() / "qrcss_acc_t1.json").string();
    std::string p2 = (fs::temp_directory_path() / "qrcss_acc_t2.json").string();
    auto run = [&](const std::string& path) {
        const char* argv[] = {"qrcss", "table", "--max-p", "47", "--seed", "1",
                              "--out", path.c_str()};
        std::ostringstream out, err;
        return run_cli(8, argv, out, err);
    };
    c.require(run(p1) == 0, "first run exits 0");
    c.require(run(p2) == 0, "second run exits 0");
    std::ifstream f1(p1), f2(p2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    c.require(s1.str().size() > 100, "output nonempty");
    c.require(s1.str() == s2.str(), "byte-identical JSON across runs");
    fs::remove(p1);
    fs::remove(p2);
    line(9, "determinism", c.ok, c.detail.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
