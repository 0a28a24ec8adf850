#include "qrcss/catalog.hpp"

#include <cmath>

#include "qrcss/divisibility.hpp"

namespace qrcss {

namespace {

using json = nlohmann::ordered_json;

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

void attach_gates(CatalogEntry& e, const CssCode& q) {
    e.gate_h = check_transversal_hadamard(q);
    e.gate_s = check_transversal_diagonal(q, 2);
    e.gate_t = check_transversal_diagonal(q, 3);
}

void attach_divisibility(CatalogEntry& e, const CssCode& q) {
    if (is_triply_even_span(q.sx).passed)
        e.divisibility_level = 3;
    else if (is_doubly_even_span(q.sx).passed)
        e.divisibility_level = 2;
    else
        e.divisibility_level = 0;
    e.divisibility_checked = true;
}

// merge an exact/partial search with an optional sampling run
void attach_distance(CatalogEntry& e, const CssCode& q, size_t claimed,
                     const CatalogOptions& opts, bool exact) {
    SearchBudget budget{exact ? opts.exact_budget : opts.partial_budget, opts.threads};
    CssDistanceResult res = css_distance(q, budget);
    e.effort_candidates += res.dx.effort.candidates + res.dz.effort.candidates;

    size_t lower = std::min(res.dx.lower, res.dz.lower);
    std::optional<size_t> upper;
    if (res.dx.upper_found && res.dz.upper_found)
        upper = std::min(res.dx.upper, res.dz.upper);

    if (!res.certified) {
        // sampling pass for a concrete witness on each logical coset
        DistanceReport zi = isd_upper_bound(q.sz, q.lz, opts.isd_trials, opts.seed + q.n);
        DistanceReport xi = isd_upper_bound(q.sx, q.lx, opts.isd_trials, opts.seed + q.n + 1);
        e.effort_candidates += zi.effort.candidates + xi.effort.candidates;
        if (zi.upper_found && xi.upper_found) {
            size_t u = std::min(zi.upper, xi.upper);
            if (!upper || u < *upper) upper = u;
        }
    }

    e.d_lower = lower;
    e.d_upper = upper;
    e.d_certified = res.certified;
    if (res.certified) {
        e.d_value = res.d;
        e.d_source = Provenance::Certified;
    } else if (upper && *upper == claimed) {
        e.d_value = *upper;
        e.d_source = Provenance::Witnessed;
    } else {
        e.d_value = claimed;
        e.d_source = Provenance::PaperTable;
    }
}

}  // namespace

std::vector<CatalogEntry> build_catalog(const CatalogOptions& opts) {
    std::vector<CatalogEntry> entries;

    auto make_constructed = [&](const CssCode& q, const std::string& family, size_t claimed,
                                bool exact) {
        CatalogEntry e;
        e.label = q.label;
        e.family = family;
        e.n = q.n;
        e.k = q.k;
        e.constructed = true;
        e.code = q;
        attach_divisibility(e, q);
        attach_gates(e, q);
        attach_distance(e, q, claimed, opts, exact);
        if (e.d_value >= 2) e.gamma = round3(gamma_exponent(q, e.d_value));
        return e;
    };

    // column 2: doubly even CSS codes from the QR pipeline, plus the
    // 17-qubit gap filler
    for (uint64_t p : table_primes()) {
        if (p > opts.max_p) break;
        CssCode q = css_from_self_dual(extend_parity(build_qr(p)));
        size_t claimed = table_prime_distance(p);
        q.label = "[[" + std::to_string(q.n) + ",1," + std::to_string(claimed) + "]]";
        entries.push_back(make_constructed(q, "doubly-even", claimed, p <= opts.certify_max_p));
        if (p == 7 && opts.max_p >= 17)
            entries.push_back(make_constructed(seed_color17(), "doubly-even", 5, true));
    }

    // column 3: the doubling chain
    SearchBudget seam_budget{opts.seam_budget, opts.threads};
    for (const ChainEntry& ce : build_table_chain(opts.max_p, seam_budget)) {
        if (ce.constructed) {
            CatalogEntry e = make_constructed(*ce.code, "triply-even", ce.claimed_d, true);
            e.doubled = true;
            e.n1 = ce.n1;
            e.n2 = ce.n2;
            e.q1_label = ce.q1_label;
            e.q2_label = ce.q2_label;
            e.diag = ce.diag;
            entries.push_back(std::move(e));
        } else {
            CatalogEntry e;
            e.label = ce.label;
            e.family = "triply-even";
            e.n = ce.n3;
            e.k = 1;
            e.d_value = ce.claimed_d;
            e.d_source = Provenance::Unverified;
            e.divisibility_level = 3;       // expected, not checked
            e.divisibility_checked = false;
            e.doubled = true;
            e.n1 = ce.n1;
            e.n2 = ce.n2;
            e.q1_label = ce.q1_label;
            e.q2_label = ce.q2_label;
            if (ce.attempted) e.diag = ce.diag;
            if (e.d_value >= 2) e.gamma = round3(std::log(double(e.n)) / std::log(double(e.d_value)));
            entries.push_back(std::move(e));
        }
    }
    return entries;
}

json distance_report_json(const DistanceReport& r) {
    json j;
    j["lower"] = r.lower;
    if (r.upper_found) j["upper"] = r.upper;
    j["certified"] = r.certified;
    j["method"] = to_string(r.method);
    j["candidates"] = r.effort.candidates;
    if (r.method == DistanceMethod::IsdSample) j["seed"] = r.seed;
    if (r.witness) j["witness"] = r.witness->to_string();
    return j;
}

json gate_report_json(const GateReport& g) {
    json j;
    j["preserves_codespace"] = g.preserves_codespace;
    if (g.relative_phase_eighths)
        j["relative_phase_eighths"] = *g.relative_phase_eighths;
    if (g.gate == Gate::H) j["hadamard_action"] = g.hadamard_action;
    j["method"] = g.method == GateReport::Method::Algebraic ? "algebraic" : "statevector";
    return j;
}

json entry_json(const CatalogEntry& e) {
    json j;
    j["label"] = e.label;
    j["family"] = e.family;
    j["n"] = e.n;
    j["k"] = e.k;
    json d;
    d["value"] = e.d_value;
    d["source"] = to_string(e.d_source);
    if (e.d_lower) d["lower"] = *e.d_lower;
    if (e.d_upper) d["upper"] = *e.d_upper;
    d["certified"] = e.d_certified;
    j["d"] = d;
    json div;
    div["level"] = e.divisibility_level;
    div["checked"] = e.divisibility_checked;
    j["divisibility"] = div;
    if (e.gate_h || e.gate_s || e.gate_t) {
        json g;
        if (e.gate_h) g["H"] = gate_report_json(*e.gate_h);
        if (e.gate_s) g["S"] = gate_report_json(*e.gate_s);
        if (e.gate_t) g["T"] = gate_report_json(*e.gate_t);
        j["gates"] = g;
    }
    if (e.gamma > 0) j["gamma"] = e.gamma;
    if (e.doubled) {
        json lin;
        lin["n1"] = e.n1;
        lin["n2"] = e.n2;
        lin["identity"] = "2*" + std::to_string(e.n1) + "+" + std::to_string(e.n2) + "=" +
                          std::to_string(2 * e.n1 + e.n2);
        lin["q1"] = e.q1_label;
        lin["q2"] = e.q2_label;
        j["lineage"] = lin;
    }
    if (e.diag) {
        json dg;
        dg["status"] = e.diag->status == DoublingDiagnostics::Status::Success
                           ? "success"
                           : "seam-obstruction";
        dg["seam_candidates"] = e.diag->seam_candidates;
        json rs = json::array();
        for (const SeamAttempt& a : e.diag->residues) {
            json r;
            r["stage"] = a.stage;
            r["weight_mod8"] = a.weight_mod8;
            r["pair_mod4"] = a.worst_pair_mod4;
            r["triple_mod2"] = a.worst_triple_mod2;
            rs.push_back(r);
        }
        if (!rs.empty()) dg["residues"] = rs;
        j["doubling"] = dg;
    }
    j["constructed"] = e.constructed;
    j["effort"] = json{{"candidates", e.effort_candidates}};
    return j;
}

json catalog_json(const std::vector<CatalogEntry>& entries, const CatalogOptions& opts) {
    json j;
    j["tool"] = "qrcss";
    j["max_p"] = opts.max_p;
    j["seed"] = opts.seed;
    json arr = json::array();
    for (const CatalogEntry& e : entries) arr.push_back(entry_json(e));
    j["entries"] = arr;
    json curve = json::array();
    for (const CatalogEntry& e : entries)
        if (e.family == "triply-even")
            curve.push_back(json{{"n", e.n}, {"d", e.d_value}, {"source", to_string(e.d_source)}});
    j["curve"] = curve;
    return j;
}

}  // namespace qrcss
