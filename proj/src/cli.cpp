#include "qrcss/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qrcss/catalog.hpp"
#include "qrcss/divisibility.hpp"
#include "qrcss/io.hpp"

namespace qrcss {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitNotCertified = 3;

void emit(std::ostream& out, const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
    f << text;
}

std::string describe(const DistanceReport& r) {
    std::ostringstream os;
    if (r.certified)
        os << "d = " << r.upper << " (certified, " << to_string(r.method) << ", "
           << r.effort.candidates << " candidates";
    else if (r.upper_found)
        os << "d in [" << r.lower << ", " << r.upper << "] (" << to_string(r.method) << ", "
           << r.effort.candidates << " candidates";
    else
        os << "d >= " << r.lower << " (no witness, " << r.effort.candidates << " candidates";
    char wall[32];
    std::snprintf(wall, sizeof wall, ", %.2fs)", r.effort.wall_seconds);
    return os.str() + wall;
}

int cmd_qr(uint64_t p, bool extend, const std::string& out_path, uint64_t budget,
           unsigned threads, std::ostream& out) {
    ClassicalCode code = build_qr(p);
    if (extend) code = extend_parity(code);
    std::ostringstream file;
    write_classical(file, code);
    emit(out, out_path, file.str());

    out << "[" << code.n << "," << code.k() << "] " << code.label << "\n";
    DistanceReport rep = classical_min_distance(code, SearchBudget{budget, threads});
    out << describe(rep) << "\n";
    return rep.certified ? kExitOk : kExitNotCertified;
}

int cmd_css(const std::string& from, const std::string& out_path, std::ostream& out) {
    ClassicalCode sd = read_classical_file(from);
    CssCode q = css_from_self_dual(sd);
    std::ostringstream file;
    write_css(file, q);
    emit(out, out_path, file.str());
    if (!out_path.empty()) out << q.label << " written to " << out_path << "\n";
    return kExitOk;
}

int cmd_double(const std::string& q1_path, const std::string& q2_path,
               const std::string& out_path, uint64_t seam_budget, std::ostream& out) {
    CssCode q1 = read_css_file(q1_path);
    CssCode q2 = read_css_file(q2_path);
    auto [code, diag] = double_code(q1, q2, SearchBudget{seam_budget});

    json dj;
    dj["status"] =
        diag.status == DoublingDiagnostics::Status::Success ? "success" : "seam-obstruction";
    dj["n3"] = diag.n3;
    dj["k"] = diag.k;
    dj["seam_candidates"] = diag.seam_candidates;
    if (!diag.residues.empty()) {
        json rs = json::array();
        for (const SeamAttempt& a : diag.residues)
            rs.push_back(json{{"stage", a.stage},
                              {"weight_mod8", a.weight_mod8},
                              {"pair_mod4", a.worst_pair_mod4},
                              {"triple_mod2", a.worst_triple_mod2}});
        dj["residues"] = rs;
    }
    if (!code) {
        out << dj.dump(2) << "\n";
        return kExitNotCertified;
    }
    std::ostringstream file;
    write_css(file, *code);
    emit(out, out_path, file.str());
    if (!out_path.empty()) out << dj.dump(2) << "\n";
    return kExitOk;
}

int cmd_distance(const std::string& path, const std::string& mode, uint64_t budget,
                 uint64_t seed, uint64_t trials, unsigned threads, std::ostream& out) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    bool classical = sniff_classical(f);

    json j;
    j["label"] = path;
    int code = kExitOk;
    if (classical) {
        ClassicalCode c = read_classical(f, path);
        j["n"] = c.n;
        j["k"] = c.k();
        DistanceReport rep = mode == "sample"
                                 ? isd_upper_bound(c.generator, BitVector(c.n), trials, seed)
                                 : classical_min_distance(c, SearchBudget{budget, threads});
        j["d"] = distance_report_json(rep);
        j["seed"] = seed;
        j["effort"] = json{{"candidates", rep.effort.candidates}};
        if (mode != "sample" && !rep.certified) code = kExitNotCertified;
    } else {
        CssCode q = read_css(f, path);
        j["n"] = q.n;
        j["k"] = q.k;
        if (mode == "sample") {
            DistanceReport dz = isd_upper_bound(q.sz, q.lz, trials, seed);
            DistanceReport dx = isd_upper_bound(q.sx, q.lx, trials, seed + 1);
            j["dZ"] = distance_report_json(dz);
            j["dX"] = distance_report_json(dx);
            if (dz.upper_found && dx.upper_found)
                j["d"] = json{{"upper", std::min(dz.upper, dx.upper)}, {"certified", false}};
            j["effort"] =
                json{{"candidates", dz.effort.candidates + dx.effort.candidates}};
        } else {
            CssDistanceResult res = css_distance(q, SearchBudget{budget, threads});
            j["dZ"] = distance_report_json(res.dz);
            j["dX"] = distance_report_json(res.dx);
            j["d"] = json{{"value", res.d}, {"certified", res.certified}};
            j["effort"] = json{
                {"candidates", res.dx.effort.candidates + res.dz.effort.candidates}};
            if (!res.certified) code = kExitNotCertified;
        }
        j["seed"] = seed;
    }
    out << j.dump(2) << "\n";
    return code;
}

int cmd_verify(const std::string& path, const std::string& checks_csv, std::ostream& out) {
    CssCode q = read_css_file(path);
    bool all = true;
    auto report = [&](const std::string& name, bool pass) {
        out << name << ": " << (pass ? "pass" : "FAIL") << "\n";
        all = all && pass;
    };

    CssValidation v = validate_css(q);
    for (const CssCheck& c : v.checks) report("css." + c.name, c.pass);

    std::stringstream ss(checks_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "doubly-even") {
            report("doubly-even", is_doubly_even_span(q.sx).passed);
        } else if (item == "triply-even") {
            report("triply-even", is_triply_even_span(q.sx).passed);
        } else if (item == "clifford") {
            GateReport h = check_transversal_hadamard(q);
            GateReport s = check_transversal_diagonal(q, 2);
            bool agree = true;
            if (q.n <= 25) {
                agree = statevector_oracle(q, Gate::H).preserves_codespace ==
                            h.preserves_codespace &&
                        statevector_oracle(q, Gate::S).preserves_codespace ==
                            s.preserves_codespace;
            }
            report("clifford.H", h.preserves_codespace);
            report("clifford.S", s.preserves_codespace);
            report("clifford.oracle-agreement", agree);
        } else if (item == "T") {
            GateReport t = check_transversal_diagonal(q, 3);
            bool agree = true;
            if (q.n <= 25)
                agree = statevector_oracle(q, Gate::T).preserves_codespace ==
                        t.preserves_codespace;
            report("T", t.preserves_codespace);
            report("T.oracle-agreement", agree);
        } else {
            throw CLI::ValidationError("--checks", "unknown check '" + item + "'");
        }
    }
    return all ? kExitOk : kExitVerifyFail;
}

int cmd_table(const CatalogOptions& opts, const std::string& out_path, std::ostream& out) {
    std::vector<CatalogEntry> entries = build_catalog(opts);
    json j = catalog_json(entries, opts);
    std::string text = j.dump(2) + "\n";
    emit(out, out_path, text);
    if (!out_path.empty()) {
        for (const CatalogEntry& e : entries)
            out << e.label << "  d=" << e.d_value << " (" << to_string(e.d_source) << ")"
                << (e.constructed ? "" : "  [not constructed]") << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"quadratic-residue CSS code toolkit: construction, doubling, "
                 "distance certification, transversal-gate verification"};
    app.require_subcommand(1);

    // qr
    auto* qr = app.add_subcommand("qr", "build a quadratic-residue code");
    uint64_t qr_p = 0;
    bool qr_extend = false;
    std::string qr_out;
    uint64_t qr_budget = 20'000'000;
    unsigned qr_threads = 0;
    qr->add_option("--p", qr_p, "prime length, p = +-1 mod 8")->required();
    qr->add_flag("--extend", qr_extend, "append a parity column");
    qr->add_option("--out", qr_out, "output file (default stdout)");
    qr->add_option("--budget", qr_budget, "distance search candidate budget");
    qr->add_option("--threads", qr_threads, "search threads (0 = auto)");

    // css
    auto* css = app.add_subcommand("css", "CSS code from a self-dual classical code");
    std::string css_from, css_out;
    css->add_option("--from-selfdual", css_from, "classical code file")->required();
    css->add_option("--out", css_out, "output file (default stdout)");

    // double
    auto* dbl = app.add_subcommand("double", "apply the doubling map");
    std::string dbl_q1, dbl_q2, dbl_out;
    uint64_t dbl_budget = 60'000;
    dbl->add_option("--q1", dbl_q1, "doubly even CSS file")->required();
    dbl->add_option("--q2", dbl_q2, "triply even CSS file")->required();
    dbl->add_option("--out", dbl_out, "output file (default stdout)");
    dbl->add_option("--seam-budget", dbl_budget, "seam search candidate budget");

    // distance
    auto* dist = app.add_subcommand("distance", "minimum-distance report");
    std::string dist_code, dist_mode = "exact", dist_out;
    uint64_t dist_budget = 50'000'000, dist_seed = 1, dist_trials = 400;
    unsigned dist_threads = 0;
    dist->add_option("--code", dist_code, "classical or CSS code file")->required();
    dist->add_option("--mode", dist_mode, "exact|sample")
        ->check(CLI::IsMember({"exact", "sample"}));
    dist->add_option("--budget", dist_budget, "candidate budget (exact mode)");
    dist->add_option("--seed", dist_seed, "sampling seed");
    dist->add_option("--trials", dist_trials, "sampling trials");
    dist->add_option("--threads", dist_threads, "search threads (0 = auto)");

    // verify
    auto* ver = app.add_subcommand("verify", "check code properties");
    std::string ver_code, ver_checks;
    ver->add_option("--code", ver_code, "CSS code file")->required();
    ver->add_option("--checks", ver_checks,
                    "comma list: doubly-even,triply-even,clifford,T");

    // table
    auto* tab = app.add_subcommand("table", "regenerate the code catalog");
    CatalogOptions opts;
    std::string tab_out;
    tab->add_option("--max-p", opts.max_p, "largest QR prime")->required();
    tab->add_option("--out", tab_out, "JSON output file");
    tab->add_option("--seed", opts.seed, "sampling seed");
    tab->add_option("--budget", opts.exact_budget, "exact search candidate budget");
    tab->add_option("--trials", opts.isd_trials, "sampling trials per code");
    tab->add_option("--seam-budget", opts.seam_budget, "seam search budget");
    tab->add_option("--threads", opts.threads, "search threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (qr->parsed()) return cmd_qr(qr_p, qr_extend, qr_out, qr_budget, qr_threads, out);
        if (css->parsed()) return cmd_css(css_from, css_out, out);
        if (dbl->parsed()) return cmd_double(dbl_q1, dbl_q2, dbl_out, dbl_budget, out);
        if (dist->parsed())
            return cmd_distance(dist_code, dist_mode, dist_budget, dist_seed, dist_trials,
                                dist_threads, out);
        if (ver->parsed()) return cmd_verify(ver_code, ver_checks, out);
        if (tab->parsed()) return cmd_table(opts, tab_out, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}

}  // namespace qrcss
