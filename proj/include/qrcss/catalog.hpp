#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrcss/css.hpp"
#include "qrcss/distance.hpp"
#include "qrcss/doubling.hpp"
#include "qrcss/gates.hpp"

#include "json.hpp"

namespace qrcss {

struct CatalogOptions {
    uint64_t max_p = 47;
    uint64_t seed = 1;
    uint64_t certify_max_p = 47;          // QR codes up to here get exact searches
    uint64_t exact_budget = 250'000'000;  // candidate cap per exact search
    uint64_t partial_budget = 3'000'000;  // lower-bound effort for sampled codes
    uint64_t isd_trials = 400;
    uint64_t seam_budget = 60'000;
    unsigned threads = 0;
};

/// One catalog row: a quantum code with provenance-tagged parameters, its
/// divisibility level, gate reports and distillation exponent.
struct CatalogEntry {
    std::string label;
    std::string family;  // "doubly-even" or "triply-even"
    size_t n = 0, k = 1;
    size_t d_value = 0;
    Provenance d_source = Provenance::Unverified;
    std::optional<size_t> d_lower, d_upper;
    bool d_certified = false;
    int divisibility_level = 0;
    bool divisibility_checked = false;
    std::optional<GateReport> gate_h, gate_s, gate_t;
    double gamma = 0.0;
    bool constructed = false;
    // lineage for doubled entries: n3 = 2*n1 + n2
    bool doubled = false;
    size_t n1 = 0, n2 = 0;
    std::string q1_label, q2_label;
    std::optional<DoublingDiagnostics> diag;
    uint64_t effort_candidates = 0;
    std::optional<CssCode> code;
};

std::vector<CatalogEntry> build_catalog(const CatalogOptions& opts);

nlohmann::ordered_json entry_json(const CatalogEntry& e);
nlohmann::ordered_json catalog_json(const std::vector<CatalogEntry>& entries,
                                    const CatalogOptions& opts);

nlohmann::ordered_json distance_report_json(const DistanceReport& r);
nlohmann::ordered_json gate_report_json(const GateReport& g);

}  // namespace qrcss
