#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schub/motive.hpp"

namespace schub {

inline constexpr const char* kVersion = "0.1.0";

// One fully evaluated triple: parameters, the condition report, and the beta
// coefficients when they exist.
struct ComputeReport {
    TripleParams params;
    ConditionBReport cond;
    std::optional<std::vector<Rat>> betas;
};

ComputeReport compute_report(int n, int d, int kappa, IntegrateMode mode);

// Big integers serialize as decimal strings, rationals as "p/q" in lowest
// terms; never as floats.
nlohmann::ordered_json report_to_json(const ComputeReport& r);
ComputeReport report_from_json(const nlohmann::json& j);

std::string report_text(const ComputeReport& r);
std::string csv_header();
std::string report_csv_row(const ComputeReport& r);

nlohmann::ordered_json claims_to_json(const ClaimsReport& r);
std::string claims_text(const ClaimsReport& r);

// Result cache: a JSON file keyed by "n,d,kappa", stamped with the artifact
// version; entries from other versions are dropped on load.
class ResultCache {
public:
    explicit ResultCache(std::string path);
    std::optional<ComputeReport> lookup(int n, int d, int kappa) const;
    void store(const ComputeReport& r);
    void save() const;

private:
    std::string path_;
    nlohmann::ordered_json entries_;
    bool dirty_ = false;
};

}  // namespace schub
