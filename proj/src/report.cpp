#include "schub/report.hpp"

#include <fstream>
#include <sstream>

namespace schub {

using nlohmann::json;
using nlohmann::ordered_json;

ComputeReport compute_report(int n, int d, int kappa, IntegrateMode mode) {
    ComputeReport r;
    r.params = triple_params(n, d, kappa);
    r.cond = condition_b(r.params, mode);
    if (r.cond.holds) r.betas = betas(r.params, mode);
    return r;
}

namespace {

ordered_json int_json(const Int& v) { return v.get_str(); }

ordered_json opt_int_json(const std::optional<Int>& v) {
    if (!v) return nullptr;
    return int_json(*v);
}

std::optional<Int> opt_int_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return int_from_str(j.get<std::string>());
}

}  // namespace

ordered_json report_to_json(const ComputeReport& r) {
    ordered_json j;
    j["n"] = r.params.n;
    j["d"] = r.params.d;
    j["kappa"] = r.params.kappa;
    j["rank_qe"] = int_json(r.params.rank_qe);
    j["dim_gr"] = int_json(r.params.dim_gr);
    j["s_excess"] = int_json(r.params.s_excess);
    j["codim_shift"] = int_json(r.params.codim_shift);
    j["m"] = opt_int_json(r.cond.m);
    j["condition_b"] = r.cond.holds;
    j["osculating_count"] = opt_int_json(r.cond.osculating_count);
    if (r.betas) {
        ordered_json arr = ordered_json::array();
        for (const auto& b : *r.betas) arr.push_back(rat_str(b));
        j["betas"] = arr;
    } else {
        j["betas"] = nullptr;
    }
    j["elv_sufficient"] = r.cond.elv_sufficient;
    j["intro_bound"] = r.cond.intro_bound;
    j["expected_fano_dim"] = int_json(r.params.expected_fano_dim);
    j["hf_dim"] = int_json(r.params.hf_dim);
    return j;
}

ComputeReport report_from_json(const json& j) {
    ComputeReport r;
    r.params = triple_params(j.at("n").get<int>(), j.at("d").get<int>(),
                             j.at("kappa").get<int>());
    // derived fields must match what the parameters produce
    if (int_from_str(j.at("rank_qe").get<std::string>()) != r.params.rank_qe ||
        int_from_str(j.at("s_excess").get<std::string>()) != r.params.s_excess)
        throw DomainError("report_from_json: derived fields disagree with (n, d, kappa)");
    r.cond.params = r.params;
    r.cond.m = opt_int_from(j.at("m"));
    r.cond.holds = j.at("condition_b").get<bool>();
    r.cond.osculating_count = opt_int_from(j.at("osculating_count"));
    r.cond.elv_sufficient = j.at("elv_sufficient").get<bool>();
    r.cond.intro_bound = j.at("intro_bound").get<bool>();
    if (!j.at("betas").is_null()) {
        std::vector<Rat> bs;
        for (const auto& b : j.at("betas")) bs.push_back(rat_from_str(b.get<std::string>()));
        r.betas = std::move(bs);
    }
    return r;
}

std::string report_text(const ComputeReport& r) {
    std::ostringstream os;
    const auto& p = r.params;
    os << "triple (n, d, kappa) = (" << p.n << ", " << p.d << ", " << p.kappa << ")\n";
    os << "  rank Sym^d V*      = " << p.rank_qe.get_str() << "\n";
    os << "  dim Gr             = " << p.dim_gr.get_str() << "\n";
    os << "  s_excess           = " << p.s_excess.get_str() << "\n";
    os << "  codim_shift        = " << p.codim_shift.get_str() << "\n";
    os << "  expected_fano_dim  = " << p.expected_fano_dim.get_str() << "\n";
    os << "  hf_dim             = " << p.hf_dim.get_str() << "\n";
    os << "  m                  = " << (r.cond.m ? r.cond.m->get_str() : "undefined") << "\n";
    os << "  condition_b        = " << (r.cond.holds ? "true" : "false") << "\n";
    os << "  osculating_count   = "
       << (r.cond.osculating_count ? r.cond.osculating_count->get_str() : "undefined") << "\n";
    os << "  elv_sufficient     = " << (r.cond.elv_sufficient ? "true" : "false") << "\n";
    os << "  intro_bound        = " << (r.cond.intro_bound ? "true" : "false") << "\n";
    if (r.betas) {
        os << "  betas              = (";
        for (size_t i = 0; i < r.betas->size(); ++i) {
            if (i) os << ", ";
            os << rat_str((*r.betas)[i]);
        }
        os << ")\n";
    }
    return os.str();
}

std::string csv_header() {
    return "n,d,kappa,rank_qe,dim_gr,s_excess,m,condition_b,osculating_count,"
           "elv_sufficient,intro_bound";
}

std::string report_csv_row(const ComputeReport& r) {
    std::ostringstream os;
    const auto& p = r.params;
    os << p.n << "," << p.d << "," << p.kappa << "," << p.rank_qe.get_str() << ","
       << p.dim_gr.get_str() << "," << p.s_excess.get_str() << ","
       << (r.cond.m ? r.cond.m->get_str() : "") << "," << (r.cond.holds ? "true" : "false")
       << "," << (r.cond.osculating_count ? r.cond.osculating_count->get_str() : "") << ","
       << (r.cond.elv_sufficient ? "true" : "false") << ","
       << (r.cond.intro_bound ? "true" : "false");
    return os.str();
}

ordered_json claims_to_json(const ClaimsReport& r) {
    ordered_json j;
    j["kappa_max"] = r.kappa_max;
    j["d_max"] = r.d_max;
    j["n_max"] = r.n_max;
    ordered_json claims = ordered_json::array();
    for (const auto& c : r.claims) {
        ordered_json cj;
        cj["id"] = c.id;
        cj["statement"] = c.statement;
        cj["pass"] = c.pass;
        cj["details"] = c.details;
        claims.push_back(cj);
    }
    j["claims"] = claims;
    ordered_json diag;
    auto triples = [](const std::vector<std::array<int, 3>>& v) {
        ordered_json arr = ordered_json::array();
        for (const auto& t : v) arr.push_back({t[0], t[1], t[2]});
        return arr;
    };
    diag["equivalence_counterexamples"] = triples(r.diagnostics.equivalence_counterexamples);
    diag["nonpositive_counts"] = triples(r.diagnostics.nonpositive_counts);
    j["diagnostics"] = diag;
    j["all_pass"] = r.all_pass();
    return j;
}

std::string claims_text(const ClaimsReport& r) {
    std::ostringstream os;
    os << "claim verification over kappa <= " << r.kappa_max << ", d <= " << r.d_max
       << ", n <= " << r.n_max << "\n";
    for (const auto& c : r.claims) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << ": " << c.statement << "\n";
        for (const auto& d : c.details) os << "         " << d << "\n";
    }
    const auto& diag = r.diagnostics;
    if (diag.equivalence_counterexamples.empty()) {
        os << "  note: no d > 2 triple in range has nonnegative excess with m = 0\n";
    } else {
        os << "  note: d > 2 triples with nonnegative excess but m = 0:";
        for (const auto& t : diag.equivalence_counterexamples)
            os << " (" << t[0] << "," << t[1] << "," << t[2] << ")";
        os << "\n";
    }
    if (diag.nonpositive_counts.empty()) {
        os << "  note: the osculating count is positive on every triple where the "
              "condition holds\n";
    } else {
        os << "  note: nonpositive osculating count at:";
        for (const auto& t : diag.nonpositive_counts)
            os << " (" << t[0] << "," << t[1] << "," << t[2] << ")";
        os << "\n";
    }
    os << (r.all_pass() ? "all claims pass" : "CLAIM VERIFICATION FAILED") << "\n";
    return os.str();
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    entries_ = ordered_json::object();
    std::ifstream in(path_);
    if (!in) return;
    json j;
    try {
        in >> j;
    } catch (const json::exception&) {
        return;  // unreadable cache is treated as empty
    }
    if (!j.is_object() || !j.contains("version") || j["version"] != kVersion) return;
    if (j.contains("entries") && j["entries"].is_object())
        for (const auto& [k, v] : j["entries"].items()) entries_[k] = v;
}

std::optional<ComputeReport> ResultCache::lookup(int n, int d, int kappa) const {
    std::string key =
        std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(kappa);
    if (!entries_.contains(key)) return std::nullopt;
    try {
        return report_from_json(entries_[key]);
    } catch (const DomainError&) {
        return std::nullopt;  // stale or hand-edited entry
    }
}

void ResultCache::store(const ComputeReport& r) {
    std::string key = std::to_string(r.params.n) + "," + std::to_string(r.params.d) + "," +
                      std::to_string(r.params.kappa);
    entries_[key] = report_to_json(r);
    dirty_ = true;
}

void ResultCache::save() const {
    if (!dirty_) return;
    ordered_json j;
    j["version"] = kVersion;
    j["entries"] = entries_;
    std::ofstream out(path_);
    if (!out) throw DomainError("cannot write cache file '" + path_ + "'");
    out << j.dump(2) << "\n";
}

}  // namespace schub
