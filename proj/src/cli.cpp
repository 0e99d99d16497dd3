#include "schub/cli.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "schub/expr.hpp"

namespace schub {

namespace {

// fixed work list, any number of workers, results land by index
template <typename F>
void parallel_for(size_t count, int jobs, F&& f) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                f(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    int spawn = std::min<int>(jobs, static_cast<int>(count));
    threads.reserve(static_cast<size_t>(spawn));
    for (int t = 0; t < spawn; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write output file '" + path + "'");
    out << content;
}

struct CommonArgs {
    int n = 0, d = 0, kappa = 0;
    std::string format = "text";
    std::string mode = "schur";
    std::string cache_path;
};

ComputeReport compute_maybe_cached(int n, int d, int kappa, IntegrateMode mode,
                                   ResultCache* cache) {
    if (cache) {
        if (auto hit = cache->lookup(n, d, kappa)) return *hit;
    }
    ComputeReport r = compute_report(n, d, kappa, mode);
    if (cache) cache->store(r);
    return r;
}

}  // namespace

std::vector<ComputeReport> run_scan(const ScanRange& range, IntegrateMode mode, int jobs,
                                    ResultCache* cache) {
    if (range.kappa_min < 1 || range.kappa_max < range.kappa_min || range.d_min < 1 ||
        range.d_max < range.d_min || range.n_max < range.kappa_min + 1)
        throw DomainError("scan: empty or invalid range");
    if (jobs < 1) throw DomainError("scan: parallelism degree must be >= 1");

    std::vector<std::array<int, 3>> work;  // (kappa, d, n) in report order
    for (int kappa = range.kappa_min; kappa <= range.kappa_max; ++kappa)
        for (int d = range.d_min; d <= range.d_max; ++d)
            for (int n = kappa + 1; n <= range.n_max; ++n) work.push_back({kappa, d, n});

    std::vector<std::optional<ComputeReport>> slots(work.size());
    std::vector<size_t> fresh;  // indices not served by the cache
    for (size_t i = 0; i < work.size(); ++i) {
        auto [kappa, d, n] = work[i];
        if (cache) {
            if (auto hit = cache->lookup(n, d, kappa)) {
                slots[i] = std::move(hit);
                continue;
            }
        }
        fresh.push_back(i);
    }
    parallel_for(fresh.size(), jobs, [&](size_t w) {
        size_t i = fresh[w];
        auto [kappa, d, n] = work[i];
        slots[i] = compute_report(n, d, kappa, mode);
    });
    std::vector<ComputeReport> rows;
    rows.reserve(slots.size());
    for (size_t i = 0; i < slots.size(); ++i) {
        if (cache) cache->store(*slots[i]);
        rows.push_back(std::move(*slots[i]));
    }
    return rows;
}

std::string scan_to_csv(const std::vector<ComputeReport>& rows) {
    std::string out = csv_header() + "\n";
    for (const auto& r : rows) out += report_csv_row(r) + "\n";
    return out;
}

nlohmann::ordered_json scan_to_json(const ScanRange& range,
                                    const std::vector<ComputeReport>& rows) {
    nlohmann::ordered_json j;
    j["kappa_min"] = range.kappa_min;
    j["kappa_max"] = range.kappa_max;
    j["d_min"] = range.d_min;
    j["d_max"] = range.d_max;
    j["n_max"] = range.n_max;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(report_to_json(r));
    j["results"] = arr;
    return j;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact intersection-theory engine for planes on hypersurfaces"};
    app.require_subcommand(1);

    CommonArgs c;

    auto* compute = app.add_subcommand("compute", "evaluate one (n, d, kappa) triple");
    compute->add_option("--n", c.n, "ambient projective dimension")->required();
    compute->add_option("--d", c.d, "hypersurface degree")->required();
    compute->add_option("--kappa", c.kappa, "plane dimension")->required();
    compute->add_option("--format", c.format, "text|json|csv")->default_val("text");
    compute->add_option("--mode", c.mode, "schur|oracle|both")->default_val("schur");
    compute->add_option("--cache", c.cache_path, "result cache file");

    ScanRange range;
    std::string scan_out, scan_format = "json", scan_cache;
    int jobs = 1;
    auto* scan = app.add_subcommand("scan", "evaluate a range of triples");
    scan->add_option("--kappa-min", range.kappa_min)->default_val(1);
    scan->add_option("--kappa-max", range.kappa_max)->required();
    scan->add_option("--d-min", range.d_min)->default_val(1);
    scan->add_option("--d-max", range.d_max)->required();
    scan->add_option("--n-max", range.n_max)->required();
    scan->add_option("--out", scan_out, "output path (default stdout)");
    scan->add_option("--format", scan_format, "json|csv")->default_val("json");
    scan->add_option("--jobs", jobs, "worker threads")->default_val(1);
    scan->add_option("--mode", c.mode, "schur|oracle|both")->default_val("schur");
    scan->add_option("--cache", scan_cache, "result cache file");

    int claims_kappa = 4, claims_d = 6, claims_n = 12;
    std::string claims_format = "text", claims_mode = "both";
    auto* claims = app.add_subcommand("verify-claims", "check the recorded facts");
    claims->add_option("--kappa-max", claims_kappa)->default_val(4);
    claims->add_option("--d-max", claims_d)->default_val(6);
    claims->add_option("--n-max", claims_n)->default_val(12);
    claims->add_option("--format", claims_format, "text|json")->default_val("text");
    claims->add_option("--mode", claims_mode, "schur|oracle|both")->default_val("both");

    auto* betas_cmd = app.add_subcommand("betas", "beta coefficients of one triple");
    betas_cmd->add_option("--n", c.n)->required();
    betas_cmd->add_option("--d", c.d)->required();
    betas_cmd->add_option("--kappa", c.kappa)->required();
    betas_cmd->add_option("--format", c.format, "text|json")->default_val("text");
    betas_cmd->add_option("--mode", c.mode, "schur|oracle|both")->default_val("schur");

    std::string expr_text;
    auto* integrate = app.add_subcommand("integrate", "integrate a class expression");
    integrate->add_option("--n", c.n)->required();
    integrate->add_option("--kappa", c.kappa)->required();
    integrate->add_option("--expr", expr_text, "class expression")->required();
    integrate->add_option("--mode", c.mode, "schur|oracle|both")->default_val("schur");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) {
            IntegrateMode mode = parse_mode(c.mode);
            std::optional<ResultCache> cache;
            if (!c.cache_path.empty()) cache.emplace(c.cache_path);
            ComputeReport r =
                compute_maybe_cached(c.n, c.d, c.kappa, mode, cache ? &*cache : nullptr);
            if (cache) cache->save();
            if (c.format == "json")
                std::cout << report_to_json(r).dump(2) << "\n";
            else if (c.format == "csv")
                std::cout << csv_header() << "\n" << report_csv_row(r) << "\n";
            else if (c.format == "text")
                std::cout << report_text(r);
            else
                throw DomainError("unknown format '" + c.format + "'");
            return 0;
        }
        if (scan->parsed()) {
            IntegrateMode mode = parse_mode(c.mode);
            std::optional<ResultCache> cache;
            if (!scan_cache.empty()) cache.emplace(scan_cache);
            auto rows = run_scan(range, mode, jobs, cache ? &*cache : nullptr);
            if (cache) cache->save();
            std::string content;
            if (scan_format == "csv")
                content = scan_to_csv(rows);
            else if (scan_format == "json")
                content = scan_to_json(range, rows).dump(2) + "\n";
            else
                throw DomainError("unknown format '" + scan_format + "'");
            write_output(scan_out, content);
            return 0;
        }
        if (claims->parsed()) {
            ClaimsReport rep =
                verify_claims(claims_kappa, claims_d, claims_n, parse_mode(claims_mode));
            if (claims_format == "json")
                std::cout << claims_to_json(rep).dump(2) << "\n";
            else if (claims_format == "text")
                std::cout << claims_text(rep);
            else
                throw DomainError("unknown format '" + claims_format + "'");
            return rep.all_pass() ? 0 : 1;
        }
        if (betas_cmd->parsed()) {
            IntegrateMode mode = parse_mode(c.mode);
            TripleParams p = triple_params(c.n, c.d, c.kappa);
            std::vector<Rat> bs = betas(p, mode);
            if (c.format == "json") {
                ComputeReport r = compute_report(c.n, c.d, c.kappa, mode);
                std::cout << report_to_json(r).dump(2) << "\n";
            } else if (c.format == "text") {
                for (size_t i = 0; i < bs.size(); ++i)
                    std::cout << "beta_" << i << " = " << rat_str(bs[i]) << "\n";
            } else {
                throw DomainError("unknown format '" + c.format + "'");
            }
            return 0;
        }
        if (integrate->parsed()) {
            IntegrateMode mode = parse_mode(c.mode);
            GrContext ctx(c.n, c.kappa);
            GrClass x = parse_class_expr(ctx, expr_text);
            auto deg = x.degree();
            if (!deg || *deg != ctx.dim())
                throw DomainError(
                    "expression must be homogeneous of the top degree " +
                    std::to_string(ctx.dim()) +
                    (x.zero() ? " (it is zero)"
                              : (deg ? " (got degree " + std::to_string(*deg) + ")"
                                     : " (it is mixed)")));
            if (mode == IntegrateMode::both) {
                Int s = gr_integrate(x, IntegrateMode::schur);
                Int o = gr_integrate(x, IntegrateMode::oracle);
                std::cout << "schur  = " << s.get_str() << "\n";
                std::cout << "oracle = " << o.get_str() << "\n";
                if (s != o) throw InternalError("integration routes disagree");
            } else {
                std::cout << gr_integrate(x, mode).get_str() << "\n";
            }
            return 0;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace schub
