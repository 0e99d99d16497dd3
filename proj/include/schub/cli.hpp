#pragma once

#include <string>
#include <vector>

#include "schub/report.hpp"

namespace schub {

// exit codes: 0 ok, 1 claim verification failed, 2 usage error, 3 broken invariant
int run_cli(int argc, const char* const* argv);

struct ScanRange {
    int kappa_min = 1, kappa_max = 1;
    int d_min = 1, d_max = 1;
    int n_max = 2;
};

// All triples in the range, sorted by (kappa, d, n); deterministic and
// independent of the parallelism degree.
std::vector<ComputeReport> run_scan(const ScanRange& range, IntegrateMode mode, int jobs,
                                    ResultCache* cache = nullptr);

std::string scan_to_csv(const std::vector<ComputeReport>& rows);
nlohmann::ordered_json scan_to_json(const ScanRange& range, const std::vector<ComputeReport>& rows);

}  // namespace schub
