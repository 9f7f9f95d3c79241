#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lwg/bounds.hpp"

namespace lwg {

struct ExperimentConfig {
    std::string family;
    std::map<std::string, double> params;
    int runs = 100;     ///< seeds per random family (max is reported)
    double eps = 0.01;
    std::uint64_t seed0 = 1;
    int jobs = 2;
    double iter_constant = 4.0;
    std::function<void(int, int)> progress; ///< (done, total), may be empty
};

struct FamilyResult {
    std::string family;
    std::string params_str;
    std::string stat = "alpha_min"; ///< "alpha_min" or "tree_alpha" (exact, trees)
    int n = 0, m = 0;
    int runs = 0;
    double max_value = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
    std::vector<double> values; ///< per-seed values, ordered by seed
};

/// Runs one family: deterministic families once, random families over
/// `runs` seeds in a worker pool. Trees are evaluated by the exact
/// congestion ratio, everything else by alpha_min of the bounds pipeline.
FamilyResult run_family(const ExperimentConfig& config);

/// Whether the family ignores the seed (single run suffices).
bool family_is_deterministic(const std::string& family);

/// The Table-1 row set: name -> (family, params). Order matters for output.
std::vector<std::pair<std::string, ExperimentConfig>>
table1_rows(int runs, double eps, int jobs);

/// Simple index-parallel map with a fixed worker count; results land by index.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

} // namespace lwg
