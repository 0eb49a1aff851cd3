#pragma once

#include "papr/bench/config.hpp"
#include "papr/ccdf.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace papr::bench {

struct ProbabilityPoint {
    double probability;
    std::optional<double> papr_db;  // empty when the curve does not reach the probability
};

struct RunResult {
    ExperimentConfig config;
    CcdfCurve curve;
    std::vector<double> papr_db;  // per symbol, in symbol order
    double mean_papr_db = 0.0;
    double max_papr_db = 0.0;
    std::vector<ProbabilityPoint> papr_at;  // at 1e-1, 1e-2, 1e-3
    std::vector<std::pair<std::string, double>> stats;  // technique aggregates, fixed order
    double wall_seconds = 0.0;
};

/// Worker count: PAPR_BENCH_THREADS when set, else `requested`, else the hardware
/// concurrency.
std::size_t resolve_workers(std::optional<std::size_t> requested);

/// Monte-Carlo campaign. Symbol i draws its bits from stream (master_seed, i) only, and
/// results are merged in symbol order, so the output does not depend on `workers`.
RunResult run_experiment(const ExperimentConfig& cfg, std::size_t workers = 1);

}  // namespace papr::bench
