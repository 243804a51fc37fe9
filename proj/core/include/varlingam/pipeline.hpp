#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "varlingam/data_matrix.hpp"
#include "varlingam/evaluation.hpp"
#include "varlingam/result.hpp"

namespace varlingam {

/// Full discovery on an in-memory matrix: lag fit, residual extraction,
/// ordering by the configured engine, instantaneous and lagged effect
/// estimation, pruning. Per-phase wall-clock seconds are recorded in the
/// result; load_seconds is charged to the load phase for callers that read
/// the data themselves. config.lags = 0 skips the lag fit and treats the
/// centered input columns as the residuals.
DiscoveryResult discover(const DataMatrix& x, const RunConfig& config,
                         double load_seconds = 0.0);

/// Loads a CSV and runs discovery on it. config.input is overwritten with the
/// path.
DiscoveryResult run_discover(const std::string& csv_path, RunConfig config);

/// One benchmark sweep cell set: every combination of m, n, and seed is
/// simulated once, then every engine runs `repeats` times on it.
struct BenchmarkGrid {
    std::vector<int> m_values;
    std::vector<Index> n_values;
    std::vector<std::uint64_t> seeds;
    std::vector<Engine> engines{Engine::baseline, Engine::heuristic};
    int lags = 1;
    double density = 0.3;
    NoiseFamily noise = NoiseFamily::uniform;
    int repeats = 3;
    double prune = 0.05;
    int threads = 1;
};

/// One sweep measurement. Scores compare the pruned instantaneous estimate
/// against the generating model's edge pattern. A cell that throws is recorded
/// with failed = true and NaN measurements instead of aborting the sweep.
struct BenchmarkRow {
    Engine engine = Engine::baseline;
    int m = 0;
    Index n = 0;
    int lags = 0;
    std::uint64_t seed = 0;
    int repeat = 0;
    double phase_load = 0.0;
    double phase_var = 0.0;
    double phase_precompute = 0.0;
    double phase_search = 0.0;
    double phase_b0 = 0.0;
    double total = 0.0;
    double f1_score = 0.0;
    double shd_score = 0.0;
    bool failed = false;
};

/// Runs the sweep sequentially (cells in grid order, engines within a cell,
/// repeats within an engine) so timings stay uncontaminated.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkGrid& grid);

/// Renders rows as CSV with the stable header
/// engine,m,n,p,seed,repeat,phase_load,phase_var,phase_precompute,
/// phase_search,phase_b0,total,f1,shd. Failed rows carry nan measurements.
std::string benchmark_csv(const std::vector<BenchmarkRow>& rows);

}  // namespace varlingam
