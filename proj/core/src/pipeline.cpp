#include "varlingam/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "varlingam/adjacency.hpp"
#include "varlingam/csv.hpp"
#include "varlingam/errors.hpp"
#include "varlingam/ordering_baseline.hpp"
#include "varlingam/ordering_heuristic.hpp"
#include "varlingam/var_model.hpp"

namespace varlingam {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

DiscoveryResult discover(const DataMatrix& x, const RunConfig& config,
                         double load_seconds) {
    const auto run_start = Clock::now();

    DiscoveryResult result;
    result.config = config;
    result.names = x.names;
    validate(x);
    if (config.lags < 0 || config.select_lags < 0) {
        throw DegenerateShape("lag order must be nonnegative");
    }
    if (!(config.prune >= 0.0)) {
        throw DegenerateShape("prune threshold must be nonnegative");
    }

    auto phase_start = Clock::now();
    const int p = config.select_lags > 0 ? select_lag(x, config.select_lags)
                                         : config.lags;
    result.config.lags_used = p;
    DataMatrix residual_data;
    residual_data.names = x.names;
    VarModel var;
    if (p == 0) {
        residual_data.values =
            x.values.rowwise() - x.values.colwise().mean();
    } else {
        var = fit_var(x, p);
        residual_data.values = var.residuals;
    }
    const double var_seconds = seconds_since(phase_start);

    phase_start = Clock::now();
    StandardizedMatrix standardized = standardize(residual_data);
    const double standardize_seconds = seconds_since(phase_start);

    double precompute_seconds = 0.0;
    phase_start = Clock::now();
    CausalOrder order;
    if (config.engine == Engine::heuristic) {
        const EntropyTables tables =
            precompute_tables(standardized, config.threads);
        precompute_seconds = seconds_since(phase_start);
        phase_start = Clock::now();
        order = order_from_tables(tables);
    } else {
        order = causal_order_baseline_from(std::move(standardized),
                                           config.threads);
    }
    const double search_seconds = seconds_since(phase_start);

    phase_start = Clock::now();
    CausalGraph graph;
    graph.b0 = estimate_b0(residual_data, order);
    graph.lagged = lagged_effects(graph.b0, var);
    graph = prune_threshold(std::move(graph), config.prune);
    const double b0_seconds = seconds_since(phase_start);

    result.order = std::move(order);
    result.graph = std::move(graph);
    result.timings = {
        {"load", load_seconds},
        {"var_fit", var_seconds},
        {"standardize", standardize_seconds},
        {"precompute", precompute_seconds},
        {"ordering_search", search_seconds},
        {"b0_estimation", b0_seconds},
        {"total", seconds_since(run_start) + load_seconds},
    };
    return result;
}

DiscoveryResult run_discover(const std::string& csv_path, RunConfig config) {
    config.input = csv_path;
    const auto load_start = Clock::now();
    const DataMatrix x = load_csv(csv_path);
    const double load_seconds = seconds_since(load_start);
    return discover(x, config, load_seconds);
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkGrid& grid) {
    if (grid.m_values.empty() || grid.n_values.empty() || grid.seeds.empty() ||
        grid.engines.empty() || grid.repeats < 1) {
        throw DegenerateShape("benchmark grid has an empty dimension");
    }

    std::vector<BenchmarkRow> rows;
    rows.reserve(grid.m_values.size() * grid.n_values.size() *
                 grid.seeds.size() * grid.engines.size() *
                 static_cast<std::size_t>(grid.repeats));
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    for (const int m : grid.m_values) {
        for (const Index n : grid.n_values) {
            for (const std::uint64_t seed : grid.seeds) {
                SyntheticSample sample;
                bool generated = false;
                try {
                    sample = generate_synthetic(m, n, grid.lags, grid.density,
                                                grid.noise, seed);
                    generated = true;
                } catch (const Error&) {
                }
                const Matrix truth_support =
                    generated ? support(sample.truth.b0_true) : Matrix();

                for (const Engine engine : grid.engines) {
                    RunConfig config;
                    config.engine = engine;
                    config.lags = grid.lags;
                    config.prune = grid.prune;
                    config.seed = seed;
                    config.threads = grid.threads;
                    config.input = "synthetic";

                    for (int repeat = 0; repeat < grid.repeats; ++repeat) {
                        BenchmarkRow row;
                        row.engine = engine;
                        row.m = m;
                        row.n = n;
                        row.lags = grid.lags;
                        row.seed = seed;
                        row.repeat = repeat;
                        try {
                            if (!generated) throw DegenerateShape("generation failed");
                            const DiscoveryResult r =
                                discover(sample.data, config);
                            row.phase_load = timing(r, "load");
                            row.phase_var = timing(r, "var_fit");
                            row.phase_precompute = timing(r, "precompute");
                            row.phase_search = timing(r, "ordering_search");
                            row.phase_b0 = timing(r, "b0_estimation");
                            row.total = timing(r, "total");
                            const Matrix est_support = support(r.graph.b0);
                            row.f1_score = f1(truth_support, est_support);
                            row.shd_score = shd(truth_support, est_support);
                        } catch (const Error&) {
                            row.failed = true;
                            row.phase_load = row.phase_var = nan;
                            row.phase_precompute = row.phase_search = nan;
                            row.phase_b0 = row.total = nan;
                            row.f1_score = row.shd_score = nan;
                        }
                        rows.push_back(row);
                    }
                }
            }
        }
    }
    return rows;
}

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows) {
    std::string out =
        "engine,m,n,p,seed,repeat,phase_load,phase_var,phase_precompute,"
        "phase_search,phase_b0,total,f1,shd\n";
    char buffer[64];
    const auto append_num = [&](double v, bool comma = true) {
        std::snprintf(buffer, sizeof(buffer), "%.9g", v);
        out += buffer;
        if (comma) out += ',';
    };
    for (const BenchmarkRow& row : rows) {
        out += engine_name(row.engine);
        out += ',';
        out += std::to_string(row.m) + ',';
        out += std::to_string(row.n) + ',';
        out += std::to_string(row.lags) + ',';
        out += std::to_string(row.seed) + ',';
        out += std::to_string(row.repeat) + ',';
        append_num(row.phase_load);
        append_num(row.phase_var);
        append_num(row.phase_precompute);
        append_num(row.phase_search);
        append_num(row.phase_b0);
        append_num(row.total);
        append_num(row.f1_score);
        append_num(row.shd_score, false);
        out += '\n';
    }
    return out;
}

}  // namespace varlingam
