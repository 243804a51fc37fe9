// Command-line front end: discover, simulate, benchmark, eval.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "varlingam/csv.hpp"
#include "varlingam/errors.hpp"
#include "varlingam/evaluation.hpp"
#include "varlingam/pipeline.hpp"
#include "varlingam/result.hpp"

namespace {

using namespace varlingam;

struct DiscoverOptions {
    std::string input;
    std::string out;
    std::string engine = "heuristic";
    int lags = 1;
    int select_lags = 0;
    double prune = 0.05;
    std::uint64_t seed = 0;
    int threads = 1;
    char delimiter = ',';
    bool no_header = false;
};

struct SimulateOptions {
    int m = 5;
    std::int64_t n = 1000;
    int lags = 1;
    double density = 0.3;
    NoiseFamily noise = NoiseFamily::uniform;
    std::uint64_t seed = 0;
    std::string out;
    std::string truth_out;
};

struct BenchmarkOptions {
    std::vector<int> m_values{10, 25, 50};
    std::vector<std::int64_t> n_values{10000};
    std::vector<std::uint64_t> seeds{0};
    std::vector<std::string> engines{"baseline", "heuristic"};
    int lags = 1;
    double density = 0.3;
    NoiseFamily noise = NoiseFamily::uniform;
    int repeats = 3;
    double prune = 0.05;
    int threads = 1;
    std::string out;
};

struct EvalOptions {
    std::string truth;
    std::string est;
};

void write_or_print(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::FILE* file = std::fopen(out_path.c_str(), "wb");
    if (file == nullptr) throw EmptyFile(out_path);
    std::fwrite(text.data(), 1, text.size(), file);
    std::fclose(file);
}

int run_discover_command(const DiscoverOptions& opt) {
    RunConfig config;
    config.engine = *parse_engine(opt.engine);
    config.lags = opt.lags;
    config.select_lags = opt.select_lags;
    config.prune = opt.prune;
    config.seed = opt.seed;
    config.threads = opt.threads;
    config.input = opt.input;

    const auto load_start = std::chrono::steady_clock::now();
    CsvOptions csv_options;
    csv_options.delimiter = opt.delimiter;
    csv_options.header = !opt.no_header;
    const DataMatrix x = load_csv(opt.input, csv_options);
    const double load_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      load_start)
            .count();

    const DiscoveryResult result = discover(x, config, load_seconds);
    write_or_print(opt.out, format_result(result));
    return 0;
}

int run_simulate_command(const SimulateOptions& opt) {
    const SyntheticSample sample = generate_synthetic(
        opt.m, opt.n, opt.lags, opt.density, opt.noise, opt.seed);
    if (opt.out.empty()) {
        throw DegenerateShape("simulate needs --out for the sample CSV");
    }
    save_csv(opt.out, sample.data);

    if (!opt.truth_out.empty()) {
        DiscoveryResult truth;
        truth.config.lags = opt.lags;
        truth.config.lags_used = opt.lags;
        truth.config.prune = 0.0;
        truth.config.seed = opt.seed;
        truth.config.input = "synthetic";
        truth.names = sample.data.names;
        truth.order = sample.truth.order_true;
        truth.graph.b0 = sample.truth.b0_true;
        truth.graph.lagged = sample.truth.lagged_true;
        save_result(opt.truth_out, truth);
    }
    return 0;
}

int run_benchmark_command(const BenchmarkOptions& opt) {
    BenchmarkGrid grid;
    grid.m_values = opt.m_values;
    grid.n_values.assign(opt.n_values.begin(), opt.n_values.end());
    grid.seeds = opt.seeds;
    grid.engines.clear();
    for (const auto& name : opt.engines) {
        grid.engines.push_back(*parse_engine(name));
    }
    grid.lags = opt.lags;
    grid.density = opt.density;
    grid.noise = opt.noise;
    grid.repeats = opt.repeats;
    grid.prune = opt.prune;
    grid.threads = opt.threads;

    const std::vector<BenchmarkRow> rows = run_benchmark(grid);
    write_or_print(opt.out, benchmark_csv(rows));
    return 0;
}

int run_eval_command(const EvalOptions& opt) {
    const DiscoveryResult truth = load_result(opt.truth);
    const DiscoveryResult est = load_result(opt.est);
    const Matrix truth_support = support(truth.graph.b0);
    const Matrix est_support = support(est.graph.b0);
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", f1(truth_support, est_support));
    std::cout << "f1 = " << buffer << '\n';
    std::cout << "shd = " << shd(truth_support, est_support) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"varlingam: time-series causal discovery"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "varlingam 0.1.0");

    const std::map<std::string, NoiseFamily> noise_names{
        {"uniform", NoiseFamily::uniform},
        {"laplace", NoiseFamily::laplace},
        {"mixed", NoiseFamily::mixed}};
    const auto engine_check = CLI::IsMember({"baseline", "heuristic"});

    DiscoverOptions discover_opt;
    CLI::App* discover_cmd =
        app.add_subcommand("discover", "Run causal discovery on a CSV");
    discover_cmd->add_option("--input", discover_opt.input, "Input CSV path")
        ->required();
    discover_cmd->add_option("--out", discover_opt.out,
                             "Result file path (default: stdout)");
    discover_cmd->add_option("--engine", discover_opt.engine, "Ordering engine")
        ->check(engine_check)
        ->capture_default_str();
    discover_cmd->add_option("--lags", discover_opt.lags, "VAR lag order")
        ->check(CLI::Range(0, 1000))
        ->capture_default_str();
    discover_cmd
        ->add_option("--select-lags", discover_opt.select_lags,
                     "Choose the lag order automatically, up to this cap")
        ->check(CLI::Range(0, 1000));
    discover_cmd->add_option("--prune", discover_opt.prune,
                             "Zero out effects weaker than this")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    discover_cmd->add_option("--seed", discover_opt.seed,
                             "Seed echoed into the result file");
    discover_cmd->add_option("--threads", discover_opt.threads,
                             "Worker threads (speed only, never results)")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    discover_cmd->add_option("--delimiter", discover_opt.delimiter,
                             "CSV field delimiter");
    discover_cmd->add_flag("--no-header", discover_opt.no_header,
                           "Input CSV has no header row");

    SimulateOptions simulate_opt;
    CLI::App* simulate_cmd = app.add_subcommand(
        "simulate", "Generate a synthetic sample with known structure");
    simulate_cmd->add_option("--m", simulate_opt.m, "Number of variables")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    simulate_cmd->add_option("--n", simulate_opt.n, "Number of samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate_cmd->add_option("--lags", simulate_opt.lags, "Lag order")
        ->check(CLI::Range(0, 1000))
        ->capture_default_str();
    simulate_cmd->add_option("--density", simulate_opt.density,
                             "Edge probability in (0, 1]")
        ->capture_default_str();
    simulate_cmd
        ->add_option("--noise", simulate_opt.noise, "Noise family")
        ->transform(CLI::CheckedTransformer(noise_names, CLI::ignore_case))
        ->default_val("uniform");
    simulate_cmd->add_option("--seed", simulate_opt.seed, "Generator seed")
        ->capture_default_str();
    simulate_cmd->add_option("--out", simulate_opt.out, "Sample CSV path")
        ->required();
    simulate_cmd->add_option("--truth-out", simulate_opt.truth_out,
                             "Also write the generating model here");

    BenchmarkOptions benchmark_opt;
    CLI::App* benchmark_cmd = app.add_subcommand(
        "benchmark", "Timing and accuracy sweep over synthetic grids");
    benchmark_cmd
        ->add_option("--m", benchmark_opt.m_values, "Variable counts")
        ->delimiter(',')
        ->capture_default_str();
    benchmark_cmd
        ->add_option("--n", benchmark_opt.n_values, "Sample counts")
        ->delimiter(',')
        ->capture_default_str();
    benchmark_cmd->add_option("--seeds", benchmark_opt.seeds, "Seeds")
        ->delimiter(',')
        ->capture_default_str();
    benchmark_cmd
        ->add_option("--engines", benchmark_opt.engines, "Engines to run")
        ->delimiter(',')
        ->check(engine_check)
        ->capture_default_str();
    benchmark_cmd->add_option("--lags", benchmark_opt.lags, "Lag order")
        ->check(CLI::Range(0, 1000))
        ->capture_default_str();
    benchmark_cmd
        ->add_option("--density", benchmark_opt.density,
                     "Edge probability in (0, 1]")
        ->capture_default_str();
    benchmark_cmd
        ->add_option("--noise", benchmark_opt.noise, "Noise family")
        ->transform(CLI::CheckedTransformer(noise_names, CLI::ignore_case))
        ->default_val("uniform");
    benchmark_cmd
        ->add_option("--repeats", benchmark_opt.repeats, "Repeats per cell")
        ->check(CLI::Range(1, 100))
        ->capture_default_str();
    benchmark_cmd->add_option("--prune", benchmark_opt.prune, "Prune threshold")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    benchmark_cmd->add_option("--threads", benchmark_opt.threads,
                              "Worker threads")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    benchmark_cmd->add_option("--out", benchmark_opt.out,
                              "Benchmark CSV path (default: stdout)");

    EvalOptions eval_opt;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Compare the instantaneous structure of two result files");
    eval_cmd->add_option("--truth", eval_opt.truth, "Reference result file")
        ->required();
    eval_cmd->add_option("--est", eval_opt.est, "Estimated result file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (discover_cmd->parsed()) return run_discover_command(discover_opt);
        if (simulate_cmd->parsed()) return run_simulate_command(simulate_opt);
        if (benchmark_cmd->parsed()) return run_benchmark_command(benchmark_opt);
        if (eval_cmd->parsed()) return run_eval_command(eval_opt);
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
