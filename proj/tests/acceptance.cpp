// Release gate: nine checks, one printed line each. Exits nonzero if any
// check fails. argv[1] must point at the command-line binary (used by the
// determinism check); everything else runs in-process.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "varlingam/adjacency.hpp"
#include "varlingam/entropy.hpp"
#include "varlingam/errors.hpp"
#include "varlingam/evaluation.hpp"
#include "varlingam/ordering_baseline.hpp"
#include "varlingam/ordering_heuristic.hpp"
#include "varlingam/pipeline.hpp"
#include "varlingam/var_model.hpp"

using namespace varlingam;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool passed,
            const std::string& detail) {
    std::printf("[%s] %d. %s%s%s\n", passed ? "PASS" : "FAIL", number,
                name.c_str(), detail.empty() ? "" : ": ",
                detail.c_str());
    std::fflush(stdout);
    if (!passed) ++g_failures;
}

void run_check(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool passed = false;
    try {
        passed = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("threw: ") + e.what();
    }
    report(number, name, passed, detail);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_noise(std::mt19937_64& rng) {
    return (uniform01(rng) - 0.5) * 2.0 * 1.7320508075688772;
}

double median3(double a, double b, double c) {
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

std::string fmt(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.4g", v);
    return buffer;
}

// ---- check 1: ordering accuracy parity at m = 50 ----

bool check_accuracy_parity(std::string& detail) {
    const int seeds = 10;
    double f1_baseline = 0.0;
    double f1_heuristic = 0.0;
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
        const SyntheticSample sample =
            generate_synthetic(50, 10000, 1, 0.3, NoiseFamily::uniform, seed);
        const Matrix truth = support(sample.truth.b0_true);
        RunConfig config;
        config.lags = 1;
        config.seed = seed;
        config.engine = Engine::baseline;
        f1_baseline += f1(truth, support(discover(sample.data, config).graph.b0));
        config.engine = Engine::heuristic;
        f1_heuristic += f1(truth, support(discover(sample.data, config).graph.b0));
    }
    f1_baseline /= seeds;
    f1_heuristic /= seeds;
    detail = "mean F1 baseline " + fmt(f1_baseline) + ", heuristic " +
             fmt(f1_heuristic);
    return f1_heuristic >= f1_baseline - 0.02;
}

// ---- check 2: search phase stays flat in n for the lookup engine ----

double median_search_seconds(const DataMatrix& data, Engine engine) {
    RunConfig config;
    config.engine = engine;
    config.lags = 1;
    double t0 = 0.0, t1 = 0.0, t2 = 0.0;
    t0 = timing(discover(data, config), "ordering_search");
    t1 = timing(discover(data, config), "ordering_search");
    t2 = timing(discover(data, config), "ordering_search");
    return median3(t0, t1, t2);
}

bool check_search_flatness(std::string& detail) {
    const SyntheticSample small =
        generate_synthetic(50, 5000, 1, 0.3, NoiseFamily::uniform, 7);
    const SyntheticSample large =
        generate_synthetic(50, 50000, 1, 0.3, NoiseFamily::uniform, 7);

    const double h_small = median_search_seconds(small.data, Engine::heuristic);
    const double h_large = median_search_seconds(large.data, Engine::heuristic);
    const double b_small = median_search_seconds(small.data, Engine::baseline);
    const double b_large = median_search_seconds(large.data, Engine::baseline);

    const double h_ratio = h_large / h_small;
    const double b_ratio = b_large / b_small;
    detail = "search-time ratio 50k/5k: heuristic " + fmt(h_ratio) +
             ", baseline " + fmt(b_ratio);
    return h_ratio < 2.0 && b_ratio > 4.0;
}

// ---- check 3: total-time speedup grows with m ----

bool check_speedup_growth(std::string& detail) {
    const int ms[] = {25, 50, 100};
    double speedups[3] = {0.0, 0.0, 0.0};
    for (int k = 0; k < 3; ++k) {
        const SyntheticSample sample = generate_synthetic(
            ms[k], 5000, 1, 0.3, NoiseFamily::uniform, 11);
        RunConfig config;
        config.lags = 1;

        double b[3], h[3];
        for (int rep = 0; rep < 3; ++rep) {
            config.engine = Engine::baseline;
            b[rep] = timing(discover(sample.data, config), "total");
            config.engine = Engine::heuristic;
            h[rep] = timing(discover(sample.data, config), "total");
        }
        const double b_med = median3(b[0], b[1], b[2]);
        const double h_med = median3(h[0], h[1], h[2]);
        if (!(h_med < b_med)) {
            detail = "heuristic not faster at m = " + std::to_string(ms[k]);
            return false;
        }
        speedups[k] = b_med / h_med;
    }
    detail = "speedups at m = 25/50/100: " + fmt(speedups[0]) + "x, " +
             fmt(speedups[1]) + "x, " + fmt(speedups[2]) + "x";
    return speedups[1] >= speedups[0] && speedups[2] >= speedups[1] &&
           speedups[2] >= 3.0;
}

// ---- check 4: order recovery and engine agreement on chains ----

DataMatrix make_chain(int m, Index n, std::mt19937_64& rng) {
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
    for (int i = m - 1; i > 0; --i) {
        const auto j = static_cast<int>(uniform01(rng) * (i + 1));
        std::swap(order[static_cast<std::size_t>(i)],
                  order[static_cast<std::size_t>(j)]);
    }
    std::vector<double> coefficient(static_cast<std::size_t>(m), 0.0);
    for (int k = 1; k < m; ++k) {
        const double magnitude = 0.5 + 0.4 * uniform01(rng);
        coefficient[static_cast<std::size_t>(k)] =
            (rng() & 1u) != 0 ? -magnitude : magnitude;
    }
    Matrix values(n, m);
    for (Index t = 0; t < n; ++t) {
        double previous = 0.0;
        for (int k = 0; k < m; ++k) {
            const int v = order[static_cast<std::size_t>(k)];
            double x = uniform_noise(rng);
            if (k > 0) x += coefficient[static_cast<std::size_t>(k)] * previous;
            values(t, v) = x;
            previous = x;
        }
    }
    DataMatrix data = make_data_matrix(std::move(values));
    data.names.clear();
    for (int i = 0; i < m; ++i) data.names.push_back("v" + std::to_string(i));
    // stash the true order in the caller via rng-independent channel
    return data;
}

bool check_chain_recovery(std::string& detail) {
    int baseline_correct = 0;
    int engine_agreement = 0;
    int first_pick_agreement = 0;
    int runs = 0;

    for (const int m : {2, 3}) {
        for (int instance = 0; instance < 100; ++instance) {
            std::mt19937_64 rng(1000 * static_cast<std::uint64_t>(m) +
                                static_cast<std::uint64_t>(instance));
            // rebuild the permutation exactly as make_chain draws it
            std::mt19937_64 probe = rng;
            std::vector<int> order(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
            for (int i = m - 1; i > 0; --i) {
                const auto j = static_cast<int>(uniform01(probe) * (i + 1));
                std::swap(order[static_cast<std::size_t>(i)],
                          order[static_cast<std::size_t>(j)]);
            }

            const DataMatrix data = make_chain(m, 10000, rng);
            const CausalOrder baseline_order = causal_order_baseline(data);
            const CausalOrder heuristic_order = causal_order_heuristic(data);

            ++runs;
            if (baseline_order.order == order) ++baseline_correct;
            if (baseline_order == heuristic_order) ++engine_agreement;
            if (baseline_order.order[0] == heuristic_order.order[0]) {
                ++first_pick_agreement;
            }
        }
    }
    detail = "baseline correct " + std::to_string(baseline_correct) + "/" +
             std::to_string(runs) + ", full agreement " +
             std::to_string(engine_agreement) + "/" + std::to_string(runs) +
             ", first-pick agreement " + std::to_string(first_pick_agreement) +
             "/" + std::to_string(runs);
    return baseline_correct >= (runs * 9) / 10 &&
           engine_agreement >= (runs * 9) / 10 &&
           first_pick_agreement == runs;
}

// ---- check 5: entropy calibration ----

bool check_entropy_calibration(std::string& detail) {
    std::mt19937_64 rng(2024);
    Vector gaussian(100000);
    for (Index i = 0; i < gaussian.size(); i += 2) {
        double a = uniform01(rng);
        while (a <= 0.0) a = uniform01(rng);
        const double b = uniform01(rng);
        const double radius = std::sqrt(-2.0 * std::log(a));
        gaussian(i) = radius * std::cos(6.283185307179586 * b);
        if (i + 1 < gaussian.size()) {
            gaussian(i + 1) = radius * std::sin(6.283185307179586 * b);
        }
    }
    const double h = entropy(gaussian);
    const double target = 1.41894;
    if (std::abs(h - target) >= 0.01) {
        detail = "gaussian entropy " + fmt(h) + " vs " + fmt(target);
        return false;
    }

    for (int rep = 0; rep < 50; ++rep) {
        const Index n = 50 + static_cast<Index>(uniform01(rng) * 2000);
        Vector u(n);
        const double scale = std::exp(6.0 * (uniform01(rng) - 0.5));
        for (Index i = 0; i < n; ++i) {
            u(i) = scale * (uniform01(rng) - 0.5) +
                   ((rng() & 7u) == 0 ? 3.0 * scale : 0.0);
        }
        const Vector negated = -u;
        if (entropy(u) != entropy(negated)) {
            detail = "entropy(u) != entropy(-u) at repetition " +
                     std::to_string(rep);
            return false;
        }
    }
    detail = "gaussian entropy " + fmt(h) + ", sign symmetry exact on 50 vectors";
    return true;
}

// ---- check 6: lag-coefficient recovery ----

bool check_var_recovery(std::string& detail) {
    Matrix m1(3, 3);
    m1 << 0.5, 0.1, 0.0, -0.2, 0.3, 0.2, 0.0, -0.1, 0.4;
    const Vector intercept = Vector::Zero(3);

    double worst = 0.0;
    double worst_orthogonality = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::mt19937_64 rng(seed);
        const Index n = 10000, burn = 100;
        Matrix series = Matrix::Zero(n + burn, 3);
        for (Index t = 1; t < n + burn; ++t) {
            Vector x = intercept + m1 * series.row(t - 1).transpose();
            for (Index i = 0; i < 3; ++i) x(i) += uniform_noise(rng);
            series.row(t) = x.transpose();
        }
        const DataMatrix data = make_data_matrix(series.bottomRows(n));
        const VarModel var = fit_var(data, 1);
        worst = std::max(worst,
                         (var.coefficients[0] - m1).cwiseAbs().maxCoeff());

        const Index obs = var.residuals.rows();
        for (Index i = 0; i < 3; ++i) {
            for (Index j = 0; j < 3; ++j) {
                const auto lagged = data.values.col(j).head(obs);
                const double cov =
                    ((var.residuals.col(i).array() -
                      var.residuals.col(i).mean()) *
                     (lagged.array() - lagged.mean()))
                        .sum() /
                    static_cast<double>(obs);
                worst_orthogonality = std::max(worst_orthogonality, std::abs(cov));
            }
        }
    }
    detail = "max coefficient error " + fmt(worst) +
             ", max residual-regressor covariance " + fmt(worst_orthogonality);
    return worst < 0.05 && worst_orthogonality < 1e-6;
}

// ---- check 7: metric examples ----

bool check_metric_examples(std::string& detail) {
    const auto graph = [](int m,
                          std::initializer_list<std::pair<int, int>> edges) {
        Matrix a = Matrix::Zero(m, m);
        for (const auto& [source, target] : edges) a(target, source) = 1.0;
        return a;
    };

    int failed = 0;
    const auto expect = [&](bool ok) {
        if (!ok) ++failed;
    };

    const Matrix chain = graph(4, {{1, 2}, {2, 3}});
    expect(shd(chain, chain) == 0);
    expect(shd(graph(3, {{0, 1}}), graph(3, {{1, 0}})) == 1);
    expect(shd(graph(4, {{1, 2}, {2, 3}}), graph(4, {{1, 2}, {3, 2}, {1, 3}})) ==
           2);
    expect(f1(chain, chain) == 1.0);
    expect(f1(chain, graph(4, {})) == 0.0);
    expect(f1(graph(3, {}), graph(3, {})) == 1.0);
    expect(f1(graph(4, {{1, 2}, {2, 3}}), graph(4, {{1, 2}, {2, 1}})) == 0.5);
    detail = failed == 0 ? "7 exact metric examples"
                         : std::to_string(failed) + " example(s) off";
    return failed == 0;
}

// ---- check 8: total time scales like m^2 n + m^3, not m^3 n ----

bool check_complexity_shape(std::string& detail) {
    std::vector<double> mv, nv, tv;
    for (const int m : {10, 20, 40}) {
        for (const Index n : {Index{2000}, Index{8000}}) {
            const SyntheticSample sample =
                generate_synthetic(m, n, 1, 0.3, NoiseFamily::uniform, 19);
            RunConfig config;
            config.engine = Engine::heuristic;
            config.lags = 1;
            double t[3];
            for (int rep = 0; rep < 3; ++rep) {
                t[rep] = timing(discover(sample.data, config), "total");
            }
            mv.push_back(static_cast<double>(m));
            nv.push_back(static_cast<double>(n));
            tv.push_back(median3(t[0], t[1], t[2]));
        }
    }

    // two-term model: t ~ c1 m^2 n + c2 m^3 (least squares, closed form)
    double a11 = 0.0, a12 = 0.0, a22 = 0.0, b1 = 0.0, b2 = 0.0;
    for (std::size_t k = 0; k < tv.size(); ++k) {
        const double x1 = mv[k] * mv[k] * nv[k];
        const double x2 = mv[k] * mv[k] * mv[k];
        a11 += x1 * x1;
        a12 += x1 * x2;
        a22 += x2 * x2;
        b1 += x1 * tv[k];
        b2 += x2 * tv[k];
    }
    const double det = a11 * a22 - a12 * a12;
    const double c1 = (b1 * a22 - b2 * a12) / det;
    const double c2 = (a11 * b2 - a12 * b1) / det;

    // one-term model: t ~ c m^3 n
    double xx = 0.0, xt = 0.0;
    for (std::size_t k = 0; k < tv.size(); ++k) {
        const double x = mv[k] * mv[k] * mv[k] * nv[k];
        xx += x * x;
        xt += x * tv[k];
    }
    const double c = xt / xx;

    double ssr_two = 0.0, ssr_cubic = 0.0;
    for (std::size_t k = 0; k < tv.size(); ++k) {
        const double fit_two =
            c1 * mv[k] * mv[k] * nv[k] + c2 * mv[k] * mv[k] * mv[k];
        const double fit_cubic = c * mv[k] * mv[k] * mv[k] * nv[k];
        ssr_two += (tv[k] - fit_two) * (tv[k] - fit_two);
        ssr_cubic += (tv[k] - fit_cubic) * (tv[k] - fit_cubic);
    }
    const double ratio = ssr_two / ssr_cubic;
    detail = "residual ratio (quadratic-plus-cubic over cubic-in-n model) " +
             fmt(ratio);
    return ratio < 0.5;
}

// ---- check 9: byte-identical results through the command line ----

int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_until_timings(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();
    const std::size_t pos = text.find("[timings]");
    return text.substr(0, pos);
}

bool check_cli_determinism(const std::string& cli, std::string& detail) {
    if (cli.empty()) {
        detail = "command-line binary path not provided";
        return false;
    }
    const std::string dir =
        (std::filesystem::temp_directory_path() /
         ("varlingam_accept_" + std::to_string(::getpid())))
            .string();
    std::filesystem::create_directories(dir);
    const std::string csv = dir + "/sample.csv";

    if (run_command("'" + cli + "' simulate --m 8 --n 3000 --lags 1 --seed 11 --out '" +
                    csv + "'") != 0) {
        detail = "simulate run failed";
        return false;
    }

    for (const std::string engine : {"baseline", "heuristic"}) {
        const std::string base = dir + "/" + engine;
        const std::string common = "'" + std::string(cli) +
                                   "' discover --input '" + csv +
                                   "' --engine " + engine +
                                   " --lags 1 --seed 5 --out '";
        if (run_command(common + base + "_a.txt' --threads 1") != 0 ||
            run_command(common + base + "_b.txt' --threads 1") != 0 ||
            run_command(common + base + "_c.txt' --threads 8") != 0) {
            detail = "discover run failed for " + engine;
            return false;
        }
        const std::string a = read_until_timings(base + "_a.txt");
        const std::string b = read_until_timings(base + "_b.txt");
        const std::string c = read_until_timings(base + "_c.txt");
        if (a.empty() || a != b) {
            detail = engine + ": reruns differ";
            return false;
        }
        if (a != c) {
            detail = engine + ": thread counts 1 and 8 differ";
            return false;
        }
    }
    std::filesystem::remove_all(dir);
    detail = "both engines, reruns and thread counts 1/8";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    run_check(1, "ordering accuracy parity", check_accuracy_parity);
    run_check(2, "search-time flatness in sample count", check_search_flatness);
    run_check(3, "speedup growth in variable count", check_speedup_growth);
    run_check(4, "chain recovery and engine agreement", check_chain_recovery);
    run_check(5, "entropy calibration", check_entropy_calibration);
    run_check(6, "lag-coefficient recovery", check_var_recovery);
    run_check(7, "graph metric examples", check_metric_examples);
    run_check(8, "runtime complexity shape", check_complexity_shape);
    run_check(9, "byte-identical command-line results",
              [&](std::string& detail) { return check_cli_determinism(cli, detail); });

    if (g_failures > 0) {
        std::printf("%d of 9 checks failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 checks passed\n");
    return 0;
}
