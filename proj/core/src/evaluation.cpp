#include "varlingam/evaluation.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <random>
#include <utility>

#include "varlingam/errors.hpp"

namespace varlingam {
namespace {

// Deterministic uniform draw on [0, 1) from the top 53 bits of the generator
// word, so the stream does not depend on the standard library's distribution
// implementations.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Unit-variance noise draws.
double draw_uniform_noise(std::mt19937_64& rng) {
    return uniform_range(rng, -std::numbers::sqrt3, std::numbers::sqrt3);
}

double draw_laplace_noise(std::mt19937_64& rng) {
    double u = uniform01(rng);
    while (u <= 0.0) u = uniform01(rng);
    const double centered = u - 0.5;
    const double magnitude = -std::log(1.0 - 2.0 * std::abs(centered));
    const double scale = 1.0 / std::numbers::sqrt2;
    return (centered < 0.0 ? -scale : scale) * magnitude;
}

double draw_noise(std::mt19937_64& rng, NoiseFamily family, int variable) {
    switch (family) {
        case NoiseFamily::uniform:
            return draw_uniform_noise(rng);
        case NoiseFamily::laplace:
            return draw_laplace_noise(rng);
        case NoiseFamily::mixed:
            return variable % 2 == 0 ? draw_uniform_noise(rng)
                                     : draw_laplace_noise(rng);
    }
    std::abort();
}

double draw_coefficient(std::mt19937_64& rng) {
    const double magnitude = uniform_range(rng, 0.3, 0.9);
    const bool negative = (rng() & 1u) != 0;
    return negative ? -magnitude : magnitude;
}

std::vector<int> draw_permutation(std::mt19937_64& rng, int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = m - 1; i > 0; --i) {
        const auto j = static_cast<int>(uniform01(rng) * (i + 1));
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(j)]);
    }
    return perm;
}

double companion_spectral_radius(const std::vector<Matrix>& lags) {
    const auto p = static_cast<Index>(lags.size());
    if (p == 0) return 0.0;
    const Index m = lags.front().rows();
    Matrix companion = Matrix::Zero(p * m, p * m);
    for (Index tau = 0; tau < p; ++tau) {
        companion.block(0, tau * m, m, m) = lags[static_cast<std::size_t>(tau)];
    }
    if (p > 1) {
        companion.block(m, 0, (p - 1) * m, (p - 1) * m).setIdentity();
    }
    const Eigen::EigenSolver<Matrix> solver(companion, false);
    if (solver.info() != Eigen::Success) throw NonStationary();
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

// Scaling lag matrices by f^tau scales every companion eigenvalue by exactly
// f, so one pass pins the spectral radius to the target.
void rescale_for_stationarity(const Matrix& b0, std::vector<Matrix>& lags) {
    if (lags.empty()) return;
    const Index m = b0.rows();
    const Matrix reduced_map =
        (Matrix::Identity(m, m) - b0).lu().solve(Matrix::Identity(m, m));

    std::vector<Matrix> reduced;
    reduced.reserve(lags.size());
    for (const Matrix& lag : lags) reduced.push_back(reduced_map * lag);

    const double radius = std::max(companion_spectral_radius(lags),
                                   companion_spectral_radius(reduced));
    if (!std::isfinite(radius)) throw NonStationary();

    constexpr double target = 0.9;
    if (radius <= target) return;
    const double factor = target / radius;
    double power = 1.0;
    for (Matrix& lag : lags) {
        power *= factor;
        lag *= power;
    }

    std::vector<Matrix> check;
    check.reserve(lags.size());
    for (const Matrix& lag : lags) check.push_back(reduced_map * lag);
    if (companion_spectral_radius(lags) > 0.95 ||
        companion_spectral_radius(check) > 0.95) {
        throw NonStationary();
    }
}

}  // namespace

SyntheticSample generate_synthetic(int m, Index n, int p, double density,
                                   NoiseFamily noise_family,
                                   std::uint64_t seed) {
    if (!(density > 0.0) || density > 1.0) throw InvalidDensity(density);
    if (m < 1 || p < 0 || n <= static_cast<Index>(p) * m + 50) {
        throw DegenerateShape(
            "synthetic generation needs m >= 1, p >= 0, n > p*m + 50");
    }

    std::mt19937_64 rng(seed);

    GroundTruth truth;
    truth.noise_family = noise_family;
    truth.order_true.order = draw_permutation(rng, m);

    truth.b0_true = Matrix::Zero(m, m);
    const auto& order = truth.order_true.order;
    for (int pos = 1; pos < m; ++pos) {
        for (int prev = 0; prev < pos; ++prev) {
            if (uniform01(rng) < density) {
                truth.b0_true(order[static_cast<std::size_t>(pos)],
                              order[static_cast<std::size_t>(prev)]) =
                    draw_coefficient(rng);
            }
        }
    }

    truth.lagged_true.reserve(static_cast<std::size_t>(p));
    for (int tau = 0; tau < p; ++tau) {
        Matrix lag = Matrix::Zero(m, m);
        for (Index i = 0; i < m; ++i) {
            for (Index j = 0; j < m; ++j) {
                if (uniform01(rng) < density) lag(i, j) = draw_coefficient(rng);
            }
        }
        truth.lagged_true.push_back(std::move(lag));
    }
    rescale_for_stationarity(truth.b0_true, truth.lagged_true);

    constexpr Index burn_in = 200;
    const Index total = n + burn_in;
    Matrix series(total, m);
    Vector current(m);
    for (Index t = 0; t < total; ++t) {
        current.setZero();
        for (int tau = 1; tau <= p; ++tau) {
            if (t - tau < 0) break;
            current.noalias() +=
                truth.lagged_true[static_cast<std::size_t>(tau - 1)] *
                series.row(t - tau).transpose();
        }
        for (Index i = 0; i < m; ++i) {
            current(i) += draw_noise(rng, noise_family, static_cast<int>(i));
        }
        // Instantaneous effects resolved by substitution in causal order; b0
        // only ever references earlier positions, so one pass is exact.
        for (int pos = 0; pos < m; ++pos) {
            const int v = order[static_cast<std::size_t>(pos)];
            double value = current(v);
            for (int prev = 0; prev < pos; ++prev) {
                const int w = order[static_cast<std::size_t>(prev)];
                value += truth.b0_true(v, w) * current(w);
            }
            current(v) = value;
        }
        series.row(t) = current.transpose();
    }
    if (!series.allFinite()) throw NonStationary();

    SyntheticSample sample;
    sample.data = make_data_matrix(series.bottomRows(n));
    sample.truth = std::move(truth);
    return sample;
}

Matrix support(const Matrix& a) {
    Matrix s = (a.array() != 0.0).cast<double>().matrix();
    s.diagonal().setZero();
    return s;
}

namespace {

void check_adjacency_pair(const Matrix& truth, const Matrix& est) {
    if (truth.rows() != truth.cols()) {
        throw ShapeMismatch("adjacency matrix must be square");
    }
    if (truth.rows() != est.rows() || truth.cols() != est.cols()) {
        throw ShapeMismatch("adjacency matrices differ in shape");
    }
}

}  // namespace

int shd(const Matrix& truth, const Matrix& est) {
    check_adjacency_pair(truth, est);
    const Index m = truth.rows();
    int distance = 0;
    for (Index i = 0; i < m; ++i) {
        for (Index j = i + 1; j < m; ++j) {
            const bool t_ij = truth(i, j) != 0.0;
            const bool t_ji = truth(j, i) != 0.0;
            const bool e_ij = est(i, j) != 0.0;
            const bool e_ji = est(j, i) != 0.0;
            if (t_ij == e_ij && t_ji == e_ji) continue;
            const bool reversal =
                (t_ij != t_ji) && (e_ij != e_ji) && (t_ij == e_ji);
            if (reversal) {
                distance += 1;
            } else {
                distance += static_cast<int>(t_ij != e_ij) +
                            static_cast<int>(t_ji != e_ji);
            }
        }
    }
    return distance;
}

double f1(const Matrix& truth, const Matrix& est) {
    check_adjacency_pair(truth, est);
    const Index m = truth.rows();
    std::int64_t true_positive = 0;
    std::int64_t false_positive = 0;
    std::int64_t false_negative = 0;
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < m; ++j) {
            if (i == j) continue;
            const bool in_truth = truth(i, j) != 0.0;
            const bool in_est = est(i, j) != 0.0;
            true_positive += static_cast<int>(in_truth && in_est);
            false_positive += static_cast<int>(!in_truth && in_est);
            false_negative += static_cast<int>(in_truth && !in_est);
        }
    }
    if (true_positive == 0) {
        return (false_positive == 0 && false_negative == 0) ? 1.0 : 0.0;
    }
    const double tp2 = 2.0 * static_cast<double>(true_positive);
    return tp2 / (tp2 + static_cast<double>(false_positive) +
                  static_cast<double>(false_negative));
}

}  // namespace varlingam
