#include <cmath>
#include <random>

#include "doctest.h"
#include "varlingam/adjacency.hpp"
#include "varlingam/errors.hpp"
#include "varlingam/evaluation.hpp"
#include "varlingam/ordering_baseline.hpp"
#include "varlingam/var_model.hpp"

using namespace varlingam;

namespace {

// adjacency with edge source -> target encoded as (target, source)
Matrix graph(int m, std::initializer_list<std::pair<int, int>> edges) {
    Matrix a = Matrix::Zero(m, m);
    for (const auto& [source, target] : edges) a(target, source) = 1.0;
    return a;
}

}  // namespace

TEST_CASE("shd examples") {
    const Matrix chain = graph(4, {{1, 2}, {2, 3}});
    CHECK(shd(chain, chain) == 0);

    // one edge flipped
    CHECK(shd(graph(3, {{0, 1}}), graph(3, {{1, 0}})) == 1);

    // truth 1->2, 2->3 vs est 1->2, 3->2, 1->3: one reversal, one insertion
    const Matrix truth = graph(4, {{1, 2}, {2, 3}});
    const Matrix est = graph(4, {{1, 2}, {3, 2}, {1, 3}});
    CHECK(shd(truth, est) == 2);
}

TEST_CASE("shd is symmetric") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        Matrix a = Matrix::Zero(5, 5);
        Matrix b = Matrix::Zero(5, 5);
        for (Index i = 0; i < 5; ++i) {
            for (Index j = 0; j < 5; ++j) {
                if (i == j) continue;
                a(i, j) = (rng() & 1u) != 0 ? 1.0 : 0.0;
                b(i, j) = (rng() & 1u) != 0 ? 1.0 : 0.0;
            }
        }
        CHECK(shd(a, b) == shd(b, a));
    }
}

TEST_CASE("shd counts insertions and deletions individually") {
    CHECK(shd(graph(3, {}), graph(3, {{0, 1}, {1, 2}})) == 2);
    CHECK(shd(graph(3, {{0, 1}, {1, 2}}), graph(3, {})) == 2);
    // both directions present in est, one in truth
    CHECK(shd(graph(2, {{0, 1}}), graph(2, {{0, 1}, {1, 0}})) == 1);
}

TEST_CASE("f1 examples") {
    const Matrix chain = graph(4, {{1, 2}, {2, 3}});
    CHECK(f1(chain, chain) == 1.0);
    CHECK(f1(chain, graph(4, {})) == 0.0);
    CHECK(f1(graph(3, {}), graph(3, {})) == 1.0);
    CHECK(f1(graph(3, {}), graph(3, {{0, 1}})) == 0.0);

    // truth 1->2, 2->3 vs est 1->2, 2->1: precision 1/2, recall 1/2
    const Matrix truth = graph(4, {{1, 2}, {2, 3}});
    const Matrix est = graph(4, {{1, 2}, {2, 1}});
    CHECK(f1(truth, est) == 0.5);
}

TEST_CASE("metric shape checks") {
    CHECK_THROWS_AS(shd(Matrix::Zero(3, 3), Matrix::Zero(2, 2)), ShapeMismatch);
    CHECK_THROWS_AS(f1(Matrix::Zero(3, 3), Matrix::Zero(2, 2)), ShapeMismatch);
    CHECK_THROWS_AS(shd(Matrix::Zero(2, 3), Matrix::Zero(2, 3)), ShapeMismatch);
}

TEST_CASE("support maps coefficients to the edge pattern") {
    Matrix a(2, 2);
    a << 0.7, -0.3, 0.0, 5.0;
    const Matrix s = support(a);
    CHECK(s(0, 0) == 0.0);  // diagonal dropped
    CHECK(s(0, 1) == 1.0);
    CHECK(s(1, 0) == 0.0);
    CHECK(s(1, 1) == 0.0);
}

TEST_CASE("generate_synthetic with full density fills the lower triangle") {
    const SyntheticSample sample =
        generate_synthetic(2, 500, 0, 1.0, NoiseFamily::uniform, 1);
    const Matrix s = support(sample.truth.b0_true);
    CHECK(s.sum() == 1.0);

    const SyntheticSample bigger =
        generate_synthetic(5, 500, 0, 1.0, NoiseFamily::uniform, 2);
    CHECK(support(bigger.truth.b0_true).sum() == 10.0);
}

TEST_CASE("generate_synthetic is deterministic in the seed") {
    const SyntheticSample a =
        generate_synthetic(4, 300, 1, 0.5, NoiseFamily::mixed, 77);
    const SyntheticSample b =
        generate_synthetic(4, 300, 1, 0.5, NoiseFamily::mixed, 77);
    CHECK((a.data.values.array() == b.data.values.array()).all());
    CHECK((a.truth.b0_true.array() == b.truth.b0_true.array()).all());
    CHECK((a.truth.lagged_true[0].array() == b.truth.lagged_true[0].array()).all());
    CHECK(a.truth.order_true == b.truth.order_true);

    const SyntheticSample c =
        generate_synthetic(4, 300, 1, 0.5, NoiseFamily::mixed, 78);
    CHECK((a.data.values.array() != c.data.values.array()).any());
}

TEST_CASE("generate_synthetic truth invariants") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const SyntheticSample sample =
            generate_synthetic(6, 400, 2, 0.4, NoiseFamily::uniform, seed);
        const auto& order = sample.truth.order_true.order;
        REQUIRE(is_permutation_of(sample.truth.order_true, 6));
        for (int a = 0; a < 6; ++a) {
            for (int b = a; b < 6; ++b) {
                CHECK(sample.truth.b0_true(order[a], order[b]) == 0.0);
            }
        }
        for (const Matrix& lag : sample.truth.lagged_true) {
            CHECK(lag.allFinite());
        }
        // nonzero magnitudes stay in the sampled range before rescaling only;
        // after rescaling they just have to be nonzero and finite
        CHECK(sample.data.values.allFinite());
        CHECK(sample.data.rows() == 400);
    }
}

TEST_CASE("generated series stay stable over time") {
    for (std::uint64_t seed = 10; seed < 14; ++seed) {
        const SyntheticSample sample =
            generate_synthetic(4, 2000, 2, 0.5, NoiseFamily::laplace, seed);
        const Matrix& x = sample.data.values;
        const Index half = x.rows() / 2;
        for (Index j = 0; j < x.cols(); ++j) {
            const auto first = x.col(j).head(half);
            const auto second = x.col(j).tail(half);
            const double v1 = (first.array() - first.mean()).square().mean();
            const double v2 = (second.array() - second.mean()).square().mean();
            CHECK(v1 < 2.0 * v2);
            CHECK(v2 < 2.0 * v1);
        }
    }
}

TEST_CASE("noise families have unit variance and the right shape") {
    // near-zero density leaves the columns as pure noise
    const SyntheticSample sample =
        generate_synthetic(2, 50000, 0, 1e-12, NoiseFamily::mixed, 3);
    const Matrix& x = sample.data.values;
    REQUIRE(support(sample.truth.b0_true).sum() == 0.0);

    for (Index j = 0; j < 2; ++j) {
        const double var = (x.col(j).array() - x.col(j).mean()).square().mean();
        CHECK(var == doctest::Approx(1.0).epsilon(0.05));
    }
    // even variable: uniform, bounded by sqrt(3); odd variable: laplace tails
    CHECK(x.col(0).cwiseAbs().maxCoeff() < 1.7320508075688772 + 1e-9);
    CHECK(x.col(1).cwiseAbs().maxCoeff() > 2.0);
}

TEST_CASE("generate_synthetic input checks") {
    CHECK_THROWS_AS(generate_synthetic(3, 500, 1, 0.0, NoiseFamily::uniform, 0),
                    InvalidDensity);
    CHECK_THROWS_AS(generate_synthetic(3, 500, 1, 1.5, NoiseFamily::uniform, 0),
                    InvalidDensity);
    CHECK_THROWS_AS(generate_synthetic(0, 500, 1, 0.5, NoiseFamily::uniform, 0),
                    DegenerateShape);
    CHECK_THROWS_AS(generate_synthetic(10, 55, 1, 0.5, NoiseFamily::uniform, 0),
                    DegenerateShape);
}

TEST_CASE("end-to-end recovery on small synthetic systems") {
    double total_f1 = 0.0;
    const int seeds = 10;
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
        const SyntheticSample sample =
            generate_synthetic(5, 10000, 1, 0.3, NoiseFamily::uniform, seed);
        const VarModel var = fit_var(sample.data, 1);
        DataMatrix residuals;
        residuals.values = var.residuals;
        residuals.names = sample.data.names;
        const CausalOrder order = causal_order_baseline(residuals);
        CausalGraph g;
        g.b0 = estimate_b0(residuals, order);
        g.lagged = lagged_effects(g.b0, var);
        g = prune_threshold(std::move(g), 0.05);
        total_f1 += f1(support(sample.truth.b0_true), support(g.b0));
    }
    CHECK(total_f1 / seeds >= 0.8);
}
