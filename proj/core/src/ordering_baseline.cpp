#include "varlingam/ordering_baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "ordering_detail.hpp"
#include "varlingam/entropy.hpp"
#include "varlingam/errors.hpp"

namespace varlingam {

double aggregate_score(int i, std::span<const int> candidates,
                       const Matrix& pair_scores) {
    double total = 0.0;
    for (const int j : candidates) {
        if (j == i) continue;
        const double diff = pair_scores(j, i) - pair_scores(i, j);
        const double clipped = std::min(0.0, diff);
        total += clipped * clipped;
    }
    return total;
}

namespace {

// Population re-standardization of the still-active columns. A variable whose
// residual has collapsed to a constant signals exact collinearity in the
// remaining block.
void restandardize(Matrix& w, const std::vector<int>& active) {
    const auto n = static_cast<double>(w.rows());
    for (const int j : active) {
        auto col = w.col(j);
        const double mean = col.mean();
        col.array() -= mean;
        const double variance = col.squaredNorm() / n;
        if (!(variance > 0.0)) throw ZeroVariance(j);
        col /= std::sqrt(variance);
    }
}

}  // namespace

CausalOrder causal_order_baseline_from(StandardizedMatrix x, int threads) {
    const Index m = x.cols();
    if (m < 1 || x.rows() < 2) {
        throw DegenerateShape("order search needs at least one column and two rows");
    }
    Matrix w = std::move(x.values);
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<int> active(static_cast<std::size_t>(m));
    std::iota(active.begin(), active.end(), 0);

    Vector variable_entropy(m);
    Matrix residual_entropy(m, m);
    Matrix scores(m, m);

    CausalOrder result;
    result.order.reserve(static_cast<std::size_t>(m));
    for (int round = 0; !active.empty(); ++round) {
        if (active.size() == 1) {
            result.order.push_back(active.front());
            break;
        }
        // Round zero consumes the caller's standardized columns untouched;
        // later rounds re-standardize what the refinement step left behind.
        if (round > 0) restandardize(w, active);

        variable_entropy.setConstant(nan);
        residual_entropy.setConstant(nan);
        scores.setConstant(nan);
        detail::fill_entropy_tables(w, active, threads, variable_entropy,
                                    residual_entropy);
        detail::fill_pair_scores(active, variable_entropy, residual_entropy,
                                 scores);

        const std::size_t pos = detail::most_exogenous_position(active, scores);
        const int chosen = active[pos];
        result.order.push_back(chosen);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos));

        for (const int j : active) {
            w.col(j) = residual(w.col(j), w.col(chosen)).values;
        }
    }
    return result;
}

CausalOrder causal_order_baseline(const DataMatrix& x, int threads) {
    return causal_order_baseline_from(standardize(x), threads);
}

}  // namespace varlingam
