#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "varlingam/data_matrix.hpp"
#include "varlingam/entropy.hpp"
#include "varlingam/ordering_baseline.hpp"
#include "varlingam/parallel.hpp"

namespace varlingam::detail {

// Fills variable entropies and pairwise residual entropies for the active
// columns of w. Entries for inactive indices are left untouched (NaN). Both
// search engines build their tables through this one routine, and it goes
// through the public residual/entropy functions, so the numbers agree bit for
// bit wherever the engines look at the same data.
inline void fill_entropy_tables(const Matrix& w, const std::vector<int>& active,
                                int threads, Vector& variable_entropy,
                                Matrix& residual_entropy) {
    const auto count = static_cast<std::int64_t>(active.size());
    parallel_for(count, threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t a = begin; a < end; ++a) {
            const int i = active[static_cast<std::size_t>(a)];
            variable_entropy(i) = entropy(w.col(i));
            for (const int j : active) {
                if (j == i) continue;
                residual_entropy(i, j) = entropy(residual(w.col(i), w.col(j)).values);
            }
        }
    });
}

// Directional pair scores over the active set: score(i, j) compares how much
// regressing i on j sharpens i. Inactive entries stay NaN.
inline void fill_pair_scores(const std::vector<int>& active,
                             const Vector& variable_entropy,
                             const Matrix& residual_entropy, Matrix& scores) {
    for (const int i : active) {
        for (const int j : active) {
            if (j == i) continue;
            scores(i, j) = variable_entropy(i) - residual_entropy(i, j);
        }
    }
}

// Position in active of the most exogenous candidate. active is kept sorted
// ascending by the callers, so the strict comparison makes ties resolve to the
// smallest variable index.
inline std::size_t most_exogenous_position(const std::vector<int>& active,
                                           const Matrix& scores) {
    std::size_t best_pos = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t pos = 0; pos < active.size(); ++pos) {
        const double m = aggregate_score(active[pos], active, scores);
        if (m < best) {
            best = m;
            best_pos = pos;
        }
    }
    return best_pos;
}

}  // namespace varlingam::detail
