#pragma once

#include <span>

#include "varlingam/data_matrix.hpp"

namespace varlingam {

/// Exogeneity score for candidate i against the remaining candidate set.
/// pair_scores(a, b) holds the directional score of the pair (a regressed on
/// b); entries outside the candidate set are never read. Lower means more
/// exogenous; an exact root cause scores zero.
double aggregate_score(int i, std::span<const int> candidates,
                       const Matrix& pair_scores);

/// Iterative causal order search. Each round standardizes the remaining
/// columns, recomputes every pairwise score from the refined data, appends the
/// most exogenous variable, and replaces the remaining columns with their
/// residuals against it. Ties go to the smallest variable index.
CausalOrder causal_order_baseline(const DataMatrix& x, int threads = 1);

/// Same search starting from an already-standardized matrix. The first round
/// consumes the input columns exactly as given, so its pairwise scores match
/// precompute_tables on the same matrix bit for bit.
CausalOrder causal_order_baseline_from(StandardizedMatrix x, int threads = 1);

}  // namespace varlingam
