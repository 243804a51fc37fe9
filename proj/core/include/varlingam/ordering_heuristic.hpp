#pragma once

#include "varlingam/data_matrix.hpp"

namespace varlingam {

/// Entropy lookup store built once from a standardized matrix.
/// variable_entropy[i] is the entropy of column i; residual_entropy(i, j) is
/// the entropy of the residual of column i regressed on column j. The diagonal
/// is left as NaN so any accidental self-pair lookup poisons the result.
struct EntropyTables {
    Vector variable_entropy;
    Matrix residual_entropy;

    Index size() const { return variable_entropy.size(); }
};

/// Computes all single-variable and pairwise-residual entropies from one
/// standardized snapshot. Throws ZeroVariance if an exactly collinear pair
/// produces a constant residual.
EntropyTables precompute_tables(const StandardizedMatrix& x, int threads = 1);

/// The selection rounds alone: repeatedly picks the most exogenous remaining
/// variable by table lookup and removes it from the candidate set. The tables
/// are never recomputed.
CausalOrder order_from_tables(const EntropyTables& tables);

/// Full precompute-and-lookup causal order search: standardizes once, builds
/// the tables once, then runs the selection rounds. The input is not modified.
CausalOrder causal_order_heuristic(const DataMatrix& x, int threads = 1);

}  // namespace varlingam
