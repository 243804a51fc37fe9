#pragma once

#include <vector>

#include "varlingam/data_matrix.hpp"
#include "varlingam/var_model.hpp"

namespace varlingam {

/// Final discovery output. b0 holds instantaneous effects, lagged[tau-1] the
/// effects at lag tau. Entry (i, j) is always the effect of variable j on
/// variable i. Permuting b0 by the causal order it was built from gives a
/// strictly lower triangular matrix.
struct CausalGraph {
    Matrix b0;
    std::vector<Matrix> lagged;
};

/// Instantaneous effect matrix for a fixed causal order. Row v of the result
/// holds the OLS coefficients of v's residual column regressed (with
/// intercept) on the columns of all variables earlier in the order; entries
/// for non-predecessors are exactly zero. Implemented as one QR factorization
/// of the order-permuted columns, with each prefix regression read off by
/// back-substitution.
Matrix estimate_b0(const DataMatrix& residuals, const CausalOrder& order);

/// Maps VAR coefficient matrices M_tau to lagged effect matrices
/// (I - b0) * M_tau, one per lag.
std::vector<Matrix> lagged_effects(const Matrix& b0, const VarModel& var);

/// Zeroes every entry with magnitude below eps, in b0 and all lag matrices.
CausalGraph prune_threshold(CausalGraph g, double eps);

}  // namespace varlingam
