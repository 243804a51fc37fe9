#pragma once

#include "varlingam/data_matrix.hpp"

#include <vector>

namespace varlingam {

/// A fitted vector autoregression of order p.
/// coefficients[tau-1](i, j) is the effect of variable j at time t-tau on
/// variable i at time t. residuals holds observed minus fitted for rows p..n-1.
struct VarModel {
    int lag_order = 0;
    std::vector<Matrix> coefficients;
    Vector intercept;
    Matrix residuals;
};

/// Ordinary least squares fit of each variable on all variables at lags 1..p
/// plus an intercept, via a rank-revealing QR of the stacked lag design.
/// Throws InsufficientSamples or SingularDesign.
VarModel fit_var(const DataMatrix& x, int p);

/// Smallest BIC lag order in 1..p_max, all candidates scored on the same
/// estimation sample; ties break toward the smaller order.
int select_lag(const DataMatrix& x, int p_max);

}  // namespace varlingam
