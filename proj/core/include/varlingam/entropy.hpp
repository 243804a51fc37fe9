#pragma once

#include "varlingam/data_matrix.hpp"

namespace varlingam {

/// Least-squares residual of one variable regressed on another.
struct Residual {
    Vector values;
};

/// Entropy drop of a variable after regressing out a candidate cause.
/// Positive means the candidate explains part of the variable.
struct PairScore {
    double t = 0.0;
};

/// r = xi - (cov(xi, xj) / var(xj)) * xj, population moments.
/// Throws LengthMismatch, DegenerateShape (n < 2), or ZeroVariance (constant xj).
Residual residual(const Eigen::Ref<const Vector>& xi, const Eigen::Ref<const Vector>& xj);

/// Closed-form approximation of the differential entropy of u, evaluated on the
/// z-scored input so the result is scale- and shift-free. Calibrated so a
/// standard Gaussian scores (1 + log(2*pi)) / 2.
/// Throws DegenerateShape (n < 2) or ZeroVariance (constant input).
double entropy(const Eigen::Ref<const Vector>& u);

/// entropy(xi) - entropy(residual(xi, xj)); the residual is re-standardized
/// inside entropy(). Propagates the errors of both primitives.
PairScore pair_score(const Eigen::Ref<const Vector>& xi, const Eigen::Ref<const Vector>& xj);

}  // namespace varlingam
