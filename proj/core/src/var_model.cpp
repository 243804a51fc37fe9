#include "varlingam/var_model.hpp"

#include "varlingam/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace varlingam {

namespace {

struct LagFit {
    Matrix coeff;      // (m*p + 1) x m; lag-1 block first, intercept row last
    Matrix residuals;  // (n - first_row) x m
};

// Regresses rows first_row..n-1 on their p lags plus an intercept.
// first_row >= p lets lag-order candidates share one estimation sample.
LagFit ols_lag_fit(const Matrix& values, int p, Index first_row) {
    const Index n = values.rows();
    const Index m = values.cols();
    const Index obs = n - first_row;
    const Index dim = static_cast<Index>(p) * m + 1;
    if (obs < dim) {
        throw InsufficientSamples("VAR(" + std::to_string(p) + ") with " + std::to_string(m) +
                                  " variables needs at least " + std::to_string(dim + first_row) +
                                  " rows, got " + std::to_string(n));
    }

    Matrix design(obs, dim);
    for (int tau = 1; tau <= p; ++tau) {
        design.middleCols(static_cast<Index>(tau - 1) * m, m) =
            values.middleRows(first_row - tau, obs);
    }
    design.col(dim - 1).setOnes();

    Eigen::ColPivHouseholderQR<Matrix> qr(design);
    if (qr.rank() < dim) {
        throw SingularDesign("lag design matrix is rank deficient (rank " +
                             std::to_string(qr.rank()) + " of " + std::to_string(dim) + ")");
    }

    LagFit fit;
    const auto response = values.middleRows(first_row, obs);
    fit.coeff = qr.solve(response);
    fit.residuals = response - design * fit.coeff;
    return fit;
}

}  // namespace

VarModel fit_var(const DataMatrix& x, int p) {
    validate(x);
    if (p < 1) throw DegenerateShape("lag order must be positive, got " + std::to_string(p));

    const Index m = x.cols();
    LagFit fit = ols_lag_fit(x.values, p, p);

    VarModel model;
    model.lag_order = p;
    model.coefficients.reserve(static_cast<std::size_t>(p));
    for (int tau = 1; tau <= p; ++tau) {
        // coeff rows are regressors, columns are target variables
        model.coefficients.push_back(
            fit.coeff.middleRows(static_cast<Index>(tau - 1) * m, m).transpose());
    }
    model.intercept = fit.coeff.row(static_cast<Index>(p) * m).transpose();
    model.residuals = std::move(fit.residuals);
    return model;
}

int select_lag(const DataMatrix& x, int p_max) {
    validate(x);
    if (p_max < 1) throw DegenerateShape("p_max must be positive, got " + std::to_string(p_max));

    const Index m = x.cols();
    const Index first_row = p_max;
    const auto obs = static_cast<double>(x.rows() - first_row);

    int best_p = 0;
    double best_bic = std::numeric_limits<double>::infinity();
    for (int p = 1; p <= p_max; ++p) {
        const LagFit fit = ols_lag_fit(x.values, p, first_row);
        const Matrix sigma = fit.residuals.transpose() * fit.residuals / obs;

        const Eigen::LDLT<Matrix> ldlt(sigma);
        double log_det = 0.0;
        bool degenerate = (ldlt.info() != Eigen::Success);
        for (Index i = 0; i < m && !degenerate; ++i) {
            const double d = ldlt.vectorD()(i);
            if (!(d > 0.0)) {
                degenerate = true;
            } else {
                log_det += std::log(d);
            }
        }
        if (degenerate) continue;

        const double params = static_cast<double>(m) * m * p + static_cast<double>(m);
        const double bic = log_det + std::log(obs) / obs * params;
        if (bic < best_bic) {
            best_bic = bic;
            best_p = p;
        }
    }
    if (best_p == 0) throw SingularDesign("every candidate lag order had a degenerate fit");
    return best_p;
}

}  // namespace varlingam
