#include "varlingam/adjacency.hpp"

#include <Eigen/QR>
#include <cmath>

#include "varlingam/errors.hpp"

namespace varlingam {

Matrix estimate_b0(const DataMatrix& residuals, const CausalOrder& order) {
    validate(residuals);
    const Index m = residuals.cols();
    if (!is_permutation_of(order, static_cast<int>(m))) {
        throw ShapeMismatch("causal order does not index the residual columns");
    }
    Matrix b0 = Matrix::Zero(m, m);
    if (m == 1) return b0;

    const Index n = residuals.rows();
    if (n < m + 1) {
        throw SingularDesign("fewer rows than regression columns");
    }

    // One factorization serves every per-variable regression: with the design
    // [1, x_{order[0]}, ..., x_{order[m-1]}] = QR, the regression of the
    // variable in position k on the intercept and its predecessors solves
    // R[0..k, 0..k] beta = R[0..k, k+1] by back-substitution.
    Matrix design(n, m + 1);
    design.col(0).setOnes();
    for (Index k = 0; k < m; ++k) {
        design.col(k + 1) = residuals.values.col(order.order[static_cast<std::size_t>(k)]);
    }
    const Eigen::HouseholderQR<Matrix> qr(design);
    const Matrix r = qr.matrixQR().topRows(m + 1).triangularView<Eigen::Upper>();

    const double scale = r.diagonal().cwiseAbs().maxCoeff();
    for (Index i = 0; i < m; ++i) {
        if (!(std::abs(r(i, i)) > scale * 1e-12)) {
            throw SingularDesign("collinear predecessor columns in b0 regression");
        }
    }

    for (Index k = 1; k < m; ++k) {
        const Index c = k + 1;
        const Vector beta = r.topLeftCorner(c, c)
                                .triangularView<Eigen::Upper>()
                                .solve(r.col(c).head(c));
        const int row = order.order[static_cast<std::size_t>(k)];
        for (Index j = 1; j < c; ++j) {
            b0(row, order.order[static_cast<std::size_t>(j - 1)]) = beta(j);
        }
    }
    return b0;
}

std::vector<Matrix> lagged_effects(const Matrix& b0, const VarModel& var) {
    if (b0.rows() != b0.cols()) {
        throw ShapeMismatch("instantaneous matrix must be square");
    }
    std::vector<Matrix> out;
    out.reserve(var.coefficients.size());
    if (var.coefficients.empty()) return out;

    const Index m = b0.rows();
    const Matrix transform = Matrix::Identity(m, m) - b0;
    for (const Matrix& coeff : var.coefficients) {
        if (coeff.rows() != m || coeff.cols() != m) {
            throw ShapeMismatch("lag matrix shape does not match b0");
        }
        out.push_back(transform * coeff);
    }
    return out;
}

CausalGraph prune_threshold(CausalGraph g, double eps) {
    const auto zap = [eps](Matrix& a) {
        a.array() = (a.array().abs() < eps).select(0.0, a.array());
    };
    zap(g.b0);
    for (Matrix& lag : g.lagged) zap(lag);
    return g;
}

}  // namespace varlingam
