#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace varlingam {

using Matrix = Eigen::MatrixXd;  // column-major, so each variable is contiguous
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// A sample-by-variable table: n time-ordered rows, one named column per variable.
struct DataMatrix {
    Matrix values;
    std::vector<std::string> names;

    Index rows() const { return values.rows(); }
    Index cols() const { return values.cols(); }
};

/// Builds a DataMatrix with default names v0..v{m-1}.
DataMatrix make_data_matrix(Matrix values);

/// Checks the DataMatrix invariants and returns the input untouched.
/// Throws NonFinite, DegenerateShape, or DuplicateNames.
const DataMatrix& validate(const DataMatrix& x);

/// A DataMatrix whose columns have been z-scored: mean 0, variance 1
/// (population convention, divisor n).
struct StandardizedMatrix {
    Matrix values;
    std::vector<std::string> names;

    Index rows() const { return values.rows(); }
    Index cols() const { return values.cols(); }
};

/// Z-scores every column with population moments. Throws ZeroVariance with the
/// offending column index if a column is constant.
StandardizedMatrix standardize(const DataMatrix& x);

/// A permutation of the variable indices; position k holds the k-th most
/// exogenous variable.
struct CausalOrder {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    bool operator==(const CausalOrder&) const = default;
};

/// True iff `o` is a permutation of {0, .., m-1}.
bool is_permutation_of(const CausalOrder& o, int m);

}  // namespace varlingam
