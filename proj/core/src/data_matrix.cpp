#include "varlingam/data_matrix.hpp"

#include "varlingam/errors.hpp"

#include <cmath>
#include <unordered_set>

namespace varlingam {

DataMatrix make_data_matrix(Matrix values) {
    DataMatrix x;
    x.names.reserve(static_cast<std::size_t>(values.cols()));
    for (Index j = 0; j < values.cols(); ++j) {
        x.names.push_back("v" + std::to_string(j));
    }
    x.values = std::move(values);
    return x;
}

const DataMatrix& validate(const DataMatrix& x) {
    if (x.rows() < 2 || x.cols() < 1) {
        throw DegenerateShape("need at least 2 rows and 1 column, got " +
                              std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
    }
    if (!x.values.allFinite()) {
        throw NonFinite();
    }
    if (x.names.size() != static_cast<std::size_t>(x.cols())) {
        throw DegenerateShape("name count " + std::to_string(x.names.size()) +
                              " does not match column count " + std::to_string(x.cols()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : x.names) {
        if (!seen.insert(name).second) throw DuplicateNames(name);
    }
    return x;
}

StandardizedMatrix standardize(const DataMatrix& x) {
    validate(x);
    const auto n = static_cast<double>(x.rows());
    StandardizedMatrix s;
    s.names = x.names;
    s.values.resize(x.rows(), x.cols());
    for (Index j = 0; j < x.cols(); ++j) {
        const double mean = x.values.col(j).mean();
        Vector centered = x.values.col(j).array() - mean;
        const double variance = centered.squaredNorm() / n;
        if (!(variance > 0.0)) throw ZeroVariance(j);
        s.values.col(j) = centered / std::sqrt(variance);
    }
    return s;
}

bool is_permutation_of(const CausalOrder& o, int m) {
    if (static_cast<int>(o.order.size()) != m) return false;
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v : o.order) {
        if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

}  // namespace varlingam
