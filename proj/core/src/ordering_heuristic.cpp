#include "varlingam/ordering_heuristic.hpp"

#include <limits>
#include <numeric>
#include <vector>

#include "ordering_detail.hpp"
#include "varlingam/errors.hpp"

namespace varlingam {

EntropyTables precompute_tables(const StandardizedMatrix& x, int threads) {
    const Index m = x.cols();
    if (m < 1 || x.rows() < 2) {
        throw DegenerateShape("entropy tables need at least one column and two rows");
    }
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    EntropyTables tables;
    tables.variable_entropy = Vector::Constant(m, nan);
    tables.residual_entropy = Matrix::Constant(m, m, nan);

    std::vector<int> active(static_cast<std::size_t>(m));
    std::iota(active.begin(), active.end(), 0);
    detail::fill_entropy_tables(x.values, active, threads, tables.variable_entropy,
                                tables.residual_entropy);
    return tables;
}

CausalOrder order_from_tables(const EntropyTables& tables) {
    const Index m = tables.size();
    if (m < 1 || tables.residual_entropy.rows() != m ||
        tables.residual_entropy.cols() != m) {
        throw DegenerateShape("entropy tables are empty or inconsistently sized");
    }

    std::vector<int> active(static_cast<std::size_t>(m));
    std::iota(active.begin(), active.end(), 0);

    Matrix scores =
        Matrix::Constant(m, m, std::numeric_limits<double>::quiet_NaN());
    detail::fill_pair_scores(active, tables.variable_entropy,
                             tables.residual_entropy, scores);

    CausalOrder result;
    result.order.reserve(static_cast<std::size_t>(m));
    while (!active.empty()) {
        const std::size_t pos = detail::most_exogenous_position(active, scores);
        result.order.push_back(active[pos]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return result;
}

CausalOrder causal_order_heuristic(const DataMatrix& x, int threads) {
    const EntropyTables tables = precompute_tables(standardize(x), threads);
    return order_from_tables(tables);
}

}  // namespace varlingam
