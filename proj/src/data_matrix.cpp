#include "semgof/data_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace semgof {

DataMatrix center(const DataMatrix& data) {
    DataMatrix out = data;
    const Eigen::RowVectorXd mean = data.values.colwise().mean();
    out.values.rowwise() -= mean;
    out.centered = true;
    return out;
}

DataMatrix standardize(const DataMatrix& data) {
    DataMatrix out = center(data);
    const Eigen::Index n = out.values.rows();
    for (Eigen::Index j = 0; j < out.values.cols(); ++j) {
        const double sd = std::sqrt(out.values.col(j).squaredNorm() / static_cast<double>(n));
        if (sd <= 0.0) throw std::invalid_argument("standardize: constant column");
        out.values.col(j) /= sd;
    }
    return out;
}

std::vector<int> canonical_row_order(const Eigen::MatrixXd& values) {
    std::vector<int> order(static_cast<std::size_t>(values.rows()));
    std::iota(order.begin(), order.end(), 0);
    const int p = static_cast<int>(values.cols());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        for (int j = 0; j < p; ++j) {
            if (values(a, j) < values(b, j)) return true;
            if (values(a, j) > values(b, j)) return false;
        }
        return false;
    });
    return order;
}

}  // namespace semgof
