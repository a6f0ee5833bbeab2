#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace semgof {

/// An n x p sample, rows = observations. Ingestion (see table_io) guarantees
/// finite entries and n >= 2.
struct DataMatrix {
    Eigen::MatrixXd values;
    std::vector<std::string> column_names;
    bool centered = false;

    Eigen::Index n() const { return values.rows(); }
    int p() const { return static_cast<int>(values.cols()); }
};

/// Subtract the column means.
DataMatrix center(const DataMatrix& data);

/// Subtract the column means and scale each column to unit (1/n) variance.
DataMatrix standardize(const DataMatrix& data);

/// Row order that makes accumulation independent of the input row permutation:
/// indices sorted lexicographically by row content (ties are identical rows).
std::vector<int> canonical_row_order(const Eigen::MatrixXd& values);

}  // namespace semgof
