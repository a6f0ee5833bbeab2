#pragma once

#include <Eigen/Dense>
#include <vector>

#include "semgof/multi_index.hpp"
#include "semgof/symmetric_tensor.hpp"

namespace semgof {

/// A matrix derived from a symmetric tensor together with the index tuples
/// labelling its rows and columns.
struct FlatteningMatrix {
    std::vector<MultiIndex> row_labels;
    std::vector<MultiIndex> col_labels;
    Eigen::MatrixXd data;
};

/// fl_m(T): rows indexed by the length-(k-m) tuples, columns by the length-m
/// tuples, both in canonical lexicographic order; entry = tensor value at the
/// concatenated index. Shape multichoose(q, k-m) x multichoose(q, m).
FlatteningMatrix flatten(const SymmetricTensor& tensor, int m);

/// Young flattening of an order-3 tensor over R^p, p >= 3. With a = floor((p-1)/2),
/// the matrix has shape p*C(p,a) x p*C(p,a+1). Rows are labelled (i1, S) with S an
/// a-subset (i1-major, S lexicographic); columns (j1, R) with R an (a+1)-subset
/// (j1-major, R reverse-lexicographic). The entry is zero unless S is contained in
/// R, and otherwise +/- t_{j1, i1, c} where c completes S to R; the sign convention
/// reproduces the order-3 construction on a signed wedge basis (see young_sign).
/// For p = 3 this is a 9x9 skew-symmetric matrix whose rank certifies border rank.
FlatteningMatrix young_flattening_3(const SymmetricTensor& tensor);

/// Order-5 analogue: shape multichoose(p,2)*C(p,a) x multichoose(p,2)*C(p,a+1),
/// rows (i1<=i2, S), columns (j1<=j2, R), entry +/- t_{j1,j2,i1,i2,c}.
FlatteningMatrix young_flattening_5(const SymmetricTensor& tensor);

/// Count of singular values above tol * sigma_max, plus the full spectrum.
struct NumericalRank {
    int rank = 0;
    Eigen::VectorXd singular_values;
};
NumericalRank numerical_rank(const Eigen::MatrixXd& matrix, double tol = 1e-8);

/// Positional structure of a tensor-derived matrix: each nonzero entry points
/// at a flat storage offset of the source tensor (canonical index order) with a
/// sign. Lets bootstrap builders refill matrices without re-deriving indices.
struct SignedLayout {
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    struct Entry {
        Eigen::Index row;
        Eigen::Index col;
        std::int32_t offset;
        std::int8_t sign;
    };
    std::vector<Entry> entries;
    std::vector<MultiIndex> row_labels;
    std::vector<MultiIndex> col_labels;
};

SignedLayout flatten_layout(int dim, int order, int m);
SignedLayout young3_layout(int dim);
SignedLayout young5_layout(int dim);

}  // namespace semgof
