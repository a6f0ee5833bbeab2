#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "semgof/multi_index.hpp"

namespace semgof {

/// Dense symmetric tensor of order k over R^q, stored by sorted multi-index in
/// the canonical lexicographic order of enumerate_multi_indices(q, k).
/// Reading any permutation of an index tuple returns the value at its sorted form.
class SymmetricTensor {
public:
    SymmetricTensor(int order, int dim);

    int order() const { return order_; }
    int dim() const { return dim_; }

    /// Number of stored (distinct) entries: multichoose(dim, order).
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

    /// Entry at an index tuple given in any order (0-based indices).
    double operator()(std::span<const int> index) const;
    double operator()(std::initializer_list<int> index) const;

    /// Entry at a tuple already sorted non-decreasingly.
    double at_sorted(const MultiIndex& sorted_index) const;
    void set_sorted(const MultiIndex& sorted_index, double value);

    /// Flat storage in canonical order; parallel to enumerate_multi_indices(dim, order).
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    /// Max-norm over stored entries.
    double max_abs() const;

    bool operator==(const SymmetricTensor&) const = default;

private:
    int order_;
    int dim_;
    std::vector<double> values_;
};

/// T = sum_j w_j v_j^{(x) k}: weighted sum of symmetric rank-one powers.
/// Symmetric rank of the result is at most the number of vectors.
SymmetricTensor rank_one_sum(const std::vector<Eigen::VectorXd>& vectors,
                             const std::vector<double>& weights, int order);

/// Tucker product T * A * ... * A with A applied to every mode:
/// out_{i1..ik} = sum_{j1..jk} t_{j1..jk} a_{i1 j1} ... a_{ik jk}.
/// A has shape p x q with q = T.dim(); the result is symmetric of dimension p.
/// Zero entries of T are skipped, so diagonal inputs cost O(q) per output entry.
SymmetricTensor tucker_transform(const SymmetricTensor& tensor, const Eigen::MatrixXd& matrix);

}  // namespace semgof
