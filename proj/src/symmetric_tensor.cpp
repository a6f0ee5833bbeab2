#include "semgof/symmetric_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace semgof {

SymmetricTensor::SymmetricTensor(int order, int dim) : order_(order), dim_(dim) {
    if (order < 1 || dim < 1) throw std::invalid_argument("SymmetricTensor: order and dim must be positive");
    values_.assign(static_cast<std::size_t>(multichoose(dim, order)), 0.0);
}

double SymmetricTensor::operator()(std::span<const int> index) const {
    if (static_cast<int>(index.size()) != order_) throw std::invalid_argument("SymmetricTensor: wrong index length");
    MultiIndex sorted(index.begin(), index.end());
    std::sort(sorted.begin(), sorted.end());
    return at_sorted(sorted);
}

double SymmetricTensor::operator()(std::initializer_list<int> index) const {
    return (*this)(std::span<const int>(index.begin(), index.size()));
}

double SymmetricTensor::at_sorted(const MultiIndex& idx) const {
    return values_[static_cast<std::size_t>(multi_index_rank(dim_, idx))];
}

void SymmetricTensor::set_sorted(const MultiIndex& idx, double value) {
    values_[static_cast<std::size_t>(multi_index_rank(dim_, idx))] = value;
}

double SymmetricTensor::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

SymmetricTensor rank_one_sum(const std::vector<Eigen::VectorXd>& vectors,
                             const std::vector<double>& weights, int order) {
    if (vectors.empty()) throw std::invalid_argument("rank_one_sum: need at least one vector");
    if (vectors.size() != weights.size()) throw std::invalid_argument("rank_one_sum: vectors/weights size mismatch");
    const int q = static_cast<int>(vectors.front().size());
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != q) throw std::invalid_argument("rank_one_sum: inconsistent vector lengths");
    }
    SymmetricTensor out(order, q);
    const auto indices = enumerate_multi_indices(q, order);
    for (std::size_t pos = 0; pos < indices.size(); ++pos) {
        double sum = 0.0;
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            double prod = weights[j];
            for (int i : indices[pos]) prod *= vectors[j][i];
            sum += prod;
        }
        out.values()[pos] = sum;
    }
    return out;
}

SymmetricTensor tucker_transform(const SymmetricTensor& tensor, const Eigen::MatrixXd& matrix) {
    const int q = tensor.dim();
    const int k = tensor.order();
    if (static_cast<int>(matrix.cols()) != q) throw std::invalid_argument("tucker_transform: matrix must have q columns");
    const int p = static_cast<int>(matrix.rows());

    SymmetricTensor out(k, p);
    const auto in_indices = enumerate_multi_indices(q, k);
    const auto out_indices = enumerate_multi_indices(p, k);

    for (std::size_t in_pos = 0; in_pos < in_indices.size(); ++in_pos) {
        const double t = tensor.values()[in_pos];
        if (t == 0.0) continue;
        // Sum over the distinct permutations of the sorted input index; together
        // with the loop over sorted indices this covers all of [q]^k once.
        MultiIndex perm = in_indices[in_pos];
        for (std::size_t out_pos = 0; out_pos < out_indices.size(); ++out_pos) {
            const MultiIndex& oi = out_indices[out_pos];
            double acc = 0.0;
            std::sort(perm.begin(), perm.end());
            do {
                double prod = 1.0;
                for (int s = 0; s < k; ++s) prod *= matrix(oi[s], perm[s]);
                acc += prod;
            } while (std::next_permutation(perm.begin(), perm.end()));
            out.values()[out_pos] += t * acc;
        }
    }
    return out;
}

}  // namespace semgof
