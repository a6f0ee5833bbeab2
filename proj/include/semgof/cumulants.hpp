#pragma once

#include <Eigen/Dense>
#include <map>
#include <span>
#include <vector>

#include "semgof/data_matrix.hpp"
#include "semgof/symmetric_tensor.hpp"

namespace semgof {

/// The cumulant tensors of one dataset or one population model, keyed by order.
struct CumulantSet {
    int dim = 0;
    std::map<int, SymmetricTensor> tensors;

    const SymmetricTensor& order(int k) const;
    bool has_order(int k) const { return tensors.count(k) > 0; }
};

/// Linear SEM X = Lambda^T X + Gamma^T L + eps, rewritten as X = B eta with
/// B = (I - Lambda)^{-T} (Gamma^T | I_p) and eta the l + p independent sources.
struct SemModel {
    Eigen::MatrixXd lambda;  // p x p, zero diagonal
    Eigen::MatrixXd gamma;   // l x p
    /// noise_cumulants[k - 2] holds the order-k cumulant of each of the l + p
    /// sources (confounders first), for k = 2, ..., max order supplied.
    std::vector<Eigen::VectorXd> noise_cumulants;

    int p() const { return static_cast<int>(lambda.rows()); }
    int l() const { return static_cast<int>(gamma.rows()); }

    /// B = (I - Lambda)^{-T} (Gamma^T | I_p), shape p x (l + p).
    Eigen::MatrixXd mixing() const;
};

/// Plug-in sample cumulant of order k: sample moments substituted into the
/// partition formula sum over partitions of (-1)^{h-1} (h-1)! times block moments.
/// The caller is expected to center the data first; the formula itself is valid
/// for any input. Accumulation runs in a canonical row order, so the result is
/// bit-identical under any permutation of the sample rows.
SymmetricTensor sample_cumulant(const DataMatrix& data, int k);

/// Exact population cumulant of a linear SEM via the Tucker-product
/// parametrization: cum_k(X) = diag(kappa^(k)) * B * ... * B.
SymmetricTensor population_cumulant(const SemModel& model, int k);

/// Cumulants kappa_2, ..., kappa_max_order of a Gamma(shape, rate) source:
/// kappa_m = shape * (m-1)! / rate^m.
std::vector<double> gamma_cumulants(double shape, double rate, int max_order);

/// All set partitions of {0, ..., n-1}; blocks and partitions in a fixed
/// deterministic order. Cached per n (n <= 6: 203 partitions).
const std::vector<std::vector<std::vector<int>>>& set_partitions(int n);

/// Fast plug-in cumulants of centered (optionally standardized) data for a fixed
/// set of orders, evaluated on an index-selected subsample. This is the hot path
/// used by bootstrap builders: no allocation after construction, central moments
/// accumulated in the given row order, singleton-free partition combination.
class CumulantCalculator {
public:
    CumulantCalculator(int p, std::vector<int> orders, bool standardize_scale);

    int dim() const { return p_; }
    const std::vector<int>& orders() const { return orders_; }

    /// Recompute for the rows data[indices]; indices may repeat (bootstrap).
    void compute(const Eigen::MatrixXd& data, std::span<const int> indices);

    /// Flat cumulant values of one order, canonical index order.
    std::span<const double> order_values(int k) const;

    /// Convenience: copy into a SymmetricTensor.
    SymmetricTensor tensor(int k) const;

private:
    int p_;
    std::vector<int> orders_;
    bool standardize_;
    int max_order_;
    std::vector<MultiIndex> moment_indices_;           // all sorted indices, orders 2..max
    std::vector<int> moment_offset_by_order_;          // start of each order in the table
    std::vector<std::vector<int>> moment_components_;  // components per moment index
    std::vector<double> moment_table_;
    // Per order: per output index: list of (coefficient, block offsets...).
    struct Term {
        double coefficient;
        std::vector<int> block_offsets;
    };
    std::map<int, std::vector<std::vector<Term>>> combination_;
    std::map<int, std::vector<double>> cumulant_values_;
    std::vector<double> mean_, scale_, centered_row_;
};

}  // namespace semgof
