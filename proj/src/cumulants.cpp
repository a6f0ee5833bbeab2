#include "semgof/cumulants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace semgof {

const SymmetricTensor& CumulantSet::order(int k) const {
    auto it = tensors.find(k);
    if (it == tensors.end()) throw std::out_of_range("CumulantSet: missing order " + std::to_string(k));
    return it->second;
}

Eigen::MatrixXd SemModel::mixing() const {
    const int pp = p();
    const int ll = l();
    Eigen::MatrixXd rhs(pp, ll + pp);
    rhs.leftCols(ll) = gamma.transpose();
    rhs.rightCols(pp) = Eigen::MatrixXd::Identity(pp, pp);
    const Eigen::MatrixXd it = (Eigen::MatrixXd::Identity(pp, pp) - lambda).transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(it);
    if (!lu.isInvertible()) throw std::invalid_argument("SemModel: I - Lambda is singular");
    return lu.solve(rhs);
}

const std::vector<std::vector<std::vector<int>>>& set_partitions(int n) {
    static std::vector<std::vector<std::vector<std::vector<int>>>> cache(7);
    if (n < 1 || n > 6) throw std::invalid_argument("set_partitions: supported sizes are 1..6");
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot.empty()) return slot;

    std::vector<std::vector<int>> current;
    std::vector<std::vector<std::vector<int>>> all;
    auto recurse = [&](auto&& self, int element) -> void {
        if (element == n) {
            all.push_back(current);
            return;
        }
        for (auto& block : current) {
            block.push_back(element);
            self(self, element + 1);
            block.pop_back();
        }
        current.push_back({element});
        self(self, element + 1);
        current.pop_back();
    };
    recurse(recurse, 0);
    slot = std::move(all);
    return slot;
}

namespace {

// Sample moment table over the orders 1..k for the given data, accumulated in
// canonical row order so the result is invariant to row permutations.
std::map<MultiIndex, double> moment_table(const Eigen::MatrixXd& values, int max_order) {
    const auto order = canonical_row_order(values);
    const int p = static_cast<int>(values.cols());
    const double inv_n = 1.0 / static_cast<double>(values.rows());

    std::map<MultiIndex, double> table;
    std::vector<MultiIndex> all;
    for (int m = 1; m <= max_order; ++m) {
        for (auto& idx : enumerate_multi_indices(p, m)) all.push_back(idx);
    }
    std::vector<double> sums(all.size(), 0.0);
    for (int row : order) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            double prod = 1.0;
            for (int comp : all[j]) prod *= values(row, comp);
            sums[j] += prod;
        }
    }
    for (std::size_t j = 0; j < all.size(); ++j) table[all[j]] = sums[j] * inv_n;
    return table;
}

}  // namespace

SymmetricTensor sample_cumulant(const DataMatrix& data, int k) {
    if (k < 2 || k > 6) throw std::invalid_argument("sample_cumulant: supported orders are 2..6");
    if (data.n() < k) throw std::invalid_argument("sample_cumulant: need at least k rows");

    const int p = data.p();
    const auto moments = moment_table(data.values, k);
    const auto& partitions = set_partitions(k);

    SymmetricTensor out(k, p);
    const auto out_indices = enumerate_multi_indices(p, k);
    MultiIndex block_index;
    for (std::size_t pos = 0; pos < out_indices.size(); ++pos) {
        const MultiIndex& idx = out_indices[pos];
        double total = 0.0;
        for (const auto& partition : partitions) {
            const int h = static_cast<int>(partition.size());
            double coeff = (h % 2 == 1) ? 1.0 : -1.0;
            for (int f = 2; f < h; ++f) coeff *= f;  // (h-1)!
            double prod = coeff;
            for (const auto& block : partition) {
                block_index.clear();
                for (int e : block) block_index.push_back(idx[static_cast<std::size_t>(e)]);
                std::sort(block_index.begin(), block_index.end());
                prod *= moments.at(block_index);
            }
            total += prod;
        }
        out.values()[pos] = total;
    }
    return out;
}

SymmetricTensor population_cumulant(const SemModel& model, int k) {
    if (k < 2) throw std::invalid_argument("population_cumulant: order must be >= 2");
    if (static_cast<int>(model.noise_cumulants.size()) < k - 1)
        throw std::invalid_argument("population_cumulant: missing noise cumulants for order " + std::to_string(k));
    const Eigen::VectorXd& kappa = model.noise_cumulants[static_cast<std::size_t>(k - 2)];
    const int q = model.l() + model.p();
    if (static_cast<int>(kappa.size()) != q)
        throw std::invalid_argument("population_cumulant: noise cumulant vector has wrong length");

    SymmetricTensor diag(k, q);
    MultiIndex idx(static_cast<std::size_t>(k));
    for (int j = 0; j < q; ++j) {
        std::fill(idx.begin(), idx.end(), j);
        diag.set_sorted(idx, kappa[j]);
    }
    return tucker_transform(diag, model.mixing());
}

std::vector<double> gamma_cumulants(double shape, double rate, int max_order) {
    if (shape <= 0.0 || rate <= 0.0) throw std::invalid_argument("gamma_cumulants: parameters must be positive");
    if (max_order < 2) throw std::invalid_argument("gamma_cumulants: max_order must be >= 2");
    std::vector<double> out;
    double factorial = 1.0;  // (m-1)! running
    double rate_pow = rate;
    for (int m = 2; m <= max_order; ++m) {
        factorial *= (m - 1);
        rate_pow *= rate;
        out.push_back(shape * factorial / rate_pow);
    }
    return out;
}

CumulantCalculator::CumulantCalculator(int p, std::vector<int> orders, bool standardize_scale)
    : p_(p), orders_(std::move(orders)), standardize_(standardize_scale) {
    if (orders_.empty()) throw std::invalid_argument("CumulantCalculator: no orders requested");
    std::sort(orders_.begin(), orders_.end());
    orders_.erase(std::unique(orders_.begin(), orders_.end()), orders_.end());
    if (orders_.front() < 2 || orders_.back() > 6)
        throw std::invalid_argument("CumulantCalculator: supported orders are 2..6");
    max_order_ = orders_.back();

    moment_offset_by_order_.assign(static_cast<std::size_t>(max_order_ + 1), 0);
    for (int m = 2; m <= max_order_; ++m) {
        moment_offset_by_order_[static_cast<std::size_t>(m)] = static_cast<int>(moment_indices_.size());
        for (auto& idx : enumerate_multi_indices(p_, m)) {
            moment_components_.push_back(idx);
            moment_indices_.push_back(idx);
        }
    }
    moment_table_.assign(moment_indices_.size(), 0.0);

    // Precompute, for every requested order and output index, the singleton-free
    // partition terms as flat offsets into the central-moment table. Dropping
    // singleton blocks is exact: first central moments vanish identically.
    MultiIndex block_index;
    for (int k : orders_) {
        const auto out_indices = enumerate_multi_indices(p_, k);
        std::vector<std::vector<Term>> per_index(out_indices.size());
        for (std::size_t pos = 0; pos < out_indices.size(); ++pos) {
            const MultiIndex& idx = out_indices[pos];
            for (const auto& partition : set_partitions(k)) {
                bool has_singleton = false;
                for (const auto& block : partition) {
                    if (block.size() < 2) {
                        has_singleton = true;
                        break;
                    }
                }
                if (has_singleton) continue;
                const int h = static_cast<int>(partition.size());
                Term term;
                term.coefficient = (h % 2 == 1) ? 1.0 : -1.0;
                for (int f = 2; f < h; ++f) term.coefficient *= f;
                for (const auto& block : partition) {
                    block_index.clear();
                    for (int e : block) block_index.push_back(idx[static_cast<std::size_t>(e)]);
                    std::sort(block_index.begin(), block_index.end());
                    const int m = static_cast<int>(block_index.size());
                    term.block_offsets.push_back(moment_offset_by_order_[static_cast<std::size_t>(m)] +
                                                 static_cast<int>(multi_index_rank(p_, block_index)));
                }
                per_index[pos].push_back(std::move(term));
            }
        }
        combination_[k] = std::move(per_index);
        cumulant_values_[k].assign(out_indices.size(), 0.0);
    }
    mean_.assign(static_cast<std::size_t>(p_), 0.0);
    scale_.assign(static_cast<std::size_t>(p_), 1.0);
    centered_row_.assign(static_cast<std::size_t>(p_), 0.0);
}

void CumulantCalculator::compute(const Eigen::MatrixXd& data, std::span<const int> indices) {
    const std::size_t n = indices.size();
    if (n < 2) throw std::invalid_argument("CumulantCalculator: need at least 2 rows");
    const double inv_n = 1.0 / static_cast<double>(n);

    std::fill(mean_.begin(), mean_.end(), 0.0);
    for (int row : indices) {
        for (int j = 0; j < p_; ++j) mean_[static_cast<std::size_t>(j)] += data(row, j);
    }
    for (double& m : mean_) m *= inv_n;

    std::fill(moment_table_.begin(), moment_table_.end(), 0.0);
    if (standardize_) {
        std::fill(scale_.begin(), scale_.end(), 0.0);
        for (int row : indices) {
            for (int j = 0; j < p_; ++j) {
                const double c = data(row, j) - mean_[static_cast<std::size_t>(j)];
                scale_[static_cast<std::size_t>(j)] += c * c;
            }
        }
        for (double& s : scale_) {
            s = std::sqrt(s * inv_n);
            if (s <= 0.0) throw std::invalid_argument("CumulantCalculator: constant column");
            s = 1.0 / s;
        }
    } else {
        std::fill(scale_.begin(), scale_.end(), 1.0);
    }

    for (int row : indices) {
        for (int j = 0; j < p_; ++j) {
            centered_row_[static_cast<std::size_t>(j)] =
                (data(row, j) - mean_[static_cast<std::size_t>(j)]) * scale_[static_cast<std::size_t>(j)];
        }
        for (std::size_t mi = 0; mi < moment_components_.size(); ++mi) {
            double prod = 1.0;
            for (int comp : moment_components_[mi]) prod *= centered_row_[static_cast<std::size_t>(comp)];
            moment_table_[mi] += prod;
        }
    }
    for (double& v : moment_table_) v *= inv_n;

    for (int k : orders_) {
        auto& out = cumulant_values_[k];
        const auto& per_index = combination_.at(k);
        for (std::size_t pos = 0; pos < per_index.size(); ++pos) {
            double total = 0.0;
            for (const Term& term : per_index[pos]) {
                double prod = term.coefficient;
                for (int off : term.block_offsets) prod *= moment_table_[static_cast<std::size_t>(off)];
                total += prod;
            }
            out[pos] = total;
        }
    }
}

std::span<const double> CumulantCalculator::order_values(int k) const {
    auto it = cumulant_values_.find(k);
    if (it == cumulant_values_.end()) throw std::out_of_range("CumulantCalculator: order not requested");
    return it->second;
}

SymmetricTensor CumulantCalculator::tensor(int k) const {
    SymmetricTensor out(k, p_);
    const auto vals = order_values(k);
    std::copy(vals.begin(), vals.end(), out.values().begin());
    return out;
}

}  // namespace semgof
