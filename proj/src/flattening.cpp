#include "semgof/flattening.hpp"

#include <algorithm>
#include <stdexcept>

namespace semgof {

namespace {

int sequence_sign(std::vector<int> seq) {
    int s = 1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] > seq[j]) s = -s;
        }
    }
    return s;
}

// Sign attached to the entry at row wedge-set S, column wedge-set R = S + {c}:
// the permutation sign of the arrangement (S, c, complement(R)) of {0,..,p-1}.
int young_wedge_sign(const MultiIndex& s_set, int c, const MultiIndex& r_set, int p) {
    std::vector<int> arrangement(s_set.begin(), s_set.end());
    arrangement.push_back(c);
    std::vector<bool> in_r(static_cast<std::size_t>(p), false);
    for (int v : r_set) in_r[static_cast<std::size_t>(v)] = true;
    for (int v = 0; v < p; ++v) {
        if (!in_r[static_cast<std::size_t>(v)]) arrangement.push_back(v);
    }
    return sequence_sign(std::move(arrangement));
}

// Returns c >= 0 when S is a subset of R with R \ S = {c}, else -1. Both sorted.
int completion_element(const MultiIndex& s_set, const MultiIndex& r_set) {
    int c = -1;
    std::size_t si = 0;
    for (int r : r_set) {
        if (si < s_set.size() && s_set[si] == r) {
            ++si;
        } else if (c < 0) {
            c = r;
        } else {
            return -1;
        }
    }
    return si == s_set.size() ? c : -1;
}

std::vector<MultiIndex> reverse_lex_subsets(int n, int k) {
    auto subsets = enumerate_subsets(n, k);
    std::reverse(subsets.begin(), subsets.end());
    return subsets;
}

Eigen::MatrixXd assemble(const SignedLayout& layout, const std::vector<double>& source) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(layout.rows, layout.cols);
    for (const auto& e : layout.entries) {
        out(e.row, e.col) = e.sign * source[static_cast<std::size_t>(e.offset)];
    }
    return out;
}

}  // namespace

// m == order is allowed here (single-row vectorization); the public flatten()
// keeps the stricter 1 <= m < order contract.
SignedLayout flatten_layout(int dim, int order, int m) {
    if (m < 1 || m > order) throw std::invalid_argument("flatten: need 1 <= m <= order");
    SignedLayout layout;
    layout.row_labels = enumerate_multi_indices(dim, order - m);
    layout.col_labels = enumerate_multi_indices(dim, m);
    layout.rows = static_cast<Eigen::Index>(layout.row_labels.size());
    layout.cols = static_cast<Eigen::Index>(layout.col_labels.size());
    MultiIndex full(static_cast<std::size_t>(order));
    for (Eigen::Index r = 0; r < layout.rows; ++r) {
        const auto& rl = layout.row_labels[static_cast<std::size_t>(r)];
        for (Eigen::Index c = 0; c < layout.cols; ++c) {
            const auto& cl = layout.col_labels[static_cast<std::size_t>(c)];
            std::merge(rl.begin(), rl.end(), cl.begin(), cl.end(), full.begin());
            layout.entries.push_back(
                {r, c, static_cast<std::int32_t>(multi_index_rank(dim, full)), std::int8_t{1}});
        }
    }
    return layout;
}

SignedLayout young3_layout(int p) {
    if (p < 3) throw std::invalid_argument("young_flattening_3: need dimension >= 3");
    const int a = (p - 1) / 2;
    const auto s_sets = enumerate_subsets(p, a);
    const auto r_sets = reverse_lex_subsets(p, a + 1);

    SignedLayout layout;
    layout.rows = static_cast<Eigen::Index>(p * s_sets.size());
    layout.cols = static_cast<Eigen::Index>(p * r_sets.size());
    for (int i1 = 0; i1 < p; ++i1) {
        for (const auto& s : s_sets) {
            MultiIndex label{i1};
            label.insert(label.end(), s.begin(), s.end());
            layout.row_labels.push_back(std::move(label));
        }
    }
    for (int j1 = 0; j1 < p; ++j1) {
        for (const auto& r : r_sets) {
            MultiIndex label{j1};
            label.insert(label.end(), r.begin(), r.end());
            layout.col_labels.push_back(std::move(label));
        }
    }

    MultiIndex entry(3);
    for (int i1 = 0; i1 < p; ++i1) {
        for (std::size_t si = 0; si < s_sets.size(); ++si) {
            const Eigen::Index row = static_cast<Eigen::Index>(i1 * s_sets.size() + si);
            for (int j1 = 0; j1 < p; ++j1) {
                for (std::size_t ri = 0; ri < r_sets.size(); ++ri) {
                    const int c = completion_element(s_sets[si], r_sets[ri]);
                    if (c < 0) continue;
                    const int parity = ((i1 + j1) % 2 == 0) ? -1 : 1;
                    const int sgn = parity * young_wedge_sign(s_sets[si], c, r_sets[ri], p);
                    entry = {j1, i1, c};
                    std::sort(entry.begin(), entry.end());
                    layout.entries.push_back({row, static_cast<Eigen::Index>(j1 * r_sets.size() + ri),
                                              static_cast<std::int32_t>(multi_index_rank(p, entry)),
                                              static_cast<std::int8_t>(sgn)});
                }
            }
        }
    }
    return layout;
}

SignedLayout young5_layout(int p) {
    if (p < 3) throw std::invalid_argument("young_flattening_5: need dimension >= 3");
    const int a = (p - 1) / 2;
    const auto pairs = enumerate_multi_indices(p, 2);
    const auto s_sets = enumerate_subsets(p, a);
    const auto r_sets = reverse_lex_subsets(p, a + 1);

    SignedLayout layout;
    layout.rows = static_cast<Eigen::Index>(pairs.size() * s_sets.size());
    layout.cols = static_cast<Eigen::Index>(pairs.size() * r_sets.size());
    for (const auto& ip : pairs) {
        for (const auto& s : s_sets) {
            MultiIndex label(ip);
            label.insert(label.end(), s.begin(), s.end());
            layout.row_labels.push_back(std::move(label));
        }
    }
    for (const auto& jp : pairs) {
        for (const auto& r : r_sets) {
            MultiIndex label(jp);
            label.insert(label.end(), r.begin(), r.end());
            layout.col_labels.push_back(std::move(label));
        }
    }

    MultiIndex entry(5);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        for (std::size_t si = 0; si < s_sets.size(); ++si) {
            const Eigen::Index row = static_cast<Eigen::Index>(pi * s_sets.size() + si);
            for (std::size_t pj = 0; pj < pairs.size(); ++pj) {
                for (std::size_t ri = 0; ri < r_sets.size(); ++ri) {
                    const int c = completion_element(s_sets[si], r_sets[ri]);
                    if (c < 0) continue;
                    const int psum = pairs[pi][0] + pairs[pi][1] + pairs[pj][0] + pairs[pj][1];
                    const int parity = (psum % 2 == 0) ? -1 : 1;
                    const int sgn = parity * young_wedge_sign(s_sets[si], c, r_sets[ri], p);
                    entry = {pairs[pj][0], pairs[pj][1], pairs[pi][0], pairs[pi][1], c};
                    std::sort(entry.begin(), entry.end());
                    layout.entries.push_back({row, static_cast<Eigen::Index>(pj * r_sets.size() + ri),
                                              static_cast<std::int32_t>(multi_index_rank(p, entry)),
                                              static_cast<std::int8_t>(sgn)});
                }
            }
        }
    }
    return layout;
}

FlatteningMatrix flatten(const SymmetricTensor& tensor, int m) {
    if (m >= tensor.order()) throw std::invalid_argument("flatten: need 1 <= m < order");
    auto layout = flatten_layout(tensor.dim(), tensor.order(), m);
    FlatteningMatrix out;
    out.data = assemble(layout, tensor.values());
    out.row_labels = std::move(layout.row_labels);
    out.col_labels = std::move(layout.col_labels);
    return out;
}

FlatteningMatrix young_flattening_3(const SymmetricTensor& tensor) {
    if (tensor.order() != 3) throw std::invalid_argument("young_flattening_3: tensor must have order 3");
    auto layout = young3_layout(tensor.dim());
    FlatteningMatrix out;
    out.data = assemble(layout, tensor.values());
    out.row_labels = std::move(layout.row_labels);
    out.col_labels = std::move(layout.col_labels);
    return out;
}

FlatteningMatrix young_flattening_5(const SymmetricTensor& tensor) {
    if (tensor.order() != 5) throw std::invalid_argument("young_flattening_5: tensor must have order 5");
    auto layout = young5_layout(tensor.dim());
    FlatteningMatrix out;
    out.data = assemble(layout, tensor.values());
    out.row_labels = std::move(layout.row_labels);
    out.col_labels = std::move(layout.col_labels);
    return out;
}

NumericalRank numerical_rank(const Eigen::MatrixXd& matrix, double tol) {
    if (matrix.size() == 0) throw std::invalid_argument("numerical_rank: empty matrix");
    if (tol <= 0) throw std::invalid_argument("numerical_rank: tol must be positive");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix);
    NumericalRank out;
    out.singular_values = svd.singularValues();
    const double smax = out.singular_values.size() > 0 ? out.singular_values(0) : 0.0;
    for (Eigen::Index i = 0; i < out.singular_values.size(); ++i) {
        if (out.singular_values(i) > tol * smax) ++out.rank;
    }
    return out;
}

}  // namespace semgof
