#include "semgof/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace semgof {

std::vector<int> MMatrixSpec::orders() const {
    std::vector<int> out;
    for (int h = k1; h <= k2; ++h) out.push_back(h);
    return out;
}

Eigen::Index MMatrixSpec::rows() const {
    std::int64_t total = 0;
    for (int h = k1; h <= k2; ++h) total += multichoose(p, h - k1);
    return static_cast<Eigen::Index>(total);
}

Eigen::Index MMatrixSpec::cols() const { return static_cast<Eigen::Index>(multichoose(p, k1)); }

ConditionPlan plan_conditions(int p, int l) {
    if (p < 2) throw UnsupportedCase("plan_conditions: need p >= 2");
    if (l < 0) throw UnsupportedCase("plan_conditions: need l >= 0");

    ConditionPlan plan;
    plan.p = p;
    plan.l = l;
    const int a = (p - 1) / 2;

    if (l == 0) {
        plan.condition_a = {p, 2, 3};
        plan.condition_a_rank_bound = p;
        if (p == 2) {
            plan.condition_b = {SecondConditionKind::StrInequality, "Str(C3) <= 0", 3, std::nullopt, false};
        } else if (p == 3) {
            plan.condition_b = {SecondConditionKind::AronholdEquality, "Ar(C3) = 0", 3, std::nullopt, false};
        } else {
            plan.condition_b = {SecondConditionKind::Young3Rank, "rank Y3(C3)", 3,
                                static_cast<int>(binomial(p - 1, a)) * p, false};
        }
    } else if (p == 2) {
        if (l > 1) throw UnsupportedCase("plan_conditions: no condition available for p = 2, l > 1");
        plan.condition_a = {p, 3, 5};
        plan.condition_a_rank_bound = p + l;
        plan.condition_b = {SecondConditionKind::Flattening6Rank, "rank fl3(C6)", 6, p + l, false};
    } else {
        if (l > p * p + 1) throw UnsupportedCase("plan_conditions: l exceeds the identifiable range");
        plan.condition_a = {p, 2, 4};
        plan.condition_a_rank_bound = p + l;
        if (p == 3) {
            plan.condition_b = {SecondConditionKind::Flattening4Rank, "rank fl2(C4)", 4, p + l, false};
        } else {
            plan.condition_b = {SecondConditionKind::Young5Rank, "rank Y5(C5)", 5,
                                static_cast<int>(binomial(p - 1, a)) * (p + l), false};
        }
    }

    plan.condition_a_trivial =
        plan.condition_a_rank_bound >= std::min(plan.condition_a.rows(), plan.condition_a.cols());

    if (plan.condition_b.rank_bound) {
        Eigen::Index rows = 0, cols = 0;
        switch (plan.condition_b.kind) {
            case SecondConditionKind::Young3Rank: {
                rows = static_cast<Eigen::Index>(p * binomial(p, a));
                cols = static_cast<Eigen::Index>(p * binomial(p, a + 1));
                break;
            }
            case SecondConditionKind::Young5Rank: {
                rows = static_cast<Eigen::Index>(multichoose(p, 2) * binomial(p, a));
                cols = static_cast<Eigen::Index>(multichoose(p, 2) * binomial(p, a + 1));
                break;
            }
            case SecondConditionKind::Flattening6Rank:
                rows = cols = static_cast<Eigen::Index>(multichoose(p, 3));
                break;
            case SecondConditionKind::Flattening4Rank:
                rows = cols = static_cast<Eigen::Index>(multichoose(p, 2));
                break;
            default:
                break;
        }
        plan.condition_b.trivial = *plan.condition_b.rank_bound >= std::min(rows, cols);
    }

    if (plan.condition_a_trivial && plan.condition_b.trivial)
        throw UnsupportedCase("plan_conditions: no condition available (both rank bounds vacuous)");

    std::vector<int> orders = plan.condition_a.orders();
    orders.push_back(plan.condition_b.tensor_order);
    orders.push_back(2);  // standardization always consumes the covariance
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    plan.cumulant_orders_needed = std::move(orders);
    return plan;
}

FlatteningMatrix build_m_matrix(const CumulantSet& cumulants, const MMatrixSpec& spec) {
    FlatteningMatrix out;
    out.col_labels = enumerate_multi_indices(spec.p, spec.k1);
    out.data.resize(spec.rows(), spec.cols());
    Eigen::Index row = 0;
    for (int h = spec.k1; h <= spec.k2; ++h) {
        if (!cumulants.has_order(h))
            throw std::invalid_argument("build_m_matrix: missing cumulant order " + std::to_string(h));
        const auto layout = flatten_layout(spec.p, h, spec.k1);
        const auto& values = cumulants.order(h).values();
        for (const auto& e : layout.entries) {
            out.data(row + e.row, e.col) = e.sign * values[static_cast<std::size_t>(e.offset)];
        }
        for (const auto& label : layout.row_labels) out.row_labels.push_back(label);
        row += layout.rows;
    }
    return out;
}

FlatteningMatrix build_second_condition_matrix(const CumulantSet& cumulants, const SecondCondition& condition) {
    switch (condition.kind) {
        case SecondConditionKind::Young3Rank:
            return young_flattening_3(cumulants.order(3));
        case SecondConditionKind::Young5Rank:
            return young_flattening_5(cumulants.order(5));
        case SecondConditionKind::Flattening6Rank:
            return flatten(cumulants.order(6), 3);
        case SecondConditionKind::Flattening4Rank:
            return flatten(cumulants.order(4), 2);
        case SecondConditionKind::StrInequality:
        case SecondConditionKind::AronholdEquality:
            throw std::invalid_argument("build_second_condition_matrix: condition is polynomial, not rank-type");
    }
    throw std::logic_error("build_second_condition_matrix: unknown kind");
}

double str_invariant(const SymmetricTensor& t) {
    if (t.order() != 3 || t.dim() != 2) throw std::invalid_argument("str_invariant: need order 3, dimension 2");
    const double t111 = t({0, 0, 0});
    const double t112 = t({0, 0, 1});
    const double t122 = t({0, 1, 1});
    const double t222 = t({1, 1, 1});
    return 3 * t112 * t112 * t122 * t122 - 4 * t111 * t122 * t122 * t122 - 4 * t112 * t112 * t112 * t222 +
           6 * t111 * t112 * t122 * t222 - t111 * t111 * t222 * t222;
}

double aronhold_invariant(const SymmetricTensor& t) {
    if (t.order() != 3 || t.dim() != 3) throw std::invalid_argument("aronhold_invariant: need order 3, dimension 3");
    const double t111 = t({0, 0, 0}), t112 = t({0, 0, 1}), t113 = t({0, 0, 2});
    const double t122 = t({0, 1, 1}), t123 = t({0, 1, 2}), t133 = t({0, 2, 2});
    const double t222 = t({1, 1, 1}), t223 = t({1, 1, 2}), t233 = t({1, 2, 2});
    const double t333 = t({2, 2, 2});
    double ar = t111 * t222 * t333 * t123;
    ar -= t222 * t333 * t112 * t113 + t333 * t111 * t122 * t223 + t111 * t222 * t133 * t233;
    ar -= t123 * (t111 * t223 * t233 + t222 * t133 * t113 + t333 * t112 * t122);
    ar += t111 * t122 * t233 * t233 + t111 * t133 * t223 * t223 + t222 * t112 * t133 * t133 +
          t222 * t233 * t113 * t113 + t333 * t223 * t112 * t112 + t333 * t113 * t122 * t122;
    ar -= t123 * t123 * t123 * t123;
    ar += 2 * t123 * t123 * (t122 * t133 + t233 * t112 + t113 * t223);
    ar -= 3 * t123 * (t112 * t223 * t133 + t113 * t122 * t233);
    ar -= t122 * t122 * t133 * t133 + t233 * t233 * t112 * t112 + t113 * t113 * t223 * t223;
    ar += t233 * t112 * t113 * t223 + t113 * t223 * t122 * t133 + t122 * t133 * t233 * t112;
    return ar;
}

namespace {

// Cumulant entry as a polynomial in central moments: singleton-free partition
// formula (first central moments vanish identically).
MomentPolynomial cumulant_entry_polynomial(int order, const MultiIndex& idx) {
    MomentPolynomial out;
    for (const auto& partition : set_partitions(order)) {
        bool has_singleton = false;
        for (const auto& block : partition) {
            if (block.size() < 2) {
                has_singleton = true;
                break;
            }
        }
        if (has_singleton) continue;
        const int h = static_cast<int>(partition.size());
        double coeff = (h % 2 == 1) ? 1.0 : -1.0;
        for (int f = 2; f < h; ++f) coeff *= f;
        MomentPolynomial::Term term;
        term.coefficient = coeff;
        for (const auto& block : partition) {
            Moment m;
            for (int e : block) m.push_back(idx[static_cast<std::size_t>(e)]);
            std::sort(m.begin(), m.end());
            term.factors.push_back(std::move(m));
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

int permutation_sign(const std::vector<int>& perm) {
    int s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) s = -s;
        }
    }
    return s;
}

}  // namespace

std::vector<PolyConstraint> minor_polynomials(const MMatrixSpec& spec, int rank_bound) {
    const Eigen::Index rows = spec.rows();
    const Eigen::Index cols = spec.cols();
    const int size = rank_bound + 1;
    if (size > std::min(rows, cols))
        throw std::invalid_argument("minor_polynomials: constraint is trivial for this rank bound");

    // Entry polynomials of the stacked matrix.
    std::vector<std::vector<MomentPolynomial>> entry(static_cast<std::size_t>(rows),
                                                     std::vector<MomentPolynomial>(static_cast<std::size_t>(cols)));
    const auto col_labels = enumerate_multi_indices(spec.p, spec.k1);
    Eigen::Index row0 = 0;
    for (int h = spec.k1; h <= spec.k2; ++h) {
        const auto row_labels = enumerate_multi_indices(spec.p, h - spec.k1);
        for (std::size_t r = 0; r < row_labels.size(); ++r) {
            for (std::size_t c = 0; c < col_labels.size(); ++c) {
                MultiIndex full(static_cast<std::size_t>(h));
                std::merge(row_labels[r].begin(), row_labels[r].end(), col_labels[c].begin(), col_labels[c].end(),
                           full.begin());
                entry[static_cast<std::size_t>(row0) + r][c] = cumulant_entry_polynomial(h, full);
            }
        }
        row0 += static_cast<Eigen::Index>(row_labels.size());
    }

    const auto row_subsets = enumerate_subsets(static_cast<int>(rows), size);
    const auto col_subsets = enumerate_subsets(static_cast<int>(cols), size);

    std::vector<PolyConstraint> out;
    out.reserve(row_subsets.size() * col_subsets.size());
    std::vector<int> perm(static_cast<std::size_t>(size));
    for (const auto& rs : row_subsets) {
        for (const auto& cs : col_subsets) {
            MomentPolynomial det;
            std::iota(perm.begin(), perm.end(), 0);
            do {
                MomentPolynomial prod;
                prod.constant = permutation_sign(perm);
                for (int i = 0; i < size; ++i) {
                    prod = prod * entry[static_cast<std::size_t>(rs[static_cast<std::size_t>(i)])]
                                       [static_cast<std::size_t>(cs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])])];
                }
                det += prod;
            } while (std::next_permutation(perm.begin(), perm.end()));
            det.canonicalize();

            std::string name = "minor[";
            for (std::size_t i = 0; i < rs.size(); ++i) name += (i ? "," : "") + std::to_string(rs[i]);
            name += "|";
            for (std::size_t i = 0; i < cs.size(); ++i) name += (i ? "," : "") + std::to_string(cs[i]);
            name += "]";
            out.push_back(PolyConstraint{std::move(name), std::move(det), ConstraintMode::Equality});
        }
    }
    return out;
}

MomentPolynomial str_polynomial() {
    auto mono = [](std::initializer_list<std::initializer_list<int>> factors, double coeff) {
        MomentPolynomial::Term t;
        t.coefficient = coeff;
        for (auto f : factors) t.factors.push_back(Moment(f));
        return t;
    };
    MomentPolynomial p;
    p.terms.push_back(mono({{0, 0, 1}, {0, 0, 1}, {0, 1, 1}, {0, 1, 1}}, 3.0));
    p.terms.push_back(mono({{0, 0, 0}, {0, 1, 1}, {0, 1, 1}, {0, 1, 1}}, -4.0));
    p.terms.push_back(mono({{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {1, 1, 1}}, -4.0));
    p.terms.push_back(mono({{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}}, 6.0));
    p.terms.push_back(mono({{0, 0, 0}, {0, 0, 0}, {1, 1, 1}, {1, 1, 1}}, -1.0));
    return p;
}

MomentPolynomial aronhold_polynomial() {
    // Variables 0,1,2; factors are third central moments.
    const Moment m111{0, 0, 0}, m112{0, 0, 1}, m113{0, 0, 2}, m122{0, 1, 1}, m123{0, 1, 2}, m133{0, 2, 2},
        m222{1, 1, 1}, m223{1, 1, 2}, m233{1, 2, 2}, m333{2, 2, 2};
    auto term = [](double c, std::initializer_list<Moment> fs) {
        MomentPolynomial::Term t;
        t.coefficient = c;
        t.factors.assign(fs.begin(), fs.end());
        return t;
    };
    MomentPolynomial p;
    p.terms.push_back(term(1, {m111, m222, m333, m123}));
    p.terms.push_back(term(-1, {m222, m333, m112, m113}));
    p.terms.push_back(term(-1, {m333, m111, m122, m223}));
    p.terms.push_back(term(-1, {m111, m222, m133, m233}));
    p.terms.push_back(term(-1, {m123, m111, m223, m233}));
    p.terms.push_back(term(-1, {m123, m222, m133, m113}));
    p.terms.push_back(term(-1, {m123, m333, m112, m122}));
    p.terms.push_back(term(1, {m111, m122, m233, m233}));
    p.terms.push_back(term(1, {m111, m133, m223, m223}));
    p.terms.push_back(term(1, {m222, m112, m133, m133}));
    p.terms.push_back(term(1, {m222, m233, m113, m113}));
    p.terms.push_back(term(1, {m333, m223, m112, m112}));
    p.terms.push_back(term(1, {m333, m113, m122, m122}));
    p.terms.push_back(term(-1, {m123, m123, m123, m123}));
    p.terms.push_back(term(2, {m123, m123, m122, m133}));
    p.terms.push_back(term(2, {m123, m123, m233, m112}));
    p.terms.push_back(term(2, {m123, m123, m113, m223}));
    p.terms.push_back(term(-3, {m123, m112, m223, m133}));
    p.terms.push_back(term(-3, {m123, m113, m122, m233}));
    p.terms.push_back(term(-1, {m122, m122, m133, m133}));
    p.terms.push_back(term(-1, {m233, m233, m112, m112}));
    p.terms.push_back(term(-1, {m113, m113, m223, m223}));
    p.terms.push_back(term(1, {m233, m112, m113, m223}));
    p.terms.push_back(term(1, {m113, m223, m122, m133}));
    p.terms.push_back(term(1, {m122, m133, m233, m112}));
    return p;
}

CumulantSet standardize_cumulants(const CumulantSet& cumulants) {
    const SymmetricTensor& c2 = cumulants.order(2);
    const int p = cumulants.dim;
    std::vector<double> inv_sigma(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        const double var = c2({i, i});
        if (var <= 0.0) throw std::invalid_argument("standardize_cumulants: non-positive variance");
        inv_sigma[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(var);
    }
    CumulantSet out;
    out.dim = p;
    for (const auto& [k, tensor] : cumulants.tensors) {
        SymmetricTensor scaled(k, p);
        const auto indices = enumerate_multi_indices(p, k);
        for (std::size_t pos = 0; pos < indices.size(); ++pos) {
            double f = 1.0;
            for (int comp : indices[pos]) f *= inv_sigma[static_cast<std::size_t>(comp)];
            scaled.values()[pos] = tensor.values()[pos] * f;
        }
        out.tensors.emplace(k, std::move(scaled));
    }
    return out;
}

}  // namespace semgof
