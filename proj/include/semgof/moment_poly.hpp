#pragma once

#include <string>
#include <vector>

#include "semgof/multi_index.hpp"

namespace semgof {

/// A moment descriptor: the multiset of variable indices whose product is
/// averaged, e.g. {0,0,1} <-> E[X_1^2 X_2] (0-based). Always sorted.
using Moment = MultiIndex;

/// A polynomial in moments of a distribution:
///   f = constant + sum_t coefficient_t * mu_{t,1} * ... * mu_{t,k_t}.
/// The factor order within a term is the canonical kernel slot assignment.
struct MomentPolynomial {
    struct Term {
        double coefficient = 0.0;
        std::vector<Moment> factors;
    };

    double constant = 0.0;
    std::vector<Term> terms;

    /// Max number of moment factors in a term (kernel arity of the U-statistic).
    int degree() const;
    /// Max moment order appearing in any factor.
    int max_moment_order() const;

    MomentPolynomial& operator*=(double scalar);
    MomentPolynomial operator*(const MomentPolynomial& other) const;
    MomentPolynomial& operator+=(const MomentPolynomial& other);

    /// Merge identical terms (same sorted factor list), drop near-zero ones.
    void canonicalize();
};

/// The polynomial consisting of the single moment mu (one factor).
MomentPolynomial moment_monomial(Moment moment, double coefficient = 1.0);

/// Evaluate against a table of population moments (for oracles/tests).
double evaluate_polynomial(const MomentPolynomial& poly,
                           const std::vector<std::pair<Moment, double>>& moment_values);

/// A named polynomial constraint; equalities are later expanded to +/- pairs.
enum class ConstraintMode { LessEqual, Equality };
struct PolyConstraint {
    std::string name;
    MomentPolynomial polynomial;
    ConstraintMode mode = ConstraintMode::LessEqual;
};

}  // namespace semgof
