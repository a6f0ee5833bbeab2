#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "semgof/cumulants.hpp"
#include "semgof/flattening.hpp"
#include "semgof/moment_poly.hpp"

namespace semgof {

/// Shape specification of the stacked cross-cumulant matrix M^{(k1,...,k2)}.
struct MMatrixSpec {
    int p = 0;
    int k1 = 0;
    int k2 = 0;

    std::vector<int> orders() const;
    Eigen::Index rows() const;  // sum_h multichoose(p, h - k1)
    Eigen::Index cols() const;  // multichoose(p, k1)
};

/// The second (within-cumulant) condition of a Table row.
enum class SecondConditionKind {
    StrInequality,     // p = 2, l = 0: Str(C3) <= 0
    AronholdEquality,  // p = 3, l = 0: Ar(C3) = 0
    Young3Rank,        // p >= 4, l = 0: rank Y3(C3) <= C(p-1,a) p
    Flattening6Rank,   // p = 2, l = 1: rank fl3(C6) <= p + l
    Flattening4Rank,   // p = 3, l >= 1: rank fl2(C4) <= p + l
    Young5Rank,        // p >= 4, l >= 1: rank Y5(C5) <= C(p-1,a)(p+l)
};

struct SecondCondition {
    SecondConditionKind kind;
    std::string label;
    int tensor_order = 0;            // cumulant order consumed
    std::optional<int> rank_bound;   // set for the rank-type kinds
    bool trivial = false;            // bound >= min matrix dimension
};

/// One row of the per-(p, l) condition table: the cross-cumulant rank
/// condition plus the within-cumulant condition, and the orders both need.
struct ConditionPlan {
    int p = 0;
    int l = 0;
    MMatrixSpec condition_a;
    int condition_a_rank_bound = 0;
    bool condition_a_trivial = false;
    SecondCondition condition_b;
    std::vector<int> cumulant_orders_needed;
};

/// Select the condition pair for (p, l). Throws UnsupportedCase when no row
/// applies or both conditions are vacuous.
struct UnsupportedCase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
ConditionPlan plan_conditions(int p, int l);

/// Vertical stack of fl_{k1}(C^{(h)}) for h = k1..k2; column order is the
/// canonical order of the length-k1 multi-indices.
FlatteningMatrix build_m_matrix(const CumulantSet& cumulants, const MMatrixSpec& spec);

/// Matrix of the second condition for rank-type kinds (Y3/Y5/flattening).
FlatteningMatrix build_second_condition_matrix(const CumulantSet& cumulants, const SecondCondition& condition);

/// Str(T) for T in Sym_3(R^2); non-positive iff symmetric border rank <= 2.
double str_invariant(const SymmetricTensor& tensor);

/// Aronhold invariant for T in Sym_3(R^3); zero iff symmetric border rank <= 3.
double aronhold_invariant(const SymmetricTensor& tensor);

/// All (r+1) x (r+1) minors of the M matrix as polynomials in moments of the
/// centered (standardized) data. Row subsets are enumerated major, column
/// subsets minor, both lexicographic. Entries of M are cumulants, expanded as
/// polynomials in central moments before the Leibniz expansion.
std::vector<PolyConstraint> minor_polynomials(const MMatrixSpec& spec, int rank_bound);

/// Str and Ar as moment polynomials (inputs are centered standardized data).
MomentPolynomial str_polynomial();
MomentPolynomial aronhold_polynomial();

/// Rescale every cumulant tensor to the per-variable unit-variance scale:
/// entry (i1..ik) is divided by sigma_{i1} ... sigma_{ik} with sigma from C2.
CumulantSet standardize_cumulants(const CumulantSet& cumulants);

}  // namespace semgof
