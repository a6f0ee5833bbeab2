#include "semgof/moment_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace semgof {

int MomentPolynomial::degree() const {
    std::size_t d = 0;
    for (const auto& t : terms) d = std::max(d, t.factors.size());
    return static_cast<int>(d);
}

int MomentPolynomial::max_moment_order() const {
    std::size_t m = 0;
    for (const auto& t : terms) {
        for (const auto& f : t.factors) m = std::max(m, f.size());
    }
    return static_cast<int>(m);
}

MomentPolynomial& MomentPolynomial::operator*=(double scalar) {
    constant *= scalar;
    for (auto& t : terms) t.coefficient *= scalar;
    return *this;
}

MomentPolynomial MomentPolynomial::operator*(const MomentPolynomial& other) const {
    MomentPolynomial out;
    out.constant = constant * other.constant;
    for (const auto& t : terms) {
        if (other.constant != 0.0) {
            Term nt = t;
            nt.coefficient *= other.constant;
            out.terms.push_back(std::move(nt));
        }
    }
    for (const auto& t : other.terms) {
        if (constant != 0.0) {
            Term nt = t;
            nt.coefficient *= constant;
            out.terms.push_back(std::move(nt));
        }
    }
    for (const auto& a : terms) {
        for (const auto& b : other.terms) {
            Term nt;
            nt.coefficient = a.coefficient * b.coefficient;
            nt.factors = a.factors;
            nt.factors.insert(nt.factors.end(), b.factors.begin(), b.factors.end());
            out.terms.push_back(std::move(nt));
        }
    }
    return out;
}

MomentPolynomial& MomentPolynomial::operator+=(const MomentPolynomial& other) {
    constant += other.constant;
    terms.insert(terms.end(), other.terms.begin(), other.terms.end());
    return *this;
}

void MomentPolynomial::canonicalize() {
    std::map<std::vector<Moment>, double> merged;
    for (auto& t : terms) {
        std::vector<Moment> key = t.factors;
        std::sort(key.begin(), key.end());
        merged[key] += t.coefficient;
    }
    terms.clear();
    for (auto& [factors, coeff] : merged) {
        if (std::abs(coeff) < 1e-14) continue;
        terms.push_back(Term{coeff, factors});
    }
}

MomentPolynomial moment_monomial(Moment moment, double coefficient) {
    std::sort(moment.begin(), moment.end());
    MomentPolynomial out;
    out.terms.push_back(MomentPolynomial::Term{coefficient, {std::move(moment)}});
    return out;
}

double evaluate_polynomial(const MomentPolynomial& poly,
                           const std::vector<std::pair<Moment, double>>& moment_values) {
    auto lookup = [&](const Moment& m) {
        for (const auto& [key, value] : moment_values) {
            if (key == m) return value;
        }
        throw std::out_of_range("evaluate_polynomial: missing moment value");
    };
    double total = poly.constant;
    for (const auto& t : poly.terms) {
        double prod = t.coefficient;
        for (const auto& f : t.factors) prod *= lookup(f);
        total += prod;
    }
    return total;
}

}  // namespace semgof
