#pragma once

#include "mahler/polynomial.hpp"
#include "mahler/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mahler {

// A Mahler functional equation
//   a_0(z) F(z) + a_1(z) F(z^k) + ... + a_d(z) F(z^{k^d}) = 0
// together with the seed coefficients f(0), f(1), ... that pin down F.
struct MahlerEquation {
    int k = 0;
    std::vector<Poly> coefficients;  // a_0 .. a_d
    std::vector<Rational> initial_terms;
    std::string name;

    int d() const { return static_cast<int>(coefficients.size()) - 1; }

    // H := max deg a_i over the nonzero coefficient polynomials.
    long max_coefficient_degree() const {
        long h = 0;
        for (const auto& a : coefficients) h = std::max(h, a.degree_or(0));
        return h;
    }

    // v := order of vanishing of a_0 at z = 0. The recurrence pivots on a_{0,v}.
    long vanishing_order() const { return coefficients.at(0).vanishing_order(); }

    // Largest seed index the recurrence demands. For orders N with
    // N/k >= N - v a higher stratum can reach the pivot index or beyond, so
    // f(0..ceil(v/(k-1))) must be supplied; beyond that the recurrence is
    // strictly progressive.
    long seed_horizon() const {
        return to_long(ceil_div(Int(vanishing_order()), Int(k - 1)));
    }
};

struct ValidationReport {
    bool valid = false;
    std::vector<std::string> errors;
    int k = 0;
    int d = 0;
    long H = 0;
    long vanishing_order = 0;
    long required_initial_terms = 0;  // seed horizon + 1
};

inline ValidationReport validate_equation(const MahlerEquation& eq) {
    ValidationReport report;
    report.k = eq.k;
    report.d = eq.d();
    if (eq.k < 2) report.errors.push_back("k must be >= 2");
    if (eq.d() < 1) report.errors.push_back("d must be >= 1");
    if (eq.coefficients.empty() || eq.coefficients[0].is_zero())
        report.errors.push_back("a_0 must not be the zero polynomial");
    bool any_upper = false;
    for (std::size_t i = 1; i < eq.coefficients.size(); ++i)
        if (!eq.coefficients[i].is_zero()) any_upper = true;
    if (!any_upper) report.errors.push_back("at least one of a_1..a_d must be nonzero");
    report.valid = report.errors.empty();
    if (report.valid) {
        report.H = eq.max_coefficient_degree();
        report.vanishing_order = eq.vanishing_order();
        report.required_initial_terms = eq.seed_horizon() + 1;
    }
    return report;
}

inline void require_valid(const MahlerEquation& eq) {
    const ValidationReport report = validate_equation(eq);
    if (!report.valid) throw std::invalid_argument("invalid equation: " + report.errors.front());
}

struct DegreeBounds {
    long bound_q = 0;
    long bound_p = 0;
};

// Degree bounds for a hypothetical rational solution P/Q:
//   deg Q <= floor(H(k-1) / (k^{d+1} - 2k^d + 1))
//   deg P <= deg Q + floor(H / (k^{d-1}(k-1)))
inline DegreeBounds degree_bounds(const MahlerEquation& eq) {
    require_valid(eq);
    const Int k(eq.k);
    const Int H(eq.max_coefficient_degree());
    const unsigned long d = static_cast<unsigned long>(eq.d());
    const Int denom_q = pow_int(k, d + 1) - 2 * pow_int(k, d) + 1;  // k^d(k-2)+1 > 0
    const Int denom_p = pow_int(k, d - 1) * (k - 1);
    DegreeBounds bounds;
    bounds.bound_q = to_long(H * (k - 1) / denom_q);
    bounds.bound_p = bounds.bound_q + to_long(H / denom_p);
    return bounds;
}

// kappa := floor(H(k-1)/(k^{d+1}-2k^d+1)) + floor(H/(k^{d-1}(k-1))) + 1;
// one more than the combined degree bound.
inline long kappa(const MahlerEquation& eq) {
    return degree_bounds(eq).bound_p + 1;
}

// Degree-1 equation for the infinite product F(z) = prod_{n>=0} r(z^{k^n})
// with r = numer/denom:  denom(z) F(z) - numer(z) F(z^k) = 0, seeded f(0)=1.
// Requires r(0) = 1 so the product converges coefficientwise.
inline MahlerEquation equation_from_product(const Poly& numer, const Poly& denom, int k) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (denom.is_zero() || denom.coeff(0) == 0)
        throw std::invalid_argument("r has a pole at 0");
    if (numer.coeff(0) / denom.coeff(0) != 1)
        throw std::invalid_argument(
            "product does not converge coefficientwise to a power series with F(0)=1");
    MahlerEquation eq;
    eq.k = k;
    eq.coefficients = {denom, -numer};
    eq.initial_terms = {Rational(1)};
    return eq;
}

}  // namespace mahler
