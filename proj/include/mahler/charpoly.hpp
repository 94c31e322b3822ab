#pragma once

#include "mahler/equation.hpp"
#include "mahler/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace mahler {

// p_F(lambda) = a_0 lambda^d + a_1 lambda^{d-1} + ... + a_d with a_i := a_i(1).
struct CharPoly {
    Poly poly;                       // coefficient of lambda^j at index j
    std::vector<Rational> a_values;  // a_0 .. a_d

    int d() const { return static_cast<int>(a_values.size()) - 1; }
};

inline CharPoly characteristic_polynomial(const MahlerEquation& eq) {
    require_valid(eq);
    CharPoly cp;
    const int d = eq.d();
    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
    cp.a_values.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const Rational ai = eq.coefficients[static_cast<std::size_t>(i)](Rational(1));
        cp.a_values.push_back(ai);
        coeffs[static_cast<std::size_t>(d - i)] = ai;
    }
    cp.poly = Poly(std::move(coeffs));
    return cp;
}

// Gate of the eigenvalue test: a_0 a_d != 0 and p_F squarefree (squarefree
// over Q iff gcd(p, p') is constant, which over C is exactly "distinct
// roots"). A failing gate is a result, not an error.
struct ApplicabilityResult {
    bool applicable = false;
    bool a0_nonzero = false;
    bool ad_nonzero = false;
    bool squarefree = false;
    std::string reason;  // set when a gate fails
};

inline ApplicabilityResult applicability(const CharPoly& cp) {
    ApplicabilityResult result;
    result.a0_nonzero = cp.a_values.front() != 0;
    result.ad_nonzero = cp.a_values.back() != 0;
    if (!result.a0_nonzero) {
        result.reason = "a_0 = 0 (a_0(1) vanishes)";
        return result;
    }
    if (!result.ad_nonzero) {
        result.reason = "a_d = 0 (a_d(1) vanishes)";
        return result;
    }
    result.squarefree = *poly_gcd(cp.poly, derivative(cp.poly)).degree() == 0;
    if (!result.squarefree) {
        result.reason = "characteristic polynomial has a repeated root";
        return result;
    }
    result.applicable = true;
    return result;
}

// All n in Z with p(k^n) = 0, found exactly. Candidates are bounded via the
// Cauchy root bound B = 1 + max |c_j / lead| applied to p (positive n) and
// to the reversed polynomial (negative n); each candidate is tested by exact
// rational evaluation.
inline std::vector<long> k_power_roots(const CharPoly& cp, int k) {
    if (cp.a_values.front() == 0 || cp.a_values.back() == 0)
        throw std::invalid_argument("k_power_roots requires a_0 != 0 and a_d != 0");
    if (k < 2) throw std::invalid_argument("k must be >= 2");

    const auto cauchy_bound = [](const Poly& p) {
        const Rational lead = p.leading_coefficient();
        Rational best(0);
        const auto& c = p.coefficients();
        for (std::size_t j = 0; j + 1 < c.size(); ++j)
            best = std::max(best, boost::multiprecision::abs(c[j] / lead));
        return Rational(1) + best;
    };

    Poly reversed;
    {
        std::vector<Rational> rev(cp.poly.coefficients());
        std::reverse(rev.begin(), rev.end());
        reversed = Poly(std::move(rev));
    }

    // If p(k^{-t}) = 0 then k^t is a root of the reversed polynomial, so the
    // reversed bound limits t.
    std::vector<long> hits;
    const Rational bound_neg = cauchy_bound(reversed);
    std::vector<long> negative;
    Int power = k;
    for (long t = 1; Rational(power) <= bound_neg; ++t, power *= k)
        if (cp.poly(Rational(1, power)) == 0) negative.push_back(-t);
    for (auto it = negative.rbegin(); it != negative.rend(); ++it) hits.push_back(*it);

    const Rational bound_pos = cauchy_bound(cp.poly);
    power = 1;
    for (long t = 0; Rational(power) <= bound_pos; ++t, power *= k)
        if (cp.poly(Rational(power)) == 0) hits.push_back(t);
    return hits;
}

}  // namespace mahler
