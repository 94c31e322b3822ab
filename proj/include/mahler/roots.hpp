#pragma once

#include "mahler/charpoly.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mahler {

struct RootSet {
    std::vector<std::complex<double>> roots;  // sorted by descending real part
    std::vector<double> error_radius;
    double min_gap = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool extended_precision_used = false;
};

namespace detail {

template <typename Complex>
Complex horner(const std::vector<Complex>& coeffs, const Complex& x) {
    Complex acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Durand-Kerner simultaneous iteration from perturbed-circle starting points.
// Returns false if the correction has not dropped below tol/10 within the
// iteration cap.
template <typename Complex, typename Real>
bool durand_kerner(const std::vector<Complex>& monic, std::vector<Complex>& roots, Real tol,
                   int max_iterations, int& used_iterations) {
    using std::abs;
    const std::size_t degree = monic.size() - 1;
    Real radius(1);
    for (std::size_t j = 0; j < degree; ++j) radius = std::max(radius, Real(1) + abs(monic[j]));

    roots.resize(degree);
    const double tau = 6.283185307179586;
    for (std::size_t j = 0; j < degree; ++j) {
        const double angle = tau * double(j) / double(degree) + 0.41;
        roots[j] = Complex(radius * Real(std::cos(angle)), radius * Real(std::sin(angle)));
    }

    const Real target = tol / 10;
    for (used_iterations = 1; used_iterations <= max_iterations; ++used_iterations) {
        Real worst(0);
        for (std::size_t j = 0; j < degree; ++j) {
            Complex denom(1);
            for (std::size_t l = 0; l < degree; ++l)
                if (l != j) denom *= roots[j] - roots[l];
            if (abs(denom) == 0) {
                // collided guesses; nudge and continue
                roots[j] += Complex(Real(1) / 1024, Real(1) / 4096);
                worst = radius;
                continue;
            }
            const Complex correction = horner(monic, roots[j]) / denom;
            roots[j] -= correction;
            worst = std::max(worst, abs(correction));
        }
        if (worst < target) return true;
    }
    return false;
}

}  // namespace detail

// All d complex roots of the characteristic polynomial, each within tol of a
// distinct true root (the polynomial is required squarefree). Runs in
// binary64 and retries once at 128-bit precision on convergence failure.
inline RootSet approximate_roots(const CharPoly& cp, double tol = 1e-9) {
    if (cp.poly.is_zero() || *cp.poly.degree() < 1)
        throw std::invalid_argument("approximate_roots requires a nonconstant polynomial");
    const long degree = *cp.poly.degree();
    const auto& rational_coeffs = cp.poly.coefficients();

    RootSet result;
    std::vector<std::complex<double>> roots;
    {
        std::vector<std::complex<double>> monic(rational_coeffs.size());
        const Rational lead = cp.poly.leading_coefficient();
        for (std::size_t j = 0; j < rational_coeffs.size(); ++j)
            monic[j] = {(rational_coeffs[j] / lead).convert_to<double>(), 0.0};
        if (!detail::durand_kerner(monic, roots, tol, 1000, result.iterations)) {
            using Cplx = boost::multiprecision::cpp_complex_quad;
            using Real = Cplx::value_type;
            std::vector<Cplx> wide(rational_coeffs.size());
            for (std::size_t j = 0; j < rational_coeffs.size(); ++j)
                wide[j] = Cplx((rational_coeffs[j] / lead).convert_to<Real>(), Real(0));
            std::vector<Cplx> wide_roots;
            result.extended_precision_used = true;
            if (!detail::durand_kerner(wide, wide_roots, Real(tol), 2000, result.iterations))
                throw std::runtime_error("no convergence in polynomial root iteration");
            roots.resize(wide_roots.size());
            for (std::size_t j = 0; j < wide_roots.size(); ++j)
                roots[j] = {wide_roots[j].real().convert_to<double>(),
                            wide_roots[j].imag().convert_to<double>()};
        }
    }

    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() < b.imag();
    });

    // a-posteriori validation: |p(r)| small relative to the coefficient size
    double coeff_sum = 0;
    std::vector<std::complex<double>> plain(rational_coeffs.size());
    for (std::size_t j = 0; j < rational_coeffs.size(); ++j) {
        plain[j] = {rational_coeffs[j].convert_to<double>(), 0.0};
        coeff_sum += std::abs(plain[j]);
    }
    const auto deriv_coeffs = derivative(cp.poly).coefficients();
    std::vector<std::complex<double>> deriv(deriv_coeffs.size());
    for (std::size_t j = 0; j < deriv_coeffs.size(); ++j)
        deriv[j] = {deriv_coeffs[j].convert_to<double>(), 0.0};

    result.error_radius.resize(roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const double residual = std::abs(detail::horner(plain, roots[j]));
        const double scale = coeff_sum * std::pow(std::max(1.0, std::abs(roots[j])), double(degree));
        if (residual > tol * scale)
            throw std::runtime_error("root validation failed: residual too large");
        const double slope = std::abs(detail::horner(deriv, roots[j]));
        result.error_radius[j] =
            slope > 0 ? double(degree) * residual / slope : tol;
    }

    for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = a + 1; b < roots.size(); ++b)
            result.min_gap = std::min(result.min_gap, std::abs(roots[a] - roots[b]));

    result.roots = std::move(roots);
    return result;
}

}  // namespace mahler
