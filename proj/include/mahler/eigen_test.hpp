#pragma once

#include "mahler/charpoly.hpp"
#include "mahler/equation.hpp"
#include "mahler/estimate.hpp"
#include "mahler/roots.hpp"
#include "mahler/verdict.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace mahler {

struct EigenReport {
    CharPoly char_poly;
    ApplicabilityResult applicability;
    std::vector<long> k_power_roots;  // n with p_F(k^n) = 0
    std::optional<RootSet> roots;
    EstimateResult lambda_estimate;    // populated only when the verdict needs it
    EstimateResult exponent_estimate;  // radial-exponent cross-check
    std::optional<std::size_t> matched_root_index;
    bool ambiguous_match = false;
    Verdict verdict;
};

// Eigenvalue test. Staged decision:
//   1. gates (a_0 a_d != 0, squarefree) -- failure is Inconclusive;
//   2. no k-power root of p_F at all -- Transcendental on exact evidence;
//   3. otherwise identify lambda_F numerically and compare against the
//      k-power roots; lambda_F = k^n is the test's inconclusive case.
inline EigenReport eigen_verdict(const MahlerEquation& eq, const EstimateOptions& options = {}) {
    require_valid(eq);
    EigenReport report;
    report.char_poly = characteristic_polynomial(eq);
    report.applicability = applicability(report.char_poly);
    report.verdict.method = TestMethod::Eigenvalue;

    if (!report.applicability.applicable) {
        report.verdict.tag = VerdictTag::Inconclusive;
        report.verdict.reason = report.applicability.reason;
        return report;
    }

    report.k_power_roots = k_power_roots(report.char_poly, eq.k);

    if (report.k_power_roots.empty()) {
        // p_F(k^n) != 0 for every integer n, so whichever root is lambda_F it
        // cannot be a power of k. No floating point involved.
        report.verdict.tag = VerdictTag::Transcendental;
        report.verdict.evidence = EvidenceKind::Exact;
        try {
            report.roots = approximate_roots(report.char_poly);
        } catch (const std::runtime_error&) {
            // report detail only; the verdict stands on the exact evidence
        }
        return report;
    }

    try {
        report.roots = approximate_roots(report.char_poly);
    } catch (const std::runtime_error& failure) {
        report.verdict.tag = VerdictTag::Inconclusive;
        report.verdict.reason = std::string("root finding failed: ") + failure.what();
        return report;
    }

    report.lambda_estimate = estimate_eigenvalue(eq, options);
    if (!report.lambda_estimate.ok()) {
        report.verdict.tag = VerdictTag::Inconclusive;
        report.verdict.reason = "estimator: " + report.lambda_estimate.error;
        return report;
    }
    report.exponent_estimate = estimate_exponent(eq, options);

    // Match the estimate to a root, accepted only with a gap/3 margin (the
    // estimate is then 3x closer to its root than to any other) and only for
    // a root that is real up to tolerance.
    const double estimate = *report.lambda_estimate.value;
    const RootSet& roots = *report.roots;
    std::size_t nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        const double dist = std::abs(roots.roots[i] - std::complex<double>(estimate, 0));
        if (dist < best) {
            best = dist;
            nearest = i;
        }
    }
    const double margin = roots.min_gap / 3;
    const std::complex<double> matched = roots.roots[nearest];
    const double imag_tol = std::max(1e-9, 1e-6 * std::max(1.0, std::abs(matched)));
    if (!(best < margin) || std::abs(matched.imag()) > imag_tol) {
        report.ambiguous_match = true;
        report.verdict.tag = VerdictTag::Inconclusive;
        report.verdict.reason = "ambiguous root match";
        return report;
    }
    report.matched_root_index = nearest;

    for (long n : report.k_power_roots) {
        const double power = std::pow(double(eq.k), double(n));
        if (std::abs(matched - std::complex<double>(power, 0)) < margin) {
            report.verdict.tag = VerdictTag::Inconclusive;
            report.verdict.reason =
                "lambda_F = k^" + std::to_string(n) + "; the test is inconclusive";
            return report;
        }
    }

    report.verdict.tag = VerdictTag::Transcendental;
    report.verdict.evidence = EvidenceKind::Numeric;
    return report;
}

}  // namespace mahler
