#pragma once

#include "mahler/equation.hpp"
#include "mahler/series.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace mahler {

struct EstimateOptions {
    double tol = 1e-6;
    long max_terms = 1L << 20;
    int max_level = 40;  // deepest ladder point z_m = 1 - k^{-m}
};

struct EstimateResult {
    std::optional<double> value;
    std::string error;           // set when value is absent
    int stabilized_level = 0;    // ladder index m at acceptance
    long terms_used = 0;
    std::vector<double> ladder;  // raw per-level samples, for diagnostics

    bool ok() const { return value.has_value(); }
};

namespace detail {

class TruncationCap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Truncated-series evaluation of F at points inside the unit disc, with the
// coefficient table grown on demand (numeric recurrence, not the exact one).
class SeriesEvaluator {
public:
    SeriesEvaluator(const MahlerEquation& eq, const EstimateOptions& options)
        : eq_(eq), options_(options) {}

    // Doubles the truncation length until the value moves by less than
    // tol/10 relatively, starting from 1024 terms.
    double operator()(double z) {
        long n = std::min<long>(1024, options_.max_terms);
        double previous = partial_sum(z, n);
        while (n < options_.max_terms) {
            n = std::min(2 * n, options_.max_terms);
            const double current = partial_sum(z, n);
            const double scale = std::max({std::abs(current), std::abs(previous), 1e-300});
            if (std::abs(current - previous) <= options_.tol / 10 * scale) return current;
            previous = current;
        }
        throw TruncationCap("truncation cap reached (series converges too slowly near 1)");
    }

    long terms_used() const { return static_cast<long>(coeffs_.size()); }

private:
    double partial_sum(double z, long n) {
        if (static_cast<long>(coeffs_.size()) < n)
            coeffs_ = solve_series_numeric<double>(eq_, n - 1);
        double acc = 0;
        double power = 1;
        for (long i = 0; i < n; ++i) {
            acc += coeffs_[static_cast<std::size_t>(i)] * power;
            power *= z;
        }
        return acc;
    }

    const MahlerEquation& eq_;
    EstimateOptions options_;
    std::vector<double> coeffs_;
};

// Shared ladder driver. sample(m) produces the raw level-m value; the
// stabilization test runs on midpoints of consecutive samples, which damps
// the period-two oscillation that equal-modulus eigenvalue pairs produce.
template <typename Sampler>
EstimateResult run_ladder(Sampler&& sample, const EstimateOptions& options,
                          const detail::SeriesEvaluator& evaluator) {
    EstimateResult result;
    std::optional<double> previous_mid;
    int hits = 0;
    try {
        for (int m = 2; m <= options.max_level; ++m) {
            const double raw = sample(m);
            result.ladder.push_back(raw);
            if (result.ladder.size() >= 2) {
                const double mid = (result.ladder.end()[-1] + result.ladder.end()[-2]) / 2;
                if (previous_mid && std::abs(mid - *previous_mid) < options.tol) {
                    if (++hits >= 2) {
                        result.value = mid;
                        result.stabilized_level = m;
                        result.terms_used = evaluator.terms_used();
                        return result;
                    }
                } else {
                    hits = 0;
                }
                previous_mid = mid;
            }
        }
        result.error = "ratio not stabilizing after m = " + std::to_string(options.max_level);
    } catch (const detail::TruncationCap& cap) {
        result.error = cap.what();
    }
    result.terms_used = evaluator.terms_used();
    return result;
}

}  // namespace detail

// Estimates the eigenvalue as the limit of F(z)/F(z^k) along the ladder
// z_m = 1 - k^{-m}, on which the oscillatory factor C(z) = C(z^k) is
// asymptotically constant.
inline EstimateResult estimate_eigenvalue(const MahlerEquation& eq,
                                          const EstimateOptions& options = {}) {
    require_valid(eq);
    detail::SeriesEvaluator evaluator(eq, options);
    return detail::run_ladder(
        [&](int m) {
            const double z = 1.0 - std::pow(double(eq.k), -double(m));
            const double denom = evaluator(std::pow(z, eq.k));
            if (denom == 0) throw detail::TruncationCap("F(z^k) evaluated to zero on the ladder");
            return evaluator(z) / denom;
        },
        options, evaluator);
}

// Estimates the radial exponent log_k(lambda) from consecutive ladder
// values: (1 - z_{m+1}) = (1 - z_m)/k up to o(1), so
// log_k(F(z_{m+1})/F(z_m)) tends to the exponent. Cross-check only.
inline EstimateResult estimate_exponent(const MahlerEquation& eq,
                                        const EstimateOptions& options = {}) {
    require_valid(eq);
    detail::SeriesEvaluator evaluator(eq, options);
    return detail::run_ladder(
        [&](int m) {
            const double z_lo = 1.0 - std::pow(double(eq.k), -double(m));
            const double z_hi = 1.0 - std::pow(double(eq.k), -double(m + 1));
            const double lo = evaluator(z_lo);
            if (lo == 0) throw detail::TruncationCap("F(z_m) evaluated to zero on the ladder");
            const double ratio = evaluator(z_hi) / lo;
            if (ratio <= 0)
                throw detail::TruncationCap("F changes sign on the ladder; exponent undefined");
            return std::log(ratio) / std::log(double(eq.k));
        },
        options, evaluator);
}

}  // namespace mahler
