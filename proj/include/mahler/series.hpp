#pragma once

#include "mahler/equation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mahler {

enum class CoefficientSource : std::uint8_t { Seeded, Solved };

// Exact series prefix f(0..N) of the solution F, with per-index provenance.
struct SeriesPrefix {
    std::vector<Rational> coeffs;
    std::vector<CoefficientSource> source;

    long max_index() const { return static_cast<long>(coeffs.size()) - 1; }

    static SeriesPrefix seeded(std::vector<Rational> values) {
        SeriesPrefix prefix;
        prefix.source.assign(values.size(), CoefficientSource::Seeded);
        prefix.coeffs = std::move(values);
        return prefix;
    }
};

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename Scalar>
struct Stratum {
    Int modulus;                                 // k^i
    std::optional<long> modulus_long;            // when k^i fits
    std::vector<std::pair<long, Scalar>> terms;  // (j, a_{i,j}), nonzero only
};

template <typename Scalar>
Scalar scalar_from_rational(const Rational& r) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
        return r;
    } else {
        return r.template convert_to<Scalar>();
    }
}

template <typename Scalar>
std::vector<Stratum<Scalar>> build_strata(const MahlerEquation& eq) {
    std::vector<Stratum<Scalar>> strata(eq.coefficients.size());
    Int modulus = 1;
    for (std::size_t i = 0; i < eq.coefficients.size(); ++i) {
        strata[i].modulus = modulus;
        if (modulus <= Int(std::numeric_limits<long>::max() / 2))
            strata[i].modulus_long = to_long(modulus);
        const auto& coeffs = eq.coefficients[i].coefficients();
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (coeffs[j] != 0)
                strata[i].terms.emplace_back(static_cast<long>(j),
                                             scalar_from_rational<Scalar>(coeffs[j]));
        modulus *= eq.k;
    }
    return strata;
}

// Index m with j + k^i * m = N, if it exists.
template <typename Scalar>
inline std::optional<long> match_index(const Stratum<Scalar>& stratum, long N, long j) {
    const long rem = N - j;
    if (rem < 0) return std::nullopt;
    if (rem == 0) return 0;
    if (!stratum.modulus_long) return std::nullopt;  // k^i > rem for sure
    const long mod = *stratum.modulus_long;
    if (mod > rem || rem % mod != 0) return std::nullopt;
    return rem / mod;
}

}  // namespace detail

// Numeric variant of the coefficient recurrence, used by the asymptotic
// estimators where exact arithmetic would be wasted. No consistency checks;
// seeds beyond the table are ignored.
template <typename Scalar>
std::vector<Scalar> solve_series_numeric(const MahlerEquation& eq, long n) {
    require_valid(eq);
    const long v = eq.vanishing_order();
    const auto strata = detail::build_strata<Scalar>(eq);
    const Scalar pivot = strata[0].terms.front().second;  // a_{0,v}

    const long seeds = static_cast<long>(eq.initial_terms.size());
    if (seeds < eq.seed_horizon() + 1)
        throw SeriesError("insufficient initial terms: recurrence requires f(0.." +
                          std::to_string(eq.seed_horizon()) + ") to be seeded, got " +
                          std::to_string(seeds));
    std::vector<Scalar> table(static_cast<std::size_t>(std::max(n, seeds - 1)) + 1, Scalar(0));
    for (long i = 0; i < seeds; ++i)
        table[static_cast<std::size_t>(i)] =
            detail::scalar_from_rational<Scalar>(eq.initial_terms[static_cast<std::size_t>(i)]);

    for (long M = seeds; M <= n; ++M) {
        const long N = M + v;
        Scalar acc(0);
        for (std::size_t i = 0; i < strata.size(); ++i) {
            for (const auto& [j, c] : strata[i].terms) {
                const auto m = detail::match_index(strata[i], N, j);
                if (!m) continue;
                if (i == 0 && *m == M) continue;  // the pivot term
                acc += c * table[static_cast<std::size_t>(*m)];
            }
        }
        table[static_cast<std::size_t>(M)] = -acc / pivot;
    }
    table.resize(static_cast<std::size_t>(n) + 1);
    return table;
}

// Exact coefficients f(0..n) from the functional equation. Each non-seeded
// f(M) is solved from the order-(M+v) equation by pivoting on a_{0,v}; every
// order equation with no remaining unknown must be identically satisfied.
inline SeriesPrefix compute_coefficients(const MahlerEquation& eq, long n) {
    require_valid(eq);
    if (n < 0) throw std::invalid_argument("prefix length must be nonnegative");
    const long v = eq.vanishing_order();
    const auto strata = detail::build_strata<Rational>(eq);
    const Rational pivot = strata[0].terms.front().second;

    const long seeds = static_cast<long>(eq.initial_terms.size());
    if (seeds < eq.seed_horizon() + 1)
        throw SeriesError("insufficient initial terms: recurrence requires f(0.." +
                          std::to_string(eq.seed_horizon()) + ") to be seeded, got " +
                          std::to_string(seeds));

    const long top = std::max(n, seeds - 1);
    std::vector<Rational> table(static_cast<std::size_t>(top) + 1, Rational(0));
    std::vector<bool> known(static_cast<std::size_t>(top) + 1, false);
    std::vector<CoefficientSource> source(static_cast<std::size_t>(top) + 1,
                                          CoefficientSource::Seeded);
    for (long i = 0; i < seeds; ++i) {
        table[static_cast<std::size_t>(i)] = eq.initial_terms[static_cast<std::size_t>(i)];
        known[static_cast<std::size_t>(i)] = true;
    }

    for (long N = 0; N <= n + v; ++N) {
        const long M = N - v;
        const bool solving = M >= seeds && M <= n;
        Rational acc(0);
        for (std::size_t i = 0; i < strata.size(); ++i) {
            for (const auto& [j, c] : strata[i].terms) {
                const auto m = detail::match_index(strata[i], N, j);
                if (!m) continue;
                if (solving && i == 0 && *m == M) continue;
                if (*m > top || !known[static_cast<std::size_t>(*m)])
                    throw SeriesError("underdetermined at index " + std::to_string(M) +
                                      ": order " + std::to_string(N) +
                                      " equation references unknown f(" + std::to_string(*m) +
                                      ")");
                acc += c * table[static_cast<std::size_t>(*m)];
            }
        }
        if (solving) {
            table[static_cast<std::size_t>(M)] = -acc / pivot;
            known[static_cast<std::size_t>(M)] = true;
            source[static_cast<std::size_t>(M)] = CoefficientSource::Solved;
        } else if (acc != 0) {
            throw SeriesError("inconsistent seed: order " + std::to_string(N) +
                              " equation has residual " + format_rational(acc));
        }
    }

    SeriesPrefix prefix;
    prefix.coeffs.assign(table.begin(), table.begin() + n + 1);
    prefix.source.assign(source.begin(), source.begin() + n + 1);
    return prefix;
}

// Outcome of expanding sum_i a_i(z) F_N(z^{k^i}) for a truncated prefix F_N.
// For a prefix produced by compute_coefficients every order up to N + v
// vanishes; truncation artifacts beyond that are expected and benign.
struct ResidualReport {
    bool identically_zero = false;
    std::optional<Int> first_nonzero_order;
    Int threshold = 0;  // N - v

    bool ok() const { return identically_zero || *first_nonzero_order > threshold; }
    // Largest order through which the residual is known to vanish;
    // nullopt means every order (the residual polynomial is zero).
    std::optional<Int> verified_order() const {
        if (identically_zero) return std::nullopt;
        return *first_nonzero_order - 1;
    }
};

inline ResidualReport residual_check(const MahlerEquation& eq, const SeriesPrefix& prefix) {
    require_valid(eq);
    if (prefix.coeffs.empty()) throw std::invalid_argument("empty prefix");
    const long N = prefix.max_index();

    std::map<Int, Rational> expansion;
    Int modulus = 1;
    for (const auto& a : eq.coefficients) {
        const auto& coeffs = a.coefficients();
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0) continue;
            for (long m = 0; m <= N; ++m) {
                const Int order = Int(j) + modulus * m;
                expansion[order] += coeffs[j] * prefix.coeffs[static_cast<std::size_t>(m)];
            }
        }
        modulus *= eq.k;
    }

    ResidualReport report;
    report.threshold = Int(N - eq.vanishing_order());
    report.identically_zero = true;
    for (const auto& [order, value] : expansion) {
        if (value != 0) {
            report.identically_zero = false;
            report.first_nonzero_order = order;
            break;
        }
    }
    return report;
}

// Taylor coefficients of p/q through order n, q(0) != 0.
inline std::vector<Rational> rational_series(const Poly& p, const Poly& q, long n) {
    if (q.is_zero() || q.coeff(0) == 0)
        throw std::invalid_argument("rational_series requires q(0) != 0");
    const Rational q0 = q.coeff(0);
    const long dq = *q.degree();
    std::vector<Rational> f(static_cast<std::size_t>(n) + 1, Rational(0));
    for (long i = 0; i <= n; ++i) {
        Rational acc = p.coeff(static_cast<std::size_t>(i));
        for (long j = 1; j <= std::min<long>(dq, i); ++j)
            acc -= q.coeff(static_cast<std::size_t>(j)) * f[static_cast<std::size_t>(i - j)];
        f[static_cast<std::size_t>(i)] = acc / q0;
    }
    return f;
}

}  // namespace mahler
