#pragma once

#include "mahler/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mahler {

// Dense univariate polynomial over an exact scalar. coeffs_[i] is the
// coefficient of z^i; the highest stored coefficient is nonzero, and the
// zero polynomial stores nothing (its degree is "minus infinity", modelled
// as an empty optional).
template <typename Scalar>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    explicit Polynomial(const Scalar& constant) : coeffs_{constant} { normalize(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial{Scalar(1)}; }
    // c * z^n
    static Polynomial monomial(const Scalar& c, std::size_t n) {
        std::vector<Scalar> v(n + 1, Scalar(0));
        v[n] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<long> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<long>(coeffs_.size()) - 1;
    }
    long degree_or(long if_zero) const { return degree().value_or(if_zero); }

    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    Scalar coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Scalar(0);
    }

    Scalar leading_coefficient() const {
        if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    // Order of vanishing at z = 0 (index of the lowest nonzero coefficient).
    long vanishing_order() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<long>(i);
        throw std::logic_error("vanishing order of zero polynomial");
    }

    // Horner evaluation; exact for exact scalars.
    Scalar operator()(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator*=(const Scalar& c) {
        if (c == 0) {
            coeffs_.clear();
        } else {
            for (auto& a : coeffs_) a *= c;
        }
        return *this;
    }
    Polynomial& operator/=(const Scalar& c) {
        if (c == 0) throw std::invalid_argument("polynomial division by zero scalar");
        for (auto& a : coeffs_) a /= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Scalar> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(prod));
    }
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using Poly = Polynomial<Rational>;

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return Polynomial<Scalar>();
    std::vector<Scalar> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Scalar(static_cast<long>(i));
    return Polynomial<Scalar>(std::move(d));
}

// Quotient and remainder over a field; q must be nonzero.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& p,
                                                         const Polynomial<Scalar>& q) {
    if (q.is_zero()) throw std::invalid_argument("polynomial division by zero polynomial");
    std::vector<Scalar> rem(p.coefficients());
    const long dq = *q.degree();
    const Scalar lead = q.leading_coefficient();
    std::vector<Scalar> quot;
    long dr = static_cast<long>(rem.size()) - 1;
    if (dr >= dq) quot.assign(static_cast<std::size_t>(dr - dq) + 1, Scalar(0));
    while (dr >= dq) {
        if (rem[static_cast<std::size_t>(dr)] != 0) {
            const Scalar factor = rem[static_cast<std::size_t>(dr)] / lead;
            quot[static_cast<std::size_t>(dr - dq)] = factor;
            for (long i = 0; i <= dq; ++i)
                rem[static_cast<std::size_t>(dr - dq + i)] -= factor * q.coeff(static_cast<std::size_t>(i));
        }
        --dr;
    }
    return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

template <typename Scalar>
bool divides(const Polynomial<Scalar>& divisor, const Polynomial<Scalar>& p) {
    if (divisor.is_zero()) return p.is_zero();
    return divmod(p, divisor).second.is_zero();
}

inline Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    Poly r = p;
    r /= p.leading_coefficient();
    return r;
}

// gcd of all numerators over lcm of all denominators; positive. Dividing a
// nonzero rational polynomial by its content yields integer coefficients
// with no common factor.
inline Rational content(const Poly& p) {
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const auto& c : p.coefficients()) {
        if (c == 0) continue;
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    if (num_gcd == 0) throw std::logic_error("content of zero polynomial");
    return Rational(boost::multiprecision::abs(num_gcd), den_lcm);
}

inline Poly primitive_part(const Poly& p) {
    Poly r = p;
    r /= content(p);
    return r;
}

namespace detail {

// One block of pseudo-division: lc(b)^s * a mod b, integral coefficients in,
// integral out. Exact exponent s is irrelevant since the caller strips content.
inline Poly pseudo_remainder(Poly a, const Poly& b) {
    const long db = *b.degree();
    const Rational lead = b.leading_coefficient();
    while (!a.is_zero() && *a.degree() >= db) {
        const long da = *a.degree();
        const Rational top = a.leading_coefficient();
        a *= lead;
        a -= Poly::monomial(top, static_cast<std::size_t>(da - db)) * b;
    }
    return a;
}

}  // namespace detail

// Monic gcd over the rationals via the primitive-part Euclidean scheme, which
// keeps intermediate integer coefficients from exploding.
inline Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("gcd undefined for two zero polynomials");
    if (p.is_zero()) return make_monic(q);
    if (q.is_zero()) return make_monic(p);
    Poly a = primitive_part(p);
    Poly b = primitive_part(q);
    if (*a.degree() < *b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = detail::pseudo_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? Poly() : primitive_part(r);
    }
    return make_monic(a);
}

// "1 - 3*x + x^2" style rendering, mainly for reports and diagnostics.
inline std::string format_poly(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto& coeffs = p.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational abs_c = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = (abs_c == 1);
        if (i == 0) {
            out << format_rational(abs_c);
        } else {
            if (!unit) out << format_rational(abs_c) << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace mahler
