#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mahler {

// Exact arbitrary-precision scalars. cpp_rational keeps the canonical form
// (denominator > 0, gcd(|num|, den) = 1) as a class invariant, so every
// arithmetic result is already in lowest terms.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Rational literal: optional minus sign, decimal digits, optional "/" and a
// positive decimal denominator. No whitespace, no "+", no exponents.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&](const char* why) {
        throw std::invalid_argument("bad rational literal \"" + std::string(text) + "\": " + why);
    };
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    auto take_digits = [&](std::string_view& s) -> std::string {
        std::size_t n = 0;
        while (n < s.size() && s[n] >= '0' && s[n] <= '9') ++n;
        std::string out(s.substr(0, n));
        s.remove_prefix(n);
        return out;
    };
    const std::string num_digits = take_digits(rest);
    if (num_digits.empty()) fail("expected decimal digits");
    Int num(num_digits);
    Int den = 1;
    if (!rest.empty() && rest.front() == '/') {
        rest.remove_prefix(1);
        const std::string den_digits = take_digits(rest);
        if (den_digits.empty()) fail("expected digits after '/'");
        den = Int(den_digits);
        if (den == 0) fail("denominator must be positive");
    }
    if (!rest.empty()) fail("trailing characters");
    if (negative) num = -num;
    return Rational(num, den);
}

inline std::string format_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

inline Int pow_int(Int base, unsigned long exponent) {
    Int result = 1;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

// ceil(a / b) for b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0 && a > 0) ++q;
    return q;
}

inline long to_long(const Int& value) {
    return static_cast<long>(value);
}

}  // namespace mahler
