#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sinhmajor {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact rational power with nonnegative integer exponent.
inline Rational rational_pow(const Rational& base, unsigned exponent) {
    using boost::multiprecision::pow;
    if (exponent == 0) return Rational(1);
    Int num = pow(numerator(base), exponent);
    Int den = pow(denominator(base), exponent);
    return Rational(num, den);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline int sign_of(const Rational& q) { return q.sign(); }

/// Parses "p", "-p" or "p/q" with arbitrary-precision integers.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    }
}

/// Canonical form: "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace sinhmajor
