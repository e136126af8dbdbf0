#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision integers and rationals.
 *
 * Every scalar in this library is an exact rational: values are always in
 * lowest terms, the denominator is positive, and zero is 0/1. The canonical
 * text rendering "p/q" (just "p" when q == 1, minus sign on the numerator)
 * is the wire format used by the CLI and is round-trip exact.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mzv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Numerator in lowest terms (carries the sign).
inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }

/// Denominator in lowest terms (always positive).
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Builds num/den in canonical form. Throws std::domain_error when den == 0.
inline Rational rat(Integer num, Integer den) {
    if (den == 0)
        throw std::domain_error("rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline Rational rat(long long num, long long den) { return rat(Integer(num), Integer(den)); }

/// (-1)^n as a rational sign.
inline Rational sign_pow(long long n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

/// x^e for e >= 0, exact.
inline Rational rational_pow(const Rational& x, unsigned e) {
    if (e == 0)
        return Rational(1);
    return Rational(boost::multiprecision::pow(numerator(x), e),
                    boost::multiprecision::pow(denominator(x), e));
}

/// Binomial coefficient C(n,k); 0 outside 0 <= k <= n.
inline Integer binomial(long long n, long long k) {
    if (k < 0 || k > n)
        return Integer(0);
    if (k > n - k)
        k = n - k;
    Integer result(1);
    for (long long i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);  // exact: result is C(n,i+1) * (i+1) before this divide
    }
    return result;
}

/// n! for n >= 0.
inline Integer factorial(long long n) {
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    Integer result(1);
    for (long long i = 2; i <= n; ++i)
        result *= i;
    return result;
}

/// Canonical rendering: "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& q) {
    std::string out = numerator(q).str();
    if (denominator(q) != 1) {
        out += '/';
        out += denominator(q).str();
    }
    return out;
}

namespace detail {

inline Integer parse_integer(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("parse_rational: empty integer");
    std::size_t pos = 0;
    if (text[0] == '-')
        pos = 1;
    if (pos == text.size())
        throw std::invalid_argument("parse_rational: sign without digits");
    for (std::size_t i = pos; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("parse_rational: invalid character");
    return Integer(std::string(text));
}

}  // namespace detail

/// Parses the canonical "p/q" rendering back to a value. Exact inverse of to_string.
inline Rational parse_rational(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(detail::parse_integer(text));
    const Integer num = detail::parse_integer(text.substr(0, slash));
    const Integer den = detail::parse_integer(text.substr(slash + 1));
    if (den <= 0)
        throw std::invalid_argument("parse_rational: denominator must be positive");
    return rat(num, den);
}

}  // namespace mzv
