#pragma once

/**
 * @file rational.hpp
 * @brief Exact integers and rationals plus their canonical text form.
 *
 * Rational is Boost.Multiprecision's cpp_rational, which always stores
 * values in lowest terms with a positive denominator. The text form is
 * `p` for integers and `p/q` otherwise (q > 0, gcd(|p|, q) = 1).
 */

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "eigenseq/error.hpp"

namespace eigenseq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Canonical text: integers without "/1".
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace detail

/// Parses `[-]digits` or `[-]digits/digits` in lowest terms. `base` is added to
/// error positions so callers can report offsets within a longer list.
inline Rational parse_rational(std::string_view text, std::size_t base = 0) {
    if (text.empty()) throw ParseError("empty term", base);
    std::string_view body = text;
    bool negative = false;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    if (!detail::all_digits(num)) throw ParseError("malformed term '" + std::string(text) + "'", base);
    Integer p{std::string(num)};
    if (negative) p = -p;
    if (slash == std::string_view::npos) return Rational(p);

    const std::string_view den = body.substr(slash + 1);
    if (!detail::all_digits(den)) throw ParseError("malformed denominator in '" + std::string(text) + "'", base);
    Integer q{std::string(den)};
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", base);
    if (gcd(abs(p), q) != 1 || q == 1)
        throw ParseError("term '" + std::string(text) + "' is not in lowest terms", base);
    return Rational(p, q);
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Integer r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return Rational(r);
}

/// Generalized binomial coefficient C(x, k) for rational x.
inline Rational binomial(const Rational& x, long k) {
    if (k < 0) return Rational(0);
    Rational r = 1;
    for (long i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
    return r;
}

inline Integer factorial(long n) {
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace eigenseq
