#pragma once

/**
 * @file number_theory.hpp
 * @brief MOBIUS transform, its inverse (divisor sums) and the Lambert-series form.
 *
 * Both transforms act on offset-1 sequences:
 *
 *     MOBIUS:   b_n = sum_{d|n} mu(n/d) a_d
 *     inverse:  a_n = sum_{d|n} b_d
 *
 * and both have unit diagonal (the d = n term).
 */

#include <cstddef>
#include <string>
#include <vector>

#include "eigenseq/error.hpp"
#include "eigenseq/rational.hpp"
#include "eigenseq/sequence.hpp"

namespace eigenseq {

/// Divisors of n >= 1 in increasing order (trial division).
inline std::vector<long> divisors(long n) {
    if (n < 1) throw DomainError("divisors: n must be >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int mobius_mu(long n) {
    if (n < 1) throw DomainError("mobius_mu: n must be >= 1");
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

namespace detail {

inline void require_offset1(const Sequence& a, const char* who) {
    if (a.offset() != 1) throw DomainError(std::string(who) + " acts on offset-1 sequences");
}

}  // namespace detail

inline Sequence mobius_xform(const Sequence& a) {
    detail::require_offset1(a, "MOBIUS");
    std::vector<Rational> b(a.size(), Rational(0));
    for (long n = 1; n <= static_cast<long>(a.size()); ++n)
        for (long d : divisors(n)) {
            const int mu = mobius_mu(n / d);
            if (mu) b[static_cast<std::size_t>(n - 1)] += mu * a.at(d);
        }
    return Sequence(1, std::move(b));
}

inline Sequence divisor_xform(const Sequence& b) {
    detail::require_offset1(b, "MOBIUS^-1");
    std::vector<Rational> a(b.size(), Rational(0));
    for (long n = 1; n <= static_cast<long>(b.size()); ++n)
        for (long d : divisors(n)) a[static_cast<std::size_t>(n - 1)] += b.at(d);
    return Sequence(1, std::move(a));
}

/// MOBIUS^r for any integer r.
inline Sequence mobius_xform_pow(const Sequence& a, long r) {
    Sequence cur = a;
    detail::require_offset1(a, r >= 0 ? "MOBIUS" : "MOBIUS^-1");
    for (long i = 0; i < (r >= 0 ? r : -r); ++i) cur = r >= 0 ? mobius_xform(cur) : divisor_xform(cur);
    return cur;
}

/// Checks sum a_n x^n = sum b_n x^n / (1 - x^n) through x^order.
inline bool lambert_check(const Sequence& a, const Sequence& b, std::size_t order) {
    if (a.offset() != 1 || b.offset() != 1) return false;
    if (a.size() < order || b.size() < order) return false;
    // coefficient of x^m on the right is sum over n | m of b_n
    std::vector<Rational> rhs(order + 1, Rational(0));
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t m = n; m <= order; m += n) rhs[m] += b.at(static_cast<long>(n));
    for (std::size_t m = 1; m <= order; ++m)
        if (rhs[m] != a.at(static_cast<long>(m))) return false;
    return true;
}

}  // namespace eigenseq
