#pragma once

/**
 * @file product.hpp
 * @brief Product- and composition-form transforms on offset-1 sequences:
 *        WEIGH, EULER, PARTITION, INVERT, EXP and REVERT.
 *
 * Definitions, with A = sum a_n x^n and calligraphic letters for e.g.f.s:
 *
 *     WEIGH      1 + B = prod (1 + x^n)^{a_n}
 *     EULER      1 + B = prod (1 - x^n)^{-a_n}
 *     PARTITION  1 + B = prod_{c in set(a)} 1 / (1 - x^c)
 *     INVERT     1 + B = 1 / (1 - A)
 *     EXP        1 + B = exp A          (e.g.f.s)
 *     REVERT     x = sum (-1)^{n+1} b_n y^n  where y = A(x), a_1 = 1
 *
 * WEIGH and EULER are computed through logarithms. Writing the log of the
 * product as sum c_n x^n / n gives n b_n = c_n + sum_{k<n} c_k b_{n-k}, with
 *
 *     EULER:  c_n = sum_{d|n} d a_d
 *     WEIGH:  c_n = sum_{d|n} (-1)^{n/d + 1} d a_d
 *
 * Every forward transform maps a prefix of length N to a prefix of length N;
 * output n depends only on inputs 1..n.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "eigenseq/error.hpp"
#include "eigenseq/number_theory.hpp"
#include "eigenseq/power_series.hpp"
#include "eigenseq/rational.hpp"
#include "eigenseq/sequence.hpp"

namespace eigenseq {

/// Deduplicated part sizes for PARTITION.
struct PartRecord {
    std::vector<Integer> parts;  // strictly increasing, all >= 1
};

namespace detail {

/// b from c via n b_n = c_n + sum_{k=1}^{n-1} c_k b_{n-k}.
inline std::vector<Rational> b_from_c(const std::vector<Rational>& c) {
    const std::size_t n_max = c.size() - 1;  // c[0] unused
    std::vector<Rational> b(n_max + 1, Rational(0));
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational s = c[n];
        for (std::size_t k = 1; k < n; ++k) s += c[k] * b[n - k];
        b[n] = s / static_cast<long>(n);
    }
    return b;
}

inline Sequence from_one_based(std::vector<Rational> v) {
    v.erase(v.begin());
    return Sequence(1, std::move(v));
}

}  // namespace detail

inline Sequence weigh_xform(const Sequence& a) {
    detail::require_offset1(a, "WEIGH");
    const long n_max = static_cast<long>(a.size());
    std::vector<Rational> c(static_cast<std::size_t>(n_max) + 1, Rational(0));
    for (long m = 1; m <= n_max; ++m)
        for (long d : divisors(m)) {
            const Rational term = d * a.at(d);
            c[static_cast<std::size_t>(m)] += ((m / d) % 2 == 1) ? term : Rational(-term);
        }
    return detail::from_one_based(detail::b_from_c(c));
}

inline Sequence euler_xform(const Sequence& a) {
    detail::require_offset1(a, "EULER");
    const long n_max = static_cast<long>(a.size());
    std::vector<Rational> c(static_cast<std::size_t>(n_max) + 1, Rational(0));
    for (long m = 1; m <= n_max; ++m)
        for (long d : divisors(m)) c[static_cast<std::size_t>(m)] += d * a.at(d);
    return detail::from_one_based(detail::b_from_c(c));
}

enum class IntegralityMode { strict, rational };

/**
 * Inverse EULER: c_n = n b_n - sum_{k<n} c_k b_{n-k}, a_n = (1/n) sum_{d|n} mu(n/d) c_d.
 * In strict mode an integral input whose preimage is not integral throws
 * NonIntegralError naming the first offending index. Since b_n = a_n plus an
 * integer-valued polynomial in a_1..a_{n-1}, this guards against internal
 * faults rather than rejecting any integer input.
 */
inline Sequence euler_inv(const Sequence& b, IntegralityMode mode = IntegralityMode::strict) {
    detail::require_offset1(b, "EULER^-1");
    const long n_max = static_cast<long>(b.size());
    std::vector<Rational> c(static_cast<std::size_t>(n_max) + 1, Rational(0));
    for (long n = 1; n <= n_max; ++n) {
        Rational s = n * b.at(n);
        for (long k = 1; k < n; ++k) s -= c[static_cast<std::size_t>(k)] * b.at(n - k);
        c[static_cast<std::size_t>(n)] = s;
    }
    const bool check = mode == IntegralityMode::strict && b.is_integral();
    std::vector<Rational> a;
    a.reserve(static_cast<std::size_t>(n_max));
    for (long n = 1; n <= n_max; ++n) {
        Rational s = 0;
        for (long d : divisors(n)) {
            const int mu = mobius_mu(n / d);
            if (mu) s += mu * c[static_cast<std::size_t>(d)];
        }
        s /= n;
        if (check && !is_integer(s))
            throw NonIntegralError("EULER^-1: term " + std::to_string(n) + " is " + to_string(s) +
                                       "; the input is not an EULER image of an integer sequence",
                                   static_cast<std::size_t>(n));
        a.push_back(std::move(s));
    }
    return Sequence(1, std::move(a));
}

/// Validates the PARTITION domain (positive nondecreasing integers) and dedupes.
inline PartRecord partition_parts(const Sequence& a) {
    detail::require_offset1(a, "PARTITION");
    PartRecord rec;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational& t = a[i];
        if (!is_integer(t) || t < 1)
            throw DomainError("PARTITION needs positive integers; term " + std::to_string(i + 1) + " is " + to_string(t));
        if (i > 0 && t < a[i - 1])
            throw DomainError("PARTITION needs a nondecreasing sequence; term " + std::to_string(i + 1) + " is " +
                              to_string(t) + " after " + to_string(a[i - 1]));
        Integer v = numerator_of(t);
        if (rec.parts.empty() || rec.parts.back() != v) rec.parts.push_back(std::move(v));
    }
    return rec;
}

/**
 * b_n = number of partitions of n into parts from the deduplicated prefix.
 * The prefix is taken as the complete part set. Unseen terms are at least
 * the last known value, so for the underlying infinite sequence b_n is exact
 * for n up to that value (not index): PARTITION is causal only when a_k >= k.
 */
inline Sequence partition_xform(const Sequence& a) {
    const PartRecord rec = partition_parts(a);
    const std::size_t n_max = a.size();
    std::vector<Integer> ways(n_max + 1, Integer(0));
    ways[0] = 1;
    for (const Integer& p : rec.parts) {
        if (p > static_cast<long>(n_max)) break;
        const auto part = p.convert_to<std::size_t>();
        for (std::size_t n = part; n <= n_max; ++n) ways[n] += ways[n - part];
    }
    std::vector<Rational> b;
    b.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) b.emplace_back(ways[n]);
    return Sequence(1, std::move(b));
}

/// B = A / (1 - A).
inline Sequence invert_xform(const Sequence& a) {
    detail::require_offset1(a, "INVERT");
    const std::size_t n = a.size();
    if (n == 0) return a;
    const PowerSeries A = ogf_of(a, n);
    const PowerSeries B = ps_div(A, PowerSeries::constant(1, n) - A);
    return seq_of_ogf(B, 1);
}

/// A = B / (1 + B).
inline Sequence invert_inv(const Sequence& b) {
    detail::require_offset1(b, "INVERT^-1");
    const std::size_t n = b.size();
    if (n == 0) return b;
    const PowerSeries B = ogf_of(b, n);
    return seq_of_ogf(ps_div(B, PowerSeries::constant(1, n) + B), 1);
}

/// 1 + B = exp(A) on e.g.f.s.
inline Sequence exp_xform(const Sequence& a) {
    detail::require_offset1(a, "EXP");
    const std::size_t n = a.size();
    if (n == 0) return a;
    const PowerSeries B = ps_exp(egf_of(a, n));
    return seq_of_egf(B, 1);
}

/// A = log(1 + B) on e.g.f.s.
inline Sequence log_xform(const Sequence& b) {
    detail::require_offset1(b, "EXP^-1");
    const std::size_t n = b.size();
    if (n == 0) return b;
    return seq_of_egf(ps_log(PowerSeries::constant(1, n) + egf_of(b, n)), 1);
}

/// b_n = (-1)^{n+1} [y^n] of the compositional inverse of A; needs a_1 = 1.
inline Sequence revert_xform(const Sequence& a) {
    detail::require_offset1(a, "REVERT");
    if (a.empty()) return a;
    if (a[0] != 1) throw DomainError("REVERT needs a_1 = 1, got " + to_string(a[0]));
    const std::size_t n = a.size();
    const PowerSeries g = ps_reversion(ogf_of(a, n));
    std::vector<Rational> b;
    b.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) b.push_back(k % 2 == 1 ? g[k] : Rational(-g[k]));
    return Sequence(1, std::move(b));
}

}  // namespace eigenseq
