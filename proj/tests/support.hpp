#pragma once

/**
 * @file support.hpp
 * @brief Independent reference implementations and random inputs for tests.
 *
 * Nothing here calls the library's transforms; each oracle works from the
 * textbook definition by the most direct route, however slow.
 */

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "eigenseq/rational.hpp"
#include "eigenseq/sequence.hpp"

namespace oracle {

using eigenseq::Integer;
using eigenseq::Rational;
using eigenseq::Sequence;

/// Truncated product of polynomials given as coefficient vectors.
inline std::vector<Rational> cauchy(const std::vector<Rational>& f, const std::vector<Rational>& g, std::size_t order) {
    std::vector<Rational> h(order + 1, Rational(0));
    for (std::size_t i = 0; i < f.size() && i <= order; ++i)
        for (std::size_t j = 0; j < g.size() && i + j <= order; ++j) h[i + j] += f[i] * g[j];
    return h;
}

inline Rational gen_binomial(const Rational& x, long k) {
    Rational r = 1;
    for (long i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
    return r;
}

/// prod_n (1 - x^n)^{-a_n}, multiplied out factor by factor (a offset 1).
inline Sequence euler_by_product(const Sequence& a) {
    const std::size_t N = a.size();
    std::vector<Rational> prod(N + 1, Rational(0));
    prod[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        std::vector<Rational> factor(N + 1, Rational(0));
        // (1 - y)^{-a} = sum_j C(a + j - 1, j) y^j
        for (std::size_t j = 0; j * n <= N; ++j) factor[j * n] = gen_binomial(a[n - 1] + static_cast<long>(j) - 1, static_cast<long>(j));
        prod = cauchy(prod, factor, N);
    }
    return Sequence(1, std::vector<Rational>(prod.begin() + 1, prod.end()));
}

/// prod_n (1 + x^n)^{a_n}, multiplied out factor by factor (a offset 1).
inline Sequence weigh_by_product(const Sequence& a) {
    const std::size_t N = a.size();
    std::vector<Rational> prod(N + 1, Rational(0));
    prod[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        std::vector<Rational> factor(N + 1, Rational(0));
        for (std::size_t j = 0; j * n <= N; ++j) factor[j * n] = gen_binomial(a[n - 1], static_cast<long>(j));
        prod = cauchy(prod, factor, N);
    }
    return Sequence(1, std::vector<Rational>(prod.begin() + 1, prod.end()));
}

/// Partitions of n into parts drawn from `parts` (sorted ascending), by recursion on the largest part.
inline Integer count_partitions(long n, const std::vector<long>& parts, std::size_t max_index) {
    if (n == 0) return 1;
    Integer total = 0;
    for (std::size_t i = 0; i < max_index; ++i)
        if (parts[i] <= n) total += count_partitions(n - parts[i], parts, i + 1);
    return total;
}

/// Bernoulli numbers from sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1.
inline std::vector<Rational> bernoulli_table(std::size_t n_max) {
    std::vector<Rational> b(n_max + 1, Rational(0));
    b[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += eigenseq::binomial(static_cast<long>(n + 1), static_cast<long>(k)) * b[k];
        b[n] = -s / static_cast<long>(n + 1);
    }
    return b;
}

/// S(n,k) from the explicit alternating sum.
inline Integer stirling2_explicit(long n, long k) {
    if (n == 0 && k == 0) return 1;
    if (k <= 0 || k > n) return 0;
    Integer s = 0;
    for (long j = 0; j <= k; ++j) {
        Integer term = eigenseq::numerator_of(eigenseq::binomial(k, j));
        Integer p = 1;
        for (long i = 0; i < n; ++i) p *= (k - j);
        term *= p;
        s += (j % 2 ? -term : term);
    }
    return s / eigenseq::factorial(k);
}

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline std::vector<long> divisors_brute(long n) {
    std::vector<long> d;
    for (long k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

/// b_n = sum_k C(n,k) a_k, offset 0.
inline Sequence binomial_by_sum(const Sequence& a) {
    std::vector<Rational> b;
    for (std::size_t n = 0; n < a.size(); ++n) {
        Rational s = 0;
        for (std::size_t k = 0; k <= n; ++k) s += eigenseq::binomial(static_cast<long>(n), static_cast<long>(k)) * a[k];
        b.push_back(s);
    }
    return Sequence(0, b);
}

/// Seeded source of random test sequences.
class Random {
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    Sequence integers(int offset, std::size_t n, long lo, long hi) {
        std::vector<Rational> t;
        for (std::size_t i = 0; i < n; ++i) t.emplace_back(integer(lo, hi));
        return Sequence(offset, std::move(t));
    }

    Sequence rationals(int offset, std::size_t n, long span = 20, long max_den = 9) {
        std::vector<Rational> t;
        for (std::size_t i = 0; i < n; ++i) t.emplace_back(Rational(integer(-span, span), integer(1, max_den)));
        return Sequence(offset, std::move(t));
    }

    /// Integer sequence with a_1 = 1 (offset 1).
    Sequence unit_leading(std::size_t n, long lo, long hi) {
        Sequence s = integers(1, n, lo, hi);
        return s.with_term(0, Rational(1));
    }

private:
    std::mt19937_64 gen_;
};

/// D_{n,k} for 0 <= k,n <= N built straight from the definitions.
inline Matrix linear_matrix(const std::string& kind, std::size_t N) {
    Matrix d(N + 1, std::vector<Rational>(N + 1, Rational(0)));
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const long ln = static_cast<long>(n), lk = static_cast<long>(k);
            if (kind == "binomial") d[n][k] = eigenseq::binomial(ln, lk);
            if (kind == "stirling" && k >= 1) d[n][k] = Rational(stirling2_explicit(ln, lk));
            if (kind == "divisor" && k >= 1 && ln % lk == 0) d[n][k] = 1;
            if (kind == "mobius" && k >= 1 && ln % lk == 0) {
                // mu by trial division
                long m = ln / lk, mu = 1;
                for (long p = 2; p * p <= m; ++p)
                    if (m % p == 0) {
                        m /= p;
                        if (m % p == 0) mu = 0;
                        mu = -mu;
                    }
                if (m > 1) mu = -mu;
                d[n][k] = mu;
            }
        }
    return d;
}

inline Matrix matrix_power(const Matrix& d, long r) {
    Matrix p = d;
    for (long i = 1; i < r; ++i) p = matmul(p, d);
    return p;
}

/// a_{n+1} = sum_{k<=n} D_{n,k} a_k with a_base = 1.
inline Sequence shift_recurrence(const Matrix& d, int base, std::size_t count) {
    std::vector<Rational> a(static_cast<std::size_t>(base), Rational(0));
    a.emplace_back(1);
    while (a.size() < count + static_cast<std::size_t>(base)) {
        const std::size_t n = a.size() - 1;
        Rational s = 0;
        for (std::size_t k = 0; k <= n; ++k) s += d[n][k] * a[k];
        a.push_back(s);
    }
    return Sequence(base, std::vector<Rational>(a.begin() + base, a.end()));
}

/// T∘a = M∘a: a_n = sum_{k<n} D_{n,k} a_k; T∘a = N∘a: a_n = -1/2 sum_{k<n} D_{n,k} a_k.
inline Sequence diagonal_recurrence(const Matrix& d, int base, std::size_t count, bool doubling) {
    std::vector<Rational> a(static_cast<std::size_t>(base), Rational(0));
    a.emplace_back(1);
    while (a.size() < count + static_cast<std::size_t>(base)) {
        const std::size_t n = a.size();
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += d[n][k] * a[k];
        a.push_back(doubling ? s : -s / 2);
    }
    return Sequence(base, std::vector<Rational>(a.begin() + base, a.end()));
}

}  // namespace oracle
