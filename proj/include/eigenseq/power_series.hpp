#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated formal power series with exact rational coefficients.
 *
 * A PowerSeries of order N stores c_0 ... c_N and represents the class of
 * series modulo x^{N+1}. Binary operations are exact through the smaller of
 * the two operand orders and never extend the truncation on their own.
 *
 * This is the generating-function engine behind INVERT, EXP, REVERT and the
 * closed-form checks: o.g.f.s (sum a_n x^n) and e.g.f.s (sum a_n x^n / n!)
 * are built from sequences with ogf_of / egf_of and read back with
 * seq_of_ogf / seq_of_egf.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eigenseq/error.hpp"
#include "eigenseq/rational.hpp"
#include "eigenseq/sequence.hpp"

namespace eigenseq {

class PowerSeries {
public:
    PowerSeries() : coeffs_(1, Rational(0)) {}

    /// Zero series of the given order.
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

    /// Coefficients c_0..c_order; missing ones are zero, extra ones are dropped.
    PowerSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, Rational(0));
    }

    static PowerSeries constant(const Rational& c, std::size_t order) {
        PowerSeries p(order);
        p.coeffs_[0] = c;
        return p;
    }

    /// The series x (order >= 1 to be meaningful).
    static PowerSeries x(std::size_t order) {
        PowerSeries p(order);
        if (order >= 1) p.coeffs_[1] = 1;
        return p;
    }

    /// e^{s x} = sum s^n x^n / n!.
    static PowerSeries exp_linear(const Rational& s, std::size_t order) {
        PowerSeries p(order);
        Rational term = 1;
        for (std::size_t n = 0; n <= order; ++n) {
            p.coeffs_[n] = term;
            term = term * s / static_cast<long>(n + 1);
        }
        return p;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    PowerSeries truncated(std::size_t order) const {
        return PowerSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(order, this->order()) + 1)));
    }

    PowerSeries with_coeff(std::size_t n, Rational value) const {
        PowerSeries p = *this;
        if (n <= p.order()) p.coeffs_[n] = std::move(value);
        return p;
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
        const auto n = std::min(f.order(), g.order());
        PowerSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = f[i] + g[i];
        return r;
    }

    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
        const auto n = std::min(f.order(), g.order());
        PowerSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = f[i] - g[i];
        return r;
    }

    friend PowerSeries operator-(const PowerSeries& f) {
        PowerSeries r = f;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend PowerSeries operator*(const Rational& s, const PowerSeries& f) {
        PowerSeries r = f;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);

private:
    std::vector<Rational> coeffs_;
};

/// Cauchy product truncated to the smaller order.
inline PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g) {
    const auto n = std::min(f.order(), g.order());
    std::vector<Rational> c(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += f[i] * g[j];
    }
    return PowerSeries(n, std::move(c));
}

inline PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) { return ps_mul(f, g); }

/// f / g; requires g_0 != 0.
inline PowerSeries ps_div(const PowerSeries& f, const PowerSeries& g) {
    if (g[0] == 0) throw DomainError("ps_div: divisor has zero constant term");
    const auto n = std::min(f.order(), g.order());
    std::vector<Rational> q(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        Rational s = f[i];
        for (std::size_t j = 1; j <= i; ++j) s -= g[j] * q[i - j];
        q[i] = s / g[0];
    }
    return PowerSeries(n, std::move(q));
}

/// f(g) by Horner's rule; requires g_0 = 0. Exact through min(order f, order g).
inline PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g) {
    if (g[0] != 0) throw DomainError("ps_compose: inner series has nonzero constant term");
    const auto n = std::min(f.order(), g.order());
    const PowerSeries inner = g.truncated(n);
    PowerSeries r = PowerSeries::constant(f[n], n);
    for (std::size_t i = n; i-- > 0;) r = ps_mul(r, inner) + PowerSeries::constant(f[i], n);
    return r;
}

inline PowerSeries ps_derivative(const PowerSeries& f) {
    const auto n = f.order();
    if (n == 0) return PowerSeries(0);
    std::vector<Rational> c(n);
    for (std::size_t i = 1; i <= n; ++i) c[i - 1] = f[i] * static_cast<long>(i);
    return PowerSeries(n - 1, std::move(c));
}

/// Antiderivative with zero constant term; the order grows by one.
inline PowerSeries ps_integral(const PowerSeries& f) {
    const auto n = f.order();
    std::vector<Rational> c(n + 2, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) c[i + 1] = f[i] / static_cast<long>(i + 1);
    return PowerSeries(n + 1, std::move(c));
}

/// exp(f) for f_0 = 0, from g' = f' g.
inline PowerSeries ps_exp(const PowerSeries& f) {
    if (f[0] != 0) throw DomainError("ps_exp: argument must have zero constant term");
    const auto n = f.order();
    std::vector<Rational> g(n + 1, Rational(0));
    g[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Rational s = 0;
        for (std::size_t k = 1; k <= m; ++k)
            if (f[k] != 0) s += static_cast<long>(k) * f[k] * g[m - k];
        g[m] = s / static_cast<long>(m);
    }
    return PowerSeries(n, std::move(g));
}

/// log(f) for f_0 = 1, from f h' = f'.
inline PowerSeries ps_log(const PowerSeries& f) {
    if (f[0] != 1) throw DomainError("ps_log: argument must have constant term 1");
    const auto n = f.order();
    std::vector<Rational> h(n + 1, Rational(0));
    for (std::size_t m = 1; m <= n; ++m) {
        Rational s = static_cast<long>(m) * f[m];
        for (std::size_t k = 1; k < m; ++k) s -= static_cast<long>(k) * h[k] * f[m - k];
        h[m] = s / static_cast<long>(m);
    }
    return PowerSeries(n, std::move(h));
}

/// f^e for f_0 = 1 and rational e, as exp(e log f).
inline PowerSeries ps_pow(const PowerSeries& f, const Rational& e) { return ps_exp(e * ps_log(f)); }

/// f'/f, truncated to order - 1; requires f_0 != 0.
inline PowerSeries ps_logderiv(const PowerSeries& f) {
    if (f[0] == 0) throw DomainError("ps_logderiv: zero constant term");
    if (f.order() == 0) return PowerSeries(0);
    return ps_div(ps_derivative(f), f.truncated(f.order() - 1));
}

/**
 * Compositional inverse: the g with f(g(y)) = y through the truncation order.
 * Requires f_0 = 0 and f_1 = 1.
 *
 * Order-by-order: with g known through degree n-1 and g_n = 0, the degree-n
 * coefficient of f(g) is g_n plus a quantity fixed by lower terms, so g_n is
 * minus that coefficient.
 */
inline PowerSeries ps_reversion(const PowerSeries& f) {
    if (f[0] != 0) throw DomainError("ps_reversion: series must have zero constant term");
    const auto n = f.order();
    if (n >= 1 && f[1] != 1) throw DomainError("ps_reversion: linear coefficient must be 1");
    PowerSeries g = PowerSeries::x(n);
    for (std::size_t m = 2; m <= n; ++m) {
        const PowerSeries fg = ps_compose(f.truncated(m), g.truncated(m));
        g = g.with_coeff(m, -fg[m]);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Sequence <-> generating function

namespace detail {

inline void require_terms_through(const Sequence& a, std::size_t order, const char* who) {
    const long last = a.offset() + static_cast<long>(a.size()) - 1;
    if (last < static_cast<long>(order))
        throw DomainError(std::string(who) + ": sequence does not reach index " + std::to_string(order));
}

}  // namespace detail

/// o.g.f. sum a_n x^n through x^order; an offset-1 sequence has c_0 = 0.
inline PowerSeries ogf_of(const Sequence& a, std::size_t order) {
    detail::require_terms_through(a, order, "ogf_of");
    std::vector<Rational> c(order + 1, Rational(0));
    for (std::size_t n = static_cast<std::size_t>(a.offset()); n <= order; ++n) c[n] = a.at(static_cast<long>(n));
    return PowerSeries(order, std::move(c));
}

/// e.g.f. sum a_n x^n / n! through x^order.
inline PowerSeries egf_of(const Sequence& a, std::size_t order) {
    detail::require_terms_through(a, order, "egf_of");
    std::vector<Rational> c(order + 1, Rational(0));
    Integer fact = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) fact *= static_cast<long>(n);
        if (n >= static_cast<std::size_t>(a.offset())) c[n] = a.at(static_cast<long>(n)) / Rational(fact);
    }
    return PowerSeries(order, std::move(c));
}

/// Terms a_offset .. a_order read from an o.g.f.
inline Sequence seq_of_ogf(const PowerSeries& f, int offset) {
    std::vector<Rational> t;
    for (std::size_t n = static_cast<std::size_t>(offset); n <= f.order(); ++n) t.push_back(f[n]);
    return Sequence(offset, std::move(t));
}

/// Terms a_offset .. a_order read from an e.g.f.
inline Sequence seq_of_egf(const PowerSeries& f, int offset) {
    std::vector<Rational> t;
    Integer fact = 1;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (n > 0) fact *= static_cast<long>(n);
        if (n >= static_cast<std::size_t>(offset)) t.push_back(f[n] * Rational(fact));
    }
    return Sequence(offset, std::move(t));
}

/// Highest logical index present in a.
inline std::size_t last_index(const Sequence& a) {
    return static_cast<std::size_t>(a.offset()) + a.size() - 1;
}

/// n! times the x^n coefficient of x/(e^x - 1), so B_1 = -1/2.
inline Rational bernoulli(std::size_t n) {
    // (e^x - 1)/x = sum x^k / (k+1)!
    std::vector<Rational> c(n + 1);
    Integer fact = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        fact *= static_cast<long>(k + 1);
        c[k] = Rational(1) / Rational(fact);
    }
    const PowerSeries b = ps_div(PowerSeries::constant(1, n), PowerSeries(n, std::move(c)));
    return b[n] * Rational(factorial(static_cast<long>(n)));
}

}  // namespace eigenseq
