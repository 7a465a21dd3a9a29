#pragma once

/**
 * @file eigen.hpp
 * @brief Eigen-sequence solvers.
 *
 * Equation forms, for a transform expression T acting at its native offset o:
 *
 *     shift      a = R^s ∘ T ∘ a       first s terms are 1, a_{n+s} = (T a)_n
 *     doubling   T ∘ a = M ∘ a         written M^-1∘T
 *     sign       T ∘ a = N ∘ a         written N^-1∘T
 *
 * The shift form is solved by bootstrapping: with s >= 1 and T causal, the
 * next term depends only on terms already known.
 *
 * The doubling and sign forms need T to be diagonally affine: once a_o..a_{n-1}
 * are fixed, (T a)_n = alpha + beta a_n. affine_probe measures (alpha, beta) by
 * evaluating T at a_n = 0 and 1 and confirms with a_n = 2, so the same solver
 * covers the linear transforms and the nonlinear ones (EULER, INVERT, EXP, ...).
 * Then a_n = alpha / (2 - beta) for M and a_n = -alpha / (1 + beta) for N.
 *
 * Also here: the XOR-CONV special fixed point, PARTITION orbits and fixed point, the
 * lexicographic REVERT search and plain fixed-point iteration.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eigenseq/convolution.hpp"
#include "eigenseq/error.hpp"
#include "eigenseq/expr.hpp"
#include "eigenseq/product.hpp"
#include "eigenseq/sequence.hpp"

namespace eigenseq {

// ---------------------------------------------------------------------------
// Equation normalization

enum class EigenKind { shift, doubling, sign, partition, revert, xor_special };

struct EigenProblem {
    EigenKind kind = EigenKind::shift;
    TransformExpr transform;  // T, without the R / M^-1 / N^-1 prefix
    long shift = 0;           // s for the shift form
};

/// Reads an operator expression as an eigen equation.
inline EigenProblem classify(const TransformExpr& e) {
    if (e.factors.empty()) throw DomainError("empty expression");
    EigenProblem p;
    std::size_t i = 0;
    const Factor& head = e.factors.front();
    if (head.op == Op::M && head.power == -1) {
        p.kind = EigenKind::doubling;
        i = 1;
    } else if (head.op == Op::N && head.power == -1) {
        p.kind = EigenKind::sign;
        i = 1;
    } else {
        while (i < e.factors.size() && e.factors[i].op == Op::R && e.factors[i].power > 0) p.shift += e.factors[i++].power;
        if (p.shift > 0) {
            p.kind = EigenKind::shift;
        } else if (e.factors.size() == 1 && head.op == Op::partition) {
            p.kind = EigenKind::partition;
            p.transform = e;
            return p;
        } else if (e.factors.size() == 1 && head.op == Op::revert && head.power == 1) {
            p.kind = EigenKind::revert;
            p.transform = e;
            return p;
        } else {
            throw DomainError("'" + to_string(e) + "' is not an eigen equation (expected R^s∘T, M^-1∘T, N^-1∘T, PARTITION or REVERT)");
        }
    }
    p.transform.factors.assign(e.factors.begin() + static_cast<long>(i), e.factors.end());
    if (p.transform.factors.empty()) throw DomainError("eigen equation has no transform");
    for (const auto& f : p.transform.factors)
        if (is_auxiliary(f.op)) throw DomainError("transform part of an eigen equation may not contain R, L, N or M");
    if (p.kind == EigenKind::shift && p.shift == 1 && p.transform.factors.size() == 1 &&
        p.transform.factors[0] == Factor{Op::xor_conv, 1})
        p.kind = EigenKind::xor_special;
    return p;
}

// ---------------------------------------------------------------------------
// Shift eigen-sequences

/// a = R^s ∘ T ∘ a: the first s terms are 1 and a_{n+s} = (T a)_n.
inline Sequence solve_shift_eigen(const TransformExpr& t, long s, std::size_t n_terms) {
    if (s < 1) throw DomainError("shift must be >= 1");
    const int offset = native_offset(t);
    std::vector<Rational> terms;
    for (long i = 0; i < s && terms.size() < n_terms; ++i) terms.emplace_back(1);
    while (terms.size() < n_terms) {
        const Sequence b = apply_expr(t, Sequence(offset, terms));
        terms.push_back(b[terms.size() - static_cast<std::size_t>(s)]);
    }
    return Sequence(offset, std::move(terms));
}

/// Convenience: T^r as a single factor.
inline Sequence solve_shift_eigen(Op t, long r, long s, std::size_t n_terms) {
    return solve_shift_eigen(TransformExpr{{Factor{t, r}}}, s, n_terms);
}

// ---------------------------------------------------------------------------
// Affine probing and the M / N solvers

struct AffineCoefficients {
    Rational alpha;
    Rational beta;
};

/**
 * (T a)_n = alpha + beta a_n with a_o..a_{n-1} taken from prefix. n is a
 * logical index; prefix must hold the terms before it (extra terms are
 * ignored). Throws NonlinearError if the third probe disagrees.
 */
inline AffineCoefficients affine_probe(const TransformExpr& t, const Sequence& prefix, long n) {
    const long pos = n - prefix.offset();
    if (pos < 0 || static_cast<std::size_t>(pos) > prefix.size())
        throw DomainError("affine_probe: index " + std::to_string(n) + " not reachable from the prefix");
    const Sequence base = prefix.prefix(static_cast<std::size_t>(pos));
    const auto value_at = [&](long v) {
        return apply_expr(t, base.with_term(static_cast<std::size_t>(pos), Rational(v)))[static_cast<std::size_t>(pos)];
    };
    AffineCoefficients c;
    c.alpha = value_at(0);
    c.beta = value_at(1) - c.alpha;
    if (value_at(2) != c.alpha + 2 * c.beta)
        throw NonlinearError(to_string(t) + " is not affine in term " + std::to_string(n) + "; M/N eigen solving needs a diagonally affine transform");
    return c;
}

namespace detail {

inline Sequence solve_diagonal(const TransformExpr& t, std::size_t n_terms, bool doubling) {
    const int offset = native_offset(t);
    Sequence a(offset, std::vector<Rational>{Rational(1)});
    for (std::size_t pos = 1; pos < n_terms; ++pos) {
        const long n = offset + static_cast<long>(pos);
        const auto [alpha, beta] = affine_probe(t, a, n);
        Rational next;
        if (doubling) {
            if (beta == 2) throw DomainError("T∘a = M∘a has no solution at index " + std::to_string(n) + " (diagonal coefficient 2)");
            next = alpha / (2 - beta);
        } else {
            if (beta == -1) throw DomainError("T∘a = N∘a has no solution at index " + std::to_string(n) + " (diagonal coefficient -1)");
            next = -alpha / (1 + beta);
        }
        a = a.with_term(pos, std::move(next));
    }
    // the first equation is a constraint, not a recurrence step
    if (n_terms >= 2) {
        const Sequence lhs = apply_expr(t, a);
        const Sequence rhs = doubling ? op_M(a) : op_N(a);
        if (lhs[0] != rhs[0])
            throw DomainError("no solution beginning with 1: first term of " + to_string(t) + "∘a is " + to_string(lhs[0]) +
                              ", expected " + to_string(rhs[0]));
    }
    return a.prefix(n_terms);
}

}  // namespace detail

/// T∘a = M∘a with a starting 1.
inline Sequence solve_M_eigen(const TransformExpr& t, std::size_t n_terms) { return detail::solve_diagonal(t, n_terms, true); }

/// T∘a = N∘a with a starting 1.
inline Sequence solve_N_eigen(const TransformExpr& t, std::size_t n_terms) { return detail::solve_diagonal(t, n_terms, false); }

// ---------------------------------------------------------------------------
// XOR-CONV special fixed point

/// a_0 = 0, a_1 = 1, a_{n+1} = sum_{k=0}^{n} XOR(a_k, a_{n-k}); XOR-CONV maps it to [0, a_2, a_3, ...].
inline Sequence solve_xor_special(std::size_t n_terms) {
    std::vector<Integer> a;
    if (n_terms >= 1) a.emplace_back(0);
    if (n_terms >= 2) a.emplace_back(1);
    while (a.size() < n_terms) {
        const std::size_t n = a.size() - 1;
        Integer s = 0;
        for (std::size_t k = 0; k <= n; ++k) s += a[k] ^ a[n - k];
        a.push_back(std::move(s));
    }
    std::vector<Rational> t(a.begin(), a.end());
    Sequence out(0, std::move(t));
    if (n_terms >= 2) {
        const Sequence img = fconv_xform(out, ConvOp::bit_xor);
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            const Rational expected = i == 0 ? Rational(0) : out[i + 1];
            if (img[i] != expected) throw DomainError("XOR-CONV special sequence failed its own check");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// PARTITION orbits

struct OrbitReport {
    std::vector<Sequence> iterates;  // start, P(start), P^2(start), ... through the first repeat
    std::size_t tail = 0;            // index where the cycle begins
    std::size_t period = 0;

    std::vector<Sequence> cycle() const {
        return {iterates.begin() + static_cast<long>(tail), iterates.begin() + static_cast<long>(tail + period)};
    }
};

inline OrbitReport partition_orbit(const Sequence& start, std::size_t n_terms, std::size_t max_iter) {
    OrbitReport r;
    std::map<std::vector<Rational>, std::size_t> seen;
    Sequence cur = start.prefix(n_terms);
    for (std::size_t i = 0;; ++i) {
        std::vector<Rational> key(cur.terms().begin(), cur.terms().end());
        if (auto it = seen.find(key); it != seen.end()) {
            r.tail = it->second;
            r.period = i - it->second;
            return r;
        }
        seen.emplace(std::move(key), i);
        r.iterates.push_back(cur);
        if (i == max_iter) break;
        try {
            cur = partition_xform(cur);
        } catch (const DomainError& err) {
            throw DomainError("PARTITION orbit left the domain at iterate " + std::to_string(i + 1) + ": " + err.what());
        }
    }
    throw ConvergenceError("PARTITION orbit found no cycle within " + std::to_string(max_iter) + " iterations");
}

namespace detail {

/// Partition counts of 0..n_max with parts from the nondecreasing list `parts` (repeats ignored).
inline std::vector<Integer> partition_counts(const std::vector<Integer>& parts, std::size_t n_max) {
    std::vector<Integer> ways(n_max + 1, Integer(0));
    ways[0] = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Integer& p = parts[i];
        if (p > static_cast<long>(n_max) || (i > 0 && parts[i - 1] == p)) continue;
        const auto part = p.convert_to<std::size_t>();
        for (std::size_t n = part; n <= n_max; ++n) ways[n] += ways[n - part];
    }
    return ways;
}

inline bool partition_fixed_dfs(std::vector<Integer>& a, std::size_t n_terms) {
    const std::size_t k = a.size() + 1;  // index being chosen
    if (a.size() == n_terms) {
        std::vector<Rational> t(a.begin(), a.end());
        const Sequence s(1, t);
        return partition_xform(s) == s;
    }
    // a_k > k is invisible to b_k, so then a_k must equal b_k computed without it;
    // otherwise a_k lies in [a_{k-1}, k]
    std::vector<Integer> candidates;
    const Integer lo = a.empty() ? Integer(1) : a.back();
    for (Integer v = lo; v <= static_cast<long>(k); ++v) candidates.push_back(v);
    const Integer forced = partition_counts(a, k)[k];
    if (forced > static_cast<long>(k) && forced >= lo) candidates.push_back(forced);
    for (const Integer& v : candidates) {
        if (k == 2 && v == 1) continue;  // a_2 = 1 only continues as the all-ones sequence
        a.push_back(v);
        // terms at indices j < a_k can no longer change
        const std::size_t settled = std::min<std::size_t>(k, v > static_cast<long>(k) ? k : v.convert_to<std::size_t>() - 1);
        const auto counts = partition_counts(a, settled);
        bool ok = true;
        for (std::size_t j = 1; j <= settled && ok; ++j) ok = counts[j] == a[j - 1];
        if (ok && partition_fixed_dfs(a, n_terms)) return true;
        a.pop_back();
    }
    return false;
}

}  // namespace detail

/**
 * The PARTITION fixed point other than the all-ones sequence, by depth-first
 * search. At index k either a_k <= k or a_k > k; in the second case a_k is
 * forced to equal the partition count of k over the earlier parts. The
 * all-ones sequence is excluded by requiring a_2 >= 2.
 */
inline Sequence partition_fixed_point(std::size_t n_terms) {
    if (n_terms == 0) return Sequence(1, std::vector<Rational>{});
    // short prefixes admit spurious solutions (1,2,2,4,4 is also self-consistent),
    // so search a longer horizon and double it until the requested prefix settles
    const auto solve = [](std::size_t horizon) {
        std::vector<Integer> a;
        if (!detail::partition_fixed_dfs(a, horizon))
            throw ConvergenceError("no PARTITION fixed point of length " + std::to_string(horizon) + " found");
        return Sequence(1, std::vector<Rational>(a.begin(), a.end()));
    };
    std::size_t horizon = std::max<std::size_t>(n_terms, 8);
    Sequence cur = solve(horizon);
    while (true) {
        horizon *= 2;
        const Sequence next = solve(horizon);
        if (next.prefix(n_terms) == cur.prefix(n_terms)) return cur.prefix(n_terms);
        cur = next;
    }
}

// ---------------------------------------------------------------------------
// Lexicographic REVERT fixed point

struct RevertSearchResult {
    Sequence terms;
    Integer cap;
    std::size_t horizon = 0;
};

/// Raised when no strictly increasing REVERT-fixed prefix fits under the cap.
class SearchExhausted : public ConvergenceError {
public:
    SearchExhausted(const std::string& what, Sequence deepest) : ConvergenceError(what), deepest_(std::move(deepest)) {}
    const Sequence& deepest() const noexcept { return deepest_; }

private:
    Sequence deepest_;
};

namespace detail {

class RevertSearch {
public:
    RevertSearch(std::size_t horizon, Integer cap) : horizon_(horizon), cap_(std::move(cap)) {}

    std::optional<Sequence> run() {
        std::vector<Rational> prefix{Rational(1)};
        if (dfs(prefix)) return Sequence(1, prefix);
        return std::nullopt;
    }

    const Sequence& deepest() const { return deepest_; }

private:
    std::size_t horizon_;
    Integer cap_;
    Sequence deepest_{1, std::vector<Rational>{Rational(1)}};
    const TransformExpr revert_{{Factor{Op::revert, 1}}};

    bool dfs(std::vector<Rational>& prefix) {
        if (prefix.size() > deepest_.size()) deepest_ = Sequence(1, prefix);
        if (prefix.size() >= horizon_) return true;
        const long n = static_cast<long>(prefix.size()) + 1;
        const auto [alpha, beta] = affine_probe(revert_, Sequence(1, prefix), n);
        const Rational& last = prefix.back();
        if (beta == 1) {
            // a_n is free; the equation at n only constrains the prefix
            if (alpha != 0) return false;
            for (Integer v = numerator_of(last) + 1; v <= cap_; ++v) {
                prefix.emplace_back(v);
                if (dfs(prefix)) return true;
                prefix.pop_back();
            }
            return false;
        }
        const Rational forced = alpha / (1 - beta);
        if (!is_integer(forced) || forced <= last || forced > Rational(cap_)) return false;
        prefix.push_back(forced);
        if (dfs(prefix)) return true;
        prefix.pop_back();
        return false;
    }
};

}  // namespace detail

/**
 * Lexicographically earliest strictly increasing integer sequence with
 * a_1 = 1 whose first n_terms terms are fixed by REVERT, searching values up
 * to cap. At each index the REVERT equation is affine in the new term with
 * coefficient +1 (even index: the term is free and the equation is a
 * consistency condition on the prefix) or -1 (odd index: the term is forced).
 * Free terms are tried smallest first with backtracking.
 */
inline RevertSearchResult revert_lex_search(std::size_t n_terms, const Integer& cap = 1000) {
    if (n_terms < 1) throw DomainError("revert_lex_search needs n_terms >= 1");
    detail::RevertSearch search(n_terms, cap);
    auto found = search.run();
    if (!found)
        throw SearchExhausted("no REVERT-fixed increasing prefix of length " + std::to_string(n_terms) + " with terms <= " +
                                  cap.str() + "; deepest consistent prefix: " + to_string(search.deepest()),
                              search.deepest());
    return {*found, cap, n_terms};
}

// ---------------------------------------------------------------------------
// Iteration and verification

struct ConvergeResult {
    Sequence terms;
    std::size_t iterations = 0;
};

/// Applies e until the first n_terms stop changing (iterates are kept at n_terms).
inline ConvergeResult converge(const TransformExpr& e, const Sequence& start, std::size_t n_terms, std::size_t max_iter) {
    Sequence cur = start.prefix(n_terms);
    for (std::size_t i = 1; i <= max_iter; ++i) {
        const Sequence next = apply_expr(e, cur).prefix(n_terms);
        if (next.size() == n_terms && next == cur) return {next, i};
        cur = next;
    }
    throw ConvergenceError("'" + to_string(e) + "' did not stabilize " + std::to_string(n_terms) + " terms within " +
                           std::to_string(max_iter) + " iterations");
}

/**
 * True iff a satisfies the equation named by e on the comparable prefix.
 * A leading M^-1 or N^-1 is read as T∘a = M∘a or T∘a = N∘a; otherwise the
 * check is e∘a = a.
 */
inline bool verify_eigen(const Sequence& a, const TransformExpr& e) {
    if (e.factors.empty() || a.empty()) return false;
    try {
        const Factor& head = e.factors.front();
        Sequence lhs, rhs;
        if ((head.op == Op::M || head.op == Op::N) && head.power == -1) {
            const TransformExpr t{{e.factors.begin() + 1, e.factors.end()}};
            lhs = apply_expr(t, a);
            rhs = head.op == Op::M ? op_M(a) : op_N(a);
        } else {
            lhs = apply_expr(e, a);
            rhs = a;
        }
        const std::size_t n = std::min(lhs.size(), rhs.size());
        if (n == 0) return false;
        return prefix_eq(lhs, rhs, n);
    } catch (const DomainError&) {
        return false;
    }
}

/// Dispatches an eigen equation to the matching solver.
inline Sequence solve_eigen(const TransformExpr& e, std::size_t n_terms, const Integer& cap = 1000) {
    const EigenProblem p = classify(e);
    switch (p.kind) {
    case EigenKind::shift: return solve_shift_eigen(p.transform, p.shift, n_terms);
    case EigenKind::doubling: return solve_M_eigen(p.transform, n_terms);
    case EigenKind::sign: return solve_N_eigen(p.transform, n_terms);
    case EigenKind::xor_special: return solve_xor_special(n_terms);
    case EigenKind::revert: return revert_lex_search(n_terms, cap).terms;
    case EigenKind::partition:
        if (e.factors.front().power != 1)
            throw DomainError("PARTITION^k eigen sequences come in cycles; use the partition orbit command");
        return partition_fixed_point(n_terms);
    }
    throw DomainError("unsupported eigen equation");
}

}  // namespace eigenseq
