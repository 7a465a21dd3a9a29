#pragma once

/**
 * @file linear.hpp
 * @brief Triangle-based linear transforms: BINOMIAL, STIRLING, their inverses
 *        and powers, and difference tables.
 *
 * A linear transform b_n = sum_k D_{n,k} a_k is held as a lower-triangular
 * Triangle whose first row/column index (its base) matches the offset of the
 * sequences it acts on.
 *
 * Indexing:
 *  - BINOMIAL is positional: at base 1 the entry for logical indices (n, k)
 *    is C(n-1, k-1), so the transform does not depend on the offset label.
 *  - STIRLING uses S(n, k) at the logical indices. At base 1 this is the
 *    triangle [S(n,k)]_{n,k>=1} acting on [a_1, a_2, ...]; at base 0 the extra
 *    row/column is S(0,0) = 1, S(n,0) = 0, so b_0 = a_0.
 *
 * With these conventions the composition identity
 *
 *     STIRLING o R = R o BINOMIAL o STIRLING
 *
 * holds exactly on offset-0 sequences (term 0 is 1 on both sides). On offset-1
 * sequences it fails at the first index because R inserts a_1 = 1 where the
 * base-1 triangle has no zeroth column; the tests pin the offset-0 form.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "eigenseq/error.hpp"
#include "eigenseq/rational.hpp"
#include "eigenseq/sequence.hpp"

namespace eigenseq {

// ---------------------------------------------------------------------------
// Stirling numbers

namespace detail {

struct StirlingTables {
    std::vector<std::vector<Integer>> second;  // S(n,k)
    std::vector<std::vector<Integer>> first;   // signed s(n,k)

    void grow(std::size_t n) {
        while (second.size() <= n) {
            const std::size_t m = second.size();
            std::vector<Integer> s2(m + 1, Integer(0)), s1(m + 1, Integer(0));
            if (m == 0) {
                s2[0] = 1;
                s1[0] = 1;
            } else {
                for (std::size_t k = 1; k <= m; ++k) {
                    const Integer prev2 = k < m ? second[m - 1][k] : Integer(0);
                    const Integer prev1 = k < m ? first[m - 1][k] : Integer(0);
                    s2[k] = static_cast<long>(k) * prev2 + second[m - 1][k - 1];
                    s1[k] = first[m - 1][k - 1] - static_cast<long>(m - 1) * prev1;
                }
            }
            second.push_back(std::move(s2));
            first.push_back(std::move(s1));
        }
    }
};

inline std::mutex& stirling_mutex() {
    static std::mutex m;
    return m;
}

inline StirlingTables& stirling_tables() {
    static StirlingTables t;
    return t;
}

}  // namespace detail

/// Stirling number of the second kind: S(n,k) = k S(n-1,k) + S(n-1,k-1), S(0,0) = 1.
inline Integer stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::lock_guard lock(detail::stirling_mutex());
    auto& t = detail::stirling_tables();
    t.grow(static_cast<std::size_t>(n));
    return t.second[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// Signed Stirling number of the first kind: s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
inline Integer stirling1(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::lock_guard lock(detail::stirling_mutex());
    auto& t = detail::stirling_tables();
    t.grow(static_cast<std::size_t>(n));
    return t.first[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------
// Triangle

class Triangle {
public:
    Triangle() = default;

    /// Zero triangle with rows base..last.
    Triangle(int base, std::size_t last) : base_(base), rows_() {
        if (base != 0 && base != 1) throw DomainError("triangle base must be 0 or 1");
        if (static_cast<long>(last) < base) throw DomainError("triangle must have at least one row");
        const std::size_t count = last - static_cast<std::size_t>(base) + 1;
        rows_.reserve(count);
        for (std::size_t i = 0; i < count; ++i) rows_.emplace_back(i + 1, Rational(0));
    }

    static Triangle identity(int base, std::size_t last) {
        Triangle t(base, last);
        for (std::size_t i = 0; i < t.rows_.size(); ++i) t.rows_[i][i] = 1;
        return t;
    }

    int base() const noexcept { return base_; }
    /// Largest row index.
    std::size_t last() const noexcept { return static_cast<std::size_t>(base_) + rows_.size() - 1; }
    std::size_t row_count() const noexcept { return rows_.size(); }

    /// D_{n,k} at logical indices; zero above the diagonal.
    Rational at(std::size_t n, std::size_t k) const {
        if (k > n) return Rational(0);
        return rows_.at(n - static_cast<std::size_t>(base_)).at(k - static_cast<std::size_t>(base_));
    }
    void set(std::size_t n, std::size_t k, Rational v) {
        rows_.at(n - static_cast<std::size_t>(base_)).at(k - static_cast<std::size_t>(base_)) = std::move(v);
    }

    /// Row n as [D_{n,base}, ..., D_{n,n}].
    const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n - static_cast<std::size_t>(base_)); }

    bool has_unit_diagonal() const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i][i] != 1) return false;
        return true;
    }

    /// Rows base..last of this triangle.
    Triangle leading(std::size_t last) const {
        if (last > this->last()) throw DomainError("triangle has too few rows");
        Triangle t;
        t.base_ = base_;
        t.rows_.assign(rows_.begin(), rows_.begin() + static_cast<long>(last - static_cast<std::size_t>(base_) + 1));
        return t;
    }

    friend Triangle operator*(const Triangle& x, const Triangle& y) {
        if (x.base_ != y.base_ || x.rows_.size() != y.rows_.size()) throw DomainError("triangle shapes differ");
        Triangle r;
        r.base_ = x.base_;
        r.rows_.reserve(x.rows_.size());
        for (std::size_t n = 0; n < x.rows_.size(); ++n) {
            std::vector<Rational> row(n + 1, Rational(0));
            for (std::size_t j = 0; j <= n; ++j) {
                if (x.rows_[n][j] == 0) continue;
                for (std::size_t k = 0; k <= j; ++k) row[k] += x.rows_[n][j] * y.rows_[j][k];
            }
            r.rows_.push_back(std::move(row));
        }
        return r;
    }

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    int base_ = 0;
    std::vector<std::vector<Rational>> rows_;
};

enum class TriangleKind { binomial, binomial_inverse, stirling, stirling_inverse };

inline TriangleKind triangle_kind(std::string_view name) {
    if (name == "binomial") return TriangleKind::binomial;
    if (name == "binomial-inverse") return TriangleKind::binomial_inverse;
    if (name == "stirling") return TriangleKind::stirling;
    if (name == "stirling-inverse") return TriangleKind::stirling_inverse;
    throw DomainError("unknown triangle '" + std::string(name) + "'");
}

namespace detail {

inline Triangle build_triangle(TriangleKind kind, std::size_t last, int base) {
    Triangle t(base, last);
    const auto b = static_cast<std::size_t>(base);
    for (std::size_t n = b; n <= last; ++n) {
        for (std::size_t k = b; k <= n; ++k) {
            switch (kind) {
            case TriangleKind::binomial:
                t.set(n, k, binomial(static_cast<long>(n - b), static_cast<long>(k - b)));
                break;
            case TriangleKind::binomial_inverse: {
                Rational c = binomial(static_cast<long>(n - b), static_cast<long>(k - b));
                t.set(n, k, (n - k) % 2 ? -c : c);
                break;
            }
            case TriangleKind::stirling:
                t.set(n, k, Rational(stirling2(static_cast<long>(n), static_cast<long>(k))));
                break;
            case TriangleKind::stirling_inverse:
                t.set(n, k, Rational(stirling1(static_cast<long>(n), static_cast<long>(k))));
                break;
            }
        }
    }
    return t;
}

inline Triangle power_by_squaring(Triangle base, long r) {
    Triangle result = Triangle::identity(base.base(), base.last());
    while (r > 0) {
        if (r & 1) result = result * base;
        r >>= 1;
        if (r) base = base * base;
    }
    return result;
}

/// Cache of D^r keyed by (kind, r, base); each entry is the largest triangle built
/// so far, and requests for fewer rows are served by its leading block.
class TriangleCache {
public:
    Triangle get(TriangleKind kind, long power, std::size_t last, int base) {
        const auto key = std::make_tuple(static_cast<int>(kind), power, base);
        {
            std::lock_guard lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end() && it->second->last() >= last) return it->second->leading(last);
        }
        // build with some headroom so growing prefixes do not rebuild every step
        const std::size_t target = std::max<std::size_t>(last + last / 2, 16);
        auto built = std::make_shared<const Triangle>(power_by_squaring(build_triangle(kind, target, base), power));
        std::lock_guard lock(mutex_);
        auto& slot = cache_[key];
        if (!slot || slot->last() < built->last()) slot = built;
        return slot->leading(last);
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<int, long, int>, std::shared_ptr<const Triangle>> cache_;
};

inline TriangleCache& triangle_cache() {
    static TriangleCache c;
    return c;
}

}  // namespace detail

/// Rows base..last of the named triangle.
inline Triangle triangle_of(TriangleKind kind, std::size_t last, int base) {
    return detail::triangle_cache().get(kind, 1, last, base);
}

inline Triangle triangle_of(std::string_view name, std::size_t last, int base) {
    return triangle_of(triangle_kind(name), last, base);
}

/// Exact matrix power D^r, r >= 1.
inline Triangle triangle_pow(const Triangle& d, long r) {
    if (r < 1) throw DomainError("triangle_pow: exponent must be >= 1");
    return detail::power_by_squaring(d, r);
}

/// b_n = sum_{k=base}^{n} D_{n,k} a_k, one output per input term.
inline Sequence triangle_apply(const Triangle& d, const Sequence& a) {
    if (d.base() != a.offset()) throw DomainError("triangle base does not match sequence offset");
    if (a.empty()) return a;
    const std::size_t last = static_cast<std::size_t>(a.offset()) + a.size() - 1;
    if (d.last() < last) throw DomainError("triangle has too few rows for the sequence");
    std::vector<Rational> out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& row = d.row(i + static_cast<std::size_t>(a.offset()));
        Rational s = 0;
        for (std::size_t j = 0; j <= i; ++j)
            if (row[j] != 0) s += row[j] * a[j];
        out[i] = std::move(s);
    }
    return Sequence(a.offset(), std::move(out));
}

namespace detail {

inline Sequence apply_cached(TriangleKind kind, long power, const Sequence& a) {
    if (a.empty() || power == 0) return a;
    const std::size_t last = static_cast<std::size_t>(a.offset()) + a.size() - 1;
    return triangle_apply(triangle_cache().get(kind, power, last, a.offset()), a);
}

}  // namespace detail

/// BINOMIAL^r for any integer r (r < 0 applies the inverse |r| times).
inline Sequence binomial_xform(const Sequence& a, long r = 1) {
    if (r >= 0) return detail::apply_cached(TriangleKind::binomial, r, a);
    return detail::apply_cached(TriangleKind::binomial_inverse, -r, a);
}

/// STIRLING (S(n,k)) or its inverse (s(n,k)) at the sequence's own offset.
inline Sequence stirling_xform(const Sequence& a, bool inverse = false) {
    return detail::apply_cached(inverse ? TriangleKind::stirling_inverse : TriangleKind::stirling, 1, a);
}

/// STIRLING^r for any integer r.
inline Sequence stirling_xform_pow(const Sequence& a, long r) {
    if (r >= 0) return detail::apply_cached(TriangleKind::stirling, r, a);
    return detail::apply_cached(TriangleKind::stirling_inverse, -r, a);
}

// ---------------------------------------------------------------------------
// Difference tables

/// Rows of the ordinary difference table of a (row 0 is a itself).
inline std::vector<std::vector<Rational>> difference_table(const Sequence& a) {
    std::vector<std::vector<Rational>> rows;
    rows.emplace_back(a.terms().begin(), a.terms().end());
    while (rows.back().size() > 1) {
        const auto& r = rows.back();
        std::vector<Rational> next(r.size() - 1);
        for (std::size_t i = 0; i + 1 < r.size(); ++i) next[i] = r[i + 1] - r[i];
        rows.push_back(std::move(next));
    }
    return rows;
}

/// Leading diagonal of the depth-r difference table: the depth-1 diagonal,
/// taken r times. Applying binomial_xform r times to it recovers a.
inline Sequence diff_table_diagonal(const Sequence& a, long depth) {
    if (depth < 1) throw DomainError("difference table depth must be >= 1");
    Sequence cur = a;
    for (long d = 0; d < depth && !cur.empty(); ++d) {
        std::vector<Rational> diag;
        for (const auto& row : difference_table(cur)) diag.push_back(row.front());
        cur = Sequence(a.offset(), std::move(diag));
    }
    return cur;
}

}  // namespace eigenseq
