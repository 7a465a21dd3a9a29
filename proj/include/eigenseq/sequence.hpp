#pragma once

/**
 * @file sequence.hpp
 * @brief Finite exact sequence prefixes and the auxiliary operators R, L, N, M.
 *
 * A Sequence is an immutable prefix [a_o, a_{o+1}, ...] whose first logical
 * index o (the offset) is 0 or 1. Transforms take their index conventions
 * from the offset: BINOMIAL-style sums start at index 0, divisor-style and
 * product-style transforms start at index 1.
 *
 * Auxiliary operators act on the prefix at its own offset:
 *
 *     R [a_o, a_{o+1}, ...] = [1, a_o, a_{o+1}, ...]
 *     L [a_o, a_{o+1}, ...] = [a_{o+1}, a_{o+2}, ...]
 *     N [a_o, a_{o+1}, ...] = [a_o, -a_{o+1}, -a_{o+2}, ...]
 *     M [a_o, a_{o+1}, ...] = [a_{o+1}, 2a_{o+1}, 2a_{o+2}, ...]
 *
 * M keeps the length of its input: the term that is dropped at the front is
 * re-used as the new first term.
 */

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eigenseq/error.hpp"
#include "eigenseq/rational.hpp"

namespace eigenseq {

class Sequence {
public:
    Sequence() = default;

    Sequence(int offset, std::vector<Rational> terms) : offset_(offset), terms_(std::move(terms)) {
        if (offset_ != 0 && offset_ != 1) throw DomainError("sequence offset must be 0 or 1");
    }

    Sequence(int offset, std::initializer_list<long> terms) : Sequence(offset, std::vector<Rational>{}) {
        terms_.reserve(terms.size());
        for (long t : terms) terms_.emplace_back(t);
    }

    static Sequence ones(int offset, std::size_t n) { return Sequence(offset, std::vector<Rational>(n, Rational(1))); }
    static Sequence zeros(int offset, std::size_t n) { return Sequence(offset, std::vector<Rational>(n, Rational(0))); }

    int offset() const noexcept { return offset_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    std::span<const Rational> terms() const noexcept { return terms_; }

    /// Term by position in the prefix (0-based, independent of offset).
    const Rational& operator[](std::size_t pos) const { return terms_[pos]; }

    /// Term by logical index (index >= offset).
    const Rational& at(long index) const {
        if (index < offset_ || static_cast<std::size_t>(index - offset_) >= terms_.size())
            throw DomainError("index " + std::to_string(index) + " outside the known prefix");
        return terms_[static_cast<std::size_t>(index - offset_)];
    }

    bool is_integral() const {
        for (const auto& t : terms_)
            if (!is_integer(t)) return false;
        return true;
    }

    /// First n terms (or all, if shorter).
    Sequence prefix(std::size_t n) const {
        if (n >= terms_.size()) return *this;
        return Sequence(offset_, std::vector<Rational>(terms_.begin(), terms_.begin() + static_cast<long>(n)));
    }

    /// Copy with the term at position pos replaced.
    Sequence with_term(std::size_t pos, Rational value) const {
        auto t = terms_;
        if (pos >= t.size()) t.resize(pos + 1, Rational(0));
        t[pos] = std::move(value);
        return Sequence(offset_, std::move(t));
    }

    Sequence with_offset(int offset) const { return Sequence(offset, terms_); }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    int offset_ = 0;
    std::vector<Rational> terms_;
};

/// Comma-separated terms without spaces.
inline std::string to_string(const Sequence& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        out += to_string(a[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Sequence& a) {
    return os << "[" << to_string(a) << "]@" << a.offset();
}

/// Parses a comma list ("1,-2,3/4"). Text containing newlines is read as a
/// file: terms may be separated by commas or line breaks and blank lines are
/// skipped. In a single-line list an empty item is an error.
inline std::vector<Rational> parse_terms(std::string_view text) {
    std::vector<Rational> out;
    const bool multiline = text.find('\n') != std::string_view::npos;
    const auto is_sep = [](char c) { return c == ',' || c == '\n'; };
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end])) ++end;
        std::size_t b = pos, e = end;
        while (b < e && is_space(text[b])) ++b;
        while (e > b && is_space(text[e - 1])) --e;
        if (b < e)
            out.push_back(parse_rational(text.substr(b, e - b), b));
        else if (!multiline && !text.empty())
            throw ParseError("empty term", b);
        pos = end + 1;
    }
    return out;
}

inline Sequence parse_sequence(std::string_view text, int offset) { return Sequence(offset, parse_terms(text)); }

// ---------------------------------------------------------------------------
// Auxiliary operators

inline Sequence op_R(const Sequence& a) {
    std::vector<Rational> t;
    t.reserve(a.size() + 1);
    t.emplace_back(1);
    for (const auto& x : a.terms()) t.push_back(x);
    return Sequence(a.offset(), std::move(t));
}

inline Sequence op_L(const Sequence& a) {
    if (a.empty()) throw DomainError("L needs at least one term");
    return Sequence(a.offset(), std::vector<Rational>(a.terms().begin() + 1, a.terms().end()));
}

inline Sequence op_N(const Sequence& a) {
    if (a.empty()) throw DomainError("N needs at least one term");
    std::vector<Rational> t(a.terms().begin(), a.terms().end());
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = -t[i];
    return Sequence(a.offset(), std::move(t));
}

inline Sequence op_M(const Sequence& a) {
    if (a.size() < 2) throw DomainError("M needs at least two terms");
    std::vector<Rational> t;
    t.reserve(a.size());
    t.push_back(a[1]);
    for (std::size_t i = 1; i < a.size(); ++i) t.push_back(2 * a[i]);
    return Sequence(a.offset(), std::move(t));
}

/// True iff the first n terms and the offsets agree.
inline bool prefix_eq(const Sequence& a, const Sequence& b, std::size_t n) {
    if (a.size() < n || b.size() < n) throw DomainError("prefix_eq: fewer than n terms available");
    if (a.offset() != b.offset()) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace eigenseq
