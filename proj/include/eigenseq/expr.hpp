#pragma once

/**
 * @file expr.hpp
 * @brief Operator expressions: compositions of R, L, N, M and the transforms.
 *
 * Grammar (whitespace between tokens is ignored):
 *
 *     expression := factor { ("∘" | "o" | ".") factor }
 *     factor     := NAME [ "^" SIGNED-INT ]
 *
 * Names are upper case: R L N M BINOMIAL STIRLING CONV EXP-CONV LCM-CONV
 * GCD-CONV AND-CONV OR-CONV XOR-CONV MOBIUS WEIGH EULER PARTITION INVERT
 * REVERT EXP. "MÖBIUS" is accepted for MOBIUS and "MOBIUS-INV" for
 * MOBIUS^-1. Printing always uses "∘" and ASCII names.
 *
 * Negative powers are allowed for the invertible transforms (BINOMIAL,
 * STIRLING, MOBIUS, EULER, INVERT, EXP, REVERT) and for N. M^-1 is accepted
 * only as the leftmost factor, where it marks the eigen equation T∘a = M∘a;
 * N^-1 in that position likewise reads as T∘a = N∘a.
 *
 * Parse errors carry a 1-based column counted in characters.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eigenseq/convolution.hpp"
#include "eigenseq/error.hpp"
#include "eigenseq/linear.hpp"
#include "eigenseq/number_theory.hpp"
#include "eigenseq/product.hpp"
#include "eigenseq/sequence.hpp"

namespace eigenseq {

enum class Op {
    R, L, N, M,
    binomial, stirling,
    conv, exp_conv, lcm_conv, gcd_conv, and_conv, or_conv, xor_conv,
    mobius, weigh, euler, partition, invert, revert, exp,
};

struct OpInfo {
    Op op;
    std::string_view name;
    bool invertible;
    int native_offset;  // -1: works at either offset
};

inline constexpr OpInfo kOps[] = {
    {Op::R, "R", false, -1},
    {Op::L, "L", false, -1},
    {Op::N, "N", true, -1},
    {Op::M, "M", false, -1},
    {Op::binomial, "BINOMIAL", true, -1},
    {Op::stirling, "STIRLING", true, -1},
    {Op::conv, "CONV", false, 0},
    {Op::exp_conv, "EXP-CONV", false, 0},
    {Op::lcm_conv, "LCM-CONV", false, 0},
    {Op::gcd_conv, "GCD-CONV", false, 0},
    {Op::and_conv, "AND-CONV", false, 0},
    {Op::or_conv, "OR-CONV", false, 0},
    {Op::xor_conv, "XOR-CONV", false, 0},
    {Op::mobius, "MOBIUS", true, 1},
    {Op::weigh, "WEIGH", false, 1},
    {Op::euler, "EULER", true, 1},
    {Op::partition, "PARTITION", false, 1},
    {Op::invert, "INVERT", true, 1},
    {Op::revert, "REVERT", true, 1},
    {Op::exp, "EXP", true, 1},
};

inline const OpInfo& op_info(Op op) {
    for (const auto& i : kOps)
        if (i.op == op) return i;
    throw DomainError("unknown operator");
}

inline bool is_auxiliary(Op op) { return op == Op::R || op == Op::L || op == Op::N || op == Op::M; }

struct Factor {
    Op op;
    long power = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Factors in written order; application runs right to left.
struct TransformExpr {
    std::vector<Factor> factors;
    friend bool operator==(const TransformExpr&, const TransformExpr&) = default;
};

inline std::string to_string(const TransformExpr& e) {
    std::string out;
    for (std::size_t i = 0; i < e.factors.size(); ++i) {
        if (i) out += "∘";
        out += op_info(e.factors[i].op).name;
        if (e.factors[i].power != 1) out += "^" + std::to_string(e.factors[i].power);
    }
    return out;
}

/// Offset the expression's transforms act at: the first fixed native offset,
/// else 1 when STIRLING is present, else 0.
inline int native_offset(const TransformExpr& e) {
    bool stirling = false;
    for (auto it = e.factors.rbegin(); it != e.factors.rend(); ++it) {
        const int o = op_info(it->op).native_offset;
        if (o >= 0) return o;
        if (it->op == Op::stirling) stirling = true;
    }
    return stirling ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    TransformExpr parse() {
        TransformExpr e;
        skip_space();
        if (at_end()) throw ParseError("empty expression", column());
        e.factors.push_back(factor());
        while (true) {
            skip_space();
            if (at_end()) break;
            if (!composition()) throw ParseError("expected '∘' between factors", column());
            skip_space();
            if (at_end()) throw ParseError("expression ends after '∘'", column());
            e.factors.push_back(factor());
        }
        validate(e);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }

    /// 1-based character column of pos_ (UTF-8 continuation bytes are not counted).
    std::size_t column() const { return column_of(pos_); }
    std::size_t column_of(std::size_t byte) const {
        std::size_t col = 1;
        for (std::size_t i = 0; i < byte && i < text_.size(); ++i)
            if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) ++col;
        return col;
    }

    void skip_space() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool composition() {
        static constexpr std::string_view ring = "∘";
        if (text_.substr(pos_, ring.size()) == ring) {
            pos_ += ring.size();
            return true;
        }
        if (text_[pos_] == 'o' || text_[pos_] == '.') {
            ++pos_;
            return true;
        }
        return false;
    }

    static bool name_char(unsigned char c) { return (c >= 'A' && c <= 'Z') || c == '-' || c >= 0x80; }

    Factor factor() {
        const std::size_t start = pos_;
        // "∘" is multibyte too; stop a name at it
        while (!at_end() && name_char(static_cast<unsigned char>(text_[pos_])) && text_.substr(pos_, 3) != "∘") ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name.empty()) throw ParseError("expected an operator name", column_of(start));
        Factor f = lookup(name, start);
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            const std::size_t num_start = pos_;
            if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
            const std::size_t digits = pos_;
            while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
            if (pos_ == digits) throw ParseError("expected an integer power", column_of(num_start));
            long p = 0;
            try {
                p = std::stol(std::string(text_.substr(num_start, pos_ - num_start)));
            } catch (const std::out_of_range&) {
                throw ParseError("power out of range", column_of(num_start));
            }
            if (p == 0) throw ParseError("power must be nonzero", column_of(num_start));
            f.power *= p;
        }
        position_.push_back(start);
        return f;
    }

    Factor lookup(std::string_view name, std::size_t start) const {
        if (name == "MÖBIUS") return {Op::mobius, 1};
        if (name == "MOBIUS-INV" || name == "MÖBIUS-INV") return {Op::mobius, -1};
        for (const auto& i : kOps)
            if (i.name == name) return {i.op, 1};
        throw ParseError("unknown operator '" + std::string(name) + "'", column_of(start));
    }

    void validate(const TransformExpr& e) const {
        std::optional<int> fixed;
        for (std::size_t i = 0; i < e.factors.size(); ++i) {
            const Factor& f = e.factors[i];
            const OpInfo& info = op_info(f.op);
            const std::size_t col = column_of(position_[i]);
            if (f.power < 0 && !info.invertible) {
                const bool equation_marker = f.op == Op::M && f.power == -1 && i == 0 && e.factors.size() > 1;
                if (!equation_marker)
                    throw ParseError(std::string(info.name) + " is not invertible; negative power not allowed" +
                                         (f.op == Op::M ? " (M^-1 may only lead an eigen equation)" : ""),
                                     col);
            }
            if (info.native_offset >= 0) {
                if (fixed && *fixed != info.native_offset)
                    throw ParseError(std::string(info.name) + " acts at offset " + std::to_string(info.native_offset) +
                                         " but an earlier factor acts at offset " + std::to_string(*fixed),
                                     col);
                fixed = info.native_offset;
            }
        }
    }

    std::vector<std::size_t> position_;
};

}  // namespace detail

inline TransformExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

// ---------------------------------------------------------------------------
// Application

namespace detail {

inline Sequence repeat(const Sequence& a, long times, Sequence (*f)(const Sequence&)) {
    Sequence cur = a;
    for (long i = 0; i < times; ++i) cur = f(cur);
    return cur;
}

inline Sequence euler_inv_strict(const Sequence& b) { return euler_inv(b); }

inline Sequence apply_factor(const Factor& f, const Sequence& a) {
    const long p = f.power;
    const long n = p < 0 ? -p : p;
    const auto fconv = [&](ConvOp op) {
        Sequence cur = a;
        for (long i = 0; i < n; ++i) cur = fconv_xform(cur, op);
        return cur;
    };
    switch (f.op) {
    case Op::R: return repeat(a, n, op_R);
    case Op::L: return repeat(a, n, op_L);
    case Op::N: return n % 2 ? op_N(a) : a;
    case Op::M:
        if (p < 0) throw DomainError("M^-1 is an eigen-equation marker and cannot be applied");
        return repeat(a, n, op_M);
    case Op::binomial: return binomial_xform(a, p);
    case Op::stirling: return stirling_xform_pow(a, p);
    case Op::conv: return repeat(a, n, conv_xform);
    case Op::exp_conv: return repeat(a, n, expconv_xform);
    case Op::lcm_conv: return fconv(ConvOp::lcm);
    case Op::gcd_conv: return fconv(ConvOp::gcd);
    case Op::and_conv: return fconv(ConvOp::bit_and);
    case Op::or_conv: return fconv(ConvOp::bit_or);
    case Op::xor_conv: return fconv(ConvOp::bit_xor);
    case Op::mobius: return mobius_xform_pow(a, p);
    case Op::weigh: return repeat(a, n, weigh_xform);
    case Op::euler: return repeat(a, n, p > 0 ? euler_xform : euler_inv_strict);
    case Op::partition: return repeat(a, n, partition_xform);
    case Op::invert: return repeat(a, n, p > 0 ? invert_xform : invert_inv);
    case Op::revert: return n % 2 ? revert_xform(a) : a;
    case Op::exp: return repeat(a, n, p > 0 ? exp_xform : log_xform);
    }
    throw DomainError("unknown operator");
}

}  // namespace detail

/// Applies the factors right to left. Domain errors name the failing factor.
inline Sequence apply_expr(const TransformExpr& e, const Sequence& a) {
    Sequence cur = a;
    for (std::size_t i = e.factors.size(); i-- > 0;) {
        try {
            cur = detail::apply_factor(e.factors[i], cur);
        } catch (const NonIntegralError& err) {
            throw NonIntegralError("factor " + std::to_string(i + 1) + " (" + to_string(TransformExpr{{e.factors[i]}}) +
                                       "): " + err.what(),
                                   err.index());
        } catch (const DomainError& err) {
            throw DomainError("factor " + std::to_string(i + 1) + " (" + to_string(TransformExpr{{e.factors[i]}}) +
                              "): " + err.what());
        }
    }
    return cur;
}

inline Sequence apply_expr(std::string_view text, const Sequence& a) { return apply_expr(parse_expr(text), a); }

}  // namespace eigenseq
