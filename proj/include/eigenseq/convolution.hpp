#pragma once

/**
 * @file convolution.hpp
 * @brief CONV, EXP-CONV and the F-CONV family (LCM, GCD, AND, OR, XOR).
 *
 * All three act on offset-0 sequences and are causal: output n uses input
 * terms 0..n only. F-CONV is restricted to nonnegative integers with
 * GCD(0, x) = x and LCM(0, x) = 0.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eigenseq/error.hpp"
#include "eigenseq/rational.hpp"
#include "eigenseq/sequence.hpp"

namespace eigenseq {

enum class ConvOp { lcm, gcd, bit_and, bit_or, bit_xor };

inline std::string_view conv_op_name(ConvOp op) {
    switch (op) {
    case ConvOp::lcm: return "LCM";
    case ConvOp::gcd: return "GCD";
    case ConvOp::bit_and: return "AND";
    case ConvOp::bit_or: return "OR";
    case ConvOp::bit_xor: return "XOR";
    }
    return "?";
}

namespace detail {

inline void require_offset0(const Sequence& a, const char* who) {
    if (a.offset() != 0) throw DomainError(std::string(who) + " acts on offset-0 sequences");
}

inline Integer apply_conv_op(ConvOp op, const Integer& x, const Integer& y) {
    switch (op) {
    case ConvOp::lcm: return (x == 0 || y == 0) ? Integer(0) : Integer(lcm(x, y));
    case ConvOp::gcd: return gcd(x, y);
    case ConvOp::bit_and: return x & y;
    case ConvOp::bit_or: return x | y;
    case ConvOp::bit_xor: return x ^ y;
    }
    return 0;
}

}  // namespace detail

/// b_n = sum_{k=0}^{n} a_k a_{n-k}, i.e. B(x) = A(x)^2.
inline Sequence conv_xform(const Sequence& a) {
    detail::require_offset0(a, "CONV");
    std::vector<Rational> b(a.size(), Rational(0));
    for (std::size_t n = 0; n < a.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k) b[n] += a[k] * a[n - k];
    return Sequence(0, std::move(b));
}

/// b_n = sum_{k=0}^{n} C(n,k) a_k a_{n-k}, i.e. e.g.f. B = A^2.
inline Sequence expconv_xform(const Sequence& a) {
    detail::require_offset0(a, "EXP-CONV");
    std::vector<Rational> b(a.size(), Rational(0));
    for (std::size_t n = 0; n < a.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k)
            b[n] += binomial(static_cast<long>(n), static_cast<long>(k)) * a[k] * a[n - k];
    return Sequence(0, std::move(b));
}

/// b_n = sum_{k=0}^{n} F(a_k, a_{n-k}) on nonnegative integers.
inline Sequence fconv_xform(const Sequence& a, ConvOp op) {
    detail::require_offset0(a, "F-CONV");
    std::vector<Integer> v;
    v.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!is_integer(a[i]) || a[i] < 0)
            throw DomainError(std::string(conv_op_name(op)) + "-CONV needs nonnegative integers; term " +
                              std::to_string(i) + " is " + to_string(a[i]));
        v.push_back(numerator_of(a[i]));
    }
    std::vector<Rational> b(a.size(), Rational(0));
    for (std::size_t n = 0; n < v.size(); ++n) {
        Integer s = 0;
        for (std::size_t k = 0; k <= n; ++k) s += detail::apply_conv_op(op, v[k], v[n - k]);
        b[n] = Rational(s);
    }
    return Sequence(0, std::move(b));
}

}  // namespace eigenseq
