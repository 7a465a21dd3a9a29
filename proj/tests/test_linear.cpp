// BINOMIAL, STIRLING, triangles and difference tables.
#include <gtest/gtest.h>

#include "eigenseq/linear.hpp"
#include "eigenseq/power_series.hpp"
#include "support.hpp"

using namespace eigenseq;

namespace {

Sequence S(int offset, std::initializer_list<long> v) {
    std::vector<Rational> t(v.begin(), v.end());
    return Sequence(offset, t);
}

std::vector<Rational> R(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Stirling, SecondKind) {
    EXPECT_EQ(stirling2(4, 2), 7);
    EXPECT_EQ(stirling2(3, 1), 1);
    EXPECT_EQ(stirling2(0, 0), 1);
    for (long n = 0; n <= 14; ++n) {
        EXPECT_EQ(stirling2(n, n), 1);
        for (long k = 0; k <= n; ++k) EXPECT_EQ(stirling2(n, k), oracle::stirling2_explicit(n, k)) << n << "," << k;
    }
}

TEST(Stirling, FirstKind) {
    EXPECT_EQ(stirling1(3, 2), -3);
    for (long n = 0; n <= 8; ++n) EXPECT_EQ(stirling1(n, n), 1);
    Integer s = 0;
    for (long k = 0; k <= 4; ++k) s += stirling1(4, k) * stirling2(k, 2);
    EXPECT_EQ(s, 0);
    for (long n = 0; n <= 10; ++n)
        for (long m = 0; m <= 10; ++m) {
            Integer sum = 0;
            for (long k = 0; k <= 10; ++k) sum += stirling1(n, k) * stirling2(k, m);
            EXPECT_EQ(sum, n == m ? 1 : 0);
        }
}

TEST(Triangle, Rows) {
    EXPECT_EQ(triangle_of("binomial", 3, 0).row(3), R({1, 3, 3, 1}));
    EXPECT_EQ(triangle_of("stirling", 4, 1).row(4), R({1, 7, 6, 1}));
    EXPECT_EQ(triangle_of("binomial-inverse", 2, 0).row(2), R({1, -2, 1}));
    EXPECT_THROW(triangle_of("pascal", 3, 0), DomainError);
}

TEST(Triangle, PowerMatchesMatrixProduct) {
    const std::size_t n = 6;
    const Triangle d = triangle_of("binomial", n, 0);
    oracle::Matrix m(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t k = 0; k <= i; ++k) m[i][k] = d.at(i, k);
    const Triangle d2 = triangle_pow(d, 2);
    const auto m2 = oracle::matmul(m, m);
    const auto m3 = oracle::matmul(m2, m);
    const Triangle d3 = triangle_pow(d, 3);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t k = 0; k <= i; ++k) {
            EXPECT_EQ(d2.at(i, k), m2[i][k]);
            EXPECT_EQ(d2.at(i, k), binomial(static_cast<long>(i), static_cast<long>(k)) * Rational(Integer(1) << (i - k)));
            EXPECT_EQ(d3.at(i, k), m3[i][k]);
        }
    EXPECT_TRUE(d2.has_unit_diagonal());
    const Triangle s1 = triangle_pow(triangle_of("stirling", 7, 1), 1);
    EXPECT_EQ(s1.row(7), triangle_of("stirling", 7, 1).row(7));
}

TEST(Triangle, CacheIsInvisible) {
    const Triangle big = triangle_of("stirling", 20, 1);
    const Triangle small = triangle_of("stirling", 5, 1);
    EXPECT_EQ(small.last(), 5u);
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(small.row(n), big.row(n));
}

TEST(Triangle, Apply) {
    EXPECT_EQ(triangle_apply(triangle_of("binomial", 3, 0), S(0, {1, 1, 1, 1})), S(0, {1, 2, 4, 8}));
    EXPECT_EQ(triangle_apply(triangle_pow(triangle_of("binomial", 3, 0), 2), S(0, {1, 1, 1, 1})), S(0, {1, 3, 9, 27}));
    // Stirling on ones gives the Bell numbers B_1..B_5
    EXPECT_EQ(triangle_apply(triangle_of("stirling", 5, 1), S(1, {1, 1, 1, 1, 1})), S(1, {1, 2, 5, 15, 52}));
    EXPECT_THROW(triangle_apply(triangle_of("binomial", 3, 0), S(1, {1, 1, 1})), DomainError);
}

TEST(Binomial, Examples) {
    EXPECT_EQ(binomial_xform(S(0, {1, 1, 2, 5, 15})), S(0, {1, 2, 5, 15, 52}));
    EXPECT_EQ(binomial_xform(S(0, {1, 1, 1, 1}), 2), S(0, {1, 3, 9, 27}));
    EXPECT_EQ(binomial_xform(S(0, {1, 2, 4, 8}), -1), S(0, {1, 1, 1, 1}));
    EXPECT_EQ(binomial_xform(S(1, {1, 1, 1})), S(1, {1, 2, 4}));
}

TEST(Binomial, PowersInvert) {
    oracle::Random rng(101);
    for (long r = -3; r <= 3; ++r) {
        if (r == 0) continue;
        const Sequence a = rng.rationals(0, 16);
        EXPECT_EQ(binomial_xform(binomial_xform(a, r), -r), a) << r;
        const Sequence z = rng.integers(0, 12, -50, 50);
        EXPECT_TRUE(binomial_xform(z, r).is_integral());
    }
}

TEST(Binomial, ThreeFormsAgree) {
    oracle::Random rng(102);
    const std::size_t N = 15;
    const PowerSeries one = PowerSeries::constant(1, N);
    const PowerSeries x = PowerSeries::x(N);
    const PowerSeries inv = ps_div(one, one - x);
    for (int i = 0; i < 4; ++i) {
        const Sequence a = rng.rationals(0, N + 1);
        const Sequence direct = oracle::binomial_by_sum(a);
        EXPECT_EQ(binomial_xform(a), direct);
        EXPECT_EQ(seq_of_egf(PowerSeries::exp_linear(1, N) * egf_of(a, N), 0), direct);
        EXPECT_EQ(seq_of_ogf(inv * ps_compose(ogf_of(a, N), x * inv), 0), direct);
    }
}

TEST(StirlingXform, Examples) {
    EXPECT_EQ(stirling_xform(S(1, {1, 1, 2, 6, 26, 152})), S(1, {1, 2, 6, 26, 152, 1144}));
    // offset 0: term 0 passes through
    EXPECT_EQ(stirling_xform(S(0, {7, 1, 1, 1})), S(0, {7, 1, 2, 5}));
    oracle::Random rng(103);
    for (int i = 0; i < 5; ++i) {
        const Sequence a = rng.integers(1, 10, -20, 20);
        EXPECT_EQ(stirling_xform(stirling_xform(a), true), a);
        EXPECT_EQ(stirling_xform(stirling_xform(a, true)), a);
        EXPECT_EQ(stirling_xform_pow(stirling_xform_pow(a, 2), -2), a);
        EXPECT_TRUE(stirling_xform(a, true).is_integral());
    }
}

TEST(StirlingXform, EgfComposition) {
    oracle::Random rng(104);
    const std::size_t N = 10;
    const PowerSeries u = PowerSeries::exp_linear(1, N) - PowerSeries::constant(1, N);
    for (int i = 0; i < 3; ++i) {
        const Sequence a = rng.rationals(1, N);
        EXPECT_EQ(seq_of_egf(ps_compose(egf_of(a, N), u), 1), stirling_xform(a));
    }
}

// STIRLING∘R = R∘BINOMIAL∘STIRLING with both sides on offset-0 sequences,
// where STIRLING keeps a_0 and uses S(n,k) for n,k >= 1.
TEST(StirlingXform, CompositionIdentityAtOffsetZero) {
    oracle::Random rng(105);
    for (int i = 0; i < 10; ++i) {
        const Sequence a = rng.integers(0, 12, -9, 9);
        EXPECT_EQ(stirling_xform(op_R(a)).prefix(12), op_R(binomial_xform(stirling_xform(a))).prefix(12));
    }
}

TEST(DiffTable, Diagonal) {
    EXPECT_EQ(diff_table_diagonal(S(0, {1, 3, 9, 27}), 1), S(0, {1, 2, 4, 8}));
    EXPECT_EQ(diff_table_diagonal(S(0, {1, 2, 4, 8}), 1), S(0, {1, 1, 1, 1}));
    EXPECT_EQ(diff_table_diagonal(S(0, {1, 3, 9, 27}), 2), S(0, {1, 1, 1, 1}));
    const auto rows = difference_table(S(0, {1, 3, 9, 27}));
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[1], R({2, 6, 18}));
    EXPECT_EQ(rows[3], R({8}));
}

TEST(DiffTable, InvertsBinomialPowers) {
    oracle::Random rng(106);
    for (long r = 1; r <= 3; ++r) {
        const Sequence a = rng.rationals(0, 10);
        EXPECT_EQ(binomial_xform(diff_table_diagonal(a, r), r), a);
        EXPECT_EQ(diff_table_diagonal(binomial_xform(a, r), r), a);
    }
}
