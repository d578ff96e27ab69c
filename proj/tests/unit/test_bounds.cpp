#include <gtest/gtest.h>

#include "satura/bounds.hpp"
#include "satura/error.hpp"

using namespace satura;
using namespace satura::bounds;

namespace {

BoundsInput alt_inputs(unsigned long g_upper) {
    BoundsInput in;
    in.n = 8;
    in.r = 15;
    in.d_min = 2;
    in.d_max = 7;
    in.deg_v = mpz_class("7620480000");
    in.g_upper = g_upper;
    in.nu = nu_upper_bound(in.g_upper, in.n);
    return in;
}

mpz_class pow2(unsigned k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

mpq_class q(const char* s) { return mpq_class(s); }

} // namespace

TEST(Bounds, Bezout) {
    const unsigned alt[] = {2, 3, 3, 4, 4, 5, 5, 4, 5, 5, 6, 6, 6, 7, 7};
    EXPECT_EQ(bezout_bound(alt), mpz_class("7620480000"));
    unsigned long long independent = 1;
    for (unsigned d : alt) independent *= d;
    EXPECT_EQ(bezout_bound(alt), mpz_class(std::to_string(independent)));
    const unsigned ones[] = {1, 1, 1};
    EXPECT_EQ(bezout_bound(ones), 1);
    const unsigned two_three[] = {2, 3};
    EXPECT_EQ(bezout_bound(two_three), 6);
    EXPECT_THROW(bezout_bound(std::span<const unsigned>{}), InvalidArgument);
}

TEST(Bounds, Discriminant) {
    EXPECT_EQ(discriminant_degree_bound(alt_inputs(0)), mpz_class("317987389440000"));
    BoundsInput unit;
    EXPECT_EQ(discriminant_degree_bound(unit), 6);
    BoundsInput ex;
    ex.n = 2;
    ex.r = 4;
    ex.d_min = 1;
    ex.d_max = 5;
    ex.deg_v = 15;
    EXPECT_EQ(discriminant_degree_bound(ex), 1860);
}

TEST(Bounds, Nu) {
    EXPECT_EQ(nu_upper_bound(47, 8), mpz_class("7575968400"));
    EXPECT_EQ(nu_upper_bound(0, 1), 1);
    mpz_class omega;
    mpz_bin_uiui(omega.get_mpz_t(), 18709, 9);
    EXPECT_EQ(nu_upper_bound(18700, 8), omega);
    EXPECT_GT(omega, mpz_class("770000000000000000000000000000000"));
    EXPECT_LT(omega, mpz_class("780000000000000000000000000000000"));
}

TEST(Bounds, LuckyExact) {
    auto b = lucky_probability_lower_bound(2, 1);
    EXPECT_TRUE(b.exact);
    EXPECT_EQ(b.lower, q("1/2"));
    for (int p : {2, 7, 1000003}) {
        auto one = lucky_probability_lower_bound(p, 0);
        EXPECT_EQ(one.lower, 1);
        EXPECT_EQ(one.upper, 1);
    }
    EXPECT_EQ(lucky_probability_lower_bound(5, 3).lower, q("64/125"));
}

TEST(Bounds, IntervalBracketsExact) {
    for (int p : {2, 3, 11, 32003})
        for (int nu : {1, 5, 40, 300}) {
            auto exact = lucky_probability_lower_bound(p, nu);
            auto interval = lucky_probability_lower_bound(p, nu, 1);
            ASSERT_TRUE(exact.exact);
            ASSERT_FALSE(interval.exact);
            EXPECT_LE(interval.lower, exact.lower);
            EXPECT_GE(interval.upper, exact.upper);
            EXPECT_GT(interval.lower, 0);
            EXPECT_LT(exact.lower, 1);
        }
}

TEST(Bounds, TinyValuesStayPositive) {
    // (1/2)^300 sits inside [2^-433, 2^-300] after widening to powers of two.
    auto b = lucky_probability_lower_bound(2, 300, 1);
    mpq_class exact(mpz_class(1), mpz_class(1) << 300);
    EXPECT_GT(b.lower, 0);
    EXPECT_LE(b.lower, exact);
    EXPECT_GE(b.upper, exact);
    EXPECT_FALSE(b.underflow);

    auto huge = lucky_probability_lower_bound(2, mpz_class("7575968400"));
    EXPECT_TRUE(huge.underflow);
    EXPECT_EQ(huge.lower, 0);
    EXPECT_GT(huge.upper, 0);
}

TEST(Bounds, LuckyLargePrime) {
    auto b = lucky_probability_lower_bound(pow2(55), mpz_class("7575968400"));
    EXPECT_FALSE(b.exact);
    EXPECT_GE(b.lower, q("9999997897/10000000000"));
    EXPECT_LT(b.upper, 1);
}

TEST(Bounds, SuccessProbability) {
    auto g0 = alt_inputs(18700);
    EXPECT_EQ(g0.g_upper + discriminant_degree_bound(g0), mpz_class("317987389458700"));
    g0.p = pow2(116);
    EXPECT_GE(success_probability_lower_bound(g0).lower, q("99/100"));

    auto g6 = alt_inputs(47);
    EXPECT_EQ(g6.g_upper + discriminant_degree_bound(g6), mpz_class("317987389440047"));
    g6.p = pow2(55);
    EXPECT_GE(success_probability_lower_bound(g6).lower, q("99/100"));

    g6.p = mpz_class("317987389440047");
    EXPECT_EQ(success_probability_lower_bound(g6).lower, 0);
    g6.p = 1000;
    EXPECT_EQ(success_probability_lower_bound(g6).upper, 0);
}

TEST(Bounds, SuccessMonotoneInP) {
    auto in = alt_inputs(47);
    mpq_class prev = 0;
    for (unsigned k = 40; k <= 80; ++k) {
        in.p = pow2(k);
        auto b = success_probability_lower_bound(in);
        EXPECT_GE(b.lower, prev);
        EXPECT_LE(b.lower, b.upper);
        EXPECT_LE(b.upper, 1);
        prev = b.lower;
    }
}

TEST(Bounds, MinPrimeExponent) {
    EXPECT_EQ(min_prime_exponent(alt_inputs(47), q("99/100")), 55u);
    // First crossing of 0.99 for the g_0 inputs, derived by exact evaluation.
    EXPECT_EQ(min_prime_exponent(alt_inputs(18700), q("99/100")), 116u);

    // Toy input: constant 6 and nu = 0, so 1 - 6/2^k >= 0.99 iff 2^k >= 600.
    BoundsInput toy;
    EXPECT_EQ(min_prime_exponent(toy, q("99/100")), 10u);
    toy.g_upper = 94; // constant 100: 2^k >= 10000
    EXPECT_EQ(min_prime_exponent(toy, q("99/100")), 14u);
    EXPECT_THROW(min_prime_exponent(toy, 1), InvalidArgument);
}

TEST(Bounds, Validation) {
    BoundsInput in;
    in.d_min = 3;
    in.d_max = 2;
    EXPECT_THROW(success_probability_lower_bound(in), InvalidArgument);
    in = BoundsInput{};
    in.deg_v = 0;
    EXPECT_THROW(in.validate(), InvalidArgument);
}

TEST(Bounds, Decimal) {
    EXPECT_EQ(to_decimal(q("1/3"), 4), "0.3333");
    EXPECT_EQ(to_decimal(q("-5/2"), 2), "-2.50");
    EXPECT_EQ(to_decimal(q("1/200"), 2), "0.00");
    EXPECT_EQ(to_decimal(7, 0), "7");
}
