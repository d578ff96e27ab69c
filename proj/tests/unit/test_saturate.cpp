#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "satura/poly_io.hpp"
#include "satura/saturate.hpp"

using namespace satura;
using namespace satura::saturate;
using arith::FieldDescriptor;
using arith::PrimeField;
using arith::Rational;
using arith::RationalField;
using poly::MonomialOrder;

namespace {

problems::ProblemInstance univariate(const std::vector<std::string>& polys) {
    problems::ProblemInstance inst;
    inst.name = "univariate";
    inst.ring = poly::make_ring({"x"});
    for (const auto& s : polys) inst.f.push_back(poly::parse_q(s, inst.ring));
    return inst;
}

bool mentions_last_variable(const poly::PolyP& g) {
    const std::size_t t = g.nvars() - 1;
    return std::any_of(g.terms().begin(), g.terms().end(), [&](const auto& term) { return term.mono[t] != 0; });
}

} // namespace

TEST(Sampler, ReproducibleAndInRange) {
    Sampler a(42), b(42);
    for (int k = 0; k < 1000; ++k) {
        auto x = a.below(7);
        EXPECT_EQ(x, b.below(7));
        EXPECT_LT(x, 7u);
        auto y = a.between(-99, 99);
        b.between(-99, 99);
        EXPECT_GE(y, -99);
        EXPECT_LE(y, 99);
    }
    EXPECT_THROW(a.below(0), InvalidArgument);
}

TEST(Sampler, RoughlyUniform) {
    Sampler s(7);
    std::vector<int> counts(5);
    const int draws = 50000;
    for (int k = 0; k < draws; ++k) ++counts[s.below(5)];
    // 10000 expected per cell, sd about 89.
    for (int c : counts) EXPECT_NEAR(c, draws / 5, 500);
}

TEST(Sampler, TrialSeedsDiffer) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(trial_seed(12345, t));
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_EQ(trial_seed(1, 5), trial_seed(1, 5));
}

TEST(DrawParameters, ShapesAndRanges) {
    PrimeField fp(11);
    auto prm = draw_parameters(8, 15, 6, fp, 99);
    EXPECT_EQ(prm.theta.size(), 6u);
    for (const auto& row : prm.theta) EXPECT_EQ(row.size(), 8u);
    EXPECT_EQ(prm.lambda.size(), 2u);
    for (const auto& row : prm.lambda) EXPECT_EQ(row.size(), 15u);
    EXPECT_EQ(prm.mu.size(), 15u);
    EXPECT_EQ(prm.rng_seed, 99u);
    for (const auto& row : prm.lambda)
        for (auto c : row) EXPECT_LT(c, 11u);

    auto q = draw_parameters(2, 4, 1, RationalField{}, 3, {-2, 2});
    for (const auto& c : q.mu) {
        EXPECT_TRUE(c.is_integer());
        EXPECT_LE(abs(c.numerator()), 2);
    }
    EXPECT_THROW(draw_parameters(2, 4, 2, fp, 1), InvalidArgument);
}

TEST(BuildSaturatedSystem, ExampleShape) {
    auto inst = problems::example_monomial_system();
    PrimeField fp(32003);
    auto prm = draw_parameters(2, 4, 1, fp, 5);
    auto sys = build_saturated_system(inst, prm, fp);
    ASSERT_EQ(sys.generators.size(), 3u);
    EXPECT_EQ(sys.ring->variables, (std::vector<std::string>{"x1", "x2", "T"}));
    EXPECT_EQ(sys.generators[0].total_degree(), 1u);
    EXPECT_FALSE(mentions_last_variable(sys.generators[0]));
    EXPECT_FALSE(mentions_last_variable(sys.generators[1]));
    ASSERT_TRUE(mentions_last_variable(sys.generators[2]));
    for (const auto& t : sys.generators[2].terms()) EXPECT_LE(t.mono[2], 1u);
}

TEST(BuildSaturatedSystem, AlwaysNPlusOneGenerators) {
    auto inst = problems::alt_system();
    PrimeField fp(32771);
    for (std::size_t i = 0; i < 8; ++i) {
        auto sys = build_saturated_system(inst, draw_parameters(8, 15, i, fp, i), fp);
        EXPECT_EQ(sys.generators.size(), 9u);
        for (std::size_t k = 0; k + 1 < sys.generators.size(); ++k)
            EXPECT_FALSE(mentions_last_variable(sys.generators[k]));
    }
}

TEST(BuildSaturatedSystem, ZeroMuGivesUnit) {
    auto inst = problems::example_monomial_system();
    PrimeField fp(32003);
    auto prm = draw_parameters(2, 4, 0, fp, 1);
    std::fill(prm.mu.begin(), prm.mu.end(), 0);
    auto sys = build_saturated_system(inst, prm, fp);
    EXPECT_TRUE(sys.generators.back().is_constant());
    EXPECT_TRUE(fp.is_one(sys.generators.back().leading_coeff()));
    auto res = compute_gi(inst, prm, fp);
    EXPECT_TRUE(res.degenerate);
    EXPECT_EQ(res.value, 0u);
}

TEST(BuildSaturatedSystem, RejectsBadShapes) {
    auto inst = problems::example_monomial_system();
    PrimeField fp(32003);
    auto prm = draw_parameters(2, 4, 1, fp, 1);
    prm.mu.pop_back();
    EXPECT_THROW(build_saturated_system(inst, prm, fp), DimensionMismatch);
    prm = draw_parameters(2, 4, 1, fp, 1);
    prm.theta[0].push_back(1);
    EXPECT_THROW(build_saturated_system(inst, prm, fp), DimensionMismatch);
}

TEST(BuildSaturatedSystem, FreshVariableAvoidsCollision) {
    problems::ProblemInstance inst;
    inst.ring = poly::make_ring({"T", "x"});
    inst.f = {poly::parse_q("T*x - 1", inst.ring), poly::parse_q("x - 2", inst.ring)};
    RationalField q;
    auto sys = build_saturated_system(inst, draw_parameters(2, 2, 0, q, 1), q);
    EXPECT_EQ(sys.ring->variables.back(), "T_");
}

// Lambda.f and mu.f inherit the vanishing of f on every base-locus space, so
// the Rabinowitz generator is identically 1 there and no base-locus point
// extends to a solution.
TEST(BuildSaturatedSystem, BaseLocusNeverExtends) {
    auto alt = problems::alt_system();
    RationalField q;
    auto prm = draw_parameters(8, 15, 3, q, 17);
    problems::ProblemInstance combos{"combos", alt.ring, {}, alt.base_locus, std::nullopt};
    auto dot = [&](const std::vector<Rational>& w) {
        poly::PolyQ acc(alt.ring, q);
        for (std::size_t j = 0; j < w.size(); ++j) acc += alt.f[j].scalar_mul(w[j]);
        return acc;
    };
    for (const auto& row : prm.lambda) combos.f.push_back(dot(row));
    combos.f.push_back(dot(prm.mu));
    auto rep = problems::verify_base_locus(combos);
    EXPECT_EQ(rep.checks, 7u * combos.f.size());
    EXPECT_TRUE(rep.ok());
}

TEST(ComputeGi, MonomialExample) {
    auto inst = problems::example_monomial_system();
    auto p = FieldDescriptor::prime(32003);
    EXPECT_EQ(compute_gi(inst, 1, p, 1).value, 5u);
    EXPECT_EQ(compute_gi(inst, 0, p, 1).value, 6u);
    EXPECT_EQ(compute_gi(inst, 1, FieldDescriptor::rationals(), 0).value, 5u);
    EXPECT_EQ(compute_gi(inst, 0, FieldDescriptor::rationals(), 2).value, 6u);
}

// Seed 1 over Q draws Theta = (0, -51): the horizontal line meets the
// quintic's affine part in only 3 points.  Reported, not retried.
TEST(ComputeGi, NonGenericDrawIsReported) {
    auto inst = problems::example_monomial_system();
    auto r = compute_gi(inst, 1, FieldDescriptor::rationals(), 1);
    EXPECT_EQ(r.theta[0][0], "0");
    EXPECT_EQ(r.value, 3u);
}

// (x - 1)(l1 (x + 1) + l2) has one root off the base locus {1, -1}.
TEST(ComputeGi, HandCountedUnivariate) {
    auto inst = univariate({"x^2 - 1", "x - 1"});
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto r = compute_gi(inst, 0, FieldDescriptor::prime(10007), s);
        if (!r.degenerate) EXPECT_EQ(r.value, 1u);
    }
    // Every root of l*(x^2 - 1) lies on the base locus.
    auto all_excised = univariate({"x^2 - 1"});
    auto r = compute_gi(all_excised, 0, FieldDescriptor::prime(10007), 3);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.value, 0u);
}

TEST(ComputeGi, ReproducibleFromSeed) {
    auto inst = problems::alt_system();
    auto p = FieldDescriptor::prime(32771);
    auto a = compute_gi(inst, 7, p, 77);
    auto b = compute_gi(inst, 7, p, 77);
    EXPECT_EQ(a.value, 7u);
    EXPECT_EQ(a.mu, b.mu);
    EXPECT_EQ(a.theta, b.theta);
    EXPECT_EQ(a.basis_size, b.basis_size);
}

TEST(ComputeGi, PermutedPolynomialsSameValue) {
    auto inst = problems::alt_system();
    auto shuffled = inst;
    std::reverse(shuffled.f.begin(), shuffled.f.end());
    auto p = FieldDescriptor::prime(32771);
    for (std::uint64_t s = 0; s < 3; ++s) {
        EXPECT_EQ(compute_gi(shuffled, 6, p, s).value, 43u);
        EXPECT_EQ(compute_gi(inst, 6, p, s + 100).value, 43u);
    }
}

TEST(ComputeGi, PrimeChecks) {
    auto alt = problems::alt_system();
    EXPECT_EQ(max_coefficient(alt), 4);
    EXPECT_THROW(compute_gi(alt, 7, FieldDescriptor::prime(3), 1), PrimeTooSmall);
    EXPECT_THROW(compute_gi(alt, 7, FieldDescriptor::prime(32769), 1), PrimeTooSmall);
    EXPECT_NO_THROW(check_prime(alt, 5));
    auto big = univariate({"7*x - 1"});
    EXPECT_THROW(check_prime(big, 7), PrimeTooSmall);
    EXPECT_NO_THROW(check_prime(big, 11));
    EXPECT_THROW(compute_gi(alt, 8, FieldDescriptor::prime(101), 1), InvalidArgument);
}

TEST(ComputeGi, Timeout) {
    auto alt = problems::alt_system();
    GiOptions opts;
    opts.timeout = std::chrono::milliseconds(1);
    EXPECT_THROW(compute_gi(alt, 3, FieldDescriptor::prime(32771), 1, opts), Timeout);
}

TEST(LmAgreement, LuckyPrimeExample) {
    auto gens = problems::lucky_prime_example_ideal();
    auto lex = MonomialOrder::lex();
    auto at7 = lm_agreement(gens, 7, lex);
    EXPECT_TRUE(at7.agree);
    EXPECT_FALSE(at7.witness);
    EXPECT_EQ(at7.lm_rational, (std::vector<poly::Monomial>{poly::Monomial({0, 5}), poly::Monomial({1, 0})}));

    // Observed mismatches, frozen after first derivation.
    std::vector<std::uint64_t> disagree;
    for (std::uint64_t p : {2, 3, 5, 11, 13})
        if (!lm_agreement(gens, p, lex).agree) disagree.push_back(p);
    EXPECT_EQ(disagree, (std::vector<std::uint64_t>{2, 3, 5, 11, 13}));

    auto at13 = lm_agreement(gens, 13, lex);
    ASSERT_TRUE(at13.witness);
    EXPECT_EQ(*at13.witness, poly::Monomial({0, 5}));
    for (std::uint64_t p : {17, 19, 23, 32003}) EXPECT_TRUE(lm_agreement(gens, p, lex).agree);
}

TEST(LmAgreement, UnitLeadingCoefficientsAgree) {
    auto ring = poly::make_ring({"x", "y"});
    std::vector<poly::PolyQ> gens{poly::parse_q("x^2 - 3*y", ring), poly::parse_q("y^2 - 5*x + 1", ring)};
    for (std::uint64_t p : {5, 7, 101}) EXPECT_TRUE(lm_agreement(gens, p, MonomialOrder::grevlex()).agree);
}

// Content 1 means some coefficient is a unit mod p, so the check never fires
// on a nonzero generator.
TEST(LmAgreement, PrimitiveFormNeverVanishes) {
    auto ring = poly::make_ring({"x", "y"});
    std::vector<poly::PolyQ> gens{poly::parse_q("x - 1", ring), poly::parse_q("14*x*y + 21/5", ring)};
    // Integer-primitive form is 10*x*y + 3, which survives mod 7.
    EXPECT_NO_THROW(lm_agreement(gens, 7, MonomialOrder::grevlex()));
    gens[1] = poly::parse_q("x*y + 7", ring);
    EXPECT_NO_THROW(lm_agreement(gens, 7, MonomialOrder::grevlex()));
    auto ring1 = poly::make_ring({"x"});
    EXPECT_NO_THROW(lm_agreement({poly::parse_q("7*x", ring1)}, 7, MonomialOrder::grevlex()));
}

TEST(LmAgreement, SaturatedSystemOverQ) {
    auto inst = problems::example_monomial_system();
    SaturationParameters<RationalField> prm;
    prm.i = 1;
    prm.theta = {{Rational(3, 2), Rational(2, 3)}};
    prm.lambda = {{Rational(7, 5), Rational(9, 11), Rational(-5, 13), Rational(13, 17)}};
    prm.mu = {Rational(1), Rational(2), Rational(-3), Rational(5)};
    auto res = lm_agreement_test(inst, prm, 32003, MonomialOrder::grevlex());
    EXPECT_TRUE(res.agree);
    EXPECT_THROW(lm_agreement_test(inst, prm, 3, MonomialOrder::grevlex()), PrimeTooSmall);
}
