#include <gtest/gtest.h>

#include <random>

#include "satura/poly_io.hpp"

using namespace satura;
using namespace satura::poly;
using arith::PrimeField;
using arith::Rational;
using arith::RationalField;

namespace {

unsigned long binom(unsigned n, unsigned k) {
    unsigned long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned maxe) {
    std::uniform_int_distribution<unsigned> d(0, maxe);
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, d(rng));
    return m;
}

PolyP random_poly(std::mt19937_64& rng, const RingPtr& ring, const PrimeField& f, int terms) {
    std::uniform_int_distribution<std::uint64_t> c(0, f.modulus() - 1);
    std::vector<PolyP::Term> t;
    for (int k = 0; k < terms; ++k) t.push_back({c(rng), random_monomial(rng, ring->nvars(), 3)});
    return PolyP::from_terms(ring, f, std::move(t));
}

} // namespace

TEST(MonomialOrder, Examples) {
    auto g = MonomialOrder::grevlex();
    auto l = MonomialOrder::lex();
    EXPECT_EQ(order_compare(Monomial{2, 0}, Monomial{0, 2}, g), std::strong_ordering::greater);
    EXPECT_EQ(order_compare(Monomial{1, 0}, Monomial{0, 5}, l), std::strong_ordering::greater);
    EXPECT_EQ(order_compare(Monomial{1, 2}, Monomial{3, 0}, g), std::strong_ordering::less);
    EXPECT_EQ(order_compare(Monomial{1, 2}, Monomial{1, 2}, g), std::strong_ordering::equal);
    EXPECT_THROW((order_compare(Monomial{1, 2}, Monomial{1, 2, 0}, g)), DimensionMismatch);
}

TEST(MonomialOrder, TotalMultiplicativeAndWellFounded) {
    std::mt19937_64 rng(3);
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
        for (int k = 0; k < 2000; ++k) {
            auto a = random_monomial(rng, 4, 4), b = random_monomial(rng, 4, 4), c = random_monomial(rng, 4, 4);
            auto ab = ord.compare(a, b);
            EXPECT_EQ(ab == 0, a == b);
            EXPECT_EQ(ab, 0 <=> ord.compare(b, a));
            EXPECT_EQ(ord.compare(a * c, b * c), ab);
            EXPECT_NE(ord.compare(a, Monomial(4)), std::strong_ordering::less);
            if (ord.degree_compatible() && a.total_degree() > b.total_degree()) EXPECT_TRUE(ab > 0);
        }
    }
}

TEST(Monomial, ExponentOverflowIsAnError) {
    Monomial a{65535, 0};
    EXPECT_THROW(a * Monomial({1, 0}), ExponentOverflow);
    EXPECT_THROW((Monomial{70000u}), ExponentOverflow);
}

TEST(Monomial, UpToDegreeCounts) {
    auto m = monomials_up_to_degree(2, 1);
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m[0], (Monomial{1, 0}));
    EXPECT_EQ(m[1], (Monomial{0, 1}));
    EXPECT_EQ(m[2], (Monomial{0, 0}));
    EXPECT_EQ(monomials_up_to_degree(6, 2).size(), 28u);
    EXPECT_EQ(monomials_up_to_degree(9, 3).size(), 220u);
    for (unsigned n = 1; n <= 7; ++n)
        for (unsigned d = 0; d <= 6; ++d) {
            auto v = monomials_up_to_degree(n, d);
            EXPECT_EQ(v.size(), binom(n + d, d));
            for (std::size_t i = 1; i < v.size(); ++i) EXPECT_TRUE(MonomialOrder::grevlex().compare(v[i - 1], v[i]) > 0);
        }
}

TEST(Polynomial, Arithmetic) {
    auto ring = make_ring({"x1", "x2"});
    auto f = parse_q("x1 + 1", ring);
    auto g = parse_q("x1 - 1", ring);
    EXPECT_EQ(print_polynomial(f * g), "x1^2 - 1");
    EXPECT_TRUE((f + (-f)).is_zero());
    EXPECT_EQ(print_polynomial(f - f), "0");
    PrimeField f2(2);
    auto h = parse_polynomial("(x1 + x2)^2", ring, f2);
    EXPECT_EQ(print_polynomial(h), "x1^2 + x2^2");
    EXPECT_EQ(print_polynomial(f.scalar_mul(Rational(3))), "3*x1 + 3");
    auto other = make_ring({"y1", "y2"});
    EXPECT_THROW(f + parse_q("y1", other), RingMismatch);
}

TEST(Polynomial, Evaluate) {
    auto ring = make_ring({"x1", "x2"});
    auto f = parse_q("x1*x2^2", ring);
    std::vector<Rational> pt{Rational(0), Rational(5)};
    EXPECT_TRUE(f.evaluate(pt).is_zero());
    PrimeField f5(5);
    auto g = parse_polynomial("x1 + x2", ring, f5);
    std::vector<std::uint64_t> q{3, 4};
    EXPECT_EQ(g.evaluate(q), 2u);
    EXPECT_EQ(PolyP::one(ring, f5).evaluate(q), 1u);
    std::vector<std::uint64_t> bad{1};
    EXPECT_THROW(g.evaluate(bad), DimensionMismatch);
}

TEST(Polynomial, EvaluateIsAHomomorphism) {
    std::mt19937_64 rng(9);
    PrimeField f(32003);
    auto ring = make_ring({"a", "b", "c"});
    std::uniform_int_distribution<std::uint64_t> c(0, f.modulus() - 1);
    for (int k = 0; k < 100; ++k) {
        auto p = random_poly(rng, ring, f, 6), q = random_poly(rng, ring, f, 6);
        std::vector<std::uint64_t> pt{c(rng), c(rng), c(rng)};
        EXPECT_EQ((p * q).evaluate(pt), f.mul(p.evaluate(pt), q.evaluate(pt)));
        EXPECT_EQ((p + q).evaluate(pt), f.add(p.evaluate(pt), q.evaluate(pt)));
    }
}

TEST(Polynomial, ComposeMatchesEvaluation) {
    std::mt19937_64 rng(21);
    PrimeField f(32003);
    auto ring = make_ring({"a", "b", "c"});
    auto target = make_ring({"s", "t"});
    std::uniform_int_distribution<std::uint64_t> c(0, f.modulus() - 1);
    for (int k = 0; k < 30; ++k) {
        auto p = random_poly(rng, ring, f, 8);
        std::vector<PolyP> images{random_poly(rng, target, f, 3), random_poly(rng, target, f, 3),
                                  random_poly(rng, target, f, 3)};
        auto comp = p.compose(images);
        std::vector<std::uint64_t> st{c(rng), c(rng)};
        std::vector<std::uint64_t> abc{images[0].evaluate(st), images[1].evaluate(st), images[2].evaluate(st)};
        EXPECT_EQ(comp.evaluate(st), p.evaluate(abc));
    }
}

TEST(Parser, Examples) {
    auto ring = make_ring({"x1", "x2"});
    auto m = parse_q("x1^3*x2^2", ring);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m.leading_monomial(), (Monomial{3, 2}));
    EXPECT_EQ(print_polynomial(parse_q("3*x1 - 5/7*x2 + 1", ring)), "3*x1 - 5/7*x2 + 1");
    auto conj = make_ring({"x", "y", "xb", "yb"});
    auto f1 = parse_q("(x - y)*(yb - xb)", conj);
    EXPECT_EQ(f1.size(), 4u);
    EXPECT_EQ(f1, parse_q("-x*xb + x*yb + y*xb - y*yb", conj));
}

TEST(Parser, Errors) {
    auto ring = make_ring({"x1", "x2"});
    try {
        parse_q("x1 + z", ring);
        FAIL();
    } catch (const UnknownVariable& e) {
        EXPECT_EQ(e.name, "z");
        EXPECT_EQ(e.position, 5u);
    }
    EXPECT_THROW(parse_q("x1 +", ring), SyntaxError);
    EXPECT_THROW(parse_q("(x1 + x2", ring), SyntaxError);
    EXPECT_THROW(parse_q("x1 ^", ring), SyntaxError);
    EXPECT_THROW(parse_q("x1 $ 2", ring), SyntaxError);
    EXPECT_THROW(parse_q("1/0", ring), SyntaxError);
    EXPECT_THROW(parse_polynomial("x1/7", ring, PrimeField(7)), SyntaxError);
    EXPECT_THROW(parse_polynomial("1/7*x1", ring, PrimeField(7)), DenominatorVanishes);
}

TEST(Parser, PrintParseRoundTrip) {
    std::mt19937_64 rng(33);
    auto ring = make_ring({"u", "v", "w"});
    std::uniform_int_distribution<long> c(-50, 50);
    for (int k = 0; k < 200; ++k) {
        std::vector<PolyQ::Term> terms;
        for (int t = 0; t < 5; ++t)
            terms.push_back({Rational(mpz_class(c(rng)), mpz_class(1 + std::abs(c(rng)))), random_monomial(rng, 3, 3)});
        auto f = PolyQ::from_terms(ring, RationalField{}, std::move(terms));
        auto text = print_polynomial(f);
        EXPECT_EQ(parse_q(text, ring), f) << text;
        EXPECT_EQ(print_polynomial(parse_q(text, ring)), text);
    }
}

TEST(JsonFormat, RoundTripIsBitExact) {
    auto ring = make_ring({"x", "y"});
    std::vector<PolyQ> polys{parse_q("3*x^2 - 5/7*y + 1", ring), parse_q("x*y - 2", ring)};
    auto s = system_from_polynomials(polys, ring, RationalField{});
    auto text = system_to_json(s).dump();
    EXPECT_EQ(text, R"({"vars":["x","y"],"field":"Q","polys":[[["3",[2,0]],["-5/7",[0,1]],["1",[0,0]]],[["1",[1,1]],["-2",[0,0]]]]})");
    auto back = system_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(system_to_json(back).dump(), text);
    auto again = polynomials_from_system(back, ring, RationalField{});
    EXPECT_EQ(again[0], polys[0]);
    EXPECT_EQ(again[1], polys[1]);
}

TEST(JsonFormat, RejectsMalformed) {
    EXPECT_THROW(system_from_json(nlohmann::json::parse(R"({"vars":["x"]})")), SyntaxError);
    EXPECT_THROW(system_from_json(nlohmann::json::parse(R"({"vars":["x"],"polys":[[["1",[1,2]]]]})")),
                 DimensionMismatch);
    EXPECT_THROW(system_from_json(nlohmann::json::parse(R"({"vars":["x"],"polys":[[["1",[-1]]]]})")), SyntaxError);
}

TEST(TextFormat, ParsesHeaderAndBodies) {
    auto s = system_from_text("# demo\nvars: x, y\nfield: Fp:101\nx^2 - y; x*y - 1\ny^3\n");
    EXPECT_EQ(s.vars, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(s.field, arith::FieldDescriptor::prime(101));
    EXPECT_EQ(s.polys.size(), 3u);
    EXPECT_THROW(system_from_text("x + 1"), SyntaxError);
}
