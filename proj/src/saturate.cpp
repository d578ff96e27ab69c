#include "satura/saturate.hpp"

#include <algorithm>

namespace satura::saturate {

using arith::PrimeField;
using arith::Rational;
using arith::RationalField;
using poly::Polynomial;
using poly::PolyQ;
using poly::RingPtr;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t Sampler::below(std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("empty sampling range");
    // Reject the low residue class that would bias x % bound.
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x;
    do x = gen_();
    while (x < threshold);
    return x % bound;
}

std::int64_t Sampler::between(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InvalidArgument("empty sampling range");
    const auto width = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(width));
}

namespace {

void check_shape(std::size_t n, std::size_t r, std::size_t i) {
    if (n == 0) throw InvalidArgument("instance has no variables");
    if (i >= n) throw InvalidArgument("i must lie in [0, n-1]");
    if (r == 0) throw InvalidArgument("instance has no polynomials");
}

template <class F, class Draw>
SaturationParameters<F> draw_with(std::size_t n, std::size_t r, std::size_t i, std::uint64_t seed, Draw draw) {
    check_shape(n, r, i);
    SaturationParameters<F> out;
    out.i = i;
    out.rng_seed = seed;
    Sampler s(seed);
    out.theta.assign(i, {});
    for (auto& row : out.theta)
        for (std::size_t v = 0; v < n; ++v) row.push_back(draw(s));
    out.lambda.assign(n - i, {});
    for (auto& row : out.lambda)
        for (std::size_t j = 0; j < r; ++j) row.push_back(draw(s));
    for (std::size_t j = 0; j < r; ++j) out.mu.push_back(draw(s));
    return out;
}

std::string fresh_name(const poly::Ring& ring) {
    std::string t = "T";
    while (ring.index_of(t) != ring.nvars()) t += "_";
    return t;
}

Monomial extend(const Monomial& m) {
    auto e = m.exponents();
    e.push_back(0);
    return Monomial(std::span<const unsigned>(e));
}

template <class F>
std::vector<std::string> print_row(const std::vector<typename F::Element>& row, const F& field) {
    std::vector<std::string> out;
    out.reserve(row.size());
    for (const auto& c : row) out.push_back(field.to_string(c));
    return out;
}

template <class F>
GiResult solve(const ProblemInstance& inst, const SaturationParameters<F>& params, const F& field,
               const GiOptions& opts) {
    const auto start = groebner::Clock::now();
    auto sys = build_saturated_system(inst, params, field);
    groebner::Options go;
    go.linear_preelimination = opts.linear_preelimination;
    if (opts.timeout) go.deadline = start + *opts.timeout;
    auto gb = groebner::buchberger(sys.generators, go);

    GiResult res;
    res.i = params.i;
    res.field = field.descriptor();
    res.seed = params.rng_seed.value_or(0);
    res.basis_size = gb.generators.size();
    res.degenerate = gb.is_unit();
    res.value = groebner::ideal_degree(gb);
    res.elapsed_ms = std::chrono::duration<double, std::milli>(groebner::Clock::now() - start).count();
    for (const auto& row : params.theta) res.theta.push_back(print_row(row, field));
    for (const auto& row : params.lambda) res.lambda.push_back(print_row(row, field));
    res.mu = print_row(params.mu, field);
    return res;
}

} // namespace

SaturationParameters<PrimeField> draw_parameters(std::size_t n, std::size_t r, std::size_t i, const PrimeField& field,
                                                 std::uint64_t seed) {
    const std::uint64_t p = field.modulus();
    return draw_with<PrimeField>(n, r, i, seed, [p](Sampler& s) { return s.below(p); });
}

SaturationParameters<RationalField> draw_parameters(std::size_t n, std::size_t r, std::size_t i,
                                                    const RationalField&, std::uint64_t seed,
                                                    RationalDrawRange range) {
    return draw_with<RationalField>(n, r, i, seed, [range](Sampler& s) {
        return Rational(static_cast<long>(s.between(range.lo, range.hi)));
    });
}

template <class F>
SaturatedSystem<F> build_saturated_system(const ProblemInstance& inst, const SaturationParameters<F>& params,
                                          const F& field) {
    const std::size_t n = inst.n(), r = inst.r(), i = params.i;
    if (i >= n) throw DimensionMismatch("i must lie in [0, n-1]");
    if (params.theta.size() != i || params.lambda.size() != n - i || params.mu.size() != r)
        throw DimensionMismatch("parameter shapes do not match the instance");
    for (const auto& row : params.theta)
        if (row.size() != n) throw DimensionMismatch("Theta row length differs from n");
    for (const auto& row : params.lambda)
        if (row.size() != r) throw DimensionMismatch("Lambda row length differs from r");

    auto names = inst.ring->variables;
    names.push_back(fresh_name(*inst.ring));
    SaturatedSystem<F> sys{poly::make_ring(std::move(names)), field, {}, params, inst.name};
    const RingPtr& ring = sys.ring;
    using Term = typename Polynomial<F>::Term;

    // f_j over F in the extended ring, as term lists for cheap combination.
    std::vector<std::vector<Term>> fj;
    fj.reserve(r);
    for (const auto& f : inst.f) {
        std::vector<Term> terms;
        for (const auto& t : f.terms()) terms.push_back({field.from_rational(t.coeff), extend(t.mono)});
        fj.push_back(std::move(terms));
    }
    auto combine = [&](const std::vector<typename F::Element>& w) {
        std::vector<Term> acc;
        for (std::size_t j = 0; j < r; ++j) {
            if (field.is_zero(w[j])) continue;
            for (const auto& t : fj[j]) acc.push_back({field.mul(w[j], t.coeff), t.mono});
        }
        return Polynomial<F>::from_terms(ring, field, std::move(acc));
    };

    for (const auto& row : params.theta) {
        std::vector<Term> terms;
        for (std::size_t v = 0; v < n; ++v) terms.push_back({row[v], Monomial::variable(n + 1, v)});
        terms.push_back({field.neg(field.one()), Monomial(n + 1)});
        sys.generators.push_back(Polynomial<F>::from_terms(ring, field, std::move(terms)));
    }
    for (const auto& row : params.lambda) sys.generators.push_back(combine(row));
    auto muf = combine(params.mu);
    sys.generators.push_back(Polynomial<F>::one(ring, field) -
                             muf.mul_term(field.one(), Monomial::variable(n + 1, n)));
    return sys;
}

template SaturatedSystem<PrimeField> build_saturated_system(const ProblemInstance&,
                                                            const SaturationParameters<PrimeField>&,
                                                            const PrimeField&);
template SaturatedSystem<RationalField> build_saturated_system(const ProblemInstance&,
                                                               const SaturationParameters<RationalField>&,
                                                               const RationalField&);

mpz_class max_coefficient(const ProblemInstance& inst) {
    mpz_class best = 0;
    for (const auto& f : inst.f) {
        const PolyQ g = poly::integer_primitive(f);
        for (const auto& t : g.terms()) {
            mpz_class a = abs(t.coeff.numerator());
            if (a > best) best = a;
        }
    }
    return best;
}

void check_prime(const ProblemInstance& inst, std::uint64_t p) {
    if (!arith::is_prime(p)) throw PrimeTooSmall(std::to_string(p) + " is not prime");
    if (p < 5) throw PrimeTooSmall("primes below 5 are excluded");
    const mpz_class c = max_coefficient(inst);
    if (mpz_class(static_cast<unsigned long>(p)) <= c)
        throw PrimeTooSmall("prime " + std::to_string(p) + " does not exceed the largest coefficient " +
                            c.get_str());
}

GiResult compute_gi(const ProblemInstance& inst, std::size_t i, const FieldDescriptor& field, std::uint64_t seed,
                    const GiOptions& opts) {
    if (i >= inst.n()) throw InvalidArgument("i must lie in [0, n-1]");
    if (field.is_prime()) {
        check_prime(inst, field.modulus);
        PrimeField fp(field.modulus);
        return solve(inst, draw_parameters(inst.n(), inst.r(), i, fp, seed), fp, opts);
    }
    RationalField q;
    return solve(inst, draw_parameters(inst.n(), inst.r(), i, q, seed, opts.rational_range), q, opts);
}

GiResult compute_gi(const ProblemInstance& inst, const SaturationParameters<PrimeField>& params,
                    const PrimeField& field, const GiOptions& opts) {
    check_prime(inst, field.modulus());
    return solve(inst, params, field, opts);
}

LmAgreement lm_agreement(const std::vector<PolyQ>& gens, std::uint64_t p, MonomialOrder ord) {
    PrimeField fp(p);
    std::vector<PolyQ> integral;
    std::vector<poly::PolyP> modular;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].is_zero()) continue;
        integral.push_back(poly::integer_primitive(gens[j]));
        modular.push_back(poly::reduce_mod_p(integral.back(), fp));
        if (modular.back().is_zero())
            throw GeneratorVanishesModP("generator " + std::to_string(j) + " vanishes modulo " + std::to_string(p));
    }
    if (integral.empty()) throw InvalidArgument("no nonzero generators");

    LmAgreement out;
    out.lm_rational = groebner::buchberger(integral, ord).leading_monomials;
    out.lm_modular = groebner::buchberger(modular, ord).leading_monomials;
    out.agree = out.lm_rational == out.lm_modular;
    if (!out.agree) {
        auto missing_from = [](const std::vector<Monomial>& a, const std::vector<Monomial>& b)
            -> std::optional<Monomial> {
            for (const auto& m : a)
                if (std::find(b.begin(), b.end(), m) == b.end()) return m;
            return std::nullopt;
        };
        out.witness = missing_from(out.lm_rational, out.lm_modular);
        if (!out.witness) out.witness = missing_from(out.lm_modular, out.lm_rational);
    }
    return out;
}

LmAgreement lm_agreement_test(const ProblemInstance& inst, const SaturationParameters<RationalField>& params,
                              std::uint64_t p, MonomialOrder ord) {
    check_prime(inst, p);
    auto sys = build_saturated_system(inst, params, RationalField{});
    return lm_agreement(sys.generators, p, ord);
}

} // namespace satura::saturate
