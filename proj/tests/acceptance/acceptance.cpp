// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff every
// gating criterion passes.  `--long` (or SATURA_ACCEPTANCE_LONG=1) adds the
// Alt i = 4..0 counts, which take hours with this engine.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "satura/bounds.hpp"
#include "satura/error.hpp"
#include "satura/experiments.hpp"
#include "satura/groebner.hpp"
#include "satura/hilbert.hpp"
#include "satura/poly_io.hpp"
#include "satura/problems.hpp"
#include "satura/saturate.hpp"

using namespace satura;
using arith::PrimeField;
using arith::Rational;
using arith::RationalField;
using poly::PolyP;
using poly::PolyQ;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Collects failed checks for one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream os;
            os << what << ": got " << got << ", want " << want;
            failures_.push_back(os.str());
        }
    }
    void within(double elapsed_s, double limit_s, const std::string& what) {
        if (elapsed_s > limit_s) {
            std::ostringstream os;
            os << what << " took " << elapsed_s << " s (limit " << limit_s << " s)";
            failures_.push_back(os.str());
        }
    }
    void note(const std::string& s) { notes_.push_back(s); }

    bool ok() const { return failures_.empty(); }
    const std::vector<std::string>& failures() const { return failures_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

struct Criterion {
    std::string id;
    std::string title;
    bool gating = true;
    std::function<void(Check&)> body;
};

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

std::size_t gi(const problems::ProblemInstance& inst, std::size_t i, std::uint64_t p, std::uint64_t seed = 1) {
    return saturate::compute_gi(inst, i, arith::FieldDescriptor::prime(p), seed).value;
}

// ---------------------------------------------------------------- criteria

void monomial_example(Check& c) {
    const auto inst = problems::example_monomial_system();
    for (auto [i, want] : {std::pair<std::size_t, std::size_t>{1, 5}, {0, 6}}) {
        const auto t = Clock::now();
        c.equal(gi(inst, i, 32003), want, "g_" + std::to_string(i) + " over F_32003");
        c.within(seconds_since(t), 1, "g_" + std::to_string(i));
    }
}

void conics(Check& c) {
    const auto inst = problems::conics_affine_system();
    const auto t = Clock::now();
    for (std::uint64_t p : {32003ULL, 65521ULL}) c.equal(gi(inst, 0, p), 18u, "g_0 over F_" + std::to_string(p));
    c.within(seconds_since(t), 30, "both primes");
}

void pstar_hilbert(Check& c) {
    const auto t = Clock::now();
    const auto h = problems::conics_pstar_system();
    auto hf = hilbert::affine_hilbert_function(groebner::buchberger(h), 8);
    c.equal(hf.values[1], 7u, "HF(1)");
    for (unsigned d = 2; d <= 8; ++d) c.equal(hf.values[d], 18u, "HF(" + std::to_string(d) + ")");

    const std::vector<std::size_t> dims2{0, 3, 3, 5, 9, 10}, bounds2{28, 25, 25, 23, 19, 18};
    const std::vector<std::size_t> dims3{6, 25, 38, 63, 66}, bounds3{78, 59, 46, 21, 18};
    std::vector<std::size_t> got_dims, got_bounds;
    for (unsigned e = 0; e <= 5; ++e) {
        auto r = hilbert::jde_dimension(h, 2, e);
        got_dims.push_back(r.dimension);
        got_bounds.push_back(r.upper_bound);
    }
    c.equal(join(got_dims), join(dims2), "d=2 dims");
    c.equal(join(got_bounds), join(bounds2), "d=2 bounds");
    got_dims.clear();
    got_bounds.clear();
    for (unsigned e = 0; e <= 4; ++e) {
        auto r = hilbert::jde_dimension(h, 3, e);
        got_dims.push_back(r.dimension);
        got_bounds.push_back(r.upper_bound);
    }
    c.equal(join(got_dims), join(dims3), "d=3 dims");
    c.equal(join(got_bounds), join(bounds3), "d=3 bounds");
    c.within(seconds_since(t), 300, "Hilbert data");
}

void alt_structure(Check& c) {
    const auto t = Clock::now();
    const auto inst = problems::alt_system();
    c.expect(problems::conjugation_failures(inst).empty(), "conjugation pairs");
    auto rep = problems::verify_base_locus(inst);
    c.equal(rep.checks, 105u, "base-locus identities checked");
    c.equal(rep.failures.size(), 0u, "non-vanishing identities");
    c.within(seconds_since(t), 10, "structural checks");
}

void alt_degrees(Check& c) {
    const auto t = Clock::now();
    auto prof = problems::degree_profile(problems::alt_system());
    c.equal(prof.d_min, 2u, "D_min");
    c.equal(prof.d_max, 7u, "D_max");
    c.equal(bounds::bezout_bound(prof.degrees), mpz_class("7620480000"), "Bezout bound");
    c.within(seconds_since(t), 5, "degree profile");
}

void alt_counts(Check& c) {
    const auto inst = problems::alt_system();
    auto t = Clock::now();
    c.equal(gi(inst, 7, 32771), 7u, "g_7");
    c.within(seconds_since(t), 60, "g_7");
    t = Clock::now();
    c.equal(gi(inst, 6, 32771), 43u, "g_6 over F_32771");
    c.within(seconds_since(t), 60, "g_6");
}

void alt_count_i5(Check& c) {
    const auto t = Clock::now();
    c.equal(gi(problems::alt_system(), 5, 32771), 234u, "g_5 over F_32771");
    c.within(seconds_since(t), 1800, "g_5");
    c.note("g_5 in " + std::to_string(seconds_since(t)) + " s");
}

void alt_counts_long(Check& c) {
    const auto inst = problems::alt_system();
    for (std::size_t i : {4u, 3u, 2u, 1u, 0u}) {
        const auto t = Clock::now();
        const auto want = *experiments::reference_value("alt", i);
        try {
            c.equal(gi(inst, i, 32771), want, "g_" + std::to_string(i));
        } catch (const std::exception& e) {
            c.expect(false, "g_" + std::to_string(i) + ": " + e.what());
        }
        c.note("g_" + std::to_string(i) + " in " + std::to_string(seconds_since(t)) + " s");
    }
}

void alt_hilbert_rows(Check& c) {
    const auto t = Clock::now();
    auto table = experiments::hilbert_table(problems::alt_system(), {7, 6}, 32771, 8, 1);
    c.equal(join(table.rows[0].values), join({1, 3, 6, 7, 7, 7, 7, 7, 7}), "row i=7");
    c.equal(join(table.rows[1].values), join({1, 4, 10, 20, 35, 43, 43, 43, 43}), "row i=6");
    c.within(seconds_since(t), 120, "Hilbert rows");
}

void success_rate(Check& c, std::uint64_t p, double expected) {
    constexpr std::size_t kTrials = 500;
    const auto t = Clock::now();
    auto rep = experiments::run_trials(problems::alt_system(), 6, p, kTrials, 1);
    const double frac = static_cast<double>(rep.successes) / kTrials;
    const double band = 3 * std::sqrt(expected * (1 - expected) / kTrials);
    std::ostringstream os;
    os << "p=" << p << ": " << rep.successes << "/" << kTrials << " = " << frac << ", band " << expected << " +- "
       << band;
    c.note(os.str());
    c.expect(std::abs(frac - expected) <= band, "success fraction outside the band, " + os.str());
    c.equal(rep.histogram.total(), kTrials, "histogram total");
    c.within(seconds_since(t), 1800, "batch p=" + std::to_string(p));
}

void table_one(Check& c) {
    success_rate(c, 251, 0.9592);
    success_rate(c, 8191, 0.9986);
}

void bound_formulas(Check& c) {
    const auto t = Clock::now();
    bounds::BoundsInput in;
    in.n = 8;
    in.r = 15;
    in.d_min = 2;
    in.d_max = 7;
    in.deg_v = mpz_class("7620480000");
    c.equal(bounds::discriminant_degree_bound(in), mpz_class("317987389440000"), "discriminant degree bound");
    c.equal(bounds::nu_upper_bound(47, 8), mpz_class("7575968400"), "nu(47, 8)");
    const mpq_class target(99, 100);
    in.g_upper = 47;
    in.nu = bounds::nu_upper_bound(in.g_upper, in.n);
    c.equal(bounds::min_prime_exponent(in, target), 55u, "exponent for g_6");
    in.g_upper = 18700;
    in.nu = bounds::nu_upper_bound(in.g_upper, in.n);
    const unsigned k0 = bounds::min_prime_exponent(in, target);
    c.expect(k0 == 116 || k0 == 117, "exponent for g_0 is " + std::to_string(k0));
    c.note("g_0 crossing at 2^" + std::to_string(k0));
    c.within(seconds_since(t), 5, "bounds");
}

// ---- property suite

std::vector<PolyP> random_dense(std::mt19937_64& rng, const poly::RingPtr& ring, const PrimeField& f, std::size_t k,
                                unsigned deg) {
    auto monos = poly::monomials_up_to_degree(ring->nvars(), deg);
    std::vector<PolyP> out;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<PolyP::Term> terms;
        for (const auto& m : monos) terms.push_back({rng() % f.modulus(), m});
        out.push_back(PolyP::from_terms(ring, f, std::move(terms)));
    }
    return out;
}

void properties(Check& c) {
    const auto t = Clock::now();
    std::mt19937_64 rng(20260);
    const PrimeField f(101);

    // Basis correctness, shuffle invariance, order invariance of the degree.
    for (int trial = 0; trial < 12; ++trial) {
        auto ring = poly::make_ring({"x", "y", "z"});
        auto gens = random_dense(rng, ring, f, 3, 2);
        auto gb = groebner::buchberger(gens);
        c.expect(groebner::is_groebner_basis(gb.generators), "S-polynomials reduce to zero");
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.push_back(shuffled[0] + shuffled[1]);
        c.expect(groebner::buchberger(shuffled).generators == gb.generators, "shuffled generators, same basis");
        auto gl = groebner::buchberger(gens, poly::MonomialOrder::lex());
        c.expect(groebner::is_groebner_basis(gl.generators), "lex basis");
        c.equal(groebner::ideal_degree(gl), groebner::ideal_degree(gb), "degree under lex vs grevlex");

        // HF monotone, J_d^e bounds decrease in e and reach HF(d).
        auto hf = hilbert::affine_hilbert_function(gb, 6);
        for (unsigned d = 0; d + 1 < hf.values.size(); ++d) c.expect(hf.values[d] <= hf.values[d + 1], "HF monotone");
        if (trial < 4) {
            for (unsigned d = 1; d <= 3; ++d) {
                std::size_t prev = SIZE_MAX;
                bool sharp = false;
                for (unsigned e = 0; e <= 4 && !sharp; ++e) {
                    auto r = hilbert::jde_dimension(gens, d, e);
                    c.expect(r.upper_bound <= prev, "J_d^e bound non-increasing in e");
                    c.expect(r.upper_bound >= hf.values[d], "J_d^e bound is an upper bound");
                    sharp = r.upper_bound == hf.values[d];
                    prev = r.upper_bound;
                }
                c.expect(sharp, "J_d^e bound sharp by e=4 at d=" + std::to_string(d));
            }
        }
    }

    // Brute-force point count equals the degree on split radical systems.
    const PrimeField g(31);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::vector<std::string> names;
        for (std::size_t v = 0; v < n; ++v) names.push_back("u" + std::to_string(v));
        auto ring = poly::make_ring(names);
        std::vector<PolyP> base;
        for (std::size_t v = 0; v < n; ++v) {
            std::set<std::uint64_t> roots;
            const std::size_t k = 1 + rng() % 3;
            while (roots.size() < k) roots.insert(rng() % 31);
            auto prod = PolyP::one(ring, g);
            for (auto r : roots) prod *= PolyP::variable(ring, g, v) - PolyP::constant(ring, g, r);
            base.push_back(prod);
        }
        auto gens = base;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) gens[i] = gens[i] + base[j].scalar_mul(rng() % 31);
        auto gb = groebner::buchberger(gens);
        c.equal(hilbert::find_points_bruteforce(gens).size(), groebner::ideal_degree(gb), "points vs degree");
    }

    // Field axioms.
    for (std::uint64_t p : {7ULL, 32003ULL, (1ULL << 61) - 1}) {
        const PrimeField fp(p);
        for (int k = 0; k < 300; ++k) {
            const auto a = rng() % p, b = rng() % p, d = rng() % p;
            c.expect(fp.mul(a, fp.add(b, d)) == fp.add(fp.mul(a, b), fp.mul(a, d)), "distributivity");
            c.expect(fp.mul(fp.mul(a, b), d) == fp.mul(a, fp.mul(b, d)), "associativity");
            if (a != 0) c.expect(fp.mul(a, fp.inv(a)) == 1, "inverse");
        }
    }

    // Parser round trip.
    auto ring = poly::make_ring({"a", "b", "c"});
    std::uniform_int_distribution<long> coeff(-40, 40);
    for (int k = 0; k < 200; ++k) {
        std::vector<PolyQ::Term> terms;
        for (int j = 0; j < 4; ++j) {
            poly::Monomial m(3);
            for (std::size_t v = 0; v < 3; ++v) m.set(v, static_cast<unsigned>(rng() % 4));
            terms.push_back({Rational(mpz_class(coeff(rng)), mpz_class(1 + std::abs(coeff(rng)))), m});
        }
        auto f = PolyQ::from_terms(ring, RationalField{}, std::move(terms));
        const auto text = poly::print_polynomial(f);
        c.expect(poly::parse_q(text, ring) == f, "round trip of " + text);
    }
    c.within(seconds_since(t), 600, "property suite");
}

void unlucky_primes(Check& c) {
    const auto t = Clock::now();
    const auto gens = problems::lucky_prime_example_ideal();
    const auto lex = poly::MonomialOrder::lex();
    c.expect(saturate::lm_agreement(gens, 7, lex).agree, "agreement at p=7");
    std::vector<std::size_t> disagree;
    for (std::size_t p : {2u, 3u, 5u, 11u, 13u})
        if (!saturate::lm_agreement(gens, p, lex).agree) disagree.push_back(p);
    c.expect(!disagree.empty(), "no disagreement among the unlucky candidates");
    // Frozen after first derivation.
    c.equal(join(disagree), std::string("2,3,5,11,13"), "disagreeing primes");
    c.within(seconds_since(t), 10, "lucky-prime checks");
}

} // namespace

int main(int argc, char** argv) {
    bool long_run = false;
    if (const char* env = std::getenv("SATURA_ACCEPTANCE_LONG")) long_run = std::string(env) == "1";
    std::vector<std::string> only;
    for (int k = 1; k < argc; ++k) {
        const std::string a = argv[k];
        if (a == "--long")
            long_run = true;
        else
            only.push_back(a);
    }

    std::vector<Criterion> criteria = {
        {"1", "monomial example: g_1 = 5, g_0 = 6 over F_32003", true, monomial_example},
        {"2", "plane conics: g_0 = 18 over two primes", true, conics},
        {"3", "conics P*: HF over Q and J_d^e tables", true, pstar_hilbert},
        {"4", "Alt structure: conjugation and 105 base-locus identities", true, alt_structure},
        {"5", "Alt degrees: D_min = 2, D_max = 7, Bezout 7620480000", true, alt_degrees},
        {"6", "Alt counts: g_7 = 7, g_6 = 43", true, alt_counts},
        {"6-ext", "Alt count g_5 = 234 (non-gating)", false, alt_count_i5},
        {"7", "Alt Hilbert rows i = 7, 6 over F_32771", true, alt_hilbert_rows},
        {"8", "Alt g_6 success rates at p = 251 and 8191 (N = 500, 3 sigma)", true, table_one},
        {"9", "bound formulas and prime-size exponents", true, bound_formulas},
        {"10", "property suites", true, properties},
        {"11", "unlucky-prime detection", true, unlucky_primes},
    };
    if (long_run) criteria.push_back({"6-long", "Alt counts g_4 .. g_0 (long run)", false, alt_counts_long});

    bool all_ok = true;
    for (const auto& cr : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
        Check c;
        const auto t = Clock::now();
        try {
            cr.body(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double s = seconds_since(t);
        std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << " (" << s
                  << " s)" << (cr.gating ? "" : " [non-gating]") << '\n';
        for (const auto& n : c.notes()) std::cout << "      " << n << '\n';
        for (const auto& f : c.failures()) std::cout << "      failed: " << f << '\n';
        std::cout.flush();
        if (cr.gating && !c.ok()) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
