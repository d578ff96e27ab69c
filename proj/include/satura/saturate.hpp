#pragma once

// Saturated systems <Theta.x - 1, Lambda.f, 1 - (mu.f) T> and the g_i counts
// obtained from their reduced bases.

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "satura/groebner.hpp"
#include "satura/problems.hpp"

namespace satura::saturate {

using arith::FieldDescriptor;
using poly::Monomial;
using poly::MonomialOrder;
using problems::ProblemInstance;

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of trial t in a batch; independent of how trials are scheduled.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t t) { return master ^ splitmix64(t); }

/// Uniform integers from a seeded mt19937_64, by rejection so the stream is
/// identical across standard libraries.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform on [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 gen_;
};

/// Integer range for parameter entries drawn over Q.
struct RationalDrawRange {
    std::int64_t lo = -99;
    std::int64_t hi = 99;
};

template <class F>
struct SaturationParameters {
    using Element = typename F::Element;

    std::size_t i = 0;
    std::vector<std::vector<Element>> theta;  // i x n
    std::vector<std::vector<Element>> lambda; // (n - i) x r
    std::vector<Element> mu;                  // r
    std::optional<std::uint64_t> rng_seed;
};

/// Uniform draw over the whole of Z/pZ.
SaturationParameters<arith::PrimeField> draw_parameters(std::size_t n, std::size_t r, std::size_t i,
                                                        const arith::PrimeField& field, std::uint64_t seed);

/// Integer entries in `range`.
SaturationParameters<arith::RationalField> draw_parameters(std::size_t n, std::size_t r, std::size_t i,
                                                           const arith::RationalField& field, std::uint64_t seed,
                                                           RationalDrawRange range = {});

template <class F>
struct SaturatedSystem {
    poly::RingPtr ring; // instance variables followed by T
    F field;
    std::vector<poly::Polynomial<F>> generators;
    SaturationParameters<F> parameters;
    std::string instance_name;
};

/// Generators in the order: i affine-linear forms, n - i combinations of f,
/// then the Rabinowitz polynomial.  The fresh variable is named T unless the
/// instance already uses that name.  Throws DimensionMismatch,
/// DenominatorVanishes.
template <class F>
SaturatedSystem<F> build_saturated_system(const ProblemInstance& inst, const SaturationParameters<F>& params,
                                          const F& field);

extern template SaturatedSystem<arith::PrimeField> build_saturated_system(
    const ProblemInstance&, const SaturationParameters<arith::PrimeField>&, const arith::PrimeField&);
extern template SaturatedSystem<arith::RationalField> build_saturated_system(
    const ProblemInstance&, const SaturationParameters<arith::RationalField>&, const arith::RationalField&);

/// Largest absolute coefficient over the integer-primitive forms of f.
mpz_class max_coefficient(const ProblemInstance& inst);

/// Throws PrimeTooSmall unless p >= 5, p is prime and p exceeds max_coefficient.
void check_prime(const ProblemInstance& inst, std::uint64_t p);

struct GiOptions {
    std::optional<std::chrono::milliseconds> timeout;
    RationalDrawRange rational_range;
    bool linear_preelimination = true;
};

struct GiResult {
    std::size_t value = 0;
    std::size_t i = 0;
    FieldDescriptor field;
    std::uint64_t seed = 0;
    double elapsed_ms = 0;
    std::size_t basis_size = 0;
    bool degenerate = false; // unit ideal: the draw missed every solution
    /// Drawn entries as printed field elements, row-major.
    std::vector<std::vector<std::string>> theta, lambda;
    std::vector<std::string> mu;
};

/// Dimension of the quotient by the saturated system for parameters drawn from
/// `seed`, under grevlex.  Throws InvalidArgument for i outside [0, n-1],
/// PrimeTooSmall, NotZeroDimensional, Timeout.
GiResult compute_gi(const ProblemInstance& inst, std::size_t i, const FieldDescriptor& field, std::uint64_t seed,
                    const GiOptions& opts = {});

/// Same computation with caller-supplied parameters.
GiResult compute_gi(const ProblemInstance& inst, const SaturationParameters<arith::PrimeField>& params,
                    const arith::PrimeField& field, const GiOptions& opts = {});

struct LmAgreement {
    bool agree = false;
    std::optional<Monomial> witness; // in exactly one of the two sets
    std::vector<Monomial> lm_rational;
    std::vector<Monomial> lm_modular;
};

/// Compares the leading monomials of the reduced bases of <gens> over Q and of
/// the integer-primitive generators reduced mod p.  No size condition on p is
/// imposed here.  Throws GeneratorVanishesModP, InvalidModulus.
LmAgreement lm_agreement(const std::vector<poly::PolyQ>& gens, std::uint64_t p, MonomialOrder ord);

/// lm_agreement on the saturated system built from rational parameters.
/// Throws PrimeTooSmall, GeneratorVanishesModP.
LmAgreement lm_agreement_test(const ProblemInstance& inst, const SaturationParameters<arith::RationalField>& params,
                              std::uint64_t p, MonomialOrder ord);

} // namespace satura::saturate
