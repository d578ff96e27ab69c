#pragma once

// Exact evaluation of the degree and probability bounds for randomized
// modular computation of g_i.

#include <cstdint>
#include <span>
#include <string>

#include <gmpxx.h>

namespace satura::bounds {

struct BoundsInput {
    unsigned n = 1;      // variables
    unsigned r = 1;      // polynomials
    unsigned d_min = 1;
    unsigned d_max = 1;
    mpz_class deg_v = 1;   // Bezout bound on deg V
    mpz_class g_upper = 0; // upper bound on g_i
    mpz_class p = 2;
    mpz_class nu = 0;

    /// Throws InvalidArgument when an invariant fails.
    void validate() const;
};

/// Product of the degrees.  Throws InvalidArgument for an empty list or a zero entry.
mpz_class bezout_bound(std::span<const unsigned> degrees);

/// 2^n * (D_min + (r + n) * D_max) * deg V.
mpz_class discriminant_degree_bound(const BoundsInput& in);

/// C(deg + n + 1, n + 1).
mpz_class nu_upper_bound(const mpz_class& deg_ideal, unsigned n);

/// A probability known to lie in [lower, upper]; lower == upper when exact.
struct ProbabilityBound {
    mpq_class lower;
    mpq_class upper;
    bool exact = true;
    bool underflow = false; // true lower end is positive but below 2^-1048576; reported as 0
};

/// Above this many bits of output the power ((p-1)/p)^nu is bracketed instead.
inline constexpr std::uint64_t kExactBitBudget = std::uint64_t{1} << 20;

/// ((p-1)/p)^nu exactly when small, else the rigorous bracket
/// [exp(-nu/(p-1)), exp(-nu/p)] with outward rounding (widened to powers of
/// two once it falls below 2^-64).
ProbabilityBound lucky_probability_lower_bound(const mpz_class& p, const mpz_class& nu,
                                               std::uint64_t exact_bit_budget = kExactBitBudget);

/// lucky * max(0, 1 - (g_upper + discriminant bound) / p).
ProbabilityBound success_probability_lower_bound(const BoundsInput& in);

/// Smallest k such that the guaranteed lower end of the success bound at
/// p = 2^k reaches `target`.  Throws InvalidArgument unless 0 < target < 1.
unsigned min_prime_exponent(BoundsInput in, const mpq_class& target);

/// Decimal expansion of q truncated toward zero to `digits` places.
std::string to_decimal(const mpq_class& q, unsigned digits = 12);

} // namespace satura::bounds
