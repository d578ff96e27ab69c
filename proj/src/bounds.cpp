#include "satura/bounds.hpp"

#include <mpfr.h>

#include "satura/error.hpp"

namespace satura::bounds {

namespace {

constexpr mpfr_prec_t kPrecision = 512;

// RAII for a single MPFR variable.
class Real {
public:
    Real() { mpfr_init2(v_, kPrecision); }
    ~Real() { mpfr_clear(v_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;

    mpfr_ptr get() { return v_; }

    mpq_class to_rational() {
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

private:
    mpfr_t v_;
};

// Dyadic 2^-k.
mpq_class inverse_power_of_two(const mpz_class& k) {
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k.get_ui());
    return mpq_class(mpz_class(1), den);
}

// exp(-num/den) rounded down or up, so the result bounds the true value.
// Once the value drops below 2^-64 the bound is widened to a power of two,
// since the exact dyadic image of exp would carry an enormous denominator.
// Below 2^-kMaxExponentBits the lower end degrades to 0.
mpq_class exp_neg_ratio(const mpz_class& num, const mpz_class& den, bool round_down, bool& underflow) {
    constexpr unsigned long kMaxExponentBits = 1UL << 20;
    const mpfr_rnd_t toward = round_down ? MPFR_RNDD : MPFR_RNDU;
    const mpfr_rnd_t away = round_down ? MPFR_RNDU : MPFR_RNDD;
    Real a, b, c;
    // A lower result needs the ratio rounded up, and conversely.
    mpfr_set_z(a.get(), num.get_mpz_t(), away);
    mpfr_set_z(b.get(), den.get_mpz_t(), toward);
    mpfr_div(c.get(), a.get(), b.get(), away);
    if (mpfr_cmp_ui(c.get(), 45) >= 0) {
        // exp(-c) = 2^(-c / ln 2); bracket the exponent by integers.
        Real ln2, e;
        mpfr_const_log2(ln2.get(), toward);
        mpfr_div(e.get(), c.get(), ln2.get(), away);
        mpfr_rint(e.get(), e.get(), round_down ? MPFR_RNDU : MPFR_RNDD);
        mpz_class k;
        mpfr_get_z(k.get_mpz_t(), e.get(), MPFR_RNDN); // already integral
        if (round_down && k > kMaxExponentBits) {
            underflow = true;
            return 0;
        }
        if (!round_down && k > kMaxExponentBits) k = kMaxExponentBits;
        return inverse_power_of_two(k);
    }
    mpfr_neg(c.get(), c.get(), MPFR_RNDN); // exact
    mpfr_exp(c.get(), c.get(), toward);
    mpq_class q = c.to_rational();
    if (q > 1) q = 1;
    return q;
}

} // namespace

void BoundsInput::validate() const {
    if (n == 0 || r == 0 || d_min == 0 || d_max == 0) throw InvalidArgument("n, r, D_min, D_max must be positive");
    if (d_min > d_max) throw InvalidArgument("D_min exceeds D_max");
    if (deg_v < 1) throw InvalidArgument("deg V must be at least 1");
    if (g_upper < 0 || nu < 0) throw InvalidArgument("g_upper and nu must be non-negative");
    if (p < 2) throw InvalidArgument("p must be at least 2");
}

mpz_class bezout_bound(std::span<const unsigned> degrees) {
    if (degrees.empty()) throw InvalidArgument("empty degree list");
    mpz_class prod = 1;
    for (unsigned d : degrees) {
        if (d == 0) throw InvalidArgument("degrees must be positive");
        prod *= d;
    }
    return prod;
}

mpz_class discriminant_degree_bound(const BoundsInput& in) {
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, in.n);
    return two_n * (mpz_class(in.d_min) + mpz_class(in.r + in.n) * in.d_max) * in.deg_v;
}

mpz_class nu_upper_bound(const mpz_class& deg_ideal, unsigned n) {
    if (deg_ideal < 0) throw InvalidArgument("degree must be non-negative");
    mpz_class top = deg_ideal + n + 1;
    // C(top, n+1) = prod_{i=1}^{n+1} (top - n - 1 + i) / i, exact at each step.
    mpz_class c = 1;
    for (unsigned i = 1; i <= n + 1; ++i) {
        c *= top - (n + 1) + i;
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i);
    }
    return c;
}

ProbabilityBound lucky_probability_lower_bound(const mpz_class& p, const mpz_class& nu,
                                               std::uint64_t exact_bit_budget) {
    if (p < 2) throw InvalidArgument("p must be at least 2");
    if (nu < 0) throw InvalidArgument("nu must be non-negative");
    ProbabilityBound out;
    if (nu == 0) {
        out.lower = out.upper = 1;
        return out;
    }
    const std::uint64_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);
    if (mpz_fits_ulong_p(nu.get_mpz_t()) && nu.get_ui() <= exact_bit_budget / bits) {
        mpz_class num, den;
        const mpz_class pm1 = p - 1;
        mpz_pow_ui(num.get_mpz_t(), pm1.get_mpz_t(), nu.get_ui());
        mpz_pow_ui(den.get_mpz_t(), p.get_mpz_t(), nu.get_ui());
        out.lower = mpq_class(num, den);
        out.lower.canonicalize();
        out.upper = out.lower;
        return out;
    }
    out.exact = false;
    out.lower = exp_neg_ratio(nu, p - 1, true, out.underflow);
    out.upper = exp_neg_ratio(nu, p, false, out.underflow);
    return out;
}

ProbabilityBound success_probability_lower_bound(const BoundsInput& in) {
    in.validate();
    auto lucky = lucky_probability_lower_bound(in.p, in.nu);
    mpq_class factor = 1 - mpq_class(in.g_upper + discriminant_degree_bound(in), in.p);
    factor.canonicalize();
    if (factor < 0) factor = 0;
    ProbabilityBound out;
    out.exact = lucky.exact;
    out.underflow = lucky.underflow;
    out.lower = lucky.lower * factor;
    out.upper = lucky.upper * factor;
    return out;
}

unsigned min_prime_exponent(BoundsInput in, const mpq_class& target) {
    if (target <= 0 || target >= 1) throw InvalidArgument("target must lie strictly between 0 and 1");
    auto reaches = [&](unsigned k) {
        mpz_ui_pow_ui(in.p.get_mpz_t(), 2, k);
        return success_probability_lower_bound(in).lower >= target;
    };
    constexpr unsigned kLimit = 1U << 16;
    unsigned hi = 1;
    while (!reaches(hi)) {
        if (hi >= kLimit) throw InvalidArgument("target not reached below 2^65536");
        hi *= 2;
    }
    unsigned lo = hi / 2; // reaches(lo) is false, or lo == 0
    while (hi - lo > 1) {
        unsigned mid = lo + (hi - lo) / 2;
        (reaches(mid) ? hi : lo) = mid;
    }
    return hi;
}

std::string to_decimal(const mpq_class& q, unsigned digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled = q.get_num() * scale;
    mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
    const bool neg = scaled < 0;
    std::string s = mpz_class(abs(scaled)).get_str();
    if (digits == 0) return (neg ? "-" : "") + s;
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

} // namespace satura::bounds
