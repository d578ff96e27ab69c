#include "satura/polynomial.hpp"

namespace satura::poly {

PolyQ integer_primitive(const PolyQ& f) {
    if (f.is_zero()) return f;
    mpz_class den_lcm = 1;
    for (const auto& t : f.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.denominator().get_mpz_t());
    mpz_class content = 0;
    for (const auto& t : f.terms()) {
        mpz_class v = t.coeff.numerator() * (den_lcm / t.coeff.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    if (f.leading_coeff().sign() < 0) content = -content;
    return f.scalar_mul(arith::Rational(den_lcm, content));
}

} // namespace satura::poly
