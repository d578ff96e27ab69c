#include "satura/arith.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace satura::arith {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e != 0) {
        if ((e & 1) != 0) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto q : kSmall) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are sufficient for all n < 3.3 * 10^24.
    for (auto a : kSmall) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::string FieldDescriptor::to_string() const {
    if (kind == Kind::Rationals) return "Q";
    return "Fp:" + std::to_string(modulus);
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
    if (text == "Q" || text == "QQ") return rationals();
    if (text.starts_with("Fp:")) {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
            throw InvalidArgument("malformed field descriptor '" + std::string(text) + "'");
        return prime(p);
    }
    throw InvalidArgument("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroInversion();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    std::string_view unsigned_num = num;
    if (!unsigned_num.empty() && (unsigned_num[0] == '-' || unsigned_num[0] == '+'))
        unsigned_num.remove_prefix(1);
    if (!is_digits(unsigned_num) || !is_digits(den))
        throw SyntaxError("malformed rational '" + std::string(text) + "'", 0);
    std::string num_s(num[0] == '+' ? num.substr(1) : num);
    mpz_class n(num_s, 10);
    mpz_class d(std::string(den), 10);
    return Rational(n, d);
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroInversion();
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(r);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ZeroInversion();
    return Rational(mpq_class(a.value_ / b.value_));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= kMaxModulus)
        throw InvalidModulus("modulus " + std::to_string(p) + " is not below 2^62");
    if (!is_prime(p)) throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw ZeroInversion();
    // Extended Euclid on (a, p) with signed 128-bit Bezout coefficients.
    __int128 t = 0, new_t = 1;
    std::uint64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        __int128 tmp_t = t - static_cast<__int128>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const { return powmod64(a, e, p_); }

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
    if (v >= 0) return static_cast<Element>(static_cast<std::uint64_t>(v) % p_);
    std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1; // |v| without overflow
    return neg(m % p_);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const { return mod_p(v, p_); }

PrimeField::Element PrimeField::from_rational(const Rational& q) const {
    Element den = mod_p(q.denominator(), p_);
    if (den == 0) throw DenominatorVanishes(p_);
    return mul(mod_p(q.numerator(), p_), inv(den));
}

std::uint64_t mod_p(const mpz_class& v, std::uint64_t p) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

std::uint64_t reduce_rational_mod_p(const Rational& q, std::uint64_t p) {
    if (p < 2 || !is_prime(p)) throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
    std::uint64_t den = mod_p(q.denominator(), p);
    if (den == 0) throw DenominatorVanishes(p);
    std::uint64_t num = mod_p(q.numerator(), p);
    return mulmod64(num, PrimeField(p).inv(den), p);
}

} // namespace satura::arith
