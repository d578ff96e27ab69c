#pragma once

// Coefficient arithmetic: word-sized prime fields, exact rationals, and the
// integer ring used internally for fraction-free elimination.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "satura/error.hpp"

namespace satura::arith {

/// Moduli must stay below this bound so that products fit in 128 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Identifies the coefficient domain of a polynomial or basis.
struct FieldDescriptor {
    enum class Kind { Prime, Rationals };

    Kind kind = Kind::Rationals;
    std::uint64_t modulus = 0; // only meaningful for Kind::Prime

    static FieldDescriptor rationals() { return {Kind::Rationals, 0}; }
    static FieldDescriptor prime(std::uint64_t p) { return {Kind::Prime, p}; }

    bool is_prime() const { return kind == Kind::Prime; }

    /// "Q" or "Fp:<p>".
    std::string to_string() const;
    static FieldDescriptor parse(std::string_view text);

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {} // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const mpz_class& v) : value_(v) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Parses "num" or "num/den" (decimal, optional leading sign).
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& get() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational inverse() const;

    /// "num/den", with "/den" omitted when the denominator is 1.
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

private:
    mpq_class value_;
};

/// Z/pZ for a word-sized prime p < 2^62.  Elements are canonical residues.
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    FieldDescriptor descriptor() const { return FieldDescriptor::prime(p_); }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }
    bool equal(Element a, Element b) const { return a == b; }

    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    /// Extended Euclid.  Throws ZeroInversion for a == 0.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const;

    Element from_int(std::int64_t v) const;
    Element from_integer(const mpz_class& v) const;
    /// num * den^-1 mod p; throws DenominatorVanishes when p divides den.
    Element from_rational(const Rational& q) const;

    std::string to_string(Element a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

/// The field of rational numbers.
class RationalField {
public:
    using Element = Rational;

    FieldDescriptor descriptor() const { return FieldDescriptor::rationals(); }

    Element zero() const { return Rational(); }
    Element one() const { return Rational(1); }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool is_one(const Element& a) const { return a.is_one(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const { return a.inverse(); }
    Element div(const Element& a, const Element& b) const { return a / b; }

    Element from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
    Element from_integer(const mpz_class& v) const { return Rational(v); }
    Element from_rational(const Rational& q) const { return q; }

    std::string to_string(const Element& a) const { return a.to_string(); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Inverse of a in F.  Throws ZeroInversion when a is zero.
template <class F>
typename F::Element field_inv(const typename F::Element& a, const F& field) {
    return field.inv(a);
}

/// Image of q in Z/pZ.  Throws DenominatorVanishes when p | den(q).
std::uint64_t reduce_rational_mod_p(const Rational& q, std::uint64_t p);

/// Residue of an integer in [0, p).
std::uint64_t mod_p(const mpz_class& v, std::uint64_t p);

} // namespace satura::arith
