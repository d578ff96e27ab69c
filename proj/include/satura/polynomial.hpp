#pragma once

#include <algorithm>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "satura/arith.hpp"
#include "satura/monomial.hpp"

namespace satura::poly {

/// Sparse multivariate polynomial over the coefficient field F.  Terms are kept
/// strictly descending under the ring's order, without zero coefficients.
template <class F>
class Polynomial {
public:
    using Field = F;
    using Coeff = typename F::Element;

    struct Term {
        Coeff coeff;
        Monomial mono;
    };

    Polynomial(RingPtr ring, F field) : ring_(std::move(ring)), field_(std::move(field)) {}

    static Polynomial constant(RingPtr ring, F field, Coeff c) {
        Polynomial p(std::move(ring), std::move(field));
        if (!p.field_.is_zero(c)) p.terms_.push_back({std::move(c), Monomial(p.ring_->nvars())});
        return p;
    }
    static Polynomial one(RingPtr ring, F field) {
        auto c = field.one();
        return constant(std::move(ring), std::move(field), c);
    }
    static Polynomial variable(RingPtr ring, F field, std::size_t index) {
        Polynomial p(std::move(ring), std::move(field));
        p.terms_.push_back({p.field_.one(), Monomial::variable(p.ring_->nvars(), index)});
        return p;
    }
    static Polynomial monomial(RingPtr ring, F field, Coeff c, Monomial m) {
        Polynomial p(std::move(ring), std::move(field));
        if (m.size() != p.ring_->nvars()) throw DimensionMismatch("monomial does not match ring");
        if (!p.field_.is_zero(c)) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }
    /// Sorts, merges duplicate monomials and drops zeros.
    static Polynomial from_terms(RingPtr ring, F field, std::vector<Term> terms) {
        Polynomial p(std::move(ring), std::move(field));
        for (const auto& t : terms)
            if (t.mono.size() != p.ring_->nvars()) throw DimensionMismatch("term does not match ring");
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }
    /// Adopts terms that are already sorted, distinct and nonzero.
    static Polynomial from_sorted_terms(RingPtr ring, F field, std::vector<Term> terms) {
        Polynomial p(std::move(ring), std::move(field));
        p.terms_ = std::move(terms);
        return p;
    }

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const F& field() const { return field_; }
    const MonomialOrder& order() const { return ring_->order; }
    std::size_t nvars() const { return ring_->nvars(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Coeff& leading_coeff() const { return terms_.front().coeff; }

    /// Maximum total degree over all terms; 0 for the zero polynomial.
    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    /// Same ring variables and order, and the same coefficient field.
    bool same_ring(const Polynomial& o) const {
        return (ring_ == o.ring_ || *ring_ == *o.ring_) && field_ == o.field_;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        return a.combine(b, false);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        return a.combine(b, true);
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        return a.multiply(b);
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scalar_mul(const Coeff& c) const {
        Polynomial r(ring_, field_);
        if (field_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            auto v = field_.mul(c, t.coeff);
            if (!field_.is_zero(v)) r.terms_.push_back({std::move(v), t.mono});
        }
        return r;
    }

    /// c * m * this.
    Polynomial mul_term(const Coeff& c, const Monomial& m) const {
        Polynomial r(ring_, field_);
        if (field_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            auto v = field_.mul(c, t.coeff);
            if (!field_.is_zero(v)) r.terms_.push_back({std::move(v), t.mono * m});
        }
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial result = one(ring_, field_);
        Polynomial base = *this;
        while (e != 0) {
            if ((e & 1U) != 0) result = result * base;
            e >>= 1;
            if (e != 0) base = base * base;
        }
        return result;
    }

    /// Divides by the leading coefficient.  Zero stays zero.
    Polynomial monic() const {
        if (is_zero() || field_.is_one(leading_coeff())) return *this;
        return scalar_mul(field_.inv(leading_coeff()));
    }

    /// Evaluation at a point; throws DimensionMismatch on length mismatch.
    Coeff evaluate(std::span<const Coeff> point) const {
        if (point.size() != nvars()) throw DimensionMismatch("point length does not match variable count");
        Coeff acc = field_.zero();
        for (const auto& t : terms_) {
            Coeff v = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (unsigned k = 0; k < t.mono[i]; ++k) v = field_.mul(v, point[i]);
            acc = field_.add(acc, v);
        }
        return acc;
    }

    /// Substitutes images[i] for variable i.  The images may live in another ring
    /// over the same field; the result lives in the images' ring.
    Polynomial compose(std::span<const Polynomial> images) const {
        if (images.size() != nvars()) throw DimensionMismatch("substitution needs one image per variable");
        if (images.empty()) throw DimensionMismatch("substitution into a ring without variables");
        const RingPtr& target = images[0].ring_ptr();
        std::vector<std::vector<Polynomial>> powers(nvars());
        auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(one(target, field_));
            while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
            return cache[e];
        };
        std::vector<Term> pending;
        for (const auto& t : terms_) {
            Polynomial prod = constant(target, field_, t.coeff);
            for (std::size_t v = 0; v < nvars() && !prod.is_zero(); ++v)
                if (t.mono[v] != 0) prod = prod * power(v, t.mono[v]);
            pending.insert(pending.end(), prod.terms_.begin(), prod.terms_.end());
        }
        return from_terms(target, field_, std::move(pending));
    }

    /// The same polynomial viewed in another ring with identical variable count
    /// (typically a different order); terms are re-sorted.
    Polynomial in_ring(RingPtr ring) const {
        if (ring->nvars() != nvars()) throw DimensionMismatch("target ring has a different variable count");
        Polynomial r(std::move(ring), field_);
        r.terms_ = terms_;
        r.sort_terms();
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!a.same_ring(b) || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
            if (!a.field_.equal(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
        }
        return true;
    }

private:
    void check_ring(const Polynomial& o) const {
        if (!same_ring(o)) throw RingMismatch("polynomials belong to different rings");
    }

    void sort_terms() {
        const auto& ord = ring_->order;
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    }

    void canonicalize() {
        sort_terms();
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().mono == t.mono) {
                merged.back().coeff = field_.add(merged.back().coeff, t.coeff);
            } else {
                if (!merged.empty() && field_.is_zero(merged.back().coeff)) merged.pop_back();
                merged.push_back(std::move(t));
            }
        }
        if (!merged.empty() && field_.is_zero(merged.back().coeff)) merged.pop_back();
        terms_ = std::move(merged);
    }

    Polynomial combine(const Polynomial& b, bool subtract) const {
        Polynomial r(ring_, field_);
        r.terms_.reserve(terms_.size() + b.terms_.size());
        const auto& ord = ring_->order;
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < b.terms_.size()) {
            std::strong_ordering c = std::strong_ordering::greater;
            if (i == terms_.size()) c = std::strong_ordering::less;
            else if (j < b.terms_.size()) c = ord.compare(terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                const auto& t = b.terms_[j++];
                r.terms_.push_back({subtract ? field_.neg(t.coeff) : t.coeff, t.mono});
            } else {
                auto v = subtract ? field_.sub(terms_[i].coeff, b.terms_[j].coeff)
                                  : field_.add(terms_[i].coeff, b.terms_[j].coeff);
                if (!field_.is_zero(v)) r.terms_.push_back({std::move(v), terms_[i].mono});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Polynomial multiply(const Polynomial& b) const {
        Polynomial r(ring_, field_);
        if (is_zero() || b.is_zero()) return r;
        std::unordered_map<Monomial, Coeff, MonomialHash> acc;
        acc.reserve(terms_.size() * b.terms_.size());
        for (const auto& s : terms_)
            for (const auto& t : b.terms_) {
                auto prod = field_.mul(s.coeff, t.coeff);
                auto [it, inserted] = acc.try_emplace(s.mono * t.mono, prod);
                if (!inserted) it->second = field_.add(it->second, prod);
            }
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!field_.is_zero(c)) r.terms_.push_back({std::move(c), m});
        r.sort_terms();
        return r;
    }

    RingPtr ring_;
    F field_;
    std::vector<Term> terms_;
};

using PolyQ = Polynomial<arith::RationalField>;
using PolyP = Polynomial<arith::PrimeField>;

/// Applies `fn` to every coefficient, producing a polynomial over `target`
/// in `ring`.  Zero images are dropped.
template <class G, class F, class Fn>
Polynomial<G> map_coefficients(const Polynomial<F>& f, RingPtr ring, const G& target, Fn fn) {
    std::vector<typename Polynomial<G>::Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        auto c = fn(t.coeff);
        if (!target.is_zero(c)) terms.push_back({std::move(c), t.mono});
    }
    if (ring->order == f.order()) return Polynomial<G>::from_sorted_terms(std::move(ring), target, std::move(terms));
    return Polynomial<G>::from_terms(std::move(ring), target, std::move(terms));
}

/// Reduction of a rational polynomial into Z/pZ.  Throws DenominatorVanishes.
inline PolyP reduce_mod_p(const PolyQ& f, const arith::PrimeField& fp) {
    return map_coefficients(f, f.ring_ptr(), fp,
                            [&](const arith::Rational& q) { return fp.from_rational(q); });
}

/// Scales a rational polynomial to integer coefficients with content 1 and
/// positive leading coefficient.
PolyQ integer_primitive(const PolyQ& f);

} // namespace satura::poly
