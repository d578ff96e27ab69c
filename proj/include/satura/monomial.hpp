#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "satura/error.hpp"

namespace satura::poly {

/// Exponent vector over a fixed number of variables, with cached total degree.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    /// The monomial 1 in `nvars` variables.
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    Monomial(std::initializer_list<unsigned> exps);
    explicit Monomial(std::span<const unsigned> exps);

    static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

    std::size_t size() const { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned total_degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    /// Sets one exponent; throws ExponentOverflow past 16 bits.
    void set(std::size_t i, unsigned e);

    std::vector<unsigned> exponents() const { return {exps_.begin(), exps_.end()}; }

    /// Product; throws ExponentOverflow, DimensionMismatch.
    Monomial operator*(const Monomial& o) const;
    /// Quotient.  Requires o | *this.
    Monomial operator/(const Monomial& o) const;

    bool divides(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;

    /// Bit i set iff variable i (mod 64) occurs; used to reject divisibility quickly.
    std::uint64_t support_mask() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

private:
    boost::container::small_vector<Exponent, 10> exps_;
    std::uint32_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

/// Graded reverse lexicographic or pure lexicographic order.  Variable priority
/// follows declaration order: x1 > x2 > ... > xn.
struct MonomialOrder {
    enum class Kind { GrevLex, Lex };
    Kind kind = Kind::GrevLex;

    static MonomialOrder grevlex() { return {Kind::GrevLex}; }
    static MonomialOrder lex() { return {Kind::Lex}; }

    bool degree_compatible() const { return kind == Kind::GrevLex; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        const std::size_t n = a.size();
        if (kind == Kind::GrevLex) {
            if (a.total_degree() != b.total_degree()) return a.total_degree() <=> b.total_degree();
            for (std::size_t i = n; i-- > 0;) {
                if (a[i] != b[i]) return b[i] <=> a[i];
            }
            return std::strong_ordering::equal;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] != b[i]) return a[i] <=> b[i];
        }
        return std::strong_ordering::equal;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string to_string() const { return kind == Kind::GrevLex ? "grevlex" : "lex"; }
    static MonomialOrder parse(const std::string& name);

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Three-way comparison; throws DimensionMismatch for different variable counts.
std::strong_ordering order_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

/// Variable names plus the active monomial order.
struct Ring {
    std::vector<std::string> variables;
    MonomialOrder order;

    std::size_t nvars() const { return variables.size(); }
    /// Index of a variable name, or nvars() when absent.
    std::size_t index_of(const std::string& name) const;

    friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex());

/// Same variables, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

/// Every monomial of total degree <= d in n variables, sorted descending
/// under `ord`.  Exactly C(n+d, d) entries.
std::vector<Monomial> monomials_up_to_degree(std::size_t n, unsigned d,
                                             MonomialOrder ord = MonomialOrder::grevlex());

/// Monomials of exactly degree d in n variables (unsorted, deterministic).
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

} // namespace satura::poly
