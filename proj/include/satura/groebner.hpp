#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "satura/polynomial.hpp"

namespace satura::groebner {

using poly::Monomial;
using poly::MonomialOrder;
using poly::Polynomial;
using poly::RingPtr;

using Clock = std::chrono::steady_clock;

struct Options {
    /// Eliminate affine-linear generators by substitution before running
    /// Buchberger on what remains.
    bool linear_preelimination = true;
    /// Cooperative deadline; the computation throws Timeout once it passes.
    std::optional<Clock::time_point> deadline;
};

struct Stats {
    std::size_t pairs_created = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t product_criterion = 0;
    std::size_t chain_criterion = 0; // pairs dropped by the Gebauer-Moller update
    std::size_t eliminated_variables = 0;
};

/// Reduced Groebner basis: monic generators sorted by ascending leading
/// monomial.  The unit ideal is the single generator 1.
template <class F>
struct GroebnerBasis {
    RingPtr ring;
    F field;
    std::vector<Polynomial<F>> generators;
    std::vector<Monomial> leading_monomials;
    Stats stats;

    MonomialOrder order() const { return ring->order; }
    arith::FieldDescriptor field_descriptor() const { return field.descriptor(); }
    bool is_unit() const { return generators.size() == 1 && generators[0].is_constant(); }
};

struct QuotientBasis {
    std::vector<Monomial> standard_monomials; // ascending; empty when infinite
    bool is_finite = false;
};

/// Full multivariate division remainder of f by G (first divisor in list order).
/// Throws RingMismatch.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G);

/// Reduced basis of <gens> in the generators' ring.  Throws RingMismatch,
/// InvalidArgument for an empty list, Timeout past the deadline.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, const Options& opts = {});

/// Same, after moving the generators into a ring with order `ord`.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, MonomialOrder ord, const Options& opts = {});

QuotientBasis quotient_basis(const std::vector<Monomial>& leading_monomials, std::size_t nvars,
                             const MonomialOrder& ord);

template <class F>
QuotientBasis quotient_basis(const GroebnerBasis<F>& G) {
    return quotient_basis(G.leading_monomials, G.ring->nvars(), G.ring->order);
}

/// Number of standard monomials without materializing them; nullopt when infinite.
std::optional<std::size_t> count_standard_monomials(const std::vector<Monomial>& leading_monomials,
                                                    std::size_t nvars);

/// Vector-space dimension of the quotient ring; 0 for the unit ideal.
/// Throws NotZeroDimensional.
template <class F>
std::size_t ideal_degree(const GroebnerBasis<F>& G) {
    if (G.is_unit()) return 0;
    auto n = count_standard_monomials(G.leading_monomials, G.ring->nvars());
    if (!n) throw NotZeroDimensional();
    return *n;
}

/// True iff every S-polynomial of G reduces to zero modulo G.
template <class F>
bool is_groebner_basis(const std::vector<Polynomial<F>>& G);

extern template poly::PolyQ normal_form(const poly::PolyQ&, const std::vector<poly::PolyQ>&);
extern template poly::PolyP normal_form(const poly::PolyP&, const std::vector<poly::PolyP>&);
extern template GroebnerBasis<arith::RationalField> buchberger(const std::vector<poly::PolyQ>&, const Options&);
extern template GroebnerBasis<arith::PrimeField> buchberger(const std::vector<poly::PolyP>&, const Options&);
extern template GroebnerBasis<arith::RationalField> buchberger(const std::vector<poly::PolyQ>&, MonomialOrder,
                                                               const Options&);
extern template GroebnerBasis<arith::PrimeField> buchberger(const std::vector<poly::PolyP>&, MonomialOrder,
                                                            const Options&);
extern template bool is_groebner_basis(const std::vector<poly::PolyQ>&);
extern template bool is_groebner_basis(const std::vector<poly::PolyP>&);

} // namespace satura::groebner
