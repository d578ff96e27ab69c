#pragma once

// Affine Hilbert functions, J_d^e truncation bounds, Veronese ranks and the
// well-constrained certification system built from sample points.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "satura/groebner.hpp"

namespace satura::hilbert {

using poly::Monomial;
using poly::Polynomial;
using poly::RingPtr;

struct HilbertProfile {
    std::vector<std::size_t> values; // values[d] = HF(d), d = 0..d_max
    std::optional<unsigned> stabilized_at;
    std::optional<std::size_t> stable_value;
};

/// HF(d) for d = 0..d_max as the number of standard monomials of degree <= d.
/// Stabilization is reported for zero-dimensional ideals once d_max reaches
/// the top degree of the staircase.  Throws OrderNotDegreeCompatible.
template <class F>
HilbertProfile affine_hilbert_function(const groebner::GroebnerBasis<F>& G, unsigned d_max);

/// Per-degree counts from leading monomials alone (order must be degree compatible).
HilbertProfile hilbert_from_leading_monomials(const std::vector<Monomial>& lms, std::size_t nvars, unsigned d_max);

struct JdeResult {
    std::size_t dimension = 0;   // dim J_d^e
    std::size_t upper_bound = 0; // C(n+d, d) - dim J_d^e
    std::size_t rows = 0;
    std::size_t columns = 0;
};

/// Dimension of the degree <= d part of the span of all m*h_i with
/// deg(m*h_i) <= d + e.
template <class F>
JdeResult jde_dimension(const std::vector<Polynomial<F>>& h, unsigned d, unsigned e);

/// Rank of a matrix given by rows over F.
template <class F>
std::size_t matrix_rank(const std::vector<std::vector<typename F::Element>>& rows, const F& field);

template <class F>
struct VeroneseMatrix {
    unsigned degree = 0;
    std::vector<Monomial> columns; // monomials_up_to_degree(n, d), grevlex-descending
    std::vector<std::vector<typename F::Element>> rows;
};

/// Row j is the vector of all monomials of degree <= d evaluated at point j.
/// Throws DimensionMismatch for ragged points.
template <class F>
VeroneseMatrix<F> veronese_matrix(const std::vector<std::vector<typename F::Element>>& points, unsigned d,
                                  const F& field);

struct VeroneseRank {
    std::size_t rank = 0;
    std::size_t duplicates_removed = 0; // nonzero means the input repeated points
};

/// Rank of the Veronese matrix of the distinct input points.
template <class F>
VeroneseRank veronese_rank_lower_bound(std::vector<std::vector<typename F::Element>> points, unsigned d,
                                       const F& field);

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;

/// Every F_p-rational common zero, by enumeration in lexicographic order of
/// coordinates.  Throws BudgetExceeded when p^n exceeds the budget.
std::vector<std::vector<std::uint64_t>> find_points_bruteforce(const std::vector<poly::PolyP>& G,
                                                               std::uint64_t budget = kDefaultPointBudget);

template <class F>
struct CertificationSystem {
    RingPtr ring; // y variables "<var>_<j>", then L_<a>_<b>
    std::vector<Polynomial<F>> polynomials;
    std::vector<Monomial> columns;
    std::size_t k = 0;
    std::size_t n = 0;
};

/// The system G(y_1), ..., G(y_k), Lambda * S_d(y) - I in k*n + k^2 unknowns.
/// `points` only serve to check that S_d restricted to `columns` is
/// invertible.  Throws DimensionMismatch, InvalidArgument, SingularSubmatrix.
template <class F>
CertificationSystem<F> emit_certification_system(const std::vector<Polynomial<F>>& G,
                                                 const std::vector<std::vector<typename F::Element>>& points,
                                                 unsigned d, const std::vector<Monomial>& columns);

} // namespace satura::hilbert
