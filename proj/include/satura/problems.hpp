#pragma once

// Built-in polynomial systems and their structural self-checks.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satura/polynomial.hpp"

namespace satura::problems {

using poly::PolyQ;
using poly::RingPtr;

/// An involution on the variables together with the induced pairing of the f_j.
struct Conjugation {
    std::vector<std::size_t> variable_image; // variable i -> variable_image[i]
    std::vector<std::size_t> poly_image;     // f_j -> f_{poly_image[j]} (0-based)
};

struct ProblemInstance {
    std::string name;
    RingPtr ring;
    std::vector<PolyQ> f;
    /// Each entry is a linear space given by its defining linear polynomials.
    std::vector<std::vector<PolyQ>> base_locus;
    std::optional<Conjugation> conj;

    std::size_t n() const { return ring->nvars(); }
    std::size_t r() const { return f.size(); }
};

/// f = [x1, x2, x1*x2^2, x1^3*x2^2] with base locus the origin.
ProblemInstance example_monomial_system();

/// The 14 affine-patch polynomials in (a1, a2, a3, a4, b1, b2); empty base locus.
ProblemInstance conics_affine_system();

/// Alt's 15 polynomials in (a, ab, b, bb, x, xb, y, yb), with the conjugation
/// pairing and the 7 linear spaces of the base locus.
ProblemInstance alt_system();

/// The fixed 6 x 14 integer matrix used to specialize the conics system.
const std::array<std::array<int, 14>, 6>& conics_pstar_matrix();

/// The 6 combinations P* . F of the conics affine polynomials.
std::vector<PolyQ> conics_pstar_system();

/// The 18 monomials of degree <= 2 selected as Veronese columns for the conics
/// certification system, in (a1, a2, a3, a4, b1, b2).
std::vector<poly::Monomial> conics_certification_columns();

/// The two integer generators 9*x1 + 4*x2 - 6 and
/// 17017*x1 + 9945*x2 - 4675*x1*x2^2 + 9295*x1^3*x2^2 in Q[x1, x2] under lex,
/// obtained from the monomial example with rational parameters
/// Theta = (3/2, 2/3) and Lambda = (7/5, 9/11, -5/13, 13/17).
std::vector<PolyQ> lucky_prime_example_ideal();

/// Instance built from a system file (text or JSON); no base locus.
ProblemInstance load_problem(const std::string& path);

/// Resolves "monomial-example", "conics-affine", "alt" or "file:<path>".
ProblemInstance problem_by_name(const std::string& name);

/// Names accepted by problem_by_name (excluding the file: form).
std::vector<std::string> builtin_problem_names();

/// Polynomial with every variable replaced by its conjugate.
PolyQ conjugate(const PolyQ& f, const Conjugation& c);

/// Indices j (0-based) for which conj(f_j) != f_{sigma(j)}.
std::vector<std::size_t> conjugation_failures(const ProblemInstance& inst);

struct BaseLocusReport {
    std::size_t checks = 0;
    std::vector<std::pair<std::size_t, std::size_t>> failures; // (space, j), 0-based

    bool ok() const { return failures.empty(); }
};

/// Substitutes a parameterization of each base-locus space into every f_j and
/// records the pairs that do not vanish identically.
BaseLocusReport verify_base_locus(const ProblemInstance& inst);

/// Total degrees of f_j, with their minimum and maximum.
struct DegreeProfile {
    std::vector<unsigned> degrees;
    unsigned d_min = 0;
    unsigned d_max = 0;
};

DegreeProfile degree_profile(const ProblemInstance& inst);

/// The 15 coupler coefficients c_j(p, pb).
template <class F>
std::array<typename F::Element, 15> coupler_coefficients(const typename F::Element& p,
                                                         const typename F::Element& pb, const F& field) {
    auto pw = [&](const typename F::Element& v, unsigned e) {
        auto r = field.one();
        for (unsigned k = 0; k < e; ++k) r = field.mul(r, v);
        return r;
    };
    auto m = [&](unsigned i, unsigned j) { return field.mul(pw(p, i), pw(pb, j)); };
    return {m(3, 3), m(3, 2), m(2, 3), m(3, 1), m(1, 3), m(3, 0), m(0, 3), m(2, 2),
            m(2, 1), m(1, 2), m(2, 0), m(0, 2), m(1, 1), m(1, 0), m(0, 1)};
}

/// G_i = sum_j c_j(p_i, pb_i) f_j for each supplied point pair.
template <class F>
std::vector<poly::Polynomial<F>> alt_coupler_instance(
    const std::vector<std::pair<typename F::Element, typename F::Element>>& points, const F& field) {
    auto alt = alt_system();
    std::vector<poly::Polynomial<F>> fj;
    for (const auto& f : alt.f)
        fj.push_back(poly::map_coefficients(f, f.ring_ptr(), field,
                                            [&](const arith::Rational& q) { return field.from_rational(q); }));
    std::vector<poly::Polynomial<F>> out;
    for (const auto& [p, pb] : points) {
        auto c = coupler_coefficients(p, pb, field);
        poly::Polynomial<F> g(alt.ring, field);
        for (std::size_t j = 0; j < fj.size(); ++j) g += fj[j].scalar_mul(c[j]);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace satura::problems
