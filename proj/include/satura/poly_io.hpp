#pragma once

// Text and JSON formats for polynomials and polynomial systems.
//
// Text grammar (whitespace ignored):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := int ['/' uint] | var ['^' uint] | '(' poly ')' ['^' uint]
//
// JSON sparse format:
//   {"vars":[names], "field":"Q"|"Fp:<p>",
//    "polys":[[ [coeffString,[e1,...,en]], ... ], ...]}

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "satura/polynomial.hpp"

namespace satura::poly {

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr& ring, const F& field);

template <class F>
std::string print_polynomial(const Polynomial<F>& f);

extern template Polynomial<arith::RationalField> parse_polynomial(std::string_view, const RingPtr&,
                                                                  const arith::RationalField&);
extern template Polynomial<arith::PrimeField> parse_polynomial(std::string_view, const RingPtr&,
                                                               const arith::PrimeField&);
extern template std::string print_polynomial(const Polynomial<arith::RationalField>&);
extern template std::string print_polynomial(const Polynomial<arith::PrimeField>&);

inline PolyQ parse_q(std::string_view text, const RingPtr& ring) {
    return parse_polynomial(text, ring, arith::RationalField{});
}

/// Field-agnostic decoded system: coefficients stay as decimal strings until a
/// concrete field is chosen.
struct SystemData {
    using RawTerm = std::pair<std::string, std::vector<unsigned>>;

    std::vector<std::string> vars;
    arith::FieldDescriptor field;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<std::vector<RawTerm>> polys;
    nlohmann::ordered_json extra; // passthrough keys beyond vars/field/polys
};

/// Parses the JSON sparse format.  Throws SyntaxError / DimensionMismatch.
SystemData system_from_json(const nlohmann::json& j);
nlohmann::ordered_json system_to_json(const SystemData& s);

/// Parses the line-oriented text system format:
///   vars: x, y        (required)
///   field: Fp:32003   (optional, default Q)
///   order: lex        (optional, default grevlex)
/// followed by polynomials separated by ';' or newlines.  '#' starts a comment.
SystemData system_from_text(std::string_view text);

/// Loads either format from disk (JSON when the first non-blank character is '{').
SystemData load_system(const std::string& path);

template <class F>
std::vector<Polynomial<F>> polynomials_from_system(const SystemData& s, const RingPtr& ring, const F& field) {
    std::vector<Polynomial<F>> out;
    out.reserve(s.polys.size());
    for (const auto& raw : s.polys) {
        std::vector<typename Polynomial<F>::Term> terms;
        terms.reserve(raw.size());
        for (const auto& [coeff, exps] : raw) {
            if (exps.size() != ring->nvars())
                throw DimensionMismatch("exponent vector length does not match variable count");
            terms.push_back({field.from_rational(arith::Rational::parse(coeff)), Monomial(std::span<const unsigned>(exps))});
        }
        out.push_back(Polynomial<F>::from_terms(ring, field, std::move(terms)));
    }
    return out;
}

template <class F>
SystemData system_from_polynomials(const std::vector<Polynomial<F>>& polys, const RingPtr& ring, const F& field) {
    SystemData s;
    s.vars = ring->variables;
    s.field = field.descriptor();
    s.order = ring->order;
    for (const auto& f : polys) {
        std::vector<SystemData::RawTerm> raw;
        raw.reserve(f.size());
        for (const auto& t : f.terms()) raw.emplace_back(field.to_string(t.coeff), t.mono.exponents());
        s.polys.push_back(std::move(raw));
    }
    return s;
}

} // namespace satura::poly
