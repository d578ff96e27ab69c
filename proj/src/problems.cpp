#include "satura/problems.hpp"

#include "satura/poly_io.hpp"

#include <algorithm>

namespace satura::problems {

using arith::Rational;
using arith::RationalField;
using poly::Monomial;
using poly::parse_q;

namespace {

std::vector<PolyQ> parse_list(const std::vector<std::string>& texts, const RingPtr& ring) {
    std::vector<PolyQ> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_q(t, ring));
    return out;
}

// Factored forms of the non-derived Alt polynomials; the remaining ones are
// conjugates.  Bars are written with a "b" suffix.
const char* const kAltF1 = "(x - y)*(yb - xb)";
const char* const kAltF2 = "(x - y)*(ab*xb - 2*ab*yb + 2*bb*xb - bb*yb)";
const char* const kAltF4 = "(x - y)*(ab^2*yb - 2*ab*bb*xb + 2*ab*bb*yb - bb^2*xb)";
const char* const kAltF6 = "ab*bb*(x - y)*(bb*xb - ab*yb)";
const char* const kAltF8 =
    "x^2*yb*(ab - yb) + xb^2*y*(a - y)"
    " + x*xb*(2*y*yb + (ab - 2*bb)*y + (a - 2*b)*yb - a*ab - 2*a*bb - 2*ab*b - 2*b*bb)"
    " + x*(b*yb^2 + y*yb*(bb - 2*ab) + yb*(a*ab + a*bb + 4*ab*b + b*bb))"
    " - y*yb*(2*a*ab + 2*a*bb + 2*ab*b + b*bb)"
    " + xb*(bb*y^2 + y*yb*(b - 2*a) + y*(a*ab + ab*b + 4*a*bb + b*bb))";
const char* const kAltF9 =
    "ab*x^2*yb*(2*yb - ab - bb) + 2*bb*xb^2*y*(y - a)"
    " - ab*x*yb*(a*bb + 2*ab*(b - y) + 2*b*(bb + yb))"
    " + x*xb*(bb*(2*bb*y + 2*a*ab + 2*ab*b + a*bb) + yb*(ab + bb)*(2*b - a - 2*y))"
    " + ab*y*yb*(2*a*bb + ab*b + 2*b*bb)"
    " + xb*y*((2*a*yb - 2*a*bb - b*yb - bb*y)*(ab + bb) - ab*b*bb)";
const char* const kAltF11 =
    "ab^2*x^2*yb*(bb - yb) + bb^2*xb^2*y*(a - y)"
    " - ab*bb*x*xb*(a*(bb - yb) + 2*yb*(b - y) + bb*y)"
    " + ab^2*x*yb*(b*bb + b*yb - bb*y)"
    " + ab*bb*xb*y*(bb*(a + y) + yb*(b - 2*a)) - ab^2*b*bb*y*yb";
const char* const kAltF13 =
    "ab*x^2*yb*(ab*(2*b - y) + b*(bb - 3*yb) + bb*y)"
    " + a*xb^2*y*(a*(2*bb - yb) + bb*(b - 3*y) + b*yb)"
    " + x*xb*(bb*y^2*(ab - bb) + 3*y*yb*(a*bb + ab*b) + b*yb^2*(a - b)"
    " - bb*y*(ab*b + 2*a*bb) - b*yb*(a*bb + 2*ab*b) - 2*a*ab*b*bb)"
    " + ab*x*yb*(a*(b*bb + b*yb - bb*y) + b*(ab*(b - 2*y) + 2*b*yb))"
    " + a*xb*y*(ab*(b*bb - b*yb + bb*y) + bb*(a*(bb - 2*yb) + 2*bb*y))"
    " - 2*a*ab*b*bb*y*yb";
const char* const kAltF14 = "(ab*b*x*yb - a*bb*xb*y)*((ab - xb)*(bb*y - b*yb) + (bb - yb)*(a*xb - ab*x))";

// Linear-space parameterization: pivot variables are expressed through the
// free ones, every other variable maps to itself.
std::vector<PolyQ> parameterize(const std::vector<PolyQ>& linear, const RingPtr& ring) {
    const std::size_t n = ring->nvars();
    RationalField q;
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : linear) {
        if (g.total_degree() > 1) throw InvalidArgument("base-locus generator is not linear");
        std::vector<Rational> row(n + 1);
        for (const auto& t : g.terms()) {
            std::size_t col = n;
            for (std::size_t v = 0; v < n; ++v)
                if (t.mono[v] != 0) col = v;
            row[col] = t.coeff;
        }
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Rational inv = rows[rank][col].inverse();
        for (auto& v : rows[rank]) v = v * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col];
            for (std::size_t c = 0; c <= n; ++c) rows[r][c] = rows[r][c] - factor * rows[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][n].is_zero()) throw InvalidArgument("base-locus space is empty");
    std::vector<PolyQ> images;
    for (std::size_t v = 0; v < n; ++v) images.push_back(PolyQ::variable(ring, q, v));
    for (std::size_t r = 0; r < rank; ++r) {
        std::vector<PolyQ::Term> terms;
        for (std::size_t c = 0; c <= n; ++c) {
            if (c == pivots[r] || rows[r][c].is_zero()) continue;
            terms.push_back({-rows[r][c], c == n ? Monomial(n) : Monomial::variable(n, c)});
        }
        images[pivots[r]] = PolyQ::from_terms(ring, q, std::move(terms));
    }
    return images;
}

} // namespace

ProblemInstance example_monomial_system() {
    auto ring = poly::make_ring({"x1", "x2"});
    ProblemInstance inst{"monomial-example", ring, parse_list({"x1", "x2", "x1*x2^2", "x1^3*x2^2"}, ring), {}, {}};
    inst.base_locus.push_back(parse_list({"x1", "x2"}, ring));
    return inst;
}

ProblemInstance conics_affine_system() {
    auto ring = poly::make_ring({"a1", "a2", "a3", "a4", "b1", "b2"});
    return {"conics-affine", ring,
            parse_list({"1", "a1", "a2", "a3", "a4", "a3*b1", "a3*b2", "a4*b1", "a4*b2", "a1*b1 - 2*b2",
                        "a1*b2 - 2*a2*b1", "b1*(a4*b1 - a3*b2)", "b2*(a4*b1 - a3*b2)", "a2*b1^2 - a1*b1*b2 + b2^2"},
                       ring),
            {}, {}};
}

ProblemInstance alt_system() {
    auto ring = poly::make_ring({"a", "ab", "b", "bb", "x", "xb", "y", "yb"});
    Conjugation conj;
    conj.variable_image = {1, 0, 3, 2, 5, 4, 7, 6};
    // 1-based pairs (2,3) (4,5) (6,7) (9,10) (11,12) (14,15); 1, 8, 13 fixed.
    conj.poly_image = {0, 2, 1, 4, 3, 6, 5, 7, 9, 8, 11, 10, 12, 14, 13};

    ProblemInstance inst{"alt", ring, {}, {}, conj};
    const std::vector<const char*> sources = {kAltF1, kAltF2, nullptr, kAltF4, nullptr, kAltF6, nullptr, kAltF8,
                                              kAltF9, nullptr, kAltF11, nullptr, kAltF13, kAltF14, nullptr};
    for (std::size_t j = 0; j < sources.size(); ++j) {
        if (sources[j] != nullptr) inst.f.push_back(parse_q(sources[j], ring));
        else inst.f.push_back(conjugate(inst.f[j - 1], conj));
    }
    const std::vector<std::vector<std::string>> spaces = {
        {"x", "y"},
        {"x - y", "x - b", "a - b"},
        {"x - y", "a - b", "xb - ab", "yb - bb"},
        {"x - y", "xb - yb", "a - b", "ab - bb"},
        {"xb", "yb"},
        {"xb - yb", "xb - bb", "ab - bb"},
        {"xb - yb", "ab - bb", "x - a", "y - b"},
    };
    for (const auto& space : spaces) inst.base_locus.push_back(parse_list(space, ring));
    return inst;
}

const std::array<std::array<int, 14>, 6>& conics_pstar_matrix() {
    static const std::array<std::array<int, 14>, 6> m = {{
        {1, -2, 2, -4, -4, -5, -3, 1, -1, -1, -2, -3, 1, -5},
        {0, 0, 3, 4, 5, -1, -3, -4, -5, -5, 4, -1, -5, -4},
        {-5, -4, -1, 0, -5, -3, -4, 4, -3, 4, -1, -4, -3, 2},
        {-2, 1, -5, 5, 3, 3, -4, 1, -4, 5, -4, -4, -2, 3},
        {-4, -3, -3, -5, 3, -1, 4, -2, -3, 0, 3, 5, 4, 2},
        {3, 2, 5, -1, 4, 5, 1, 0, -3, 0, -1, 5, -5, -1},
    }};
    return m;
}

std::vector<PolyQ> conics_pstar_system() {
    auto inst = conics_affine_system();
    RationalField q;
    std::vector<PolyQ> out;
    for (const auto& row : conics_pstar_matrix()) {
        PolyQ g(inst.ring, q);
        for (std::size_t j = 0; j < row.size(); ++j) g += inst.f[j].scalar_mul(Rational(row[j]));
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Monomial> conics_certification_columns() {
    auto ring = conics_affine_system().ring;
    std::vector<Monomial> out;
    for (const char* m : {"a1", "a2", "a3", "a4", "b1", "b2", "a1*b1", "a1*b2", "a2*a4", "a2*b2", "a3^2", "a3*a4",
                          "a3*b1", "a3*b2", "a4*b1", "b1^2", "b1*b2", "b2^2"})
        out.push_back(parse_q(m, ring).leading_monomial());
    return out;
}

std::vector<PolyQ> lucky_prime_example_ideal() {
    auto ring = poly::make_ring({"x1", "x2"}, poly::MonomialOrder::lex());
    return parse_list({"9*x1 + 4*x2 - 6", "17017*x1 + 9945*x2 - 4675*x1*x2^2 + 9295*x1^3*x2^2"}, ring);
}

ProblemInstance load_problem(const std::string& path) {
    auto data = poly::load_system(path);
    if (data.field.is_prime()) throw InvalidArgument("problem files must be over Q");
    auto ring = poly::make_ring(data.vars, poly::MonomialOrder::grevlex());
    ProblemInstance inst{"file:" + path, ring, poly::polynomials_from_system(data, ring, RationalField{}), {}, {}};
    for (auto& f : inst.f) f = poly::integer_primitive(f);
    return inst;
}

ProblemInstance problem_by_name(const std::string& name) {
    if (name == "monomial-example") return example_monomial_system();
    if (name == "conics-affine") return conics_affine_system();
    if (name == "alt") return alt_system();
    if (name.starts_with("file:")) return load_problem(name.substr(5));
    throw InvalidArgument("unknown problem '" + name + "'");
}

std::vector<std::string> builtin_problem_names() { return {"monomial-example", "conics-affine", "alt"}; }

PolyQ conjugate(const PolyQ& f, const Conjugation& c) {
    std::vector<PolyQ::Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m(f.nvars());
        for (std::size_t v = 0; v < f.nvars(); ++v) m.set(c.variable_image[v], t.mono[v]);
        terms.push_back({t.coeff, std::move(m)});
    }
    return PolyQ::from_terms(f.ring_ptr(), f.field(), std::move(terms));
}

std::vector<std::size_t> conjugation_failures(const ProblemInstance& inst) {
    std::vector<std::size_t> bad;
    if (!inst.conj) return bad;
    for (std::size_t j = 0; j < inst.f.size(); ++j)
        if (!(conjugate(inst.f[j], *inst.conj) == inst.f[inst.conj->poly_image[j]])) bad.push_back(j);
    return bad;
}

BaseLocusReport verify_base_locus(const ProblemInstance& inst) {
    BaseLocusReport report;
    for (std::size_t s = 0; s < inst.base_locus.size(); ++s) {
        auto images = parameterize(inst.base_locus[s], inst.ring);
        for (std::size_t j = 0; j < inst.f.size(); ++j) {
            ++report.checks;
            if (!inst.f[j].compose(images).is_zero()) report.failures.emplace_back(s, j);
        }
    }
    return report;
}

DegreeProfile degree_profile(const ProblemInstance& inst) {
    DegreeProfile p;
    for (const auto& f : inst.f) p.degrees.push_back(f.total_degree());
    if (!p.degrees.empty()) {
        p.d_min = *std::min_element(p.degrees.begin(), p.degrees.end());
        p.d_max = *std::max_element(p.degrees.begin(), p.degrees.end());
    }
    return p;
}

} // namespace satura::problems
