#include "satura/hilbert.hpp"

#include <algorithm>
#include <unordered_map>

namespace satura::hilbert {

using arith::PrimeField;
using arith::Rational;
using arith::RationalField;
using poly::MonomialHash;
using poly::MonomialOrder;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Sparse rows sorted by column, first entry nonzero.
template <class E>
using Row = std::vector<std::pair<std::uint32_t, E>>;

struct FpRows {
    using Elem = std::uint64_t;
    PrimeField f;

    Row<Elem> convert(const Row<Elem>& r) const { return r; }

    void normalize(Row<Elem>& r) const {
        const Elem inv = f.inv(r.front().second);
        for (auto& [c, v] : r) v = f.mul(v, inv);
    }

    // p is monic with the same leading column as r.
    Row<Elem> eliminate(const Row<Elem>& r, const Row<Elem>& p) const {
        const Elem a = r.front().second;
        Row<Elem> out;
        out.reserve(r.size() + p.size());
        std::size_t i = 1, j = 1;
        while (i < r.size() || j < p.size()) {
            if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || p[j].first < r[i].first) {
                out.push_back({p[j].first, f.neg(f.mul(a, p[j].second))});
                ++j;
            } else {
                Elem v = f.sub(r[i].second, f.mul(a, p[j].second));
                if (v != 0) out.push_back({r[i].first, v});
                ++i, ++j;
            }
        }
        return out;
    }
};

// Fraction-free integer rows kept primitive.
struct ZRows {
    using Elem = mpz_class;

    Row<Elem> convert(const Row<Rational>& r) const {
        mpz_class den = 1;
        for (const auto& [c, v] : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.denominator().get_mpz_t());
        Row<Elem> out;
        out.reserve(r.size());
        for (const auto& [c, v] : r) out.push_back({c, v.numerator() * (den / v.denominator())});
        return out;
    }

    void normalize(Row<Elem>& r) const {
        mpz_class g = 0;
        for (const auto& [c, v] : r) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        if (sgn(r.front().second) < 0) g = -g;
        if (g != 1)
            for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }

    Row<Elem> eliminate(const Row<Elem>& r, const Row<Elem>& p) const {
        mpz_class g = gcd(r.front().second, p.front().second);
        const mpz_class sr = p.front().second / g, sp = r.front().second / g;
        Row<Elem> out;
        out.reserve(r.size() + p.size());
        std::size_t i = 1, j = 1;
        while (i < r.size() || j < p.size()) {
            if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                out.push_back({r[i].first, sr * r[i].second});
                ++i;
            } else if (i == r.size() || p[j].first < r[i].first) {
                out.push_back({p[j].first, -sp * p[j].second});
                ++j;
            } else {
                mpz_class v = sr * r[i].second - sp * p[j].second;
                if (sgn(v) != 0) out.push_back({r[i].first, std::move(v)});
                ++i, ++j;
            }
        }
        if (!out.empty()) normalize(out);
        return out;
    }
};

template <class F>
struct RowsFor;
template <>
struct RowsFor<PrimeField> {
    using type = FpRows;
    static FpRows make(const PrimeField& f) { return {f}; }
};
template <>
struct RowsFor<RationalField> {
    using type = ZRows;
    static ZRows make(const RationalField&) { return {}; }
};

// Incremental row echelon form; only leading columns are eliminated.
template <class D>
class Echelon {
public:
    using Elem = typename D::Elem;

    Echelon(D dom, std::size_t ncols) : dom_(std::move(dom)), pivots_(ncols) {}

    /// Pivot column of the reduced row, or nullopt if it reduced to zero.
    std::optional<std::uint32_t> insert(Row<Elem> r) {
        while (!r.empty()) {
            auto& slot = pivots_[r.front().first];
            if (slot.empty()) {
                dom_.normalize(r);
                const auto c = r.front().first;
                slot = std::move(r);
                return c;
            }
            r = dom_.eliminate(r, slot);
        }
        return std::nullopt;
    }

private:
    D dom_;
    std::vector<Row<Elem>> pivots_;
};

template <class F>
void check_same_ring(const std::vector<Polynomial<F>>& polys) {
    for (const auto& g : polys)
        if (!g.same_ring(polys.front())) throw RingMismatch("polynomials belong to different rings");
}

template <class F>
std::size_t rank_of_sparse(std::vector<Row<typename F::Element>> rows, std::size_t ncols, const F& field) {
    using Traits = RowsFor<F>;
    auto dom = Traits::make(field);
    Echelon<typename Traits::type> ech(dom, ncols);
    std::size_t rank = 0;
    for (auto& r : rows)
        if (!r.empty() && ech.insert(dom.convert(r))) ++rank;
    return rank;
}

template <class F>
typename F::Element monomial_value(const Monomial& m, std::span<const typename F::Element> point, const F& field) {
    auto v = field.one();
    for (std::size_t i = 0; i < point.size(); ++i)
        for (unsigned k = 0; k < m[i]; ++k) v = field.mul(v, point[i]);
    return v;
}

} // namespace

HilbertProfile hilbert_from_leading_monomials(const std::vector<Monomial>& lms, std::size_t nvars, unsigned d_max) {
    HilbertProfile hp;
    std::vector<std::size_t> per_degree(d_max + 1, 0);
    const bool unit = std::any_of(lms.begin(), lms.end(), [](const Monomial& l) { return l.is_one(); });
    if (!unit) {
        std::vector<unsigned> e(nvars, 0);
        auto standard = [&] {
            for (const auto& l : lms) {
                bool divides = true;
                for (std::size_t v = 0; v < nvars && divides; ++v) divides = l[v] <= e[v];
                if (divides) return false;
            }
            return true;
        };
        // Divisibility is inherited by multiples, so a non-standard prefix prunes its subtree.
        auto rec = [&](auto&& self, std::size_t v, unsigned deg) -> void {
            if (v == nvars) {
                ++per_degree[deg];
                return;
            }
            for (e[v] = 0; deg + e[v] <= d_max && standard(); ++e[v]) self(self, v + 1, deg + e[v]);
            e[v] = 0;
        };
        rec(rec, 0, 0);
    }
    std::size_t acc = 0;
    for (auto c : per_degree) hp.values.push_back(acc += c);

    if (unit) {
        hp.stabilized_at = 0;
        hp.stable_value = 0;
    } else if (auto total = groebner::count_standard_monomials(lms, nvars)) {
        for (unsigned d = 0; d <= d_max; ++d)
            if (hp.values[d] == *total) {
                hp.stabilized_at = d;
                hp.stable_value = *total;
                break;
            }
    }
    return hp;
}

template <class F>
HilbertProfile affine_hilbert_function(const groebner::GroebnerBasis<F>& G, unsigned d_max) {
    if (!G.order().degree_compatible()) throw OrderNotDegreeCompatible();
    return hilbert_from_leading_monomials(G.leading_monomials, G.ring->nvars(), d_max);
}

template HilbertProfile affine_hilbert_function(const groebner::GroebnerBasis<PrimeField>&, unsigned);
template HilbertProfile affine_hilbert_function(const groebner::GroebnerBasis<RationalField>&, unsigned);

template <class F>
JdeResult jde_dimension(const std::vector<Polynomial<F>>& h, unsigned d, unsigned e) {
    if (h.empty()) throw InvalidArgument("no polynomials");
    const auto& ring = h.front().ring_ptr();
    const std::size_t n = ring->nvars();
    const F field = h.front().field();
    check_same_ring(h);
    const unsigned top = d + e;
    const MonomialOrder ord = ring->order;

    // Columns: every monomial up to degree d+e, higher degrees first.
    auto cols = poly::monomials_up_to_degree(n, top, MonomialOrder::grevlex());
    std::stable_sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
        return ord.greater(a, b);
    });
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    index.reserve(cols.size());
    for (std::uint32_t c = 0; c < cols.size(); ++c) index.emplace(cols[c], c);

    using Traits = RowsFor<F>;
    auto dom = Traits::make(field);
    Echelon<typename Traits::type> ech(dom, cols.size());
    JdeResult res;
    res.columns = cols.size();
    for (const auto& g : h) {
        if (g.is_zero()) continue;
        const unsigned dg = g.total_degree();
        if (dg > top) continue;
        for (const auto& m : poly::monomials_up_to_degree(n, top - dg, MonomialOrder::grevlex())) {
            Row<typename F::Element> row;
            row.reserve(g.size());
            for (const auto& t : g.terms()) row.push_back({index.at(t.mono * m), t.coeff});
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            ++res.rows;
            auto piv = ech.insert(dom.convert(row));
            if (piv && cols[*piv].total_degree() <= d) ++res.dimension;
        }
    }
    res.upper_bound = binomial(n + d, d) - res.dimension;
    return res;
}

template JdeResult jde_dimension(const std::vector<poly::PolyP>&, unsigned, unsigned);
template JdeResult jde_dimension(const std::vector<poly::PolyQ>&, unsigned, unsigned);

template <class F>
std::size_t matrix_rank(const std::vector<std::vector<typename F::Element>>& rows, const F& field) {
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    std::vector<Row<typename F::Element>> sparse;
    sparse.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != ncols) throw DimensionMismatch("ragged matrix");
        Row<typename F::Element> s;
        for (std::uint32_t c = 0; c < r.size(); ++c)
            if (!field.is_zero(r[c])) s.push_back({c, r[c]});
        sparse.push_back(std::move(s));
    }
    return rank_of_sparse(std::move(sparse), ncols, field);
}

template std::size_t matrix_rank(const std::vector<std::vector<std::uint64_t>>&, const PrimeField&);
template std::size_t matrix_rank(const std::vector<std::vector<Rational>>&, const RationalField&);

template <class F>
VeroneseMatrix<F> veronese_matrix(const std::vector<std::vector<typename F::Element>>& points, unsigned d,
                                  const F& field) {
    VeroneseMatrix<F> vm;
    vm.degree = d;
    if (points.empty()) return vm;
    const std::size_t n = points.front().size();
    vm.columns = poly::monomials_up_to_degree(n, d, MonomialOrder::grevlex());
    for (const auto& pt : points) {
        if (pt.size() != n) throw DimensionMismatch("points have different dimensions");
        std::vector<typename F::Element> row;
        row.reserve(vm.columns.size());
        for (const auto& m : vm.columns) row.push_back(monomial_value(m, std::span(pt), field));
        vm.rows.push_back(std::move(row));
    }
    return vm;
}

template VeroneseMatrix<PrimeField> veronese_matrix(const std::vector<std::vector<std::uint64_t>>&, unsigned,
                                                    const PrimeField&);
template VeroneseMatrix<RationalField> veronese_matrix(const std::vector<std::vector<Rational>>&, unsigned,
                                                       const RationalField&);

template <class F>
VeroneseRank veronese_rank_lower_bound(std::vector<std::vector<typename F::Element>> points, unsigned d,
                                       const F& field) {
    VeroneseRank out;
    const std::size_t before = points.size();
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    out.duplicates_removed = before - points.size();
    out.rank = matrix_rank(veronese_matrix(points, d, field).rows, field);
    return out;
}

template VeroneseRank veronese_rank_lower_bound(std::vector<std::vector<std::uint64_t>>, unsigned,
                                                const PrimeField&);
template VeroneseRank veronese_rank_lower_bound(std::vector<std::vector<Rational>>, unsigned, const RationalField&);

std::vector<std::vector<std::uint64_t>> find_points_bruteforce(const std::vector<poly::PolyP>& G,
                                                               std::uint64_t budget) {
    if (G.empty()) throw InvalidArgument("no polynomials");
    check_same_ring(G);
    const std::size_t n = G.front().nvars();
    const PrimeField& fp = G.front().field();
    const std::uint64_t p = fp.modulus();
    std::uint64_t total = 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (total > budget / p) throw BudgetExceeded("p^n exceeds the enumeration budget");
        total *= p;
    }

    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> pt(n, 0);
    for (std::uint64_t k = 0; k < total; ++k) {
        const bool zero = std::all_of(G.begin(), G.end(), [&](const poly::PolyP& g) {
            return g.evaluate(std::span<const std::uint64_t>(pt)) == 0;
        });
        if (zero) out.push_back(pt);
        for (std::size_t v = n; v-- > 0;) {
            if (++pt[v] < p) break;
            pt[v] = 0;
        }
    }
    return out;
}

template <class F>
CertificationSystem<F> emit_certification_system(const std::vector<Polynomial<F>>& G,
                                                 const std::vector<std::vector<typename F::Element>>& points,
                                                 unsigned d, const std::vector<Monomial>& columns) {
    if (G.empty()) throw InvalidArgument("no polynomials");
    check_same_ring(G);
    const auto& src = G.front().ring();
    const F field = G.front().field();
    const std::size_t n = src.nvars(), k = points.size();
    if (k == 0) throw InvalidArgument("no points");
    if (G.size() != n) throw DimensionMismatch("system is not square: need one polynomial per variable");
    if (columns.size() != k) throw DimensionMismatch("need exactly one column per point");
    for (const auto& m : columns) {
        if (m.size() != n) throw DimensionMismatch("column monomial does not match the ring");
        if (m.total_degree() > d) throw InvalidArgument("column monomial exceeds degree d");
    }
    for (const auto& pt : points)
        if (pt.size() != n) throw DimensionMismatch("point does not match the ring");

    std::vector<std::vector<typename F::Element>> S;
    for (const auto& pt : points) {
        std::vector<typename F::Element> row;
        for (const auto& m : columns) row.push_back(monomial_value(m, std::span(pt), field));
        S.push_back(std::move(row));
    }
    if (matrix_rank(S, field) != k) throw SingularSubmatrix();

    std::vector<std::string> names;
    for (std::size_t j = 1; j <= k; ++j)
        for (const auto& v : src.variables) names.push_back(v + "_" + std::to_string(j));
    for (std::size_t a = 1; a <= k; ++a)
        for (std::size_t b = 1; b <= k; ++b) names.push_back("L_" + std::to_string(a) + "_" + std::to_string(b));
    {
        auto sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidArgument("generated variable names collide");
    }

    CertificationSystem<F> cs;
    cs.ring = poly::make_ring(std::move(names));
    cs.columns = columns;
    cs.k = k;
    cs.n = n;
    const std::size_t N = cs.ring->nvars();
    auto y = [&](std::size_t j, std::size_t v) { return j * n + v; }; // 0-based point j
    auto lam = [&](std::size_t a, std::size_t c) { return k * n + a * k + c; };

    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Polynomial<F>> images;
        for (std::size_t v = 0; v < n; ++v) images.push_back(Polynomial<F>::variable(cs.ring, field, y(j, v)));
        for (const auto& g : G) cs.polynomials.push_back(g.compose(std::span<const Polynomial<F>>(images)));
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            std::vector<typename Polynomial<F>::Term> terms;
            for (std::size_t c = 0; c < k; ++c) {
                std::vector<unsigned> e(N, 0);
                e[lam(a, c)] = 1;
                for (std::size_t v = 0; v < n; ++v) e[y(c, v)] = columns[b][v];
                terms.push_back({field.one(), Monomial(std::span<const unsigned>(e))});
            }
            if (a == b) terms.push_back({field.neg(field.one()), Monomial(N)});
            cs.polynomials.push_back(Polynomial<F>::from_terms(cs.ring, field, std::move(terms)));
        }
    return cs;
}

template CertificationSystem<PrimeField> emit_certification_system(const std::vector<poly::PolyP>&,
                                                                   const std::vector<std::vector<std::uint64_t>>&,
                                                                   unsigned, const std::vector<Monomial>&);
template CertificationSystem<RationalField> emit_certification_system(const std::vector<poly::PolyQ>&,
                                                                      const std::vector<std::vector<Rational>>&,
                                                                      unsigned, const std::vector<Monomial>&);

} // namespace satura::hilbert
