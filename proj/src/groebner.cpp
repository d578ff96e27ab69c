#include "satura/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace satura::groebner {

using arith::PrimeField;
using arith::Rational;
using arith::RationalField;

namespace {

template <class C>
struct ETerm {
    C c;
    Monomial m;
};

// Coefficient policy for the engine.  cancel(cf, cg) returns (a, b) with
// a*cf - b*cg == 0 and a a unit-free multiplier (1 over a field).
struct FpDomain {
    using C = std::uint64_t;
    PrimeField field;

    bool is_one(C a) const { return a == 1; }
    std::pair<C, C> cancel(C cf, C cg) const { return {1, cg == 1 ? cf : field.div(cf, cg)}; }
    C combine(C a, C fc, C b, C gc) const { return field.sub(a == 1 ? fc : field.mul(a, fc), field.mul(b, gc)); }
    C scale(C a, C fc) const { return field.mul(a, fc); }
    C neg_mul(C b, C gc) const { return field.neg(field.mul(b, gc)); }
    bool is_zero(C a) const { return a == 0; }

    void normalize(std::vector<ETerm<C>>& p) const {
        if (p.empty() || p[0].c == 1) return;
        C inv = field.inv(p[0].c);
        for (auto& t : p) t.c = field.mul(inv, t.c);
    }
    void tidy(std::vector<ETerm<C>>&, std::vector<ETerm<C>>&, std::size_t) const {}
};

// Fraction-free integer arithmetic for rational inputs.
struct ZDomain {
    using C = mpz_class;

    bool is_one(const C& a) const { return a == 1; }
    std::pair<C, C> cancel(const C& cf, const C& cg) const {
        C h = gcd(cf, cg);
        C a = cg / h;
        C b = cf / h;
        if (a < 0) {
            a = -a;
            b = -b;
        }
        return {a, b};
    }
    C combine(const C& a, const C& fc, const C& b, const C& gc) const { return a * fc - b * gc; }
    C scale(const C& a, const C& fc) const { return a * fc; }
    C neg_mul(const C& b, const C& gc) const { return -(b * gc); }
    bool is_zero(const C& a) const { return sgn(a) == 0; }

    void normalize(std::vector<ETerm<C>>& p) const {
        if (p.empty()) return;
        C g = 0;
        for (const auto& t : p) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
            if (g == 1) break;
        }
        if (sgn(p[0].c) < 0) g = -g;
        if (g == 1) return;
        for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }

    // Divides the running remainder and the unreduced part by their joint content.
    void tidy(std::vector<ETerm<C>>& r, std::vector<ETerm<C>>& cur, std::size_t start) const {
        C g = 0;
        auto absorb = [&](const C& c) {
            if (g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        };
        for (const auto& t : r) absorb(t.c);
        for (std::size_t i = start; i < cur.size(); ++i) absorb(cur[i].c);
        if (g == 0 || g == 1) return;
        for (auto& t : r) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
        for (std::size_t i = start; i < cur.size(); ++i)
            mpz_divexact(cur[i].c.get_mpz_t(), cur[i].c.get_mpz_t(), g.get_mpz_t());
    }
};

template <class D>
class Engine {
public:
    using C = typename D::C;
    using T = ETerm<C>;
    using P = std::vector<T>;

    Engine(D dom, MonomialOrder ord, std::size_t nvars, std::optional<Clock::time_point> deadline, Stats& stats)
        : dom_(std::move(dom)), ord_(ord), nvars_(nvars), deadline_(deadline), stats_(stats) {}

    /// Reduced basis, ascending by leading monomial.  Empty input gives an empty basis.
    std::vector<P> run(std::vector<P> gens) {
        std::sort(gens.begin(), gens.end(), [&](const P& a, const P& b) {
            if (a.empty() || b.empty()) return !a.empty() && b.empty();
            return ord_.greater(b[0].m, a[0].m);
        });
        for (auto& g : gens) {
            if (g.empty()) continue;
            P h = reduce(std::move(g), active_, false);
            if (h.empty()) continue;
            dom_.normalize(h);
            if (h[0].m.is_one()) return unit();
            add(std::move(h));
        }
        while (!pairs_.empty()) {
            check_deadline();
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k)
                if (pair_less(pairs_[k], pairs_[best])) best = k;
            Pair pr = std::move(pairs_[best]);
            pairs_[best] = std::move(pairs_.back());
            pairs_.pop_back();

            ++stats_.pairs_reduced;
            P h = reduce(spoly(pr), active_, false);
            if (h.empty()) {
                ++stats_.zero_reductions;
                continue;
            }
            dom_.normalize(h);
            if (h[0].m.is_one()) return unit();
            add(std::move(h));
        }
        return interreduce();
    }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };

    void check_deadline() const {
        if (deadline_ && Clock::now() > *deadline_) throw Timeout();
    }

    bool pair_less(const Pair& a, const Pair& b) const {
        if (a.lcm.total_degree() != b.lcm.total_degree()) return a.lcm.total_degree() < b.lcm.total_degree();
        auto c = ord_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }

    std::vector<P> unit() const {
        P one;
        one.push_back({C(1), Monomial(nvars_)});
        return {std::move(one)};
    }

    // a*f[fs..] - b*(m*g[gs..])
    P sub_mul(const P& f, std::size_t fs, const C& a, const C& b, const Monomial& m, const P& g,
              std::size_t gs) const {
        P r;
        r.reserve((f.size() - std::min(fs, f.size())) + (g.size() - gs));
        const bool a_one = dom_.is_one(a);
        std::size_t i = fs, j = gs;
        Monomial gm;
        bool have_gm = false;
        while (i < f.size() || j < g.size()) {
            if (j < g.size() && !have_gm) {
                gm = g[j].m * m;
                have_gm = true;
            }
            std::strong_ordering c = std::strong_ordering::greater;
            if (i == f.size()) c = std::strong_ordering::less;
            else if (j < g.size()) c = ord_.compare(f[i].m, gm);
            if (c > 0) {
                r.push_back({a_one ? f[i].c : dom_.scale(a, f[i].c), f[i].m});
                ++i;
            } else if (c < 0) {
                r.push_back({dom_.neg_mul(b, g[j].c), std::move(gm)});
                have_gm = false;
                ++j;
            } else {
                C v = dom_.combine(a, f[i].c, b, g[j].c);
                if (!dom_.is_zero(v)) r.push_back({std::move(v), std::move(gm)});
                have_gm = false;
                ++i;
                ++j;
            }
        }
        return r;
    }

    P spoly(const Pair& pr) const {
        const P& f = polys_[pr.i];
        const P& g = polys_[pr.j];
        Monomial mf = pr.lcm / f[0].m;
        Monomial mg = pr.lcm / g[0].m;
        auto [a, b] = dom_.cancel(f[0].c, g[0].c);
        P fm;
        fm.reserve(f.size());
        for (std::size_t k = 1; k < f.size(); ++k) fm.push_back({f[k].c, f[k].m * mf});
        return sub_mul(fm, 0, a, b, mg, g, 1);
    }

    long find_divisor(const Monomial& m, const std::vector<std::size_t>& basis) const {
        const std::uint64_t mask = m.support_mask();
        for (std::size_t k : basis)
            if ((masks_[k] & ~mask) == 0 && polys_[k][0].m.divides(m)) return static_cast<long>(k);
        return -1;
    }

    // Full reduction of p by the basis polynomials; with keep_lead the leading
    // term is kept in place and only the tail is reduced.
    P reduce(P cur, const std::vector<std::size_t>& basis, bool keep_lead) const {
        P r;
        std::size_t start = 0;
        if (keep_lead && !cur.empty()) {
            r.push_back(cur[0]);
            start = 1;
        }
        std::size_t steps = 0;
        while (start < cur.size()) {
            long k = find_divisor(cur[start].m, basis);
            if (k < 0) {
                r.push_back(std::move(cur[start]));
                ++start;
                continue;
            }
            const P& g = polys_[static_cast<std::size_t>(k)];
            auto [a, b] = dom_.cancel(cur[start].c, g[0].c);
            Monomial q = cur[start].m / g[0].m;
            cur = sub_mul(cur, start + 1, a, b, q, g, 1);
            start = 0;
            if (!dom_.is_one(a))
                for (auto& t : r) t.c = dom_.scale(a, t.c);
            if (++steps % 32 == 0) {
                check_deadline();
                dom_.tidy(r, cur, start);
            }
        }
        return r;
    }

    // Gebauer-Moller installation of a new basis element.
    void add(P h) {
        const std::size_t hi = polys_.size();
        Monomial lh = h[0].m;
        masks_.push_back(lh.support_mask());
        polys_.push_back(std::move(h));

        const std::size_t n = active_.size();
        std::vector<Monomial> lcms;
        lcms.reserve(n);
        for (std::size_t g : active_) lcms.push_back(polys_[g][0].m.lcm(lh));
        std::vector<char> kept(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            if (polys_[active_[a]][0].m.coprime(lh)) {
                kept[a] = 1;
                continue;
            }
            bool redundant = false;
            for (std::size_t b = 0; b < n && !redundant; ++b) {
                if (b == a || (b < a && kept[b] == 0)) continue;
                redundant = lcms[b].divides(lcms[a]);
            }
            if (redundant) ++stats_.chain_criterion;
            else kept[a] = 1;
        }

        std::vector<Pair> next;
        next.reserve(pairs_.size() + n);
        for (auto& pr : pairs_) {
            if (lh.divides(pr.lcm) && !(polys_[pr.i][0].m.lcm(lh) == pr.lcm) &&
                !(polys_[pr.j][0].m.lcm(lh) == pr.lcm)) {
                ++stats_.chain_criterion;
                continue;
            }
            next.push_back(std::move(pr));
        }
        for (std::size_t a = 0; a < n; ++a) {
            if (kept[a] == 0) continue;
            if (polys_[active_[a]][0].m.coprime(lh)) {
                ++stats_.product_criterion;
                continue;
            }
            next.push_back({active_[a], hi, std::move(lcms[a])});
            ++stats_.pairs_created;
        }
        pairs_ = std::move(next);

        std::erase_if(active_, [&](std::size_t g) { return lh.divides(polys_[g][0].m); });
        active_.push_back(hi);
    }

    std::vector<P> interreduce() {
        std::vector<std::size_t> order = active_;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return ord_.greater(polys_[b][0].m, polys_[a][0].m); });
        std::vector<P> out;
        out.reserve(order.size());
        for (std::size_t k : order) {
            std::vector<std::size_t> others;
            for (std::size_t o : order)
                if (o != k) others.push_back(o);
            P g = reduce(polys_[k], others, true);
            dom_.normalize(g);
            out.push_back(std::move(g));
        }
        return out;
    }

    D dom_;
    MonomialOrder ord_;
    std::size_t nvars_;
    std::optional<Clock::time_point> deadline_;
    Stats& stats_;
    std::vector<P> polys_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
};

// Field-specific bridges between Polynomial<F> and the engine representation.
template <class F>
struct Bridge;

template <>
struct Bridge<PrimeField> {
    using D = FpDomain;
    static D domain(const PrimeField& f) { return FpDomain{f}; }
    static std::vector<ETerm<std::uint64_t>> to_engine(const poly::PolyP& f) {
        std::vector<ETerm<std::uint64_t>> out;
        out.reserve(f.size());
        for (const auto& t : f.terms()) out.push_back({t.coeff, t.mono});
        return out;
    }
    static poly::PolyP from_engine(std::vector<ETerm<std::uint64_t>> p, const RingPtr& ring, const PrimeField& f) {
        std::vector<poly::PolyP::Term> terms;
        terms.reserve(p.size());
        for (auto& t : p) terms.push_back({t.c, std::move(t.m)});
        return poly::PolyP::from_sorted_terms(ring, f, std::move(terms));
    }
};

template <>
struct Bridge<RationalField> {
    using D = ZDomain;
    static D domain(const RationalField&) { return ZDomain{}; }
    static std::vector<ETerm<mpz_class>> to_engine(const poly::PolyQ& f) {
        auto prim = poly::integer_primitive(f);
        std::vector<ETerm<mpz_class>> out;
        out.reserve(prim.size());
        for (const auto& t : prim.terms()) out.push_back({t.coeff.numerator(), t.mono});
        return out;
    }
    static poly::PolyQ from_engine(std::vector<ETerm<mpz_class>> p, const RingPtr& ring, const RationalField& f) {
        std::vector<poly::PolyQ::Term> terms;
        terms.reserve(p.size());
        const mpz_class lc = p.empty() ? mpz_class(1) : p[0].c;
        for (auto& t : p) terms.push_back({Rational(t.c, lc), std::move(t.m)});
        return poly::PolyQ::from_sorted_terms(ring, f, std::move(terms));
    }
};

template <class F>
std::vector<Polynomial<F>> run_engine(const std::vector<Polynomial<F>>& gens, const RingPtr& ring, const F& field,
                                      const Options& opts, Stats& stats) {
    using B = Bridge<F>;
    std::vector<std::vector<ETerm<typename B::D::C>>> input;
    input.reserve(gens.size());
    for (const auto& g : gens)
        if (!g.is_zero()) input.push_back(B::to_engine(g));
    Engine<typename B::D> engine(B::domain(field), ring->order, ring->nvars(), opts.deadline, stats);
    std::vector<Polynomial<F>> out;
    for (auto& p : engine.run(std::move(input))) out.push_back(B::from_engine(std::move(p), ring, field));
    return out;
}

template <class F>
struct LinearSplit {
    std::vector<Polynomial<F>> rest;
    std::vector<Polynomial<F>> pivots; // monic, leading monomial a single variable
    bool unit = false;
    std::size_t eliminated = 0;
};

// Repeatedly row-reduces the affine-linear generators and substitutes their
// pivot variables into everything else.
template <class F>
LinearSplit<F> split_linear(std::vector<Polynomial<F>> gens, const RingPtr& ring, const F& field) {
    LinearSplit<F> out;
    const std::size_t n = ring->nvars();
    for (;;) {
        std::vector<Polynomial<F>> lin, other;
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (g.total_degree() <= 1) lin.push_back(std::move(g));
            else other.push_back(std::move(g));
        }
        if (lin.empty()) {
            out.rest = std::move(other);
            return out;
        }
        // Rows over columns x_1..x_n, constant.
        using E = typename F::Element;
        std::vector<std::vector<E>> rows;
        for (const auto& g : lin) {
            std::vector<E> row(n + 1, field.zero());
            for (const auto& t : g.terms()) {
                std::size_t col = n;
                for (std::size_t v = 0; v < n; ++v)
                    if (t.mono[v] != 0) col = v;
                row[col] = t.coeff;
            }
            rows.push_back(std::move(row));
        }
        std::vector<std::size_t> pivot_cols;
        std::size_t rank = 0;
        for (std::size_t col = 0; col <= n && rank < rows.size(); ++col) {
            std::size_t sel = rank;
            while (sel < rows.size() && field.is_zero(rows[sel][col])) ++sel;
            if (sel == rows.size()) continue;
            std::swap(rows[rank], rows[sel]);
            E inv = field.inv(rows[rank][col]);
            for (auto& v : rows[rank]) v = field.mul(v, inv);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || field.is_zero(rows[r][col])) continue;
                E factor = rows[r][col];
                for (std::size_t c = 0; c <= n; ++c)
                    rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
            }
            pivot_cols.push_back(col);
            ++rank;
        }
        if (!pivot_cols.empty() && pivot_cols.back() == n) {
            out.unit = true;
            return out;
        }
        std::vector<Polynomial<F>> images;
        images.reserve(n);
        for (std::size_t v = 0; v < n; ++v) images.push_back(Polynomial<F>::variable(ring, field, v));
        std::vector<Polynomial<F>> new_pivots;
        for (std::size_t r = 0; r < rank; ++r) {
            std::vector<typename Polynomial<F>::Term> terms;
            for (std::size_t c = 0; c <= n; ++c) {
                if (field.is_zero(rows[r][c])) continue;
                terms.push_back({rows[r][c], c == n ? Monomial(n) : Monomial::variable(n, c)});
            }
            auto form = Polynomial<F>::from_terms(ring, field, std::move(terms));
            images[pivot_cols[r]] = images[pivot_cols[r]] - form;
            new_pivots.push_back(std::move(form));
        }
        for (auto& p : out.pivots) p = p.compose(images);
        for (auto& p : new_pivots) out.pivots.push_back(std::move(p));
        out.eliminated += rank;
        gens.clear();
        for (const auto& g : other) {
            auto s = g.compose(images);
            if (!s.is_zero()) gens.push_back(std::move(s));
        }
    }
}

template <class F>
GroebnerBasis<F> finish(RingPtr ring, F field, std::vector<Polynomial<F>> gens, Stats stats) {
    GroebnerBasis<F> G{std::move(ring), std::move(field), {}, {}, stats};
    for (auto& g : gens) g = g.monic();
    const auto& ord = G.ring->order;
    std::sort(gens.begin(), gens.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
        return ord.greater(b.leading_monomial(), a.leading_monomial());
    });
    for (const auto& g : gens) G.leading_monomials.push_back(g.leading_monomial());
    G.generators = std::move(gens);
    return G;
}

template <class F>
void require_common_ring(const std::vector<Polynomial<F>>& polys, const Polynomial<F>& ref) {
    for (const auto& p : polys)
        if (!p.same_ring(ref)) throw RingMismatch("generators belong to different rings");
}

} // namespace

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G) {
    require_common_ring(G, f);
    const F& field = f.field();
    std::vector<typename Polynomial<F>::Term> rem;
    Polynomial<F> p = f;
    while (!p.is_zero()) {
        const auto& lt = p.leading_term();
        const Polynomial<F>* div = nullptr;
        for (const auto& g : G)
            if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
                div = &g;
                break;
            }
        if (div != nullptr) {
            auto c = field.div(lt.coeff, div->leading_coeff());
            p = p - div->mul_term(c, lt.mono / div->leading_monomial());
        } else {
            rem.push_back(lt);
            p = p - Polynomial<F>::monomial(f.ring_ptr(), field, lt.coeff, lt.mono);
        }
    }
    return Polynomial<F>::from_sorted_terms(f.ring_ptr(), field, std::move(rem));
}

template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, const Options& opts) {
    if (gens.empty()) throw InvalidArgument("buchberger needs at least one generator");
    require_common_ring(gens, gens.front());
    const RingPtr& ring = gens.front().ring_ptr();
    const F& field = gens.front().field();
    Stats stats;
    auto unit = [&] {
        return finish(ring, field, {Polynomial<F>::one(ring, field)}, stats);
    };
    if (!opts.linear_preelimination) return finish(ring, field, run_engine(gens, ring, field, opts, stats), stats);

    auto split = split_linear(gens, ring, field);
    stats.eliminated_variables = split.eliminated;
    if (split.unit) return unit();
    auto rest = run_engine(split.rest, ring, field, opts, stats);
    if (rest.size() == 1 && rest[0].is_constant()) return unit();
    for (auto& p : split.pivots) rest.push_back(normal_form(p, rest));
    return finish(ring, field, std::move(rest), stats);
}

template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, MonomialOrder ord, const Options& opts) {
    if (gens.empty()) throw InvalidArgument("buchberger needs at least one generator");
    auto ring = poly::with_order(gens.front().ring_ptr(), ord);
    std::vector<Polynomial<F>> moved;
    moved.reserve(gens.size());
    for (const auto& g : gens) {
        if (!g.same_ring(gens.front())) throw RingMismatch("generators belong to different rings");
        moved.push_back(g.in_ring(ring));
    }
    return buchberger(moved, opts);
}

template <class F>
bool is_groebner_basis(const std::vector<Polynomial<F>>& G) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            const auto& f = G[i];
            const auto& g = G[j];
            if (f.is_zero() || g.is_zero()) continue;
            Monomial l = f.leading_monomial().lcm(g.leading_monomial());
            const F& field = f.field();
            auto s = f.mul_term(field.inv(f.leading_coeff()), l / f.leading_monomial()) -
                     g.mul_term(field.inv(g.leading_coeff()), l / g.leading_monomial());
            if (!normal_form(s, G).is_zero()) return false;
        }
    return true;
}

QuotientBasis quotient_basis(const std::vector<Monomial>& leading_monomials, std::size_t nvars,
                             const MonomialOrder& ord) {
    QuotientBasis q;
    if (!count_standard_monomials(leading_monomials, nvars)) return q;
    q.is_finite = true;
    std::vector<unsigned> e(nvars, 0);
    auto standard = [&] {
        Monomial m{std::span<const unsigned>(e)};
        return std::none_of(leading_monomials.begin(), leading_monomials.end(),
                            [&](const Monomial& l) { return l.divides(m); });
    };
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == nvars) {
            q.standard_monomials.emplace_back(std::span<const unsigned>(e));
            return;
        }
        for (e[v] = 0; standard(); ++e[v]) self(self, v + 1);
        e[v] = 0;
    };
    rec(rec, 0);
    std::sort(q.standard_monomials.begin(), q.standard_monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.greater(b, a); });
    return q;
}

std::optional<std::size_t> count_standard_monomials(const std::vector<Monomial>& leading_monomials,
                                                    std::size_t nvars) {
    // Finite iff every variable has a pure power among the leading monomials.
    for (std::size_t v = 0; v < nvars; ++v) {
        bool found = std::any_of(leading_monomials.begin(), leading_monomials.end(),
                                 [&](const Monomial& l) { return l[v] != 0 && l[v] == l.total_degree(); });
        if (!found) return std::nullopt;
    }
    for (const auto& l : leading_monomials)
        if (l.is_one()) return 0;
    std::vector<unsigned> e(nvars, 0);
    std::size_t count = 0;
    auto standard = [&] {
        for (const auto& l : leading_monomials) {
            bool divides = true;
            for (std::size_t v = 0; v < nvars && divides; ++v) divides = l[v] <= e[v];
            if (divides) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == nvars) {
            ++count;
            return;
        }
        for (e[v] = 0; standard(); ++e[v]) self(self, v + 1);
        e[v] = 0;
    };
    rec(rec, 0);
    return count;
}

template poly::PolyQ normal_form(const poly::PolyQ&, const std::vector<poly::PolyQ>&);
template poly::PolyP normal_form(const poly::PolyP&, const std::vector<poly::PolyP>&);
template GroebnerBasis<RationalField> buchberger(const std::vector<poly::PolyQ>&, const Options&);
template GroebnerBasis<PrimeField> buchberger(const std::vector<poly::PolyP>&, const Options&);
template GroebnerBasis<RationalField> buchberger(const std::vector<poly::PolyQ>&, MonomialOrder, const Options&);
template GroebnerBasis<PrimeField> buchberger(const std::vector<poly::PolyP>&, MonomialOrder, const Options&);
template bool is_groebner_basis(const std::vector<poly::PolyQ>&);
template bool is_groebner_basis(const std::vector<poly::PolyP>&);

} // namespace satura::groebner
