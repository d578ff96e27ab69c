#include "satura/monomial.hpp"

#include <algorithm>
#include <limits>

namespace satura::poly {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

void require_same_size(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("monomials have " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()) + " variables");
}

} // namespace

Monomial::Monomial(std::initializer_list<unsigned> exps) : exps_(exps.size(), 0) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
}

Monomial::Monomial(std::span<const unsigned> exps) : exps_(exps.size(), 0) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, unsigned e) {
    if (e > kMaxExponent) throw ExponentOverflow();
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<Exponent>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
    require_same_size(*this, o);
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        unsigned e = static_cast<unsigned>(exps_[i]) + o.exps_[i];
        if (e > kMaxExponent) throw ExponentOverflow();
        r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - o.exps_[i]);
    r.degree_ = degree_ - o.degree_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    require_same_size(*this, o);
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        r.exps_[i] = std::max(exps_[i], o.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

std::uint64_t Monomial::support_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0) mask |= std::uint64_t{1} << (i % 64);
    return mask;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < m.size(); ++i) {
        h ^= m[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
    if (name == "grevlex") return grevlex();
    if (name == "lex") return lex();
    throw InvalidArgument("unknown monomial order '" + name + "' (expected grevlex or lex)");
}

std::strong_ordering order_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    require_same_size(a, b);
    return ord.compare(a, b);
}

std::size_t Ring::index_of(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    return static_cast<std::size_t>(it - variables.begin());
}

RingPtr make_ring(std::vector<std::string> variables, MonomialOrder order) {
    std::vector<std::string> sorted = variables;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("duplicate variable name");
    return std::make_shared<const Ring>(Ring{std::move(variables), order});
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
    if (ring->order == order) return ring;
    return std::make_shared<const Ring>(Ring{ring->variables, order});
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    std::vector<unsigned> e(n, 0);
    // Enumerate compositions of d into n parts, first variable largest first.
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == n) {
            e[i] = left;
            out.emplace_back(std::span<const unsigned>(e));
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t n, unsigned d, MonomialOrder ord) {
    if (n == 0) throw InvalidArgument("monomials_up_to_degree needs at least one variable");
    std::vector<Monomial> out;
    for (unsigned k = 0; k <= d; ++k) {
        auto part = monomials_of_degree(n, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    return out;
}

} // namespace satura::poly
