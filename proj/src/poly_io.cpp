#include "satura/poly_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace satura::poly {

namespace {

template <class F>
class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring, const F& field)
        : text_(text), ring_(ring), field_(field) {}

    Polynomial<F> parse() {
        auto p = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
        if (start == pos_) throw SyntaxError("expected digits", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned read_exponent() {
        std::size_t at = pos_;
        auto digits = read_digits();
        if (digits.size() > 5 || std::stoul(digits) > 65535) throw SyntaxError("exponent too large", at);
        return static_cast<unsigned>(std::stoul(digits));
    }

    Polynomial<F> parse_sum() {
        Polynomial<F> acc(ring_, field_);
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        for (;;) {
            auto t = parse_product();
            acc = negate ? acc - t : acc + t;
            if (accept('+')) negate = false;
            else if (accept('-')) negate = true;
            else break;
        }
        return acc;
    }

    Polynomial<F> parse_product() {
        auto acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial<F> parse_factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_sum();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            if (accept('^')) inner = inner.pow(read_exponent());
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::size_t at = pos_;
            auto num = read_digits();
            std::string den = "1";
            if (accept('/')) den = read_digits();
            arith::Rational q;
            try {
                q = arith::Rational(mpz_class(num, 10), mpz_class(den, 10));
            } catch (const ZeroInversion&) {
                throw SyntaxError("zero denominator", at);
            }
            return Polynomial<F>::constant(ring_, field_, field_.from_rational(q));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            std::size_t idx = ring_->index_of(name);
            if (idx == ring_->nvars()) throw UnknownVariable(name, start);
            unsigned e = 1;
            if (accept('^')) e = read_exponent();
            return Polynomial<F>::monomial(ring_, field_, field_.one(), Monomial::variable(ring_->nvars(), idx, e));
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    const RingPtr& ring_;
    const F& field_;
    std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, const Ring& ring) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.variables[i];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

void append_term(std::string& out, bool first, std::string coeff, const std::string& mono) {
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (mono.empty()) out += coeff;
    else if (coeff == "1") out += mono;
    else out += coeff + "*" + mono;
}

std::vector<unsigned> exps_from_json(const nlohmann::json& j) {
    std::vector<unsigned> exps;
    for (const auto& e : j) {
        if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0))
            throw SyntaxError("exponent must be a non-negative integer", 0);
        exps.push_back(e.get<unsigned>());
    }
    return exps;
}

} // namespace

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr& ring, const F& field) {
    return Parser<F>(text, ring, field).parse();
}

template <class F>
std::string print_polynomial(const Polynomial<F>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        append_term(out, first, f.field().to_string(t.coeff), monomial_text(t.mono, f.ring()));
        first = false;
    }
    return out;
}

template Polynomial<arith::RationalField> parse_polynomial(std::string_view, const RingPtr&,
                                                           const arith::RationalField&);
template Polynomial<arith::PrimeField> parse_polynomial(std::string_view, const RingPtr&, const arith::PrimeField&);
template std::string print_polynomial(const Polynomial<arith::RationalField>&);
template std::string print_polynomial(const Polynomial<arith::PrimeField>&);

SystemData system_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("polys"))
        throw SyntaxError("system JSON needs 'vars' and 'polys'", 0);
    SystemData s;
    s.vars = j.at("vars").get<std::vector<std::string>>();
    s.field = j.contains("field") ? arith::FieldDescriptor::parse(j.at("field").get<std::string>())
                                  : arith::FieldDescriptor::rationals();
    if (j.contains("order")) s.order = MonomialOrder::parse(j.at("order").get<std::string>());
    for (const auto& p : j.at("polys")) {
        std::vector<SystemData::RawTerm> raw;
        for (const auto& term : p) {
            if (!term.is_array() || term.size() != 2) throw SyntaxError("term must be [coeff, exponents]", 0);
            auto exps = exps_from_json(term[1]);
            if (exps.size() != s.vars.size())
                throw DimensionMismatch("exponent vector length does not match variable count");
            raw.emplace_back(term[0].get<std::string>(), std::move(exps));
        }
        s.polys.push_back(std::move(raw));
    }
    for (const auto& [key, value] : j.items())
        if (key != "vars" && key != "field" && key != "polys" && key != "order") s.extra[key] = value;
    return s;
}

nlohmann::ordered_json system_to_json(const SystemData& s) {
    nlohmann::ordered_json j;
    j["vars"] = s.vars;
    j["field"] = s.field.to_string();
    auto polys = nlohmann::ordered_json::array();
    for (const auto& p : s.polys) {
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [coeff, exps] : p) terms.push_back(nlohmann::ordered_json::array({coeff, exps}));
        polys.push_back(std::move(terms));
    }
    j["polys"] = std::move(polys);
    if (s.order != MonomialOrder::grevlex()) j["order"] = s.order.to_string();
    for (const auto& [key, value] : s.extra.items()) j[key] = value;
    return j;
}

SystemData system_from_text(std::string_view text) {
    SystemData s;
    s.field = arith::FieldDescriptor::rationals();
    std::vector<std::string> bodies;
    std::string body;
    bool have_vars = false;
    std::istringstream in{std::string(text)};
    std::string line;
    auto trim = [](std::string v) {
        auto b = v.find_first_not_of(" \t\r");
        auto e = v.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.starts_with("vars:")) {
            std::string list = line.substr(5);
            for (char& c : list)
                if (c == ',') c = ' ';
            std::istringstream vs(list);
            std::string v;
            while (vs >> v) s.vars.push_back(v);
            have_vars = true;
            continue;
        }
        if (line.starts_with("field:")) {
            s.field = arith::FieldDescriptor::parse(trim(line.substr(6)));
            continue;
        }
        if (line.starts_with("order:")) {
            s.order = MonomialOrder::parse(trim(line.substr(6)));
            continue;
        }
        for (char c : line) {
            if (c == ';') {
                if (!trim(body).empty()) bodies.push_back(trim(body));
                body.clear();
            } else {
                body += c;
            }
        }
        if (!trim(body).empty()) bodies.push_back(trim(body));
        body.clear();
    }
    if (!have_vars) throw SyntaxError("text system needs a 'vars:' line", 0);
    auto ring = make_ring(s.vars, s.order);
    // Coefficients are exact rationals in the file; reduction happens on use.
    for (const auto& b : bodies) {
        auto f = parse_q(b, ring);
        std::vector<SystemData::RawTerm> raw;
        for (const auto& t : f.terms()) raw.emplace_back(t.coeff.to_string(), t.mono.exponents());
        s.polys.push_back(std::move(raw));
    }
    return s;
}

SystemData load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw SyntaxError(std::string("invalid JSON: ") + e.what(), e.byte);
        }
        return system_from_json(j);
    }
    return system_from_text(text);
}

} // namespace satura::poly
