// satura command-line front end.  Exit codes: 0 success, 2 validation error,
// 3 when a computation or table cell failed (timeout, positive dimension, error).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "satura/bounds.hpp"
#include "satura/error.hpp"
#include "satura/experiments.hpp"
#include "satura/groebner.hpp"
#include "satura/hilbert.hpp"
#include "satura/poly_io.hpp"
#include "satura/problems.hpp"
#include "satura/saturate.hpp"

namespace {

using namespace satura;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitFailures = 3;

// Raised for a failed single computation; the message goes to stderr.
struct ComputationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Global {
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::optional<double> timeout_s;
    std::string out;
    std::string format = "json";

    std::optional<std::chrono::milliseconds> timeout() const {
        if (!timeout_s) return std::nullopt;
        return std::chrono::milliseconds(static_cast<std::int64_t>(*timeout_s * 1000));
    }
};

void emit(const Global& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(g.out, std::ios::trunc);
    if (!f) throw InvalidArgument("cannot open '" + g.out + "' for writing");
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit_json_only(const Global& g, const json& j) {
    if (g.format != "json") throw InvalidArgument("this subcommand only writes JSON");
    emit(g, j.dump(2));
}

template <class T>
void emit_report(const Global& g, const T& report) {
    emit(g, g.format == "csv" ? experiments::to_csv(report) : experiments::to_json(report).dump(2));
}

std::string monomial_text(const poly::Monomial& m, const std::vector<std::string>& vars) {
    std::string s;
    const auto e = m.exponents();
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += '*';
        s += vars[k];
        if (e[k] > 1) s += '^' + std::to_string(e[k]);
    }
    return s.empty() ? "1" : s;
}

json monomials_json(const std::vector<poly::Monomial>& ms, const std::vector<std::string>& vars) {
    json a = json::array();
    for (const auto& m : ms) a.push_back(monomial_text(m, vars));
    return a;
}

arith::FieldDescriptor field_from_prime(std::uint64_t p) {
    return p == 0 ? arith::FieldDescriptor::rationals() : arith::FieldDescriptor::prime(p);
}

// Dispatches on the field of a loaded system.
template <class Fn>
auto with_field(const arith::FieldDescriptor& fd, Fn&& fn) {
    if (fd.is_prime()) return fn(arith::PrimeField(fd.modulus));
    return fn(arith::RationalField{});
}

arith::FieldDescriptor parse_field(const std::string& s) {
    if (s == "Q") return arith::FieldDescriptor::rationals();
    if (s.starts_with("Fp:")) return arith::FieldDescriptor::prime(std::stoull(s.substr(3)));
    throw InvalidArgument("field must be Q or Fp:<p>");
}

poly::MonomialOrder parse_order(const std::string& s) {
    if (s == "grevlex") return poly::MonomialOrder::grevlex();
    if (s == "lex") return poly::MonomialOrder::lex();
    throw InvalidArgument("order must be grevlex or lex");
}

// ---------------------------------------------------------------- gb

struct GbArgs {
    std::string file;
    std::string order;
    std::string field;
};

int run_gb(const Global& g, const GbArgs& a) {
    auto data = poly::load_system(a.file);
    if (!a.order.empty()) data.order = parse_order(a.order);
    if (!a.field.empty()) data.field = parse_field(a.field);
    return with_field(data.field, [&](const auto& field) {
        auto ring = poly::make_ring(data.vars, data.order);
        auto gens = poly::polynomials_from_system(data, ring, field);
        groebner::Options opts;
        if (auto t = g.timeout()) opts.deadline = Clock::now() + *t;
        const auto start = Clock::now();
        auto gb = groebner::buchberger(gens, opts);
        json j;
        j["field"] = field.descriptor().to_string();
        j["order"] = ring->order.to_string();
        j["vars"] = ring->variables;
        j["basis"] = json::array();
        for (const auto& f : gb.generators) j["basis"].push_back(poly::print_polynomial(f));
        j["leading_monomials"] = monomials_json(gb.leading_monomials, ring->variables);
        auto count = groebner::count_standard_monomials(gb.leading_monomials, ring->nvars());
        j["standard_monomials"] = count ? json(gb.is_unit() ? 0 : *count) : json(nullptr);
        j["zero_dimensional"] = count.has_value();
        j["elapsed_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        emit_json_only(g, j);
        return kExitOk;
    });
}

// ---------------------------------------------------------------- gi / trials

struct GiArgs {
    std::string problem = "alt";
    std::vector<std::size_t> i;
    std::vector<std::uint64_t> primes;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> reference;
    std::string checkpoint;
};

int run_trials_cmd(const Global& g, const problems::ProblemInstance& inst, std::size_t i, std::uint64_t p,
                   std::size_t n, std::optional<std::size_t> reference) {
    experiments::RunOptions opts;
    opts.threads = g.threads;
    opts.timeout = g.timeout();
    opts.reference = reference;
    auto rep = experiments::run_trials(inst, i, p, n, g.seed, opts);
    emit_report(g, rep);
    const auto& h = rep.histogram;
    return h.timeout + h.error > 0 ? kExitFailures : kExitOk;
}

int run_gi(const Global& g, const GiArgs& a) {
    const auto inst = problems::problem_by_name(a.problem);
    if (a.i.empty() || a.primes.empty()) throw InvalidArgument("--i and --prime are required");

    if (a.trials) {
        if (a.i.size() != 1 || a.primes.size() != 1) throw InvalidArgument("--trials takes a single i and prime");
        return run_trials_cmd(g, inst, a.i[0], a.primes[0], *a.trials, a.reference);
    }

    if (a.i.size() == 1 && a.primes.size() == 1 && a.checkpoint.empty()) {
        saturate::GiOptions opts;
        opts.timeout = g.timeout() ? g.timeout() : experiments::default_timeout(a.i[0]);
        saturate::GiResult r;
        try {
            r = saturate::compute_gi(inst, a.i[0], field_from_prime(a.primes[0]), g.seed, opts);
        } catch (const Timeout&) {
            throw ComputationFailed("timed out");
        } catch (const NotZeroDimensional& e) {
            throw ComputationFailed(e.what());
        }
        json j;
        j["value"] = r.value;
        j["i"] = r.i;
        j["prime"] = a.primes[0];
        j["field"] = r.field.to_string();
        j["seed"] = r.seed;
        j["elapsed_ms"] = r.elapsed_ms;
        j["degenerate"] = r.degenerate;
        j["basis_size"] = r.basis_size;
        emit_json_only(g, j);
        return kExitOk;
    }

    for (auto p : a.primes)
        if (p == 0) throw InvalidArgument("tables run over prime fields only");
    experiments::TableOptions opts;
    opts.threads = g.threads;
    opts.timeout = g.timeout();
    if (!a.checkpoint.empty()) opts.checkpoint_path = a.checkpoint;
    auto table = experiments::gi_table(inst, a.i, a.primes, g.seed, opts);
    emit_report(g, table);
    return table.has_failures() ? kExitFailures : kExitOk;
}

// ---------------------------------------------------------------- hilbert

struct HilbertArgs {
    std::string problem = "alt";
    std::string file;
    std::vector<std::size_t> i;
    std::uint64_t prime = 32771;
    unsigned dmax = 8;
};

int run_hilbert(const Global& g, const HilbertArgs& a) {
    if (!a.file.empty()) {
        // HF of the ideal given in the file itself, no saturation.
        auto data = poly::load_system(a.file);
        return with_field(data.field, [&](const auto& field) {
            auto ring = poly::make_ring(data.vars, poly::MonomialOrder::grevlex());
            auto gb = groebner::buchberger(poly::polynomials_from_system(data, ring, field));
            auto hf = hilbert::affine_hilbert_function(gb, a.dmax);
            json j;
            j["schema_version"] = experiments::kSchemaVersion;
            j["kind"] = "hilbert";
            j["file"] = a.file;
            j["field"] = field.descriptor().to_string();
            j["d_max"] = a.dmax;
            j["values"] = hf.values;
            j["stabilized_at"] = hf.stabilized_at ? json(*hf.stabilized_at) : json(nullptr);
            j["stable_value"] = hf.stable_value ? json(*hf.stable_value) : json(nullptr);
            if (g.format == "csv") {
                std::ostringstream os;
                os << "d,hf\n";
                for (std::size_t d = 0; d < hf.values.size(); ++d) os << d << "," << hf.values[d] << "\n";
                emit(g, os.str());
            } else {
                emit(g, j.dump(2));
            }
            return kExitOk;
        });
    }
    if (a.i.empty()) throw InvalidArgument("--i is required with --problem");
    experiments::TableOptions opts;
    opts.threads = g.threads;
    opts.timeout = g.timeout();
    auto table = experiments::hilbert_table(problems::problem_by_name(a.problem), a.i, a.prime, a.dmax, g.seed, opts);
    emit_report(g, table);
    return table.has_failures() ? kExitFailures : kExitOk;
}

// ---------------------------------------------------------------- jde

struct JdeArgs {
    std::string file;
    std::string problem;
    unsigned d = 2;
    std::vector<unsigned> e;
};

template <class F>
int jde_table(const Global& g, const std::vector<poly::Polynomial<F>>& h, const std::string& source,
              const JdeArgs& a) {
    json j;
    j["schema_version"] = experiments::kSchemaVersion;
    j["kind"] = "jde";
    j["source"] = source;
    j["d"] = a.d;
    j["rows"] = json::array();
    std::ostringstream csv;
    csv << "d,e,dimension,upper_bound,rows,columns\n";
    for (unsigned e : a.e) {
        auto r = hilbert::jde_dimension(h, a.d, e);
        j["rows"].push_back(
            {{"e", e}, {"dimension", r.dimension}, {"upper_bound", r.upper_bound}, {"rows", r.rows}, {"columns", r.columns}});
        csv << a.d << "," << e << "," << r.dimension << "," << r.upper_bound << "," << r.rows << "," << r.columns
            << "\n";
    }
    emit(g, g.format == "csv" ? csv.str() : j.dump(2));
    return kExitOk;
}

int run_jde(const Global& g, const JdeArgs& a) {
    if (a.e.empty()) throw InvalidArgument("--e is required");
    if (!a.file.empty()) {
        auto data = poly::load_system(a.file);
        return with_field(data.field, [&](const auto& field) {
            auto ring = poly::make_ring(data.vars, poly::MonomialOrder::grevlex());
            return jde_table(g, poly::polynomials_from_system(data, ring, field), a.file, a);
        });
    }
    if (a.problem == "conics-pstar") return jde_table(g, problems::conics_pstar_system(), a.problem, a);
    if (a.problem.empty()) throw InvalidArgument("--file or --problem is required");
    return jde_table(g, problems::problem_by_name(a.problem).f, a.problem, a);
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
    std::string problem;
    unsigned n = 1, r = 1, dmin = 1, dmax = 1;
    std::vector<unsigned> degrees;
    std::string g_upper = "47";
    std::optional<std::string> nu;
    std::optional<unsigned> prime_exp;
    std::string target = "99/100";
};

int run_bounds(const Global& g, const BoundsArgs& a) {
    bounds::BoundsInput in;
    std::vector<unsigned> degrees = a.degrees;
    if (!a.problem.empty()) {
        const auto inst = problems::problem_by_name(a.problem);
        const auto prof = problems::degree_profile(inst);
        in.n = static_cast<unsigned>(inst.n());
        in.r = static_cast<unsigned>(inst.r());
        in.d_min = prof.d_min;
        in.d_max = prof.d_max;
        if (degrees.empty()) degrees = prof.degrees;
    } else {
        in.n = a.n;
        in.r = a.r;
        in.d_min = a.dmin;
        in.d_max = a.dmax;
    }
    if (degrees.empty()) throw InvalidArgument("--degrees or --problem is required");
    in.deg_v = bounds::bezout_bound(degrees);
    in.g_upper = mpz_class(a.g_upper);
    in.nu = a.nu ? mpz_class(*a.nu) : bounds::nu_upper_bound(in.g_upper, in.n);
    mpq_class target(a.target);
    target.canonicalize();

    json j;
    j["schema_version"] = experiments::kSchemaVersion;
    j["kind"] = "bounds";
    j["n"] = in.n;
    j["r"] = in.r;
    j["d_min"] = in.d_min;
    j["d_max"] = in.d_max;
    j["deg_v"] = in.deg_v.get_str();
    j["g_upper"] = in.g_upper.get_str();
    j["nu"] = in.nu.get_str();
    const auto disc = bounds::discriminant_degree_bound(in);
    j["discriminant_degree_bound"] = disc.get_str();
    j["additive_constant"] = mpz_class(disc + in.g_upper).get_str();
    j["target"] = target.get_str();
    j["min_prime_exponent"] = bounds::min_prime_exponent(in, target);
    if (a.prime_exp) {
        mpz_ui_pow_ui(in.p.get_mpz_t(), 2, *a.prime_exp);
        auto b = bounds::success_probability_lower_bound(in);
        j["prime_exponent"] = *a.prime_exp;
        j["success_lower"] = bounds::to_decimal(b.lower, 12);
        j["success_upper"] = bounds::to_decimal(b.upper, 12);
        j["exact"] = b.exact;
        j["underflow"] = b.underflow;
    }
    emit_json_only(g, j);
    return kExitOk;
}

// ---------------------------------------------------------------- problems

int run_problems_list(const Global& g) {
    json j = json::array();
    for (const auto& name : problems::builtin_problem_names()) {
        auto inst = problems::problem_by_name(name);
        j.push_back({{"name", name}, {"n", inst.n()}, {"r", inst.r()}, {"base_locus_components", inst.base_locus.size()}});
    }
    j.push_back({{"name", "conics-pstar"}, {"n", 6}, {"r", 6}, {"base_locus_components", 0}});
    emit_json_only(g, j);
    return kExitOk;
}

int run_problems_export(const Global& g, const std::string& name) {
    poly::SystemData s;
    if (name == "conics-pstar") {
        auto h = problems::conics_pstar_system();
        const auto& ring = h.front().ring();
        s = poly::system_from_polynomials(h, poly::make_ring(ring.variables, ring.order), arith::RationalField{});
    } else {
        auto inst = problems::problem_by_name(name);
        s = poly::system_from_polynomials(inst.f, inst.ring, arith::RationalField{});
    }
    s.extra["name"] = name;
    emit_json_only(g, poly::system_to_json(s));
    return kExitOk;
}

// ---------------------------------------------------------------- emit-cert

struct CertArgs {
    std::string file;
    std::string points;
    unsigned d = 1;
    std::vector<std::string> columns;
    bool conics_columns = false;
};

int run_emit_cert(const Global& g, const CertArgs& a) {
    auto data = poly::load_system(a.file);
    return with_field(data.field, [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        auto ring = poly::make_ring(data.vars, poly::MonomialOrder::grevlex());
        auto G = poly::polynomials_from_system(data, ring, field);

        std::vector<std::vector<typename F::Element>> pts;
        if (!a.points.empty()) {
            std::ifstream in(a.points);
            if (!in) throw InvalidArgument("cannot read '" + a.points + "'");
            for (const auto& row : json::parse(in)) {
                std::vector<typename F::Element> pt;
                for (const auto& v : row)
                    pt.push_back(field.from_rational(arith::Rational::parse(v.is_string() ? v.get<std::string>() : v.dump())));
                pts.push_back(std::move(pt));
            }
        } else if constexpr (std::is_same_v<F, arith::PrimeField>) {
            for (auto& p : hilbert::find_points_bruteforce(G)) {
                std::vector<typename F::Element> pt;
                for (auto v : p) pt.push_back(field.from_rational(arith::Rational(mpz_class(std::to_string(v)), 1)));
                pts.push_back(std::move(pt));
            }
        } else {
            throw InvalidArgument("--points is required over Q");
        }

        std::vector<poly::Monomial> cols;
        if (a.conics_columns) {
            cols = problems::conics_certification_columns();
        } else if (!a.columns.empty()) {
            for (const auto& c : a.columns) {
                auto m = poly::parse_q(c, ring);
                if (m.size() != 1) throw InvalidArgument("column '" + c + "' is not a monomial");
                cols.push_back(m.terms().front().mono);
            }
        } else {
            cols = poly::monomials_up_to_degree(ring->nvars(), a.d);
        }
        if (cols.size() != pts.size())
            throw InvalidArgument("need as many points as columns (" + std::to_string(cols.size()) + "), got " +
                                  std::to_string(pts.size()));

        auto cs = hilbert::emit_certification_system(G, pts, a.d, cols);
        auto s = poly::system_from_polynomials(cs.polynomials, cs.ring, field);
        s.extra["k"] = cs.k;
        s.extra["n"] = cs.n;
        s.extra["d"] = a.d;
        s.extra["columns"] = monomials_json(cs.columns, data.vars);
        emit_json_only(g, poly::system_to_json(s));
        return kExitOk;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solution counts outside a base locus via randomized saturation"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Global g;
    app.add_option("--seed", g.seed, "master seed")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads (default: SATURA_THREADS or hardware)");
    app.add_option("--timeout-s", g.timeout_s, "per-computation timeout in seconds")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "output file (default: stdout)");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    GbArgs gb;
    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of a system file");
    gb_cmd->add_option("file", gb.file, "system file (JSON or text)")->required()->check(CLI::ExistingFile);
    gb_cmd->add_option("--order", gb.order, "grevlex or lex (overrides the file)");
    gb_cmd->add_option("--field", gb.field, "Q or Fp:<p> (overrides the file)");

    GiArgs gi;
    auto* gi_cmd = app.add_subcommand("gi", "g_i for one draw, a table of cells, or a trial batch");
    gi_cmd->add_option("--problem", gi.problem, "monomial-example, conics-affine, alt or file:<path>")
        ->capture_default_str();
    gi_cmd->add_option("--i", gi.i, "index i (comma list for a table)")->required()->delimiter(',');
    gi_cmd->add_option("--prime", gi.primes, "prime p, 0 for Q (comma list for a table)")->required()->delimiter(',');
    gi_cmd->add_option("--trials", gi.trials, "run N seeded trials instead");
    gi_cmd->add_option("--reference", gi.reference, "success value for --trials");
    gi_cmd->add_option("--checkpoint", gi.checkpoint, "resumable table checkpoint file");

    GiArgs tr;
    std::size_t tr_n = 0;
    auto* tr_cmd = app.add_subcommand("trials", "success counts over N seeded trials");
    tr_cmd->add_option("--problem", tr.problem)->capture_default_str();
    tr_cmd->add_option("--i", tr.i)->required()->expected(1);
    tr_cmd->add_option("--prime", tr.primes)->required()->expected(1);
    tr_cmd->add_option("--trials,-N", tr_n)->required();
    tr_cmd->add_option("--reference", tr.reference, "success value (default: built-in table)");

    HilbertArgs hb;
    auto* hb_cmd = app.add_subcommand("hilbert", "affine Hilbert function rows");
    auto* hb_problem = hb_cmd->add_option("--problem", hb.problem)->capture_default_str();
    hb_cmd->add_option("--file", hb.file, "HF of the ideal in this system file")->excludes(hb_problem)
        ->check(CLI::ExistingFile);
    hb_cmd->add_option("--i", hb.i)->delimiter(',');
    hb_cmd->add_option("--prime", hb.prime)->capture_default_str();
    hb_cmd->add_option("--dmax", hb.dmax)->capture_default_str();

    JdeArgs jd;
    auto* jd_cmd = app.add_subcommand("jde", "dimensions of J_d^e and the resulting HF upper bounds");
    auto* jd_file = jd_cmd->add_option("--file", jd.file)->check(CLI::ExistingFile);
    jd_cmd->add_option("--problem", jd.problem, "conics-pstar or a built-in problem")->excludes(jd_file);
    jd_cmd->add_option("--d", jd.d)->capture_default_str();
    jd_cmd->add_option("--e", jd.e, "comma list of e values")->required()->delimiter(',');

    BoundsArgs bd;
    auto* bd_cmd = app.add_subcommand("bounds", "degree and success-probability bounds");
    auto* bd_problem = bd_cmd->add_option("--problem", bd.problem, "take n, r, degrees from a built-in problem");
    bd_cmd->add_option("--n", bd.n)->capture_default_str()->excludes(bd_problem);
    bd_cmd->add_option("--r", bd.r)->capture_default_str()->excludes(bd_problem);
    bd_cmd->add_option("--dmin", bd.dmin)->capture_default_str()->excludes(bd_problem);
    bd_cmd->add_option("--dmax", bd.dmax)->capture_default_str()->excludes(bd_problem);
    bd_cmd->add_option("--degrees", bd.degrees, "degrees for the Bezout bound")->delimiter(',');
    bd_cmd->add_option("--g-upper", bd.g_upper)->capture_default_str();
    bd_cmd->add_option("--nu", bd.nu, "override nu (default C(g+n+1, n+1))");
    bd_cmd->add_option("--prime-exp", bd.prime_exp, "evaluate the bound at p = 2^k");
    bd_cmd->add_option("--target", bd.target, "rational target, e.g. 99/100")->capture_default_str();

    auto* pr_cmd = app.add_subcommand("problems", "built-in problems");
    pr_cmd->require_subcommand(1);
    auto* pr_list = pr_cmd->add_subcommand("list", "names and sizes");
    std::string export_name;
    auto* pr_export = pr_cmd->add_subcommand("export", "write a problem as a JSON system");
    pr_export->add_option("name", export_name)->required();

    CertArgs ct;
    auto* ct_cmd = app.add_subcommand("emit-cert", "certification system for a set of points");
    ct_cmd->add_option("--file", ct.file, "generators G (system file)")->required()->check(CLI::ExistingFile);
    ct_cmd->add_option("--points", ct.points, "JSON array of points (default: all F_p points by enumeration)")
        ->check(CLI::ExistingFile);
    ct_cmd->add_option("--d", ct.d)->capture_default_str();
    ct_cmd->add_option("--columns", ct.columns, "monomials indexing the columns")->delimiter(',');
    ct_cmd->add_flag("--conics-columns", ct.conics_columns, "use the 18 conics columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*gb_cmd) return run_gb(g, gb);
        if (*gi_cmd) return run_gi(g, gi);
        if (*tr_cmd) {
            const auto inst = problems::problem_by_name(tr.problem);
            return run_trials_cmd(g, inst, tr.i[0], tr.primes[0], tr_n, tr.reference);
        }
        if (*hb_cmd) return run_hilbert(g, hb);
        if (*jd_cmd) return run_jde(g, jd);
        if (*bd_cmd) return run_bounds(g, bd);
        if (*pr_list) return run_problems_list(g);
        if (*pr_export) return run_problems_export(g, export_name);
        if (*ct_cmd) return run_emit_cert(g, ct);
    } catch (const ComputationFailed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailures;
    } catch (const Timeout& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailures;
    } catch (const NotZeroDimensional& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailures;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailures;
    } catch (const satura::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}
