// Python module satura._core.  Reports come back as plain dicts built from
// the same JSON the CLI writes.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "satura/bounds.hpp"
#include "satura/error.hpp"
#include "satura/experiments.hpp"
#include "satura/groebner.hpp"
#include "satura/hilbert.hpp"
#include "satura/poly_io.hpp"
#include "satura/problems.hpp"
#include "satura/saturate.hpp"

namespace py = pybind11;
using namespace satura;

namespace {

py::object to_python(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::optional<std::chrono::milliseconds> to_ms(std::optional<double> seconds) {
    if (!seconds) return std::nullopt;
    return std::chrono::milliseconds(static_cast<std::int64_t>(*seconds * 1000));
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

template <class Fn>
auto with_field(const arith::FieldDescriptor& fd, Fn&& fn) {
    if (fd.is_prime()) return fn(arith::PrimeField(fd.modulus));
    return fn(arith::RationalField{});
}

template <class F>
std::vector<poly::Polynomial<F>> parse_all(const std::vector<std::string>& polys, const poly::RingPtr& ring,
                                           const F& field) {
    std::vector<poly::Polynomial<F>> out;
    for (const auto& s : polys) out.push_back(poly::parse_polynomial(s, ring, field));
    return out;
}

std::vector<std::vector<unsigned>> exponent_rows(const std::vector<poly::Monomial>& ms) {
    std::vector<std::vector<unsigned>> out;
    for (const auto& m : ms) {
        auto e = m.exponents();
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

py::dict groebner_basis(const std::vector<std::string>& polys, const std::vector<std::string>& vars,
                        const std::string& field, const std::string& order) {
    return with_field(parse_field(field), [&](const auto& f) {
        auto ring = poly::make_ring(vars, parse_order(order));
        auto gb = groebner::buchberger(parse_all(polys, ring, f));
        std::vector<std::string> basis;
        for (const auto& g : gb.generators) basis.push_back(poly::print_polynomial(g));
        auto count = groebner::count_standard_monomials(gb.leading_monomials, ring->nvars());
        py::dict d;
        d["basis"] = basis;
        d["leading_monomials"] = exponent_rows(gb.leading_monomials);
        d["standard_monomials"] = count ? py::object(py::int_(gb.is_unit() ? 0 : *count)) : py::object(py::none());
        return d;
    });
}

py::dict compute_gi(const std::string& problem, std::size_t i, std::uint64_t prime, std::uint64_t seed,
                    std::optional<double> timeout_s) {
    saturate::GiOptions opts;
    opts.timeout = to_ms(timeout_s);
    const auto field = prime == 0 ? arith::FieldDescriptor::rationals() : arith::FieldDescriptor::prime(prime);
    saturate::GiResult r;
    {
        py::gil_scoped_release release;
        r = saturate::compute_gi(problems::problem_by_name(problem), i, field, seed, opts);
    }
    py::dict d;
    d["value"] = r.value;
    d["i"] = r.i;
    d["field"] = r.field.to_string();
    d["seed"] = r.seed;
    d["elapsed_ms"] = r.elapsed_ms;
    d["degenerate"] = r.degenerate;
    d["theta"] = r.theta;
    d["lambda"] = r.lambda;
    d["mu"] = r.mu;
    return d;
}

py::object run_trials(const std::string& problem, std::size_t i, std::uint64_t prime, std::size_t n,
                      std::uint64_t seed, unsigned threads, std::optional<std::size_t> reference,
                      std::optional<double> timeout_s) {
    experiments::RunOptions opts;
    opts.threads = threads;
    opts.reference = reference;
    opts.timeout = to_ms(timeout_s);
    experiments::TrialReport rep;
    {
        py::gil_scoped_release release;
        rep = experiments::run_trials(problems::problem_by_name(problem), i, prime, n, seed, opts);
    }
    return to_python(experiments::to_json(rep));
}

py::object gi_table(const std::string& problem, const std::vector<std::size_t>& i_list,
                    const std::vector<std::uint64_t>& primes, std::uint64_t seed, unsigned threads,
                    std::optional<double> timeout_s, std::optional<std::string> checkpoint) {
    experiments::TableOptions opts;
    opts.threads = threads;
    opts.timeout = to_ms(timeout_s);
    opts.checkpoint_path = checkpoint;
    experiments::GiTable t;
    {
        py::gil_scoped_release release;
        t = experiments::gi_table(problems::problem_by_name(problem), i_list, primes, seed, opts);
    }
    return to_python(experiments::to_json(t));
}

py::object hilbert_table(const std::string& problem, const std::vector<std::size_t>& i_list, std::uint64_t prime,
                         unsigned d_max, std::uint64_t seed, unsigned threads) {
    experiments::TableOptions opts;
    opts.threads = threads;
    experiments::HilbertTable t;
    {
        py::gil_scoped_release release;
        t = experiments::hilbert_table(problems::problem_by_name(problem), i_list, prime, d_max, seed, opts);
    }
    return to_python(experiments::to_json(t));
}

std::vector<std::size_t> hilbert_function(const std::vector<std::string>& polys, const std::vector<std::string>& vars,
                                          unsigned d_max, const std::string& field) {
    return with_field(parse_field(field), [&](const auto& f) {
        auto ring = poly::make_ring(vars, poly::MonomialOrder::grevlex());
        return hilbert::affine_hilbert_function(groebner::buchberger(parse_all(polys, ring, f)), d_max).values;
    });
}

py::dict jde_dimension(const std::vector<std::string>& polys, const std::vector<std::string>& vars, unsigned d,
                       unsigned e, const std::string& field) {
    auto r = with_field(parse_field(field), [&](const auto& f) {
        auto ring = poly::make_ring(vars, poly::MonomialOrder::grevlex());
        return hilbert::jde_dimension(parse_all(polys, ring, f), d, e);
    });
    py::dict out;
    out["dimension"] = r.dimension;
    out["upper_bound"] = r.upper_bound;
    return out;
}

py::dict lm_agreement(const std::vector<std::string>& polys, const std::vector<std::string>& vars, std::uint64_t p,
                      const std::string& order) {
    auto ring = poly::make_ring(vars, parse_order(order));
    auto r = saturate::lm_agreement(parse_all(polys, ring, arith::RationalField{}), p, ring->order);
    py::dict d;
    d["agree"] = r.agree;
    d["lm_rational"] = exponent_rows(r.lm_rational);
    d["lm_modular"] = exponent_rows(r.lm_modular);
    return d;
}

py::int_ big(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

bounds::BoundsInput bounds_input(unsigned n, unsigned r, unsigned d_min, unsigned d_max,
                                 const std::vector<unsigned>& degrees, const py::int_& g_upper) {
    bounds::BoundsInput in;
    in.n = n;
    in.r = r;
    in.d_min = d_min;
    in.d_max = d_max;
    in.deg_v = bounds::bezout_bound(degrees);
    in.g_upper = mpz_class(py::str(g_upper).cast<std::string>());
    in.nu = bounds::nu_upper_bound(in.g_upper, n);
    return in;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Solution counts outside a base locus via randomized saturation";

    static py::exception<satura::Error> base_error(m, "SaturaError", PyExc_ValueError);
    static py::exception<satura::Timeout> timeout_error(m, "SaturaTimeout", base_error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const satura::Timeout& e) {
            py::set_error(timeout_error, e.what());
        } catch (const satura::Error& e) {
            py::set_error(base_error, e.what());
        }
    });

    m.attr("SCHEMA_VERSION") = experiments::kSchemaVersion;
    m.def("problem_names", &problems::builtin_problem_names);
    m.def("groebner_basis", &groebner_basis, py::arg("polys"), py::arg("vars"), py::arg("field") = "Q",
          py::arg("order") = "grevlex", "Reduced basis, leading exponents and the standard-monomial count.");
    m.def("compute_gi", &compute_gi, py::arg("problem"), py::arg("i"), py::arg("prime"), py::arg("seed") = 0,
          py::arg("timeout_s") = py::none(), "g_i for one seeded draw; prime 0 works over Q.");
    m.def("run_trials", &run_trials, py::arg("problem"), py::arg("i"), py::arg("prime"), py::arg("n"),
          py::arg("seed") = 0, py::arg("threads") = 0, py::arg("reference") = py::none(),
          py::arg("timeout_s") = py::none());
    m.def("gi_table", &gi_table, py::arg("problem"), py::arg("i_list"), py::arg("primes"), py::arg("seed") = 0,
          py::arg("threads") = 0, py::arg("timeout_s") = py::none(), py::arg("checkpoint") = py::none());
    m.def("hilbert_table", &hilbert_table, py::arg("problem"), py::arg("i_list"), py::arg("prime"),
          py::arg("d_max"), py::arg("seed") = 0, py::arg("threads") = 0);
    m.def("hilbert_function", &hilbert_function, py::arg("polys"), py::arg("vars"), py::arg("d_max"),
          py::arg("field") = "Q");
    m.def("jde_dimension", &jde_dimension, py::arg("polys"), py::arg("vars"), py::arg("d"), py::arg("e"),
          py::arg("field") = "Q");
    m.def("lm_agreement", &lm_agreement, py::arg("polys"), py::arg("vars"), py::arg("p"), py::arg("order") = "lex");

    m.def("nu_upper_bound", [](const py::int_& deg, unsigned n) {
        return big(bounds::nu_upper_bound(mpz_class(py::str(deg).cast<std::string>()), n));
    });
    m.def(
        "discriminant_degree_bound",
        [](unsigned n, unsigned r, unsigned d_min, unsigned d_max, const std::vector<unsigned>& degrees) {
            return big(bounds::discriminant_degree_bound(bounds_input(n, r, d_min, d_max, degrees, py::int_(0))));
        },
        py::arg("n"), py::arg("r"), py::arg("d_min"), py::arg("d_max"), py::arg("degrees"));
    m.def(
        "min_prime_exponent",
        [](unsigned n, unsigned r, unsigned d_min, unsigned d_max, const std::vector<unsigned>& degrees,
           const py::int_& g_upper, const std::string& target) {
            mpq_class t(target);
            t.canonicalize();
            return bounds::min_prime_exponent(bounds_input(n, r, d_min, d_max, degrees, g_upper), t);
        },
        py::arg("n"), py::arg("r"), py::arg("d_min"), py::arg("d_max"), py::arg("degrees"), py::arg("g_upper"),
        py::arg("target") = "99/100");
}
