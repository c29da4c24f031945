#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hbe/catalog.hpp"
#include "hbe/combinatorics.hpp"
#include "hbe/errors.hpp"
#include "hbe/numeric.hpp"
#include "hbe/recursions.hpp"

namespace py = pybind11;
using namespace hbe;

namespace {

py::object fraction(const Rational &q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(q.to_string());
}

py::list fractions(const std::vector<Rational> &xs) {
  py::list out;
  for (const auto &x : xs) {
    out.append(fraction(x));
  }
  return out;
}

// Accepts int, Fraction or a "p/q" string.
Rational to_rational(const py::handle &obj) { return Rational::parse(py::str(obj).cast<std::string>()); }

std::optional<ExactParam> to_param(const py::object &m) {
  if (m.is_none()) {
    return std::nullopt;
  }
  return ExactParam::parse(py::str(m).cast<std::string>());
}

py::object param_fraction(const std::optional<ExactParam> &m) {
  return m ? fraction(m->value()) : py::object(py::none());
}

py::dict sym(const SymValue &v) {
  py::dict d;
  d["one"] = fraction(v.coeff(SymValue::One));
  d["ln2"] = fraction(v.coeff(SymValue::Ln2));
  d["ln2_sq"] = fraction(v.coeff(SymValue::Ln2Sq));
  d["pi_sq"] = fraction(v.coeff(SymValue::PiSq));
  d["text"] = v.to_string();
  d["float"] = v.to_double();
  return d;
}

py::dict report(const VerificationReport &r) {
  py::dict d;
  d["identity"] = r.identity;
  d["m"] = param_fraction(r.point.m);
  d["n"] = r.point.n;
  d["equal"] = r.equal;
  d["lhs"] = sym(r.lhs);
  d["rhs"] = sym(r.rhs);
  d["terms"] = r.lhs_terms;
  d["t_lhs_ns"] = r.wall_time_lhs.count();
  d["t_rhs_ns"] = r.wall_time_rhs.count();
  return d;
}

py::dict numeric_report(const NumericReport &r) {
  py::dict d;
  d["identity"] = r.identity;
  d["m"] = r.m;
  d["n"] = r.n;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["rel_err"] = r.rel_err;
  d["pass"] = r.pass;
  d["tol"] = r.tol;
  return d;
}

Catalog catalog_for(bool half) { return half ? make_catalog({.thm51_half_integer = true}) : make_catalog(); }

} // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact verification of harmonic-number and central binomial identities";

  py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(mod, "PoleError", PyExc_ValueError);
  py::register_exception<OutOfSpan>(mod, "OutOfSpan", PyExc_ArithmeticError);
  py::register_exception<SingularSystem>(mod, "SingularSystem", PyExc_ArithmeticError);

  mod.def("registry", [] {
    py::list out;
    for (const auto &d : registry()) {
      py::dict e;
      e["id"] = d.id;
      e["title"] = d.title;
      e["source"] = d.source;
      e["requires_m"] = d.requires_m;
      e["n_min"] = d.n_min;
      e["ring"] = d.ring == Ring::Rational ? "rational" : "symbolic";
      out.append(e);
    }
    return out;
  });

  mod.def(
      "verify",
      [](const std::string &id, std::int64_t n, const py::object &m, bool half) {
        return report(verify_point(id, {to_param(m), n}, catalog_for(half)));
      },
      py::arg("identity"), py::arg("n"), py::arg("m") = py::none(), py::arg("half_integer_order2") = false);

  mod.def(
      "verify_range",
      [](const std::string &id, std::int64_t n_max, const std::vector<py::object> &ms, unsigned threads,
         bool half) {
        std::vector<ExactParam> params;
        for (const auto &m : ms) {
          params.push_back(*to_param(m));
        }
        std::vector<VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify_range(id, n_max, params, catalog_for(half), threads);
        }
        py::list out;
        for (const auto &r : reports) {
          out.append(report(r));
        }
        return out;
      },
      py::arg("identity"), py::arg("n_max"), py::arg("m") = std::vector<py::object>{},
      py::arg("threads") = 0u, py::arg("half_integer_order2") = false);

  mod.def(
      "lhs",
      [](const std::string &id, std::int64_t n, const py::object &m) {
        return sym(lhs_direct(id, {to_param(m), n}).value);
      },
      py::arg("identity"), py::arg("n"), py::arg("m") = py::none());
  mod.def(
      "rhs",
      [](const std::string &id, std::int64_t n, const py::object &m) {
        return sym(rhs_closed(id, {to_param(m), n}).value);
      },
      py::arg("identity"), py::arg("n"), py::arg("m") = py::none());

  mod.def("binom_gen", [](const py::object &m, std::int64_t k) { return fraction(binom_gen(to_rational(m), k)); });
  mod.def("catalan", [](std::int64_t n) { return fraction(catalan(n)); });
  mod.def("harmonic", [](std::int64_t n) { return fraction(harmonic(n)); });
  mod.def("odd_harmonic", [](std::int64_t n) { return fraction(odd_harmonic(n)); });
  mod.def("harmonic2", [](std::int64_t n) { return fraction(harmonic2(n)); });
  mod.def("harmonic_exact", [](const py::object &m) { return sym(harmonic_exact(*to_param(m))); });
  mod.def("harmonic2_exact", [](const py::object &m) { return sym(harmonic2_exact(*to_param(m))); });

  mod.def("c_coeff", [](std::int64_t d, std::int64_t j) { return fraction(c_coeff(d, j)); });
  mod.def("u_rec", [](std::int64_t d, std::int64_t n) { return fraction(u_rec(d, n)); });
  mod.def("v_rec", [](std::int64_t d, std::int64_t n) { return fraction(v_rec(d, n)); });
  mod.def("u_direct", [](std::int64_t d, std::int64_t n) { return fraction(u_direct(d, n)); });
  mod.def("v_direct", [](std::int64_t d, std::int64_t n) { return fraction(v_direct(d, n)); });

  mod.def("fit_structure", [](std::int64_t d) {
    const auto f = fit_structure(d);
    py::dict out;
    out["d"] = f.d;
    out["p"] = fractions(f.p);
    out["q"] = fractions(f.q);
    out["c"] = fraction(f.c_const);
    out["n_factor"] = fraction(f.n_factor);
    out["residual_ok"] = f.residual_ok;
    out["diagnostic"] = f.diagnostic;
    return out;
  });
  mod.def("fit_u_structure", [](std::int64_t d) {
    const auto f = fit_u_structure(d);
    py::dict out;
    out["d"] = f.d;
    out["r"] = fractions(f.r);
    out["k"] = fraction(f.k_const);
    out["n_factor"] = fraction(f.n_factor);
    out["minimal_denominator"] = fraction(f.minimal_denominator);
    out["residual_ok"] = f.residual_ok;
    out["diagnostic"] = f.diagnostic;
    return out;
  });

  mod.def("digamma", &digamma);
  mod.def("trigamma", &trigamma);
  mod.def("harmonic_num", &harmonic_num);
  mod.def("harmonic2_num", &harmonic2_num);
  mod.def(
      "verify_numeric",
      [](const std::string &id, double m, std::int64_t n, double tol) {
        return numeric_report(verify_numeric(id, m, n, tol));
      },
      py::arg("identity"), py::arg("m"), py::arg("n"), py::arg("tol") = 1e-8);
  mod.def(
      "random_numeric_suite",
      [](std::uint64_t seed, int count, double tol) {
        py::list out;
        for (const auto &r : random_numeric_suite(seed, count, tol)) {
          out.append(numeric_report(r));
        }
        return out;
      },
      py::arg("seed"), py::arg("count") = 50, py::arg("tol") = 1e-8);
  mod.def(
      "derivative_check",
      [](const std::string &kind, double m, double h, std::int64_t n) {
        return derivative_check(parse_derivative_kind(kind), m, h, n);
      },
      py::arg("kind"), py::arg("m"), py::arg("h") = 1e-6, py::arg("n") = 8);
  mod.def(
      "residual_sum",
      [](std::int64_t n, bool exact) {
        const auto r = residual_sum(n, exact);
        py::dict out;
        out["n"] = r.n;
        out["exact"] = exact ? fraction(r.exact) : py::object(py::none());
        out["numeric"] = r.numeric;
        out["tail_bound"] = r.tail_bound;
        return out;
      },
      py::arg("n"), py::arg("exact") = true);
  mod.def("half_integer_order2_gate", &half_integer_order2_gate);
}
