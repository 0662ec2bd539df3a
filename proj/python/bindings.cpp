#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mpbern/cli.hpp"
#include "mpbern/combinatorics.hpp"
#include "mpbern/family.hpp"
#include "mpbern/identities.hpp"
#include "mpbern/polylog.hpp"

namespace py = pybind11;

namespace {

py::object py_int(const mpz_class& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

mpz_class to_mpz(py::handle h) { return mpz_class(py::str(h).cast<std::string>()); }

}  // namespace

namespace pybind11::detail {

// Rational <-> fractions.Fraction; int and "p/q" strings are accepted on input.
template <>
struct type_caster<mpbern::Rational> {
  PYBIND11_TYPE_CASTER(mpbern::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (PyBool_Check(src.ptr())) return false;
    if (PyLong_Check(src.ptr())) {
      value = mpbern::Rational(to_mpz(src));
      return true;
    }
    if (PyUnicode_Check(src.ptr())) {
      try {
        value = mpbern::Rational::parse(src.cast<std::string>());
      } catch (const std::invalid_argument&) {
        return false;
      }
      return true;
    }
    const auto fraction = module_::import("fractions").attr("Fraction");
    if (!isinstance(src, fraction)) return false;
    value = mpbern::Rational(to_mpz(src.attr("numerator")), to_mpz(src.attr("denominator")));
    return true;
  }

  static handle cast(const mpbern::Rational& r, return_value_policy, handle) {
    const auto fraction = module_::import("fractions").attr("Fraction");
    return fraction(py_int(r.numerator()), py_int(r.denominator())).release();
  }
};

}  // namespace pybind11::detail

namespace {

using mpbern::MultiIndex;
using mpbern::ParamSet;
using mpbern::Rational;

using Coefficients = std::vector<Rational>;

std::vector<Coefficients> coefficient_lists(const std::vector<mpbern::Polynomial>& polys) {
  std::vector<Coefficients> out;
  for (const auto& p : polys) out.emplace_back(p.coefficients().begin(), p.coefficients().end());
  return out;
}

py::dict report_dict(const mpbern::IdentityReport& r) {
  py::list failures;
  for (const auto& f : r.failures) {
    py::dict d;
    d["inputs"] = f.inputs;
    d["lhs"] = f.lhs;
    d["rhs"] = f.rhs;
    failures.append(d);
  }
  py::dict d;
  d["id"] = r.id;
  d["variant"] = std::string(mpbern::to_string(r.variant));
  d["cases"] = r.cases;
  d["failure_count"] = r.failure_count;
  d["failures"] = failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact generalized multi poly-Bernoulli polynomials";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const mpbern::DivisionByZero& e) {
      PyErr_SetString(PyExc_ZeroDivisionError, e.what());
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  auto params = [](const Rational& a, const Rational& b, const Rational& c) { return ParamSet{a, b, c}; };

  m.def("bernoulli_number", &mpbern::bernoulli_number, py::arg("n"));
  m.def("stirling2", [](int n, int k) { return py_int(mpbern::stirling2(n, k)); }, py::arg("n"), py::arg("k"));
  m.def(
      "whitney2", [](const Rational& wm, const Rational& wr, int n, int k) { return mpbern::whitney2({wm, wr}, n, k); },
      py::arg("m"), py::arg("r"), py::arg("n"), py::arg("k"));
  m.def(
      "whitney1", [](const Rational& wm, const Rational& wr, int n, int k) { return mpbern::whitney1({wm, wr}, n, k); },
      py::arg("m"), py::arg("r"), py::arg("n"), py::arg("k"));
  m.def("li_weights", [](std::vector<int> k, int max_m) { return mpbern::li_weights(MultiIndex(k), max_m); },
        py::arg("k"), py::arg("max_m"));
  m.def(
      "phi_weights",
      [](std::vector<int> k, const Rational& a, int max_m) { return mpbern::phi_weights(MultiIndex(k), {a}, max_m); },
      py::arg("k"), py::arg("a"), py::arg("max_m"));

  m.def(
      "multi_poly_bernoulli",
      [params](std::vector<int> k, int n_max, const Rational& x, const Rational& ln_a, const Rational& ln_b,
               const Rational& ln_c) {
        return mpbern::multi_poly_bernoulli(MultiIndex(k), params(ln_a, ln_b, ln_c), x, n_max);
      },
      py::arg("k"), py::arg("n_max"), py::arg("x") = Rational(0), py::arg("ln_a") = Rational(1),
      py::arg("ln_b") = Rational(0), py::arg("ln_c") = Rational(1));
  m.def(
      "multi_poly_bernoulli_polys",
      [params](std::vector<int> k, int n_max, const Rational& ln_a, const Rational& ln_b, const Rational& ln_c) {
        return coefficient_lists(mpbern::multi_poly_bernoulli_polys(MultiIndex(k), params(ln_a, ln_b, ln_c), n_max));
      },
      py::arg("k"), py::arg("n_max"), py::arg("ln_a") = Rational(1), py::arg("ln_b") = Rational(0),
      py::arg("ln_c") = Rational(1), "Coefficient lists in x, low to high.");
  m.def(
      "multi_poly_bernoulli_explicit",
      [params](std::vector<int> k, int n, const Rational& x, const Rational& ln_a, const Rational& ln_b,
               const Rational& ln_c) {
        return mpbern::multi_poly_bernoulli_explicit(MultiIndex(k), params(ln_a, ln_b, ln_c), x, n);
      },
      py::arg("k"), py::arg("n"), py::arg("x") = Rational(0), py::arg("ln_a") = Rational(1),
      py::arg("ln_b") = Rational(0), py::arg("ln_c") = Rational(1));
  m.def(
      "reduced_multi_poly_bernoulli",
      [](std::vector<int> k, int n_max, const Rational& x) {
        return mpbern::reduced_multi_poly_bernoulli(MultiIndex(k), x, n_max);
      },
      py::arg("k"), py::arg("n_max"), py::arg("x") = Rational(0));
  m.def("imatomi_numbers", [](std::vector<int> k, int n_max) { return mpbern::imatomi_numbers(MultiIndex(k), n_max); },
        py::arg("k"), py::arg("n_max"));
  m.def(
      "hurwitz_polynomials",
      [](std::vector<int> k, const Rational& a, int n_max, const Rational& x) {
        return mpbern::hurwitz_polynomials(MultiIndex(k), {a}, x, n_max);
      },
      py::arg("k"), py::arg("a"), py::arg("n_max"), py::arg("x") = Rational(0));
  m.def(
      "symmetrized",
      [params](int m_, int n, int r, const Rational& x, const Rational& y, const Rational& ln_a, const Rational& ln_b,
               const Rational& ln_c) {
        return mpbern::symmetrized_definition(m_, n, r, params(ln_a, ln_b, ln_c), x, y);
      },
      py::arg("m"), py::arg("n"), py::arg("r"), py::arg("x"), py::arg("y"), py::arg("ln_a") = Rational(1),
      py::arg("ln_b") = Rational(0), py::arg("ln_c") = Rational(1));

  m.def("identity_ids", [] {
    std::vector<std::string> ids;
    for (const auto& info : mpbern::registered_identities()) ids.push_back(info.id);
    return ids;
  });
  m.def(
      "verify",
      [](std::vector<std::string> ids, std::uint64_t seed) {
        std::vector<mpbern::IdentityReport> reports;
        {
          py::gil_scoped_release release;
          reports = ids.empty() ? mpbern::run_all(seed) : mpbern::run_identities(ids, seed);
        }
        py::list out;
        for (const auto& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("ids") = std::vector<std::string>{}, py::arg("seed") = 0,
      "Runs every variant of the given identities (all when empty).");
  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        const int code = mpbern::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Returns (exit_code, stdout, stderr).");
}
