#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "linnik/arith.hpp"
#include "linnik/cli.hpp"
#include "linnik/lemmas.hpp"
#include "linnik/theorem.hpp"

namespace py = pybind11;
using namespace linnik;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  py::int_ num(py::str(q.get_num().get_str()));
  py::int_ den(py::str(q.get_den().get_str()));
  return cls(num, den);
}

ComputeOptions options(unsigned threads) {
  ComputeOptions o;
  o.threads = threads;
  return o;
}

sieve::Params make_params(u64 x, double A, u64 a, std::optional<double> d_exponent, std::optional<double> d_value) {
  if (d_exponent && d_value) throw PreconditionError("give at most one of d_exponent and d_value");
  sieve::Params p(x, A, a);
  if (d_exponent) return p.with_d_exponent(*d_exponent);
  if (d_value) return p.with_d_value(*d_value);
  return p;
}

py::dict row_dict(const DiscrepancyRow& r) {
  py::dict d;
  d["q"] = r.q;
  d["a"] = r.a;
  d["weighted_count"] = r.weighted_count;
  d["main_term"] = fraction(r.main_term);
  d["discrepancy"] = fraction(r.discrepancy);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations around primes of the form x^2 + y^2 + 1";

  py::class_<sieve::Params>(m, "Params")
      .def(py::init(&make_params), py::arg("x"), py::arg("A"), py::arg("a") = 1, py::kw_only(),
           py::arg("d_exponent") = py::none(), py::arg("d_value") = py::none())
      .def_property_readonly("X", &sieve::Params::X)
      .def_property_readonly("A", &sieve::Params::A)
      .def_property_readonly("a", &sieve::Params::a)
      .def_property_readonly("Q", &sieve::Params::Q)
      .def_property_readonly("q_max", &sieve::Params::q_max)
      .def_property_readonly("D", &sieve::Params::D)
      .def_property_readonly("Y", &sieve::Params::Y)
      .def_property_readonly("primes_y", &sieve::Params::primes_y);

  m.def("theta0", &theta0);
  m.def("chi", [](u64 n) { return arith::chi(n).value(); }, py::arg("n"));
  m.def("euler_phi", py::overload_cast<u64>(&arith::euler_phi), py::arg("n"));
  m.def(
      "crt_l",
      [](u64 a1, u64 d, u64 a2, u64 q) -> std::optional<std::pair<u64, u64>> {
        const auto r = arith::crt_l(arith::Residue(a1, d), arith::Residue(a2, q));
        if (!r) return std::nullopt;
        return std::pair{r->value(), r->modulus()};
      },
      py::arg("a1"), py::arg("d"), py::arg("a2"), py::arg("q"));

  m.def("primes_up_to", [](u64 limit) { return sieve::primes_up_to(limit); }, py::arg("limit"));
  m.def("prime_count", [](u64 limit) { return sieve::prime_count(limit); }, py::arg("limit"));
  m.def("r_two_squares", py::overload_cast<u64>(&sieve::r_two_squares), py::arg("n"));
  m.def("r_via_identity", &sieve::r_via_identity, py::arg("n"));
  m.def("f_enveloping", &sieve::f_enveloping, py::arg("n"), py::arg("params"));

  m.def(
      "sum_r_shifted_primes", [](u64 x, unsigned threads) { return sum_r_shifted_primes(x, options(threads)); },
      py::arg("x"), py::arg("threads") = 1);
  m.def(
      "linnik_constant",
      [](double tol) {
        const auto c = linnik_constant(tol);
        return py::make_tuple(c.value, c.prime_bound, c.tail_bound);
      },
      py::arg("tolerance") = 1e-6);
  m.def(
      "discrepancy", [](u64 x, u64 q, u64 a) { return row_dict(discrepancy(x, q, a)); }, py::arg("x"), py::arg("q"),
      py::arg("a"));
  m.def(
      "discrepancy_rows",
      [](u64 x, u64 q) {
        py::list out;
        for (const auto& r : discrepancy_rows(x, q)) out.append(row_dict(r));
        return out;
      },
      py::arg("x"), py::arg("q"));
  m.def(
      "bv_sum_exact", [](const sieve::Params& p, unsigned threads) { return fraction(bv_sum_exact(p, options(threads))); },
      py::arg("params"), py::arg("threads") = 1);
  m.def(
      "bv_sum", [](const sieve::Params& p, unsigned threads) { return bv_sum(p, options(threads)); },
      py::arg("params"), py::arg("threads") = 1);
  m.def(
      "split_r_by_ranges",
      [](u64 p, const sieve::Params& params) {
        const auto s = split_r_by_ranges(p, params);
        return py::make_tuple(s.low, s.mid, s.high);
      },
      py::arg("p"), py::arg("params"));
  m.def(
      "decompose",
      [](const sieve::Params& p, unsigned threads) {
        const auto r = decompose(p, options(threads));
        py::dict d;
        d["S1"] = fraction(r.S1);
        d["S2"] = fraction(r.S2);
        d["S3"] = fraction(r.S3);
        d["S4"] = fraction(r.S4);
        d["lhs"] = fraction(r.lhs);
        d["ratio"] = r.ratio();
        return d;
      },
      py::arg("params"), py::arg("threads") = 1);

  m.def(
      "murty_sum",
      [](u64 x) -> py::object {
        const auto v = lemmas::murty_sum(x);
        if (v.exact) return fraction(*v.exact);
        return py::float_(v.value);
      },
      py::arg("x"));
  m.def("lemma_ids", &lemmas::lemma_ids);
  m.def(
      "lemma",
      [](const std::string& id, py::kwargs kwargs) {
        lemmas::LemmaArgs a;
        for (const auto& [key, value] : kwargs) {
          const auto k = key.cast<std::string>();
          if (k == "x") a.x = value.cast<u64>();
          else if (k == "A") a.A = value.cast<double>();
          else if (k == "a") a.a = value.cast<u64>();
          else if (k == "d_exponent") a.d_exponent = value.cast<double>();
          else if (k == "omega") a.omega = value.cast<double>();
          else if (k == "alpha") a.alpha = value.cast<double>();
          else if (k == "q") a.q = value.cast<u64>();
          else if (k == "y") a.y = value.cast<double>();
          else if (k == "k") a.k = value.cast<u64>();
          else if (k == "n") a.n = value.cast<u64>();
          else if (k == "r") a.r = value.cast<u64>();
          else if (k == "s") a.s = value.cast<u64>();
          else if (k == "L") a.L = value.cast<u64>();
          else if (k == "u") a.u = value.cast<double>();
          else if (k == "u_prime") a.u_prime = value.cast<double>();
          else if (k == "which") a.which = value.cast<int>();
          else if (k == "p") a.p = value.cast<u64>();
          else throw py::type_error("unknown lemma argument: " + k);
        }
        const auto r = lemmas::run_lemma(id, a);
        py::dict d;
        d["lemma"] = r.lemma_id;
        d["lhs"] = r.lhs;
        d["lhs_exact"] = r.lhs_exact ? fraction(*r.lhs_exact) : py::none();
        d["envelope"] = r.envelope;
        d["ratio"] = r.ratio;
        py::dict inputs, extras;
        for (const auto& [k, v] : r.inputs) inputs[py::str(k)] = v;
        for (const auto& [k, v] : r.extras) extras[py::str(k)] = v;
        d["inputs"] = inputs;
        d["extras"] = extras;
        return d;
      },
      py::arg("id"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
