#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semint/analytic.hpp"
#include "semint/counting.hpp"
#include "semint/geometry.hpp"
#include "semint/report.hpp"
#include "semint/representations.hpp"
#include "semint/verify.hpp"

namespace py = pybind11;
using namespace semint;

namespace {

CountRequest make_request(int k, const std::vector<i64>& S, const std::string& r_source, int threads) {
  CountRequest req;
  req.k = k;
  req.S = PrimeSet(S);
  req.r_source = rsource_from_string(r_source.empty() ? (k == 1 ? "jacobi_k1" : "exact_bruteforce") : r_source);
  req.threads = threads;
  req.validate();
  return req;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Counting semi-integral points on x^3 = (y_1^2+...+y_4k^2) z";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);

  // arithmetic
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("vp", &vp, py::arg("p"), py::arg("n"));
  m.def("mobius", py::overload_cast<i64>(&mobius), py::arg("n"));
  m.def(
      "factorize",
      [](i64 n) {
        std::vector<std::pair<i64, int>> out;
        const Factorization f = factorize(n);
        for (const auto& pp : f.factors()) out.emplace_back(pp.prime, pp.exponent);
        return out;
      },
      py::arg("n"));
  m.def("_bernoulli", [](int m2) { return bernoulli(m2).to_string(); }, py::arg("m"));
  m.def("zeta", [](double s) { return zeta_real(s); }, py::arg("s"));

  // representations
  m.def("r4_jacobi", py::overload_cast<i64>(&r4_jacobi), py::arg("d"));
  m.def("r4k_star", py::overload_cast<i64, int>(&r4k_star), py::arg("d"), py::arg("k"));
  m.def(
      "r4k_bruteforce", [](i64 limit, int k) { return r4k_bruteforce(limit, k).counts; }, py::arg("limit"),
      py::arg("k"));

  // geometry
  m.def(
      "semi_integral_ok",
      [](int k, i64 x, std::vector<i64> ys, i64 z, const std::vector<i64>& S) {
        return semi_integral_ok(SurfacePoint(k, x, std::move(ys), z), PrimeSet(S));
      },
      py::arg("k"), py::arg("x"), py::arg("ys"), py::arg("z"), py::arg("S") = std::vector<i64>{});
  m.def(
      "m_point_ok",
      [](int k, i64 x, std::vector<i64> ys, i64 z, const std::vector<i64>& S) {
        return m_point_ok(SurfacePoint(k, x, std::move(ys), z), PrimeSet(S));
      },
      py::arg("k"), py::arg("x"), py::arg("ys"), py::arg("z"), py::arg("S") = std::vector<i64>{});
  m.def(
      "intersection_mults",
      [](int k, i64 x, std::vector<i64> ys, i64 z, i64 p) {
        const MultPair mp = intersection_mults(SurfacePoint(k, x, std::move(ys), z), p);
        return std::make_pair(mp.n1, mp.n2);
      },
      py::arg("k"), py::arg("x"), py::arg("ys"), py::arg("z"), py::arg("p"));

  // counting; bounds are num/den
  m.def(
      "n_star",
      [](i64 num, i64 den, int k, const std::vector<i64>& S, const std::string& r_source) {
        return n_star(Bound(num, den), make_request(k, S, r_source, 1));
      },
      py::arg("num"), py::arg("den") = 1, py::arg("k") = 1, py::arg("S") = std::vector<i64>{},
      py::arg("r_source") = "");
  m.def(
      "n_mobius",
      [](i64 num, i64 den, int k, const std::vector<i64>& S, const std::string& r_source, int threads) {
        py::gil_scoped_release release;
        return n_mobius(Bound(num, den), make_request(k, S, r_source, threads));
      },
      py::arg("num"), py::arg("den") = 1, py::arg("k") = 1, py::arg("S") = std::vector<i64>{},
      py::arg("r_source") = "", py::arg("threads") = 1);
  m.def("n_oracle", [](i64 B, int k, const std::vector<i64>& S) { return n_oracle(B, k, PrimeSet(S)); },
        py::arg("B"), py::arg("k") = 1, py::arg("S") = std::vector<i64>{});
  m.def(
      "s_sum",
      [](i64 x, i64 y, int k, const std::vector<i64>& S) {
        return s_sum(Bound(x), Bound(y), make_request(k, S, "rstar_model", 1));
      },
      py::arg("X"), py::arg("Y"), py::arg("k") = 1, py::arg("S") = std::vector<i64>{});
  m.def(
      "t_sum", [](i64 B, int k, const std::vector<i64>& S) { return t_sum(Bound(B), make_request(k, S, "rstar_model", 1)); },
      py::arg("B"), py::arg("k") = 1, py::arg("S") = std::vector<i64>{});
  m.def(
      "_count_json",
      [](i64 num, i64 den, int k, const std::vector<i64>& S, const std::string& r_source, bool oracle, bool aux) {
        CountRequest req = make_request(k, S, r_source, 1);
        req.bound = Bound(num, den);
        return to_json(run_count(req, {.oracle = oracle, .auxiliary_sums = aux})).dump();
      },
      py::arg("num"), py::arg("den"), py::arg("k"), py::arg("S"), py::arg("r_source"), py::arg("oracle"),
      py::arg("aux"));

  // analytic
  m.def(
      "gp", [](i64 p, int k, bool in_S, double s, double w) { return gp({p, k, in_S, s, w}); }, py::arg("p"),
      py::arg("k"), py::arg("in_S"), py::arg("s"), py::arg("w"));
  m.def(
      "fp_closed", [](i64 p, int k, bool in_S, double s, double w) { return fp_closed({p, k, in_S, s, w}); },
      py::arg("p"), py::arg("k"), py::arg("in_S"), py::arg("s"), py::arg("w"));
  m.def(
      "fp_series",
      [](i64 p, int k, bool in_S, double s, double w, int a_max) { return fp_series({p, k, in_S, s, w}, a_max); },
      py::arg("p"), py::arg("k"), py::arg("in_S"), py::arg("s"), py::arg("w"), py::arg("a_max") = 60);
  m.def("gp_special", &gp_special, py::arg("p"), py::arg("k"), py::arg("in_S"));
  m.def("f_poly", &f_poly, py::arg("x"), py::arg("y"), py::arg("z"));
  m.def(
      "euler_product",
      [](int k, const std::vector<i64>& S, i64 cutoff) {
        const EulerProductResult r = euler_product(k, PrimeSet(S), cutoff);
        return py::dict(py::arg("value") = r.value, py::arg("prime_cutoff") = r.prime_cutoff,
                        py::arg("tail_estimate") = r.tail_estimate, py::arg("tail_constant") = r.tail_constant);
      },
      py::arg("k") = 1, py::arg("S") = std::vector<i64>{}, py::arg("prime_cutoff") = 100000);
  m.def(
      "_predict_json",
      [](int k, const std::vector<i64>& S, i64 cutoff, const std::vector<double>& bounds) {
        const LeadingConstant lc = leading_constant(k, PrimeSet(S), cutoff);
        return to_json(make_predict_report(lc, PrimeSet(S), bounds)).dump();
      },
      py::arg("k"), py::arg("S"), py::arg("prime_cutoff"), py::arg("bounds"));
  m.def(
      "local_factors",
      [](int k, const std::vector<i64>& S, i64 cutoff) {
        std::vector<std::tuple<i64, bool, double, double, double>> out;
        for (const auto& r : local_factor_table(k, PrimeSet(S), cutoff)) {
          out.emplace_back(r.p, r.in_S, r.gp_value, r.gp_special_value, r.abs_diff);
        }
        return out;
      },
      py::arg("k") = 1, py::arg("S") = std::vector<i64>{}, py::arg("prime_cutoff") = 97);

  // verification
  m.def(
      "run_suite",
      [](const std::string& name) {
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = run_suite(name);
        }
        py::list out;
        for (const auto& r : results) {
          out.append(py::dict(py::arg("id") = r.id, py::arg("name") = r.name, py::arg("passed") = r.passed,
                              py::arg("details") = r.details, py::arg("seconds") = r.seconds));
        }
        return out;
      },
      py::arg("name"));
  m.attr("suite_names") = suite_names();
}
