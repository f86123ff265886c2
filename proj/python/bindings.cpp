#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pacsent/analysis.hpp"
#include "pacsent/entanglement.hpp"
#include "pacsent/errors.hpp"
#include "pacsent/fit.hpp"
#include "pacsent/fock_oracle.hpp"
#include "pacsent/qubit_embed.hpp"
#include "pacsent/specfun.hpp"

namespace py = pybind11;
using namespace pacsent;

namespace {

SuperpositionSpec make_spec(std::complex<double> alpha, std::complex<double> beta,
                            std::complex<double> gamma, std::complex<double> u,
                            std::complex<double> v, unsigned m, unsigned n) {
  return with_normalized_weights(SuperpositionSpec{alpha, beta, gamma, u, v, m, n});
}

std::vector<DataPoint> to_points(const std::vector<std::pair<double, double>>& data) {
  std::vector<DataPoint> points;
  points.reserve(data.size());
  for (const auto& [x, y] : data) points.push_back({x, y});
  return points;
}

py::dict fit_to_dict(const FitResult& r) {
  py::dict d;
  d["model"] = to_string(r.model);
  d["params"] = r.params;
  d["residual_rms"] = r.residual_rms;
  d["converged"] = r.converged;
  d["iterations"] = r.iterations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pacsent, m) {
  m.doc() = "Entanglement of photon-added coherent state superpositions";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<DegenerateSpecError>(m, "DegenerateSpecError", PyExc_ValueError);

  m.def("laguerre", &laguerre, py::arg("m"), py::arg("x"));
  m.def("log_gamma", &log_gamma, py::arg("x"));
  m.def(
      "regularized_1f1",
      [](int a, int b, std::complex<double> z) {
        const auto r = regularized_1f1(a, b, z);
        return py::make_tuple(r.log_magnitude, r.phase);
      },
      py::arg("a"), py::arg("b"), py::arg("z"),
      "Returns (log_magnitude, phase) of 1F1~(a; b; z).");
  m.def(
      "pacs_overlap",
      [](std::complex<double> alpha, std::complex<double> beta, unsigned mm, unsigned nn) {
        const auto r = pacs_overlap(alpha, beta, mm, nn);
        return py::make_tuple(r.log_magnitude, r.phase);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("m"), py::arg("n"),
      "Returns (log_magnitude, phase) of <alpha| a^m a^{dag n} |beta>.");

  m.def(
      "qubit_coefficients",
      [](std::complex<double> alpha, std::complex<double> beta, std::complex<double> gamma,
         std::complex<double> u, std::complex<double> v, unsigned mm, unsigned nn) {
        const auto c = qubit_coefficients(make_spec(alpha, beta, gamma, u, v, mm, nn));
        return py::make_tuple(c.c00, c.c01, c.c10, c.c11);
      },
      py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("gamma") = 0.0,
      py::arg("u") = kInvSqrt2, py::arg("v") = kInvSqrt2, py::arg("m") = 0, py::arg("n") = 0);

  m.def(
      "concurrence",
      [](std::complex<double> alpha, std::complex<double> beta, std::complex<double> gamma,
         std::complex<double> u, std::complex<double> v, unsigned mm, unsigned nn,
         std::optional<double> p) {
        return evaluate(make_spec(alpha, beta, gamma, u, v, mm, nn), p).concurrence;
      },
      py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("gamma") = 0.0,
      py::arg("u") = kInvSqrt2, py::arg("v") = kInvSqrt2, py::arg("m") = 0, py::arg("n") = 0,
      py::arg("p") = py::none());

  m.def(
      "oracle_concurrence",
      [](std::complex<double> alpha, std::complex<double> beta, std::complex<double> gamma,
         std::complex<double> u, std::complex<double> v, unsigned mm, unsigned nn) {
        return fock::oracle_concurrence(make_spec(alpha, beta, gamma, u, v, mm, nn));
      },
      py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("gamma") = 0.0,
      py::arg("u") = kInvSqrt2, py::arg("v") = kInvSqrt2, py::arg("m") = 0, py::arg("n") = 0);

  m.def(
      "p_critical",
      [](std::complex<double> alpha, std::complex<double> beta, std::complex<double> gamma,
         std::complex<double> u, std::complex<double> v, unsigned mm, unsigned nn, double tol,
         const std::string& method, std::size_t p_samples) {
        const auto spec = make_spec(alpha, beta, gamma, u, v, mm, nn);
        if (method == "grid") return p_critical_on_grid(spec, p_samples);
        if (method != "bisect") throw InvalidArgument("method must be bisect or grid");
        return p_critical(spec, tol);
      },
      py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("gamma") = 0.0,
      py::arg("u") = kInvSqrt2, py::arg("v") = kInvSqrt2, py::arg("m") = 0, py::arg("n") = 0,
      py::arg("tol") = 1e-10, py::arg("method") = "bisect",
      py::arg("p_samples") = kDefaultPSamples);

  m.def(
      "sweep",
      [](const std::vector<std::tuple<std::string, double, double, std::size_t>>& axes,
         std::complex<double> alpha, std::complex<double> beta, std::complex<double> gamma,
         std::complex<double> u, std::complex<double> v, unsigned mm, unsigned nn,
         std::optional<double> p) {
        SweepGrid grid;
        for (const auto& [name, lo, hi, samples] : axes) grid.axes.push_back({name, lo, hi, samples});
        grid.fixed = make_spec(alpha, beta, gamma, u, v, mm, nn);
        grid.p = p;
        const auto table = sweep(grid);
        py::list rows;
        for (const auto& r : table.rows) {
          rows.append(py::make_tuple(r.values, r.concurrence, r.degenerate));
        }
        return py::make_tuple(table.columns, rows);
      },
      py::arg("axes"), py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("gamma") = 0.0,
      py::arg("u") = kInvSqrt2, py::arg("v") = kInvSqrt2, py::arg("m") = 0, py::arg("n") = 0,
      py::arg("p") = py::none(),
      "Returns (axis names, [(values, concurrence, degenerate), ...]).");

  m.def(
      "fit_tanh",
      [](const std::vector<std::pair<double, double>>& data) {
        return fit_to_dict(fit_tanh(to_points(data)));
      },
      py::arg("data"));
  m.def(
      "fit_gaussian",
      [](const std::vector<std::pair<double, double>>& data) {
        return fit_to_dict(fit_gaussian(to_points(data)));
      },
      py::arg("data"));
}
