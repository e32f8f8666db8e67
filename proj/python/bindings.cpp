#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdlattice/distribution.hpp"
#include "sdlattice/integrability.hpp"
#include "sdlattice/lattice.hpp"
#include "sdlattice/metrics.hpp"
#include "sdlattice/transforms.hpp"

namespace py = pybind11;
using namespace sdlattice;

namespace {

DiscreteDistribution from_pairs(const std::vector<std::pair<double, double>>& pairs) {
  std::vector<WeightedPoint> pts;
  pts.reserve(pairs.size());
  for (const auto& [x, p] : pairs) pts.push_back({x, p});
  return make_discrete(pts);
}

Order order_arg(const std::string& name) { return parse_order(name); }

}  // namespace

PYBIND11_MODULE(_sdlattice, m) {
  m.doc() = "Lattice operations for first and second order stochastic dominance";

  py::class_<DiscreteDistribution>(m, "Distribution")
      .def(py::init(&from_pairs), py::arg("pairs"))
      .def_static("dirac", &DiscreteDistribution::dirac, py::arg("x"))
      .def_property_readonly("support", &DiscreteDistribution::support)
      .def_property_readonly("weights", &DiscreteDistribution::weights)
      .def_property_readonly("mean", &DiscreteDistribution::mean)
      .def("survival", &DiscreteDistribution::survival, py::arg("s"))
      .def("cdf", &DiscreteDistribution::cdf, py::arg("s"))
      .def("pairs",
           [](const DiscreteDistribution& mu) {
             std::vector<std::pair<double, double>> out;
             for (std::size_t i = 0; i < mu.size(); ++i) out.emplace_back(mu.support()[i], mu.weights()[i]);
             return out;
           })
      .def("__len__", &DiscreteDistribution::size)
      .def("__eq__", [](const DiscreteDistribution& a, const DiscreteDistribution& b) { return a == b; })
      .def("__repr__", [](const DiscreteDistribution& mu) { return "Distribution(" + to_string(mu) + ")"; });

  py::class_<PiecewiseLinearFunction>(m, "PiecewiseLinear")
      .def("__call__", &PiecewiseLinearFunction::operator(), py::arg("s"))
      .def_property_readonly("nodes", &PiecewiseLinearFunction::nodes)
      .def_property_readonly("values", &PiecewiseLinearFunction::values)
      .def_property_readonly("slopes", &PiecewiseLinearFunction::slopes);

  m.def("reflect", &reflect, py::arg("mu"));
  m.def("approx_equal", &approx_equal, py::arg("a"), py::arg("b"), py::arg("tolerance") = tol::kCompare);
  m.def("icx_transform", &icx_transform, py::arg("mu"));
  m.def("icv_transform", &icv_transform, py::arg("mu"));

  m.def(
      "leq",
      [](const DiscreteDistribution& a, const DiscreteDistribution& b, const std::string& order, double tolerance) {
        const auto w = leq(a, b, order_arg(order), tolerance);
        return std::make_pair(w.holds, w.witness);
      },
      py::arg("mu"), py::arg("nu"), py::arg("order") = "st", py::arg("tolerance") = tol::kCompare,
      "Order test; returns (holds, witness or None).");
  m.def(
      "join", [](const DiscreteDistribution& a, const DiscreteDistribution& b, const std::string& order) {
        return join(a, b, order_arg(order));
      },
      py::arg("mu"), py::arg("nu"), py::arg("order") = "st");
  m.def(
      "meet", [](const DiscreteDistribution& a, const DiscreteDistribution& b, const std::string& order) {
        return meet(a, b, order_arg(order));
      },
      py::arg("mu"), py::arg("nu"), py::arg("order") = "st");
  m.def(
      "extremum",
      [](const std::vector<DiscreteDistribution>& family, const std::string& order, const std::string& direction) {
        return extremum(family, order_arg(order), parse_direction(direction));
      },
      py::arg("family"), py::arg("order") = "st", py::arg("direction") = "sup");
  m.def(
      "functional", [](const DiscreteDistribution& mu, const std::string& order) {
        return functional(mu, order_arg(order));
      },
      py::arg("mu"), py::arg("order") = "st");

  m.def("wasserstein1", &wasserstein1, py::arg("mu"), py::arg("nu"));
  m.def("kolmogorov", &kolmogorov, py::arg("mu"), py::arg("nu"));
  m.def("levy", &levy, py::arg("mu"), py::arg("nu"));

  m.def(
      "psi_tight",
      [](const std::vector<DiscreteDistribution>& family, std::size_t levels) {
        const auto psi = build_psi_tight(MeasureFamily::from_distributions(family), levels, true);
        return std::make_pair(psi.thresholds, psi.bound);
      },
      py::arg("family"), py::arg("levels"),
      "Thresholds and integral bound of the continuous tight psi of a family on [0, inf).");
  m.def(
      "psi_tight_oracle",
      [](const std::function<double(double)>& tail, std::size_t levels) {
        const auto psi = build_psi_tight(MeasureFamily::from_oracle(TailOracle(tail)), levels, true);
        return std::make_pair(psi.thresholds, psi.bound);
      },
      py::arg("tail"), py::arg("levels"), "Same, for a family known through its tail envelope s -> T(s).");
  m.def(
      "ui_tail",
      [](const std::vector<DiscreteDistribution>& family, double level) {
        return ui_tail(MeasureFamily::from_distributions(family), level);
      },
      py::arg("family"), py::arg("m"));
}
