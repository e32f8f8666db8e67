#include "sdlattice/transforms.hpp"

#include <cmath>
#include <string>

#include "sdlattice/error.hpp"
#include "sdlattice/tolerance.hpp"

namespace sdlattice {

StepFunction survival_function(const DiscreteDistribution& mu) {
  std::vector<double> plateaus;
  plateaus.reserve(mu.size() + 1);
  plateaus.push_back(1.0);
  for (double x : mu.support()) plateaus.push_back(mu.survival(x));
  return StepFunction(mu.support(), std::move(plateaus));
}

StepFunction cdf_function(const DiscreteDistribution& mu) {
  std::vector<double> plateaus;
  plateaus.reserve(mu.size() + 1);
  plateaus.push_back(0.0);
  for (double x : mu.support()) plateaus.push_back(mu.cdf(x));
  return StepFunction(mu.support(), std::move(plateaus));
}

PiecewiseLinearFunction icx_transform(const DiscreteDistribution& mu) {
  const auto& xs = mu.support();
  const auto& ps = mu.weights();
  const std::size_t n = xs.size();
  // slopes[i + 1] on [x_i, x_{i+1}] is -mu((x_i, inf)).
  std::vector<double> slopes(n + 1);
  slopes.front() = -1.0;
  slopes.back() = 0.0;
  double tail = 0.0;
  for (std::size_t i = n - 1; i-- > 0;) {
    tail += ps[i + 1];
    slopes[i + 1] = -tail;
  }
  std::vector<double> values(n);
  values[n - 1] = 0.0;
  for (std::size_t i = n - 1; i-- > 0;) {
    values[i] = values[i + 1] - slopes[i + 1] * (xs[i + 1] - xs[i]);
  }
  return PiecewiseLinearFunction(xs, std::move(values), std::move(slopes));
}

PiecewiseLinearFunction icv_transform(const DiscreteDistribution& mu) {
  const auto& xs = mu.support();
  const auto& ps = mu.weights();
  const std::size_t n = xs.size();
  std::vector<double> slopes(n + 1);
  slopes.front() = 0.0;
  slopes.back() = -1.0;
  double cdf = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    cdf += ps[i];
    slopes[i + 1] = -cdf;
  }
  std::vector<double> values(n);
  values[0] = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    values[i + 1] = values[i] + slopes[i + 1] * (xs[i + 1] - xs[i]);
  }
  return PiecewiseLinearFunction(xs, std::move(values), std::move(slopes));
}

namespace {

void check_slope_range(const PiecewiseLinearFunction& phi, const char* what) {
  for (double s : phi.slopes()) {
    if (s < -1.0 - tol::kSlope || s > tol::kSlope) {
      throw ContractError(std::string(what) + ": slope outside [-1, 0]");
    }
  }
}

}  // namespace

DiscreteDistribution from_icx_transform(const PiecewiseLinearFunction& phi) {
  if (std::abs(phi.left_slope() + 1.0) > tol::kSlope) {
    throw ContractError("from_icx_transform: left ray slope must be -1");
  }
  if (std::abs(phi.right_slope()) > tol::kSlope) {
    throw ContractError("from_icx_transform: right ray slope must be 0");
  }
  if (std::abs(phi.values().back()) > tol::kCompare) {
    throw ContractError("from_icx_transform: right ray value must be 0");
  }
  if (!phi.is_convex(tol::kSlope)) throw ContractError("from_icx_transform: input is not convex");
  check_slope_range(phi, "from_icx_transform");

  const auto& sl = phi.slopes();
  const std::size_t n = phi.size();
  std::vector<double> masses(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double before = i == 0 ? -1.0 : sl[i];
    const double after = i + 1 == n ? 0.0 : sl[i + 1];
    masses[i] = after - before;
  }
  return DiscreteDistribution::from_masses(phi.nodes(), std::move(masses));
}

DiscreteDistribution from_icv_transform(const PiecewiseLinearFunction& phi) {
  if (std::abs(phi.left_slope()) > tol::kSlope) {
    throw ContractError("from_icv_transform: left ray slope must be 0");
  }
  if (std::abs(phi.right_slope() + 1.0) > tol::kSlope) {
    throw ContractError("from_icv_transform: right ray slope must be -1");
  }
  if (std::abs(phi.values().front()) > tol::kCompare) {
    throw ContractError("from_icv_transform: left ray value must be 0");
  }
  if (!phi.is_concave(tol::kSlope)) throw ContractError("from_icv_transform: input is not concave");
  check_slope_range(phi, "from_icv_transform");

  const auto& sl = phi.slopes();
  const std::size_t n = phi.size();
  std::vector<double> masses(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double before = i == 0 ? 0.0 : sl[i];
    const double after = i + 1 == n ? -1.0 : sl[i + 1];
    masses[i] = before - after;
  }
  return DiscreteDistribution::from_masses(phi.nodes(), std::move(masses));
}

}  // namespace sdlattice
