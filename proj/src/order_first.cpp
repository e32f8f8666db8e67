#include "sdlattice/order_first.hpp"

#include <algorithm>
#include <string>

#include "sdlattice/error.hpp"
#include "sdlattice/normal.hpp"

namespace sdlattice {

namespace {

template <class Pick>
DiscreteDistribution survival_extremum(const DiscreteDistribution& mu,
                                       const DiscreteDistribution& nu, Pick pick) {
  auto pts = union_support(mu, nu);
  std::vector<double> masses(pts.size());
  double previous = 1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double current = pick(mu.survival(pts[i]), nu.survival(pts[i]));
    masses[i] = previous - current;
    previous = current;
  }
  return DiscreteDistribution::from_masses(std::move(pts), std::move(masses));
}

template <class Op>
DiscreteDistribution fold(std::span<const DiscreteDistribution> family, Op op, const char* what) {
  if (family.empty()) throw ContractError(std::string(what) + ": empty family");
  DiscreteDistribution acc = family.front();
  for (const auto& mu : family.subspan(1)) acc = op(acc, mu);
  return acc;
}

}  // namespace

OrderWitness leq_st(const DiscreteDistribution& mu, const DiscreteDistribution& nu,
                    double tolerance) {
  for (double s : union_support(mu, nu)) {
    if (mu.survival(s) > nu.survival(s) + tolerance) return {false, s};
  }
  return {};
}

DiscreteDistribution join_st(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  return survival_extremum(mu, nu, [](double a, double b) { return std::max(a, b); });
}

DiscreteDistribution meet_st(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  return survival_extremum(mu, nu, [](double a, double b) { return std::min(a, b); });
}

DiscreteDistribution sup_st(std::span<const DiscreteDistribution> family) {
  return fold(family, join_st, "sup_st");
}

DiscreteDistribution inf_st(std::span<const DiscreteDistribution> family) {
  return fold(family, meet_st, "inf_st");
}

double st_functional(const DiscreteDistribution& mu) {
  double total = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) total += mu.weights()[i] * normal::cdf(mu.support()[i]);
  return total;
}

}  // namespace sdlattice
