#include "sdlattice/lattice.hpp"

#include <cmath>

#include "sdlattice/error.hpp"

namespace sdlattice {

namespace {

void require_equal_means(std::span<const DiscreteDistribution> family) {
  const double m = family.front().mean();
  for (const auto& mu : family) {
    if (std::abs(mu.mean() - m) > tol::kCompare * (1.0 + std::abs(m))) {
      throw DomainError("convex order lattice needs a common mean");
    }
  }
}

}  // namespace

DiscreteDistribution join(const DiscreteDistribution& mu, const DiscreteDistribution& nu, Order order) {
  switch (order) {
    case Order::st:
      return join_st(mu, nu);
    case Order::icv:
      return join_icv(mu, nu);
    case Order::cx: {
      const DiscreteDistribution pair[] = {mu, nu};
      require_equal_means(pair);
      return join_icx(mu, nu);
    }
    case Order::icx:
      return join_icx(mu, nu);
  }
  throw ContractError("join: unknown order");
}

DiscreteDistribution meet(const DiscreteDistribution& mu, const DiscreteDistribution& nu, Order order) {
  switch (order) {
    case Order::st:
      return meet_st(mu, nu);
    case Order::icv:
      return meet_icv(mu, nu);
    case Order::cx: {
      const DiscreteDistribution pair[] = {mu, nu};
      require_equal_means(pair);
      return meet_icx(mu, nu);
    }
    case Order::icx:
      return meet_icx(mu, nu);
  }
  throw ContractError("meet: unknown order");
}

DiscreteDistribution extremum(std::span<const DiscreteDistribution> family, Order order,
                              Direction direction) {
  if (order != Order::cx) return extremum_family(family, order, direction);
  if (family.empty()) throw ContractError("extremum: empty family");
  require_equal_means(family);
  return extremum_family(family, Order::icx, direction);
}

double functional(const DiscreteDistribution& mu, Order order) {
  switch (order) {
    case Order::st:
      return st_functional(mu);
    case Order::icv:
      return icv_functional(mu);
    case Order::icx:
    case Order::cx:
      return icx_functional(mu);
  }
  throw ContractError("functional: unknown order");
}

}  // namespace sdlattice
