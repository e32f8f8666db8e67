#include "sdlattice/order_second.hpp"

#include <string>

#include "sdlattice/envelope.hpp"
#include "sdlattice/error.hpp"
#include "sdlattice/normal.hpp"
#include "sdlattice/order_first.hpp"
#include "sdlattice/transforms.hpp"

namespace sdlattice {

namespace {

OrderWitness leq_icx(const DiscreteDistribution& mu, const DiscreteDistribution& nu, double tolerance) {
  const auto pts = union_support(mu, nu);
  if (mu.mean() > nu.mean() + tolerance) return {false, pts.front() - 1.0};
  const auto f = icx_transform(mu);
  const auto g = icx_transform(nu);
  for (double s : pts) {
    if (f(s) > g(s) + tolerance) return {false, s};
  }
  return {};
}

OrderWitness leq_icv(const DiscreteDistribution& mu, const DiscreteDistribution& nu, double tolerance) {
  const auto pts = union_support(mu, nu);
  const auto f = icv_transform(mu);
  const auto g = icv_transform(nu);
  for (double s : pts) {
    if (f(s) > g(s) + tolerance) return {false, s};
  }
  if (mu.mean() > nu.mean() + tolerance) return {false, pts.back() + 1.0};
  return {};
}

template <class Op>
DiscreteDistribution fold(std::span<const DiscreteDistribution> family, Op op) {
  DiscreteDistribution acc = family.front();
  for (const auto& mu : family.subspan(1)) acc = op(acc, mu);
  return acc;
}

}  // namespace

OrderWitness leq_order(const DiscreteDistribution& mu, const DiscreteDistribution& nu, Order order,
                       double tolerance) {
  switch (order) {
    case Order::st:
      return leq_st(mu, nu, tolerance);
    case Order::icx:
      return leq_icx(mu, nu, tolerance);
    case Order::icv:
      return leq_icv(mu, nu, tolerance);
    case Order::cx: {
      auto lower = leq_icv(nu, mu, tolerance);
      if (!lower) return lower;
      return leq_icx(mu, nu, tolerance);
    }
  }
  throw ContractError("leq_order: unknown order");
}

DiscreteDistribution join_icx(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  return from_icx_transform(pointwise_max(icx_transform(mu), icx_transform(nu)));
}

DiscreteDistribution meet_icx(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  const auto lower = pointwise_min(icx_transform(mu), icx_transform(nu));
  return from_icx_transform(lower_convex_envelope(lower).envelope);
}

DiscreteDistribution join_icv(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  const auto upper = pointwise_max(icv_transform(mu), icv_transform(nu));
  return from_icv_transform(upper_concave_envelope(upper).envelope);
}

DiscreteDistribution meet_icv(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  return from_icv_transform(pointwise_min(icv_transform(mu), icv_transform(nu)));
}

DiscreteDistribution extremum_family(std::span<const DiscreteDistribution> family, Order order,
                                     Direction direction) {
  if (family.empty()) throw ContractError("extremum_family: empty family");
  const bool sup = direction == Direction::sup;
  switch (order) {
    case Order::st:
      return sup ? sup_st(family) : inf_st(family);
    case Order::icx: {
      if (!sup) return fold(family, meet_icx);
      auto acc = icx_transform(family.front());
      for (const auto& mu : family.subspan(1)) acc = pointwise_max(acc, icx_transform(mu));
      return from_icx_transform(acc);
    }
    case Order::icv: {
      if (sup) return fold(family, join_icv);
      auto acc = icv_transform(family.front());
      for (const auto& mu : family.subspan(1)) acc = pointwise_min(acc, icv_transform(mu));
      return from_icv_transform(acc);
    }
    case Order::cx:
      break;
  }
  throw ContractError("extremum_family: order must be st, icv or icx, got " +
                      std::string(to_string(order)));
}

double icx_functional(const DiscreteDistribution& mu) {
  double total = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    total += mu.weights()[i] * normal::plus_moment(mu.support()[i]);
  }
  return total;
}

double icv_functional(const DiscreteDistribution& mu) {
  double total = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    total += mu.weights()[i] * normal::minus_moment(mu.support()[i]);
  }
  return total;
}

}  // namespace sdlattice
