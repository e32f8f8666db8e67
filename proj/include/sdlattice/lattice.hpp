#pragma once

#include <span>

#include "sdlattice/distribution.hpp"
#include "sdlattice/order.hpp"
#include "sdlattice/order_first.hpp"
#include "sdlattice/order_second.hpp"

namespace sdlattice {

// Order-dispatched lattice operations. For Order::cx both arguments (every
// family member) must share the mean, within tol::kCompare scaled by the
// magnitude; on that class the cx lattice coincides with the icx lattice.
// A mean mismatch raises DomainError.
DiscreteDistribution join(const DiscreteDistribution& mu, const DiscreteDistribution& nu, Order order);
DiscreteDistribution meet(const DiscreteDistribution& mu, const DiscreteDistribution& nu, Order order);
DiscreteDistribution extremum(std::span<const DiscreteDistribution> family, Order order,
                              Direction direction);

inline OrderWitness leq(const DiscreteDistribution& mu, const DiscreteDistribution& nu, Order order,
                        double tolerance = tol::kCompare) {
  return leq_order(mu, nu, order, tolerance);
}

// st_functional, icv_functional or icx_functional (cx uses icx).
double functional(const DiscreteDistribution& mu, Order order);

}  // namespace sdlattice
