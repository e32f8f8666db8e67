#pragma once

#include <cstddef>
#include <vector>

#include "sdlattice/directed.hpp"
#include "sdlattice/distribution.hpp"
#include "sdlattice/order.hpp"

namespace sdlattice {

// int |F_mu - F_nu|, summed exactly over the union support partition.
double wasserstein1(const DiscreteDistribution& mu, const DiscreteDistribution& nu);

// sup_s |F_mu(s) - F_nu(s)|.
double kolmogorov(const DiscreteDistribution& mu, const DiscreteDistribution& nu);

/// Levy distance: the least eps >= 0 with F_nu(x) <= F_mu(x + eps) + eps and
/// F_mu(x) <= F_nu(x + eps) + eps for all x.
///
/// Bisection on eps over [0, max(1, spread)] to within 1e-10; the returned
/// value is feasible. Feasibility only needs checking at support points of
/// the distribution on the left-hand side, where the step difference peaks.
double levy(const DiscreteDistribution& mu, const DiscreteDistribution& nu);

struct ApproxResult {
  // Monotone member sequence x1 <= x2 <= ... (>= for infima).
  std::vector<DiscreteDistribution> sequence;
  DiscreteDistribution limit;
  // trace[n] = distance(sequence[n], limit); levy for st, wasserstein1 otherwise.
  std::vector<double> trace;
  // increments[n] = distance(sequence[n], sequence[n] v y_{n+2}) for each consumed member after the first.
  std::vector<double> increments;
  bool converged = false;
  std::size_t consumed = 0;
};

/// Monotone approximation of the supremum (infimum) of a directed family.
///
/// x1 = y1 and x_{n+1} = dominator(x_n, y_{n+1}), checked to dominate both.
/// Stops when a member moves the running join by a positive distance below
/// `tolerance`, when the enumeration ends (both count as converged), or after
/// `max_steps` members (not converged). Members already below x_n do not stop
/// the pass. Order must be st, icv or icx. Throws DomainError when the
/// dominator reports no bound or returns a non-dominating member, and
/// ContractError on an empty enumeration.
ApproxResult monotone_sup_approx(const DirectedFamily<DiscreteDistribution>& family, Order order,
                                 Direction direction = Direction::sup, double tolerance = 1e-8,
                                 std::size_t max_steps = 10000);

}  // namespace sdlattice
