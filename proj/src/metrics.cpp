#include "sdlattice/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "sdlattice/error.hpp"
#include "sdlattice/lattice.hpp"

namespace sdlattice {

double wasserstein1(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  const auto pts = union_support(mu, nu);
  long double total = 0.0L;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double gap = std::abs(mu.cdf(pts[i]) - nu.cdf(pts[i]));
    total += static_cast<long double>(gap) * (pts[i + 1] - pts[i]);
  }
  return static_cast<double>(total);
}

double kolmogorov(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  double best = 0.0;
  for (double s : union_support(mu, nu)) best = std::max(best, std::abs(mu.cdf(s) - nu.cdf(s)));
  return best;
}

namespace {

constexpr double kLevyTolerance = 1e-10;
// Slack for the closed inequalities, which are often tight at the optimum.
constexpr double kLevySlack = 1e-12;

bool dominated_within(const DiscreteDistribution& lhs, const DiscreteDistribution& rhs, double eps) {
  return std::all_of(lhs.support().begin(), lhs.support().end(), [&](double q) {
    return lhs.cdf(q) <= rhs.cdf(q + eps) + eps + kLevySlack;
  });
}

bool levy_feasible(const DiscreteDistribution& mu, const DiscreteDistribution& nu, double eps) {
  return dominated_within(nu, mu, eps) && dominated_within(mu, nu, eps);
}

}  // namespace

double levy(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  if (levy_feasible(mu, nu, 0.0)) return 0.0;
  const double spread = std::max(mu.max(), nu.max()) - std::min(mu.min(), nu.min());
  double lo = 0.0;
  double hi = std::max(1.0, spread);
  while (hi - lo > kLevyTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (levy_feasible(mu, nu, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

ApproxResult monotone_sup_approx(const DirectedFamily<DiscreteDistribution>& family, Order order,
                                 Direction direction, double tolerance, std::size_t max_steps) {
  if (order == Order::cx) throw ContractError("monotone_sup_approx: order must be st, icv or icx");
  if (!family.next) throw ContractError("monotone_sup_approx: family has no enumerator");
  if (max_steps == 0) throw ContractError("monotone_sup_approx: max_steps must be positive");
  const bool sup = direction == Direction::sup;
  const auto distance = [order](const DiscreteDistribution& a, const DiscreteDistribution& b) {
    return order == Order::st ? levy(a, b) : wasserstein1(a, b);
  };
  const auto below = [&](const DiscreteDistribution& a, const DiscreteDistribution& b) {
    return sup ? leq(a, b, order).holds : leq(b, a, order).holds;
  };

  auto first = family.next();
  if (!first) throw ContractError("monotone_sup_approx: empty family");
  ApproxResult result{{*first}, *first, {}, {}, false, 1};
  DiscreteDistribution x = *first;

  while (result.consumed < max_steps) {
    auto y = family.next();
    if (!y) {
      result.converged = true;
      break;
    }
    ++result.consumed;
    const auto bound = sup ? join(x, *y, order) : meet(x, *y, order);
    const double increment = distance(x, bound);
    result.increments.push_back(increment);
    DiscreteDistribution z = bound;
    if (family.dominator) {
      auto picked = family.dominator(x, *y);
      if (!picked) throw DomainError("monotone_sup_approx: family is not directed");
      if (!below(x, *picked) || !below(*y, *picked)) {
        throw DomainError("monotone_sup_approx: dominator output does not dominate its arguments");
      }
      z = std::move(*picked);
    }
    x = std::move(z);
    result.sequence.push_back(x);
    if (increment > 0.0 && increment < tolerance) {
      result.converged = true;
      break;
    }
  }

  result.limit = x;
  result.trace.reserve(result.sequence.size());
  for (const auto& xn : result.sequence) result.trace.push_back(distance(xn, result.limit));
  return result;
}

}  // namespace sdlattice
