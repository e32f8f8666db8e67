#include "sdlattice/flows.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sdlattice/error.hpp"
#include "sdlattice/lattice.hpp"

namespace sdlattice {

AtomicMeasureSpace::AtomicMeasureSpace(std::vector<std::string> labels, std::vector<double> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (labels_.empty() || labels_.size() != weights_.size()) {
    throw ContractError("AtomicMeasureSpace: need matching nonempty labels and weights");
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
    throw ContractError("AtomicMeasureSpace: atom labels must be distinct");
  }
  bool positive = false;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) throw ContractError("AtomicMeasureSpace: weights must be finite and >= 0");
    positive = positive || w > 0.0;
  }
  if (!positive) throw ContractError("AtomicMeasureSpace: at least one weight must be positive");
}

AtomicMeasureSpace AtomicMeasureSpace::rescaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw ContractError("AtomicMeasureSpace::rescaled: factor must be positive");
  }
  auto ws = weights_;
  for (double& w : ws) w *= factor;
  return AtomicMeasureSpace(labels_, std::move(ws));
}

Flow make_flow(AtomicMeasureSpace space, std::vector<DiscreteDistribution> values) {
  if (values.size() != space.size()) throw ContractError("make_flow: one distribution per atom required");
  return Flow{std::move(space), std::move(values)};
}

namespace {

void require_same_space(const Flow& a, const Flow& b, const char* what) {
  if (a.space.labels() != b.space.labels() || a.space.weights() != b.space.weights()) {
    throw ContractError(std::string(what) + ": flows live on different spaces");
  }
}

}  // namespace

bool flows_agree(const Flow& a, const Flow& b, double tolerance) {
  require_same_space(a, b, "flows_agree");
  for (std::size_t t = 0; t < a.space.size(); ++t) {
    if (a.space.weights()[t] > 0.0 && !approx_equal(a.at(t), b.at(t), tolerance)) return false;
  }
  return true;
}

FlowWitness leq_flow(const Flow& mu, const Flow& nu, Order order, double tolerance) {
  require_same_space(mu, nu, "leq_flow");
  for (std::size_t t = 0; t < mu.space.size(); ++t) {
    if (mu.space.weights()[t] == 0.0) continue;
    if (!leq(mu.at(t), nu.at(t), order, tolerance)) return {false, mu.space.labels()[t]};
  }
  return {};
}

double flow_functional(const Flow& mu, Order order) {
  double total = 0.0;
  for (std::size_t t = 0; t < mu.space.size(); ++t) {
    const double w = mu.space.weights()[t];
    if (w > 0.0) total += w * functional(mu.at(t), order);
  }
  return total;
}

Flow ess_extremum_flow(const std::vector<Flow>& family, Order order, Direction direction) {
  if (family.empty()) throw ContractError("ess_extremum_flow: empty family");
  const auto& space = family.front().space;
  std::vector<DiscreteDistribution> values;
  values.reserve(space.size());
  for (std::size_t t = 0; t < space.size(); ++t) {
    std::vector<DiscreteDistribution> column;
    column.reserve(family.size());
    for (const auto& f : family) {
      require_same_space(family.front(), f, "ess_extremum_flow");
      column.push_back(f.at(t));
    }
    values.push_back(extremum(column, order, direction));
  }
  return Flow{space, std::move(values)};
}

FlowSupResult ess_sup_countable(const DirectedFamily<Flow>& family, Order order, Direction direction,
                                double tolerance, std::size_t max_steps, const std::optional<Flow>& bound) {
  if (!family.next) throw ContractError("ess_sup_countable: family has no enumerator");
  if (max_steps == 0) throw ContractError("ess_sup_countable: max_steps must be positive");
  const bool sup = direction == Direction::sup;
  const auto below = [&](const Flow& a, const Flow& b) {
    return sup ? leq_flow(a, b, order).holds : leq_flow(b, a, order).holds;
  };
  const auto check_bound = [&](const Flow& x) {
    if (bound && !below(x, *bound)) {
      throw DomainError("ess_sup_countable: running extremum escapes the supplied bound");
    }
  };

  auto first = family.next();
  if (!first) throw ContractError("ess_sup_countable: empty family");
  check_bound(*first);
  Flow x = std::move(*first);
  FlowSupResult result{x, {flow_functional(x, order)}, {}, 1, false};

  while (result.consumed < max_steps) {
    auto y = family.next();
    if (!y) {
      result.converged = true;
      break;
    }
    ++result.consumed;
    require_same_space(x, *y, "ess_sup_countable");
    Flow z = family.dominator ? Flow{x.space, {}} : ess_extremum_flow({x, *y}, order, direction);
    if (family.dominator) {
      auto picked = family.dominator(x, *y);
      if (!picked) throw DomainError("ess_sup_countable: family is not directed");
      if (!below(x, *picked) || !below(*y, *picked)) {
        throw DomainError("ess_sup_countable: dominator output does not dominate its arguments");
      }
      z = std::move(*picked);
    }
    check_bound(z);
    x = std::move(z);
    const double value = flow_functional(x, order);
    const double increment = std::abs(value - result.functional_trace.back());
    result.functional_trace.push_back(value);
    result.increments.push_back(increment);
    if (increment > 0.0 && increment < tolerance) {
      result.converged = true;
      break;
    }
  }
  result.extremum = std::move(x);
  return result;
}

}  // namespace sdlattice
