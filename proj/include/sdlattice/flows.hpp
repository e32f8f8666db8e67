#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sdlattice/directed.hpp"
#include "sdlattice/distribution.hpp"
#include "sdlattice/order.hpp"

namespace sdlattice {

// Finite index space: distinct labels with nonnegative weights, at least one positive.
class AtomicMeasureSpace {
 public:
  AtomicMeasureSpace(std::vector<std::string> labels, std::vector<double> weights);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return labels_.size(); }

  // Same labels, weights multiplied by `factor` > 0.
  AtomicMeasureSpace rescaled(double factor) const;

  friend bool operator==(const AtomicMeasureSpace&, const AtomicMeasureSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<double> weights_;
};

// One distribution per atom, in the space's label order.
struct Flow {
  AtomicMeasureSpace space;
  std::vector<DiscreteDistribution> values;

  const DiscreteDistribution& at(std::size_t atom) const { return values.at(atom); }
};

// Throws ContractError unless there is exactly one distribution per atom.
Flow make_flow(AtomicMeasureSpace space, std::vector<DiscreteDistribution> values);

// Flows agree (approx_equal) on every atom of positive weight.
bool flows_agree(const Flow& a, const Flow& b, double tolerance = tol::kCompare);

struct FlowWitness {
  bool holds = true;
  // Label of the first positive-weight atom where the order fails.
  std::optional<std::string> atom;

  explicit operator bool() const { return holds; }
};

/// mu_t <= nu_t at every atom t of positive weight. Throws ContractError when
/// the flows live on different spaces.
FlowWitness leq_flow(const Flow& mu, const Flow& nu, Order order, double tolerance = tol::kCompare);

// sum_t pi_t * functional(mu_t, order).
double flow_functional(const Flow& mu, Order order);

// Atomwise extremum over a finite family on a common space.
Flow ess_extremum_flow(const std::vector<Flow>& family, Order order, Direction direction);

struct FlowSupResult {
  Flow extremum;
  // functional_trace[n] = flow_functional of the running extremum after n + 1 members.
  std::vector<double> functional_trace;
  std::vector<double> increments;
  std::size_t consumed = 0;
  bool converged = false;
};

/// Running atomwise join (meet) of an enumerated family of flows.
///
/// x1 = y1, x_{n+1} = dominator(x_n, y_{n+1}) (atomwise join by default),
/// checked to dominate both. The functional trace is monotone. Stops when a
/// member changes the functional by a positive amount below `tolerance`, when
/// the enumeration ends (both converged), or after `max_steps` members. With
/// a `bound`, a running extremum that leaves it raises DomainError, as does a
/// dominator that reports no bound or does not dominate.
FlowSupResult ess_sup_countable(const DirectedFamily<Flow>& family, Order order,
                                Direction direction = Direction::sup, double tolerance = 1e-12,
                                std::size_t max_steps = 10000,
                                const std::optional<Flow>& bound = std::nullopt);

}  // namespace sdlattice
