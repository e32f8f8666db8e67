#pragma once

#include <span>

#include "sdlattice/distribution.hpp"
#include "sdlattice/order.hpp"
#include "sdlattice/tolerance.hpp"

namespace sdlattice {

/// First order dominance mu <=_st nu, i.e. mu((s, inf)) <= nu((s, inf)) for
/// every s. Both survival functions are constant between consecutive points
/// of the union of the supports, so only those points are compared. On
/// failure the witness is the smallest violating point.
OrderWitness leq_st(const DiscreteDistribution& mu, const DiscreteDistribution& nu,
                    double tolerance = tol::kCompare);

// Survival function of the result is the pointwise max (join) / min (meet).
DiscreteDistribution join_st(const DiscreteDistribution& mu, const DiscreteDistribution& nu);
DiscreteDistribution meet_st(const DiscreteDistribution& mu, const DiscreteDistribution& nu);

// Folds of join_st / meet_st. Throw ContractError on an empty family.
DiscreteDistribution sup_st(std::span<const DiscreteDistribution> family);
DiscreteDistribution inf_st(std::span<const DiscreteDistribution> family);

// sum_i p_i N(x_i) with N the standard normal CDF; strictly increasing for <=_st.
double st_functional(const DiscreteDistribution& mu);

}  // namespace sdlattice
