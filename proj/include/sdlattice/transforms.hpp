#pragma once

#include "sdlattice/distribution.hpp"
#include "sdlattice/functions.hpp"

namespace sdlattice {

// s -> mu((s, inf)) as a right-continuous step function.
StepFunction survival_function(const DiscreteDistribution& mu);
// s -> mu((-inf, s]).
StepFunction cdf_function(const DiscreteDistribution& mu);

/// Integrated survival function s -> E(X - s)^+.
///
/// Convex and nonincreasing with nodes exactly at the support points, left
/// ray slope -1 (asymptote mean - s) and right ray identically zero.
PiecewiseLinearFunction icx_transform(const DiscreteDistribution& mu);

/// Negative integrated distribution function s -> -E(s - X)^+ = -int_{-inf}^s F.
///
/// Concave and nonincreasing, zero on the left ray, right ray slope -1 with
/// asymptote mean - s. Satisfies icv(s) = mean - s - icx(s).
PiecewiseLinearFunction icv_transform(const DiscreteDistribution& mu);

/// Inverse of icx_transform: the point mass at each node is the slope
/// increment there. Throws ContractError unless the input is convex, has
/// slopes in [-1, 0], left ray slope -1, right ray slope 0 and right ray
/// value 0.
DiscreteDistribution from_icx_transform(const PiecewiseLinearFunction& phi);

/// Inverse of icv_transform (CDF = -phi'). Mirror contract: concave, left ray
/// slope 0 with value 0, right ray slope -1.
DiscreteDistribution from_icv_transform(const PiecewiseLinearFunction& phi);

}  // namespace sdlattice
