#pragma once

#include <span>

#include "sdlattice/distribution.hpp"
#include "sdlattice/order.hpp"
#include "sdlattice/tolerance.hpp"

namespace sdlattice {

/// Order test on the integrated transforms.
///
/// icx: icx_transform(mu) <= icx_transform(nu) everywhere. Both transforms
/// are affine between union support points and share the right ray, so the
/// test compares the means (left rays) and the union points.
/// icv: icv_transform(mu) <= icv_transform(nu), mirror image.
/// cx: nu <=_icv mu and mu <=_icx nu.
/// st is accepted and forwarded to leq_st.
///
/// The witness s satisfies the violated inequality beyond `tolerance`; for a
/// mean violation it lies on the corresponding ray, one unit outside the
/// union support.
OrderWitness leq_order(const DiscreteDistribution& mu, const DiscreteDistribution& nu, Order order,
                       double tolerance = tol::kCompare);

// icx_transform of the join is the pointwise max of the transforms.
DiscreteDistribution join_icx(const DiscreteDistribution& mu, const DiscreteDistribution& nu);
// icx_transform of the meet is the greatest convex minorant of the pointwise min.
DiscreteDistribution meet_icx(const DiscreteDistribution& mu, const DiscreteDistribution& nu);
// icv_transform of the join is the least concave majorant of the pointwise max.
DiscreteDistribution join_icv(const DiscreteDistribution& mu, const DiscreteDistribution& nu);
// icv_transform of the meet is the pointwise min of the transforms.
DiscreteDistribution meet_icv(const DiscreteDistribution& mu, const DiscreteDistribution& nu);

/// Supremum or infimum of a finite family for st, icv or icx.
///
/// sup_icx and inf_icv take the pointwise extremum of all transforms at
/// once; inf_icx and sup_icv fold the pairwise envelope operations. Throws
/// ContractError on an empty family or for Order::cx (see lattice.hpp).
DiscreteDistribution extremum_family(std::span<const DiscreteDistribution> family, Order order,
                                     Direction direction);

// sum_i p_i (x_i N(x_i) + n(x_i)); strictly increasing for <=_icx.
double icx_functional(const DiscreteDistribution& mu);
// sum_i p_i (x_i N(-x_i) - n(x_i)); strictly increasing for <=_icv.
double icv_functional(const DiscreteDistribution& mu);

}  // namespace sdlattice
