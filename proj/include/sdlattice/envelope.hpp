#pragma once

#include <vector>

#include "sdlattice/functions.hpp"

namespace sdlattice {

/// Convex minorant / concave majorant of a piecewise-linear function.
///
/// `contact_points` are the input nodes where the envelope touches the
/// input; the envelope is affine between consecutive contact points and
/// follows the input's rays beyond them.
struct EnvelopeResult {
  PiecewiseLinearFunction envelope;
  std::vector<double> contact_points;
};

// Pointwise maximum/minimum. Nodes are the union of both node sets plus one
// closed-form crossing per piece where the difference changes sign; crossings
// within tol::kSnap of an existing node are snapped to it. Each piece keeps
// the exact slope of the function that is active on it.
PiecewiseLinearFunction pointwise_max(const PiecewiseLinearFunction& f, const PiecewiseLinearFunction& g);
PiecewiseLinearFunction pointwise_min(const PiecewiseLinearFunction& f, const PiecewiseLinearFunction& g);

/// Greatest convex minorant. Requires left_slope <= right_slope (otherwise
/// the minorant is -inf and ContractError is thrown). Monotone-chain lower
/// hull over the node vertices, anchored by the two rays; vertices whose
/// slope change is below tol::kKink are dropped.
EnvelopeResult lower_convex_envelope(const PiecewiseLinearFunction& f);

/// Least concave majorant; mirror of lower_convex_envelope.
EnvelopeResult upper_concave_envelope(const PiecewiseLinearFunction& f);

}  // namespace sdlattice
