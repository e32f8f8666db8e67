#pragma once

namespace sdlattice::tol {

// Absolute tolerance for order verdicts and distribution comparisons.
inline constexpr double kCompare = 1e-9;

// Reconstructed point masses at or below this are rounding residue.
inline constexpr double kMassDrop = 1e-12;

// Crossing points closer than this to an existing node are snapped to it.
inline constexpr double kSnap = 1e-12;

// Slope changes at or below this do not count as a kink.
inline constexpr double kKink = 1e-12;

// Function-value differences at or below this are treated as ties.
inline constexpr double kValue = 1e-12;

// Slope tolerance when validating integrated transforms.
inline constexpr double kSlope = 1e-9;

}  // namespace sdlattice::tol
