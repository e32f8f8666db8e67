#pragma once

namespace sdlattice::normal {

// Standard normal density and distribution function.
double pdf(double x);
double cdf(double x);

// E[(x - Z)^+] = x N(x) + n(x): strictly convex, nondecreasing, 1-Lipschitz.
double plus_moment(double x);

// -E[(Z - x)^+] = x N(-x) - n(x): strictly concave, nondecreasing,
// 1-Lipschitz. plus_moment(x) + minus_moment(x) = x.
double minus_moment(double x);

}  // namespace sdlattice::normal
