#include "sdlattice/normal.hpp"

#include <cmath>
#include <numbers>

namespace sdlattice::normal {

double pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

double cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double plus_moment(double x) { return x * cdf(x) + pdf(x); }

double minus_moment(double x) { return x * cdf(-x) - pdf(x); }

}  // namespace sdlattice::normal
