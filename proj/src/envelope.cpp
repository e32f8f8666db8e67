#include "sdlattice/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "sdlattice/error.hpp"
#include "sdlattice/tolerance.hpp"

namespace sdlattice {

namespace {

// Sorted, with points closer than tol::kSnap to their predecessor removed.
std::vector<double> snapped_union(std::vector<double> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  out.reserve(pts.size());
  for (double p : pts) {
    if (out.empty() || p - out.back() > tol::kSnap) out.push_back(p);
  }
  return out;
}

bool opposite_signs(double a, double b) {
  return (a > tol::kValue && b < -tol::kValue) || (a < -tol::kValue && b > tol::kValue);
}

PiecewiseLinearFunction pointwise_extremum(const PiecewiseLinearFunction& f,
                                           const PiecewiseLinearFunction& g, bool take_max) {
  std::vector<double> base;
  std::merge(f.nodes().begin(), f.nodes().end(), g.nodes().begin(), g.nodes().end(),
             std::back_inserter(base));
  base = snapped_union(std::move(base));

  const auto diff = [&](double s) { return f(s) - g(s); };
  std::vector<double> pts = base;

  // Left ray: d(s) = d0 + ds (s - x0) vanishes at x0 - d0 / ds.
  {
    const double x0 = base.front();
    const double d0 = diff(x0);
    const double ds = f.left_slope() - g.left_slope();
    if (std::abs(d0) > tol::kValue && ds != 0.0) {
      const double offset = d0 / ds;
      if (offset > tol::kSnap) pts.push_back(x0 - offset);
    }
  }
  for (std::size_t i = 0; i + 1 < base.size(); ++i) {
    const double a = base[i];
    const double b = base[i + 1];
    const double da = diff(a);
    const double db = diff(b);
    if (opposite_signs(da, db)) {
      const double s = a + (b - a) * (da / (da - db));
      if (s - a > tol::kSnap && b - s > tol::kSnap) pts.push_back(s);
    }
  }
  {
    const double xn = base.back();
    const double dn = diff(xn);
    const double ds = f.right_slope() - g.right_slope();
    if (std::abs(dn) > tol::kValue && ds != 0.0) {
      const double offset = -dn / ds;
      if (offset > tol::kSnap) pts.push_back(xn + offset);
    }
  }
  pts = snapped_union(std::move(pts));

  const auto active_slope = [&](double probe) {
    const double fv = f(probe);
    const double gv = g(probe);
    const bool use_f = take_max ? fv >= gv : fv <= gv;
    return use_f ? f.slope_at(probe) : g.slope_at(probe);
  };

  const std::size_t n = pts.size();
  const double reach = std::max(1.0, pts.back() - pts.front());
  std::vector<double> values(n);
  std::vector<double> slopes(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double fv = f(pts[i]);
    const double gv = g(pts[i]);
    values[i] = take_max ? std::max(fv, gv) : std::min(fv, gv);
  }
  slopes.front() = active_slope(pts.front() - reach);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    slopes[i + 1] = active_slope(0.5 * (pts[i] + pts[i + 1]));
  }
  slopes.back() = active_slope(pts.back() + reach);
  return PiecewiseLinearFunction(std::move(pts), std::move(values), std::move(slopes));
}

}  // namespace

PiecewiseLinearFunction pointwise_max(const PiecewiseLinearFunction& f, const PiecewiseLinearFunction& g) {
  return pointwise_extremum(f, g, true);
}

PiecewiseLinearFunction pointwise_min(const PiecewiseLinearFunction& f, const PiecewiseLinearFunction& g) {
  return pointwise_extremum(f, g, false);
}

EnvelopeResult lower_convex_envelope(const PiecewiseLinearFunction& f) {
  const auto& xs = f.nodes();
  const auto& ys = f.values();
  const double left = f.left_slope();
  const double right = f.right_slope();
  if (left > right + tol::kKink) {
    throw ContractError("lower_convex_envelope: left ray steeper than right ray, minorant is -inf");
  }
  const std::size_t n = xs.size();

  // The left ray of the minorant is the supporting line of slope `left`; it
  // touches the vertex minimizing y - left * x (rightmost on ties). Mirror for
  // the right ray (leftmost on ties).
  std::size_t first = 0;
  std::size_t last = n - 1;
  {
    double best = ys[0] - left * xs[0];
    for (std::size_t i = 1; i < n; ++i) best = std::min(best, ys[i] - left * xs[i]);
    const double cut = best + tol::kValue * (1.0 + std::abs(best));
    for (std::size_t i = 0; i < n; ++i) {
      if (ys[i] - left * xs[i] <= cut) first = i;
    }
  }
  {
    double best = ys[0] - right * xs[0];
    for (std::size_t i = 1; i < n; ++i) best = std::min(best, ys[i] - right * xs[i]);
    const double cut = best + tol::kValue * (1.0 + std::abs(best));
    for (std::size_t i = n; i-- > 0;) {
      if (ys[i] - right * xs[i] <= cut) last = i;
    }
  }
  if (last < first) last = first;

  const auto chord = [&](std::size_t i, std::size_t j) {
    if (j == i + 1) return f.slopes()[i + 1];
    return (ys[j] - ys[i]) / (xs[j] - xs[i]);
  };

  std::vector<std::size_t> hull{first};
  for (std::size_t i = first + 1; i <= last; ++i) {
    while (hull.size() >= 2 &&
           chord(hull[hull.size() - 2], hull.back()) >= chord(hull.back(), i) - tol::kKink) {
      hull.pop_back();
    }
    hull.push_back(i);
  }

  std::vector<double> nodes;
  std::vector<double> values;
  std::vector<double> slopes{left};
  for (std::size_t k = 0; k < hull.size(); ++k) {
    nodes.push_back(xs[hull[k]]);
    values.push_back(ys[hull[k]]);
    if (k + 1 < hull.size()) slopes.push_back(chord(hull[k], hull[k + 1]));
  }
  slopes.push_back(right);
  std::vector<double> contacts = nodes;
  return {PiecewiseLinearFunction(std::move(nodes), std::move(values), std::move(slopes)),
          std::move(contacts)};
}

EnvelopeResult upper_concave_envelope(const PiecewiseLinearFunction& f) {
  auto lower = lower_convex_envelope(f.negated());
  return {lower.envelope.negated(), std::move(lower.contact_points)};
}

}  // namespace sdlattice
