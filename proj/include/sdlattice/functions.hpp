#pragma once

#include <cstddef>
#include <vector>

namespace sdlattice {

enum class Continuity { right, left };

/// Piecewise-constant function with finitely many jumps.
///
/// `plateaus[k]` is the value on the k-th open interval between consecutive
/// jump points, counting the two unbounded rays, so there is one more plateau
/// than jump. The value at a jump point is the right plateau for
/// `Continuity::right` (the default, used for survival functions and CDFs)
/// and the left plateau for `Continuity::left`.
class StepFunction {
 public:
  StepFunction(std::vector<double> jumps, std::vector<double> plateaus,
               Continuity continuity = Continuity::right);

  double operator()(double s) const;
  double left_limit(double s) const;
  double right_limit(double s) const;

  const std::vector<double>& jumps() const { return jumps_; }
  const std::vector<double>& plateaus() const { return plateaus_; }
  Continuity continuity() const { return continuity_; }

 private:
  std::vector<double> jumps_;
  std::vector<double> plateaus_;
  Continuity continuity_;
};

/// Continuous piecewise-linear function on the whole line.
///
/// Nodes are strictly increasing (at least one). `slopes()` has one entry per
/// linear piece: `slopes()[0]` is the left ray, `slopes()[i + 1]` the segment
/// [nodes[i], nodes[i + 1]], and `slopes().back()` the right ray. Slopes are
/// stored explicitly so that values derived from them (point masses of
/// integrated transforms) do not pick up the cancellation error of
/// differencing node values.
class PiecewiseLinearFunction {
 public:
  // Interior slopes from the node values.
  PiecewiseLinearFunction(std::vector<double> nodes, std::vector<double> values,
                          double left_slope, double right_slope);
  // Explicit slopes (size nodes + 1); checked against the values.
  PiecewiseLinearFunction(std::vector<double> nodes, std::vector<double> values,
                          std::vector<double> slopes);

  double operator()(double s) const;
  // Right derivative at s.
  double slope_at(double s) const;

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& slopes() const { return slopes_; }
  double left_slope() const { return slopes_.front(); }
  double right_slope() const { return slopes_.back(); }
  std::size_t size() const { return nodes_.size(); }

  bool is_convex(double tolerance) const;
  bool is_concave(double tolerance) const;
  bool is_nondecreasing(double tolerance) const;
  bool is_nonincreasing(double tolerance) const;

  PiecewiseLinearFunction negated() const;

 private:
  void validate() const;

  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> slopes_;
};

// Sum of two piecewise-linear functions (nodes merged).
PiecewiseLinearFunction operator+(const PiecewiseLinearFunction& f, const PiecewiseLinearFunction& g);

}  // namespace sdlattice
