#include "sdlattice/functions.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include "sdlattice/error.hpp"

namespace sdlattice {

namespace {

void check_nodes(const std::vector<double>& xs, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i])) throw ContractError(std::string(what) + ": non-finite node");
    if (i > 0 && !(xs[i] > xs[i - 1])) {
      throw ContractError(std::string(what) + ": nodes must be strictly increasing");
    }
  }
}

}  // namespace

StepFunction::StepFunction(std::vector<double> jumps, std::vector<double> plateaus,
                           Continuity continuity)
    : jumps_(std::move(jumps)), plateaus_(std::move(plateaus)), continuity_(continuity) {
  check_nodes(jumps_, "StepFunction");
  if (plateaus_.size() != jumps_.size() + 1) {
    throw ContractError("StepFunction: need exactly one more plateau than jump");
  }
}

double StepFunction::operator()(double s) const {
  return continuity_ == Continuity::right ? right_limit(s) : left_limit(s);
}

double StepFunction::right_limit(double s) const {
  const auto it = std::upper_bound(jumps_.begin(), jumps_.end(), s);
  return plateaus_[static_cast<std::size_t>(it - jumps_.begin())];
}

double StepFunction::left_limit(double s) const {
  const auto it = std::lower_bound(jumps_.begin(), jumps_.end(), s);
  return plateaus_[static_cast<std::size_t>(it - jumps_.begin())];
}

PiecewiseLinearFunction::PiecewiseLinearFunction(std::vector<double> nodes,
                                                 std::vector<double> values, double left_slope,
                                                 double right_slope)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  if (nodes_.empty() || nodes_.size() != values_.size()) {
    throw ContractError("PiecewiseLinearFunction: need matching nonempty nodes and values");
  }
  check_nodes(nodes_, "PiecewiseLinearFunction");
  slopes_.reserve(nodes_.size() + 1);
  slopes_.push_back(left_slope);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    slopes_.push_back((values_[i + 1] - values_[i]) / (nodes_[i + 1] - nodes_[i]));
  }
  slopes_.push_back(right_slope);
  validate();
}

PiecewiseLinearFunction::PiecewiseLinearFunction(std::vector<double> nodes,
                                                 std::vector<double> values,
                                                 std::vector<double> slopes)
    : nodes_(std::move(nodes)), values_(std::move(values)), slopes_(std::move(slopes)) {
  if (nodes_.empty() || nodes_.size() != values_.size() || slopes_.size() != nodes_.size() + 1) {
    throw ContractError("PiecewiseLinearFunction: inconsistent nodes/values/slopes sizes");
  }
  check_nodes(nodes_, "PiecewiseLinearFunction");
  validate();
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    const double dy = values_[i + 1] - values_[i];
    const double predicted = slopes_[i + 1] * (nodes_[i + 1] - nodes_[i]);
    if (std::abs(dy - predicted) > 1e-9 * (1.0 + std::abs(dy) + std::abs(predicted))) {
      throw ContractError("PiecewiseLinearFunction: slopes inconsistent with node values");
    }
  }
}

void PiecewiseLinearFunction::validate() const {
  for (double v : values_) {
    if (!std::isfinite(v)) throw ContractError("PiecewiseLinearFunction: non-finite value");
  }
  for (double s : slopes_) {
    if (!std::isfinite(s)) throw ContractError("PiecewiseLinearFunction: non-finite slope");
  }
}

double PiecewiseLinearFunction::operator()(double s) const {
  if (s <= nodes_.front()) return values_.front() + slopes_.front() * (s - nodes_.front());
  if (s >= nodes_.back()) return values_.back() + slopes_.back() * (s - nodes_.back());
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), s);
  const auto i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  return values_[i] + slopes_[i + 1] * (s - nodes_[i]);
}

double PiecewiseLinearFunction::slope_at(double s) const {
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), s);
  return slopes_[static_cast<std::size_t>(it - nodes_.begin())];
}

bool PiecewiseLinearFunction::is_convex(double tolerance) const {
  for (std::size_t i = 1; i < slopes_.size(); ++i) {
    if (slopes_[i] < slopes_[i - 1] - tolerance) return false;
  }
  return true;
}

bool PiecewiseLinearFunction::is_concave(double tolerance) const {
  for (std::size_t i = 1; i < slopes_.size(); ++i) {
    if (slopes_[i] > slopes_[i - 1] + tolerance) return false;
  }
  return true;
}

bool PiecewiseLinearFunction::is_nondecreasing(double tolerance) const {
  return std::all_of(slopes_.begin(), slopes_.end(), [&](double s) { return s >= -tolerance; });
}

bool PiecewiseLinearFunction::is_nonincreasing(double tolerance) const {
  return std::all_of(slopes_.begin(), slopes_.end(), [&](double s) { return s <= tolerance; });
}

PiecewiseLinearFunction PiecewiseLinearFunction::negated() const {
  std::vector<double> vs(values_.size());
  std::vector<double> ss(slopes_.size());
  std::transform(values_.begin(), values_.end(), vs.begin(), [](double v) { return -v; });
  std::transform(slopes_.begin(), slopes_.end(), ss.begin(), [](double v) { return -v; });
  return PiecewiseLinearFunction(nodes_, std::move(vs), std::move(ss));
}

PiecewiseLinearFunction operator+(const PiecewiseLinearFunction& f, const PiecewiseLinearFunction& g) {
  std::vector<double> xs;
  std::set_union(f.nodes().begin(), f.nodes().end(), g.nodes().begin(), g.nodes().end(),
                 std::back_inserter(xs));
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> ys(xs.size());
  std::vector<double> ss;
  ss.reserve(xs.size() + 1);
  ss.push_back(f.left_slope() + g.left_slope());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ys[i] = f(xs[i]) + g(xs[i]);
    if (i + 1 < xs.size()) {
      const double mid = 0.5 * (xs[i] + xs[i + 1]);
      ss.push_back(f.slope_at(mid) + g.slope_at(mid));
    }
  }
  ss.push_back(f.right_slope() + g.right_slope());
  return PiecewiseLinearFunction(std::move(xs), std::move(ys), std::move(ss));
}

}  // namespace sdlattice
