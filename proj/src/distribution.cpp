#include "sdlattice/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "sdlattice/error.hpp"

namespace sdlattice {

DiscreteDistribution::DiscreteDistribution(std::vector<double> support, std::vector<double> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  const std::size_t n = support_.size();
  cumulative_.resize(n);
  tail_.resize(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += weights_[i];
    cumulative_[i] = acc;
  }
  acc = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    acc += weights_[i];
    tail_[i] = acc;
  }
  long double m = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    m += static_cast<long double>(support_[i]) * weights_[i];
  }
  mean_ = static_cast<double>(m);
}

DiscreteDistribution DiscreteDistribution::dirac(double x) {
  return make_discrete({{x, 1.0}});
}

DiscreteDistribution DiscreteDistribution::from_masses(std::vector<double> points,
                                                       std::vector<double> masses,
                                                       double drop_below) {
  if (points.size() != masses.size()) {
    throw ContractError("from_masses: points and masses differ in length");
  }
  std::vector<double> xs;
  std::vector<double> ps;
  xs.reserve(points.size());
  ps.reserve(points.size());
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i]) || !std::isfinite(masses[i])) {
      throw ContractError("from_masses: non-finite point or mass");
    }
    if (i > 0 && !(points[i] > points[i - 1])) {
      throw ContractError("from_masses: points must be strictly increasing");
    }
    if (masses[i] > drop_below) {
      xs.push_back(points[i]);
      ps.push_back(masses[i]);
      total += masses[i];
    }
  }
  if (xs.empty() || !(total > 0.0)) {
    throw ContractError("from_masses: no positive mass");
  }
  for (double& p : ps) p /= total;
  return DiscreteDistribution(std::move(xs), std::move(ps));
}

double DiscreteDistribution::survival(double s) const {
  const auto it = std::upper_bound(support_.begin(), support_.end(), s);
  if (it == support_.end()) return 0.0;
  return tail_[static_cast<std::size_t>(it - support_.begin())];
}

double DiscreteDistribution::cdf(double s) const {
  const auto it = std::upper_bound(support_.begin(), support_.end(), s);
  if (it == support_.begin()) return 0.0;
  return cumulative_[static_cast<std::size_t>(it - support_.begin()) - 1];
}

DiscreteDistribution make_discrete(std::span<const WeightedPoint> pairs) {
  if (pairs.empty()) throw ContractError("make_discrete: empty input");
  std::vector<WeightedPoint> sorted;
  sorted.reserve(pairs.size());
  double total = 0.0;
  for (const auto& wp : pairs) {
    if (!std::isfinite(wp.x)) throw ContractError("make_discrete: non-finite point");
    if (!std::isfinite(wp.p)) throw ContractError("make_discrete: non-finite weight");
    if (wp.p < 0.0) throw ContractError("make_discrete: negative weight");
    if (wp.p == 0.0) continue;
    sorted.push_back(wp);
    total += wp.p;
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw ContractError("make_discrete: total weight must be positive and finite");
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const WeightedPoint& a, const WeightedPoint& b) { return a.x < b.x; });
  std::vector<double> xs;
  std::vector<double> ps;
  for (const auto& wp : sorted) {
    if (!xs.empty() && xs.back() == wp.x) {
      ps.back() += wp.p;
    } else {
      xs.push_back(wp.x);
      ps.push_back(wp.p);
    }
  }
  for (double& p : ps) p /= total;
  return DiscreteDistribution(std::move(xs), std::move(ps));
}

DiscreteDistribution make_discrete(std::initializer_list<WeightedPoint> pairs) {
  return make_discrete(std::span<const WeightedPoint>(pairs.begin(), pairs.size()));
}

DiscreteDistribution reflect(const DiscreteDistribution& mu) {
  std::vector<WeightedPoint> pts;
  pts.reserve(mu.size());
  for (std::size_t i = mu.size(); i-- > 0;) {
    pts.push_back({-mu.support()[i], mu.weights()[i]});
  }
  return make_discrete(pts);
}

bool approx_equal(const DiscreteDistribution& a, const DiscreteDistribution& b, double tolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.support()[i] - b.support()[i]) > tolerance) return false;
    if (std::abs(a.weights()[i] - b.weights()[i]) > tolerance) return false;
  }
  return true;
}

std::vector<double> union_support(const DiscreteDistribution& a, const DiscreteDistribution& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.support().begin(), a.support().end(), b.support().begin(), b.support().end(),
                 std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const DiscreteDistribution& mu) {
  std::ostringstream os;
  os << mu;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiscreteDistribution& mu) {
  os << '{';
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) os << ", ";
    os << mu.weights()[i] << "@" << mu.support()[i];
  }
  return os << '}';
}

}  // namespace sdlattice
