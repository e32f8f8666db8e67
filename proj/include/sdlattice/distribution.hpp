#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sdlattice/tolerance.hpp"

namespace sdlattice {

struct WeightedPoint {
  double x;
  double p;
};

/// Finitely supported probability measure on the real line.
///
/// The support is strictly increasing and every weight is strictly positive;
/// weights sum to one. Two distributions built from the same measure compare
/// equal componentwise, so `operator==` is exact equality of the canonical
/// form. Use `approx_equal` for results of floating-point lattice operations.
class DiscreteDistribution {
 public:
  static DiscreteDistribution dirac(double x);

  /// Canonical distribution from strictly increasing `points` and nonnegative
  /// `masses`. Masses at or below `drop_below` are discarded and the rest
  /// renormalized. Used when reconstructing from survival or slope data.
  static DiscreteDistribution from_masses(std::vector<double> points,
                                          std::vector<double> masses,
                                          double drop_below = tol::kMassDrop);

  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return support_.size(); }

  double min() const { return support_.front(); }
  double max() const { return support_.back(); }
  double mean() const { return mean_; }

  // mu((s, inf)); right-continuous in s.
  double survival(double s) const;
  // mu((-inf, s]).
  double cdf(double s) const;

  friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

 private:
  DiscreteDistribution(std::vector<double> support, std::vector<double> weights);

  std::vector<double> support_;
  std::vector<double> weights_;
  // cumulative_[i] = sum of weights_[0..i]; tail_[i] = sum of weights_[i..].
  std::vector<double> cumulative_;
  std::vector<double> tail_;
  double mean_ = 0.0;

  friend DiscreteDistribution make_discrete(std::span<const WeightedPoint>);
};

/// Builds a distribution from (point, weight) pairs: duplicates merged, zero
/// weights dropped, sorted, normalized. Throws ContractError on empty input,
/// negative or non-finite weights, non-finite points, or zero total weight.
DiscreteDistribution make_discrete(std::span<const WeightedPoint> pairs);
DiscreteDistribution make_discrete(std::initializer_list<WeightedPoint> pairs);

inline double survival(const DiscreteDistribution& mu, double s) { return mu.survival(s); }
inline double mean(const DiscreteDistribution& mu) { return mu.mean(); }

// Law of -X when X ~ mu.
DiscreteDistribution reflect(const DiscreteDistribution& mu);

// Same support size and componentwise agreement of points and weights.
bool approx_equal(const DiscreteDistribution& a, const DiscreteDistribution& b,
                  double tolerance = tol::kCompare);

// Sorted union of both supports (exact duplicates merged).
std::vector<double> union_support(const DiscreteDistribution& a, const DiscreteDistribution& b);

std::string to_string(const DiscreteDistribution& mu);
std::ostream& operator<<(std::ostream& os, const DiscreteDistribution& mu);

}  // namespace sdlattice
