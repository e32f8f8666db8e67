#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "sdlattice/distribution.hpp"
#include "sdlattice/functions.hpp"

namespace sdlattice {

/// Finitely supported measure on [0, inf) with arbitrary finite total mass.
/// The zero measure (empty support) is allowed.
class NonnegMeasure {
 public:
  NonnegMeasure() = default;
  // Same canonicalization as make_discrete, without normalizing. Throws
  // ContractError on negative points, negative or non-finite weights.
  NonnegMeasure(std::vector<double> support, std::vector<double> weights);
  static NonnegMeasure from_distribution(const DiscreteDistribution& mu);

  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }
  bool empty() const { return support_.empty(); }
  double total_mass() const;

  // nu((s, inf)).
  double tail(double s) const;
  // int_{(s, inf)} u dnu(u).
  double moment_tail(double s) const;
  // int f dnu.
  double integrate(const std::function<double(double)>& f) const;
  // The measure B -> int_B u dnu(u).
  NonnegMeasure moment_weighted() const;

 private:
  std::vector<double> support_;
  std::vector<double> weights_;
};

// Image measure of nu under f (f must map [0, inf) into [0, inf)).
NonnegMeasure pushforward(const NonnegMeasure& nu, const std::function<double(double)>& f);

/// Queryable tail envelope of a family that is only known through
/// T(s) = sup nu((s, inf)) and, optionally, U(s) = sup int_{(s, inf)} u dnu.
///
/// Every answer is recorded; an answer that breaks monotonicity against an
/// earlier one, or is NaN or negative, raises DomainError. Infinite values are
/// allowed. Not safe for concurrent queries.
class TailOracle {
 public:
  using Query = std::function<double(double)>;

  explicit TailOracle(Query tail, Query moment_tail = {});

  double tail(double s) const;
  // Throws ContractError when no moment tail was supplied.
  double moment_tail(double s) const;
  bool has_moment_tail() const { return static_cast<bool>(moment_); }

  // The moment-weighted family's oracle (tail query U). Requires U.
  TailOracle moment_weighted() const;

 private:
  Query tail_;
  Query moment_;
  std::shared_ptr<std::map<double, double>> seen_tail_ = std::make_shared<std::map<double, double>>();
  std::shared_ptr<std::map<double, double>> seen_moment_ = std::make_shared<std::map<double, double>>();
};

/// A family K of measures on [0, inf): finitely many explicit members or a
/// tail oracle.
class MeasureFamily {
 public:
  // Throws ContractError on an empty member list.
  static MeasureFamily explicit_members(std::vector<NonnegMeasure> members);
  static MeasureFamily from_distributions(const std::vector<DiscreteDistribution>& members);
  static MeasureFamily from_oracle(TailOracle oracle);

  bool is_explicit() const { return std::holds_alternative<std::vector<NonnegMeasure>>(data_); }
  const std::vector<NonnegMeasure>& members() const;
  const TailOracle& oracle() const;

  // Family of moment-weighted measures; oracle families need U.
  MeasureFamily moment_weighted() const;

 private:
  explicit MeasureFamily(std::variant<std::vector<NonnegMeasure>, TailOracle> data)
      : data_(std::move(data)) {}
  std::variant<std::vector<NonnegMeasure>, TailOracle> data_;
};

// sup nu((s, inf)) over the family. s >= 0.
double tail_sup(const MeasureFamily& family, double s);
// sup int_{(M, inf)} u dnu(u). Throws ContractError for oracles without U.
double ui_tail(const MeasureFamily& family, double m);
// sup int f dnu over an explicit family.
double sup_integral(const MeasureFamily& family, const std::function<double(double)>& f);

/// Nondecreasing psi with psi(0) = 0 and a certified bound on sup int psi dnu.
///
/// Thresholds M1 < M2 < ... satisfy tail_sup(Mn) <= 2^-n; each is the least
/// such point (found exactly on explicit families, by doubling and bisection
/// on oracles), pushed one unit right of its predecessor when they coincide.
/// The continuous version interpolates (0, 0), (Mn, n - 1) and stays flat
/// after the last threshold; the step version is the sum of the indicators of
/// (Mn, inf), continuous from the left. `bound` is the exact sup int psi dnu
/// for explicit families and sum_n T(Mn) for oracles.
struct TightPsi {
  std::vector<double> thresholds;
  std::variant<PiecewiseLinearFunction, StepFunction> psi;
  double bound = 0.0;

  double operator()(double s) const;
};

// Throws DomainError when a threshold would exceed 2^64.
TightPsi build_psi_tight(const MeasureFamily& family, std::size_t levels, bool continuous = true);

/// psi strictly increasing on [0, horizon] built from the bin masses
/// alpha_1 = sup nu((M, inf)), alpha_k = sup nu((M/k, M/(k-1)]) (k = 2..levels).
///
/// Node values c_k = 2^-k / (1 + max_{j<=k} alpha_j) at M/k give
/// sum c_k alpha_k <= 1 and strictly decreasing c_k. Beyond M the function
/// ramps to 2 c_1 at `horizon` and adds the continuous tight psi with
/// thresholds at or above M. `bound` may be +inf when T(0) is infinite.
struct StrictPsi {
  PiecewiseLinearFunction psi;
  std::vector<double> bin_masses;
  std::vector<double> coefficients;
  double horizon = 0.0;
  double bound = 0.0;
};

// Throws ContractError unless M > 0 and levels >= 1; DomainError when
// T(M / levels) is infinite.
StrictPsi build_psi_strict(const MeasureFamily& family, double m, std::size_t levels);

/// psi_alpha(s) = int_0^s eta(u)^alpha du with eta a continuous tight (or,
/// given `strict_m`, strict) psi of the moment-weighted family.
///
/// psi_alpha is C1, convex and nondecreasing with psi_alpha(0) = 0. Since eta
/// is nondecreasing, for every member sup int_{(s, inf)} psi_alpha dnu is at
/// most eta(s)^(alpha - 1) * C with C = sup int u eta(u) dnu(u).
class DlvpPsi {
 public:
  DlvpPsi(PiecewiseLinearFunction eta, double alpha, double certificate);

  double operator()(double s) const;
  // eta(s)^alpha.
  double derivative(double s) const;
  // eta(s)^(alpha - 1) * C; +inf where eta(s) = 0.
  double ui_bound(double s) const;
  // Piecewise-linear interpolation of psi_alpha at `samples` points per eta piece on [0, upto].
  PiecewiseLinearFunction sampled(double upto, std::size_t samples = 8) const;

  const PiecewiseLinearFunction& eta() const { return eta_; }
  double alpha() const { return alpha_; }
  double certificate() const { return certificate_; }

 private:
  double segment_integral(double a, double b) const;

  PiecewiseLinearFunction eta_;
  double alpha_;
  double certificate_;
  // psi_alpha at eta's nodes (nodes start at 0).
  std::vector<double> cumulative_;
};

// Throws ContractError unless 0 < alpha < 1; DomainError when the moment
// family is not tight at the requested levels.
DlvpPsi build_psi_dlvp(const MeasureFamily& family, double alpha, std::size_t levels = 20,
                       std::optional<double> strict_m = std::nullopt);

struct ConvexCriterion {
  bool holds = false;
  // ui_tail(M), an upper bound on sup int (s - M)^+ dnu(s).
  double bound = 0.0;
};

// Oracle families without U, or with U(M) infinite, do not satisfy it.
ConvexCriterion check_convex_criterion(const MeasureFamily& family, double m);

}  // namespace sdlattice
