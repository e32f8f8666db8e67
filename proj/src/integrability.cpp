#include "sdlattice/integrability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sdlattice/error.hpp"

namespace sdlattice {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSearchCap = 18446744073709551616.0;  // 2^64

double level_target(std::size_t n) { return std::ldexp(1.0, -static_cast<int>(n)); }

void require_nonneg(double s, const char* what) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw ContractError(std::string(what) + ": argument must be finite and >= 0");
  }
}

}  // namespace

// ---------------------------------------------------------------- measures

NonnegMeasure::NonnegMeasure(std::vector<double> support, std::vector<double> weights) {
  if (support.size() != weights.size()) {
    throw ContractError("NonnegMeasure: support and weights differ in length");
  }
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!std::isfinite(support[i]) || support[i] < 0.0) {
      throw ContractError("NonnegMeasure: support points must be finite and >= 0");
    }
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw ContractError("NonnegMeasure: weights must be finite and >= 0");
    }
    if (weights[i] > 0.0) pairs.emplace_back(support[i], weights[i]);
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [x, w] : pairs) {
    if (!support_.empty() && support_.back() == x) {
      weights_.back() += w;
    } else {
      support_.push_back(x);
      weights_.push_back(w);
    }
  }
}

NonnegMeasure NonnegMeasure::from_distribution(const DiscreteDistribution& mu) {
  return NonnegMeasure(mu.support(), mu.weights());
}

double NonnegMeasure::total_mass() const {
  double total = 0.0;
  for (double w : weights_) total += w;
  return total;
}

double NonnegMeasure::tail(double s) const {
  double total = 0.0;
  for (std::size_t i = support_.size(); i-- > 0 && support_[i] > s;) total += weights_[i];
  return total;
}

double NonnegMeasure::moment_tail(double s) const {
  double total = 0.0;
  for (std::size_t i = support_.size(); i-- > 0 && support_[i] > s;) total += support_[i] * weights_[i];
  return total;
}

double NonnegMeasure::integrate(const std::function<double(double)>& f) const {
  double total = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) total += weights_[i] * f(support_[i]);
  return total;
}

NonnegMeasure NonnegMeasure::moment_weighted() const {
  std::vector<double> ws(weights_.size());
  for (std::size_t i = 0; i < ws.size(); ++i) ws[i] = support_[i] * weights_[i];
  return NonnegMeasure(support_, std::move(ws));
}

NonnegMeasure pushforward(const NonnegMeasure& nu, const std::function<double(double)>& f) {
  std::vector<double> xs(nu.support().size());
  std::transform(nu.support().begin(), nu.support().end(), xs.begin(), f);
  return NonnegMeasure(std::move(xs), nu.weights());
}

// ---------------------------------------------------------------- oracle

namespace {

double record(std::map<double, double>& seen, double s, double v, const char* what) {
  if (std::isnan(v) || v < 0.0) {
    throw DomainError(std::string(what) + ": query returned a negative or NaN value");
  }
  const double slack = std::isfinite(v) ? 1e-12 * (1.0 + std::abs(v)) : 0.0;
  auto it = seen.lower_bound(s);
  if (it != seen.end() && it->first == s) return v;
  if (it != seen.end() && it->second > v + slack) {
    throw DomainError(std::string(what) + ": not nonincreasing across queried points");
  }
  if (it != seen.begin() && std::prev(it)->second < v - slack) {
    throw DomainError(std::string(what) + ": not nonincreasing across queried points");
  }
  seen.emplace_hint(it, s, v);
  return v;
}

}  // namespace

TailOracle::TailOracle(Query tail, Query moment_tail)
    : tail_(std::move(tail)), moment_(std::move(moment_tail)) {
  if (!tail_) throw ContractError("TailOracle: tail query is required");
}

double TailOracle::tail(double s) const { return record(*seen_tail_, s, tail_(s), "tail oracle T"); }

double TailOracle::moment_tail(double s) const {
  if (!moment_) throw ContractError("TailOracle: no moment tail U supplied");
  return record(*seen_moment_, s, moment_(s), "tail oracle U");
}

TailOracle TailOracle::moment_weighted() const {
  if (!moment_) throw ContractError("TailOracle: no moment tail U supplied");
  return TailOracle(moment_);
}

// ---------------------------------------------------------------- family

MeasureFamily MeasureFamily::explicit_members(std::vector<NonnegMeasure> members) {
  if (members.empty()) throw ContractError("MeasureFamily: explicit family must be nonempty");
  return MeasureFamily(std::move(members));
}

MeasureFamily MeasureFamily::from_distributions(const std::vector<DiscreteDistribution>& members) {
  std::vector<NonnegMeasure> out;
  out.reserve(members.size());
  for (const auto& mu : members) out.push_back(NonnegMeasure::from_distribution(mu));
  return explicit_members(std::move(out));
}

MeasureFamily MeasureFamily::from_oracle(TailOracle oracle) { return MeasureFamily(std::move(oracle)); }

const std::vector<NonnegMeasure>& MeasureFamily::members() const {
  if (!is_explicit()) throw ContractError("MeasureFamily: not an explicit family");
  return std::get<std::vector<NonnegMeasure>>(data_);
}

const TailOracle& MeasureFamily::oracle() const {
  if (is_explicit()) throw ContractError("MeasureFamily: not an oracle family");
  return std::get<TailOracle>(data_);
}

MeasureFamily MeasureFamily::moment_weighted() const {
  if (!is_explicit()) return MeasureFamily(oracle().moment_weighted());
  std::vector<NonnegMeasure> out;
  for (const auto& nu : members()) out.push_back(nu.moment_weighted());
  return MeasureFamily(std::move(out));
}

double tail_sup(const MeasureFamily& family, double s) {
  require_nonneg(s, "tail_sup");
  if (!family.is_explicit()) return family.oracle().tail(s);
  double best = 0.0;
  for (const auto& nu : family.members()) best = std::max(best, nu.tail(s));
  return best;
}

double ui_tail(const MeasureFamily& family, double m) {
  require_nonneg(m, "ui_tail");
  if (!family.is_explicit()) return family.oracle().moment_tail(m);
  double best = 0.0;
  for (const auto& nu : family.members()) best = std::max(best, nu.moment_tail(m));
  return best;
}

double sup_integral(const MeasureFamily& family, const std::function<double(double)>& f) {
  double best = 0.0;
  for (const auto& nu : family.members()) best = std::max(best, nu.integrate(f));
  return best;
}

// ---------------------------------------------------------------- tight psi

namespace {

// Least s >= 0 with tail_sup(s) <= target.
double least_threshold(const MeasureFamily& family, double target) {
  if (family.is_explicit()) {
    std::vector<double> candidates{0.0};
    for (const auto& nu : family.members()) {
      candidates.insert(candidates.end(), nu.support().begin(), nu.support().end());
    }
    std::sort(candidates.begin(), candidates.end());
    for (double c : candidates) {
      if (tail_sup(family, c) <= target) return c;
    }
    return candidates.back();
  }
  if (tail_sup(family, 0.0) <= target) return 0.0;
  double hi = 1.0;
  while (tail_sup(family, hi) > target) {
    hi *= 2.0;
    if (hi > kSearchCap) {
      throw DomainError("build_psi: tail does not reach " + std::to_string(target) +
                        " below 2^64; family not tight at this level");
    }
  }
  double lo = hi == 1.0 ? 0.0 : 0.5 * hi;
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (tail_sup(family, mid) <= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::vector<double> tight_thresholds(const MeasureFamily& family, std::size_t levels, double floor) {
  std::vector<double> out;
  out.reserve(levels);
  for (std::size_t n = 1; n <= levels; ++n) {
    double m = std::max(floor, least_threshold(family, level_target(n)));
    if (!out.empty() && m <= out.back()) m = out.back() + 1.0;
    out.push_back(m);
  }
  return out;
}

PiecewiseLinearFunction interpolate_levels(const std::vector<double>& thresholds) {
  std::vector<double> xs;
  std::vector<double> ys;
  if (thresholds.front() > 0.0) {
    xs.push_back(0.0);
    ys.push_back(0.0);
  }
  for (std::size_t n = 0; n < thresholds.size(); ++n) {
    xs.push_back(thresholds[n]);
    ys.push_back(static_cast<double>(n));
  }
  return PiecewiseLinearFunction(std::move(xs), std::move(ys), 0.0, 0.0);
}

double oracle_threshold_bound(const MeasureFamily& family, const std::vector<double>& thresholds) {
  double total = 0.0;
  for (double m : thresholds) total += tail_sup(family, m);
  return total;
}

}  // namespace

double TightPsi::operator()(double s) const {
  return std::visit([s](const auto& f) { return f(s); }, psi);
}

TightPsi build_psi_tight(const MeasureFamily& family, std::size_t levels, bool continuous) {
  if (levels == 0) throw ContractError("build_psi_tight: levels must be positive");
  TightPsi out{tight_thresholds(family, levels, 0.0), StepFunction({}, {0.0}), 0.0};
  if (continuous) {
    out.psi = interpolate_levels(out.thresholds);
  } else {
    std::vector<double> plateaus(levels + 1);
    for (std::size_t k = 0; k <= levels; ++k) plateaus[k] = static_cast<double>(k);
    out.psi = StepFunction(out.thresholds, std::move(plateaus), Continuity::left);
  }
  out.bound = family.is_explicit() ? sup_integral(family, [&out](double s) { return out(s); })
                                   : oracle_threshold_bound(family, out.thresholds);
  return out;
}

// ---------------------------------------------------------------- strict psi

StrictPsi build_psi_strict(const MeasureFamily& family, double m, std::size_t levels) {
  if (!(m > 0.0) || !std::isfinite(m)) throw ContractError("build_psi_strict: M must be positive");
  if (levels == 0) throw ContractError("build_psi_strict: levels must be positive");
  const double k_max = static_cast<double>(levels);
  if (!std::isfinite(tail_sup(family, m / k_max))) {
    throw DomainError("build_psi_strict: tail is infinite at a positive point");
  }

  StrictPsi out{PiecewiseLinearFunction({0.0}, {0.0}, 0.0, 0.0), {}, {}, 0.0, 0.0};
  out.bin_masses.resize(levels);
  out.coefficients.resize(levels);
  double running = 0.0;
  for (std::size_t k = 1; k <= levels; ++k) {
    double alpha = 0.0;
    const double lo = m / static_cast<double>(k);
    if (k == 1) {
      alpha = tail_sup(family, m);
    } else if (family.is_explicit()) {
      const double hi = m / static_cast<double>(k - 1);
      for (const auto& nu : family.members()) alpha = std::max(alpha, nu.tail(lo) - nu.tail(hi));
    } else {
      alpha = tail_sup(family, lo);
    }
    out.bin_masses[k - 1] = alpha;
    running = std::max(running, alpha);
    out.coefficients[k - 1] = level_target(k) / (1.0 + running);
  }

  const auto eta_thresholds = tight_thresholds(family, levels, m);
  out.horizon = eta_thresholds.back() > m ? eta_thresholds.back() : 2.0 * m;

  std::vector<double> xs{0.0};
  std::vector<double> ys{0.0};
  for (std::size_t k = levels; k >= 1; --k) {
    xs.push_back(m / static_cast<double>(k));
    ys.push_back(out.coefficients[k - 1]);
  }
  xs.push_back(out.horizon);
  ys.push_back(2.0 * out.coefficients.front());
  const PiecewiseLinearFunction base(std::move(xs), std::move(ys), 0.0, 0.0);
  out.psi = base + interpolate_levels(eta_thresholds);

  if (family.is_explicit()) {
    out.bound = sup_integral(family, [&out](double s) { return out.psi(s); });
  } else {
    // psi <= c_{k-1} on (M/k, M/(k-1)], <= c_K on [0, M/K], <= 2 c_1 + eta beyond M.
    const auto& c = out.coefficients;
    double total = c.back() * tail_sup(family, 0.0);
    for (std::size_t k = 2; k <= levels; ++k) total += c[k - 2] * tail_sup(family, m / static_cast<double>(k));
    total += 2.0 * c.front() * tail_sup(family, m);
    total += oracle_threshold_bound(family, eta_thresholds);
    out.bound = total;
  }
  return out;
}

// ---------------------------------------------------------------- dlvp psi

DlvpPsi::DlvpPsi(PiecewiseLinearFunction eta, double alpha, double certificate)
    : eta_(std::move(eta)), alpha_(alpha), certificate_(certificate) {
  if (!(alpha_ > 0.0 && alpha_ < 1.0)) throw ContractError("DlvpPsi: alpha must lie in (0, 1)");
  if (eta_.nodes().front() != 0.0 || eta_.values().front() != 0.0 || eta_.left_slope() != 0.0) {
    throw ContractError("DlvpPsi: eta must start at (0, 0) with a flat left ray");
  }
  if (!eta_.is_nondecreasing(0.0)) throw ContractError("DlvpPsi: eta must be nondecreasing");
  const auto& xs = eta_.nodes();
  cumulative_.resize(xs.size());
  cumulative_[0] = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    cumulative_[i + 1] = cumulative_[i] + segment_integral(xs[i], xs[i + 1]);
  }
}

double DlvpPsi::segment_integral(double a, double b) const {
  const double ea = std::max(0.0, eta_(a));
  const double k = eta_.slope_at(a);
  const double len = b - a;
  if (len <= 0.0) return 0.0;
  if (k == 0.0) return std::pow(ea, alpha_) * len;
  if (std::abs(k * len) <= 1e-6 * ea) {
    // Nearly constant integrand: composite Simpson, two panels.
    const auto g = [&](double t) { return std::pow(ea + k * t, alpha_); };
    const double h = len / 4.0;
    return h / 3.0 * (g(0.0) + 4.0 * g(h) + 2.0 * g(2.0 * h) + 4.0 * g(3.0 * h) + g(len));
  }
  const double eb = std::max(0.0, ea + k * len);
  return (std::pow(eb, alpha_ + 1.0) - std::pow(ea, alpha_ + 1.0)) / (k * (alpha_ + 1.0));
}

double DlvpPsi::operator()(double s) const {
  const auto& xs = eta_.nodes();
  if (s <= 0.0) return 0.0;
  const auto it = std::upper_bound(xs.begin(), xs.end(), s);
  const auto i = static_cast<std::size_t>(it - xs.begin()) - 1;
  return cumulative_[i] + segment_integral(xs[i], s);
}

double DlvpPsi::derivative(double s) const {
  if (s < 0.0) return 0.0;
  return std::pow(std::max(0.0, eta_(s)), alpha_);
}

double DlvpPsi::ui_bound(double s) const {
  const double e = eta_(s);
  if (!(e > 0.0)) return kInf;
  return std::pow(e, alpha_ - 1.0) * certificate_;
}

PiecewiseLinearFunction DlvpPsi::sampled(double upto, std::size_t samples) const {
  if (!(upto > 0.0)) throw ContractError("DlvpPsi::sampled: upper end must be positive");
  samples = std::max<std::size_t>(samples, 1);
  std::vector<double> knots{0.0};
  for (double x : eta_.nodes()) {
    if (x > 0.0 && x < upto) knots.push_back(x);
  }
  knots.push_back(upto);
  std::vector<double> xs;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    for (std::size_t j = 0; j < samples; ++j) {
      xs.push_back(knots[i] + (knots[i + 1] - knots[i]) * static_cast<double>(j) / static_cast<double>(samples));
    }
  }
  xs.push_back(upto);
  std::vector<double> ys(xs.size());
  std::transform(xs.begin(), xs.end(), ys.begin(), [this](double s) { return (*this)(s); });
  return PiecewiseLinearFunction(std::move(xs), std::move(ys), 0.0, derivative(upto));
}

DlvpPsi build_psi_dlvp(const MeasureFamily& family, double alpha, std::size_t levels,
                       std::optional<double> strict_m) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ContractError("build_psi_dlvp: alpha must lie in (0, 1)");
  const MeasureFamily moments = family.moment_weighted();
  if (strict_m) {
    auto strict = build_psi_strict(moments, *strict_m, levels);
    const double c = family.is_explicit()
                         ? sup_integral(family, [&strict](double u) { return u * strict.psi(u); })
                         : strict.bound;
    return DlvpPsi(std::move(strict.psi), alpha, c);
  }
  auto tight = build_psi_tight(moments, levels, true);
  auto eta = std::get<PiecewiseLinearFunction>(tight.psi);
  const double c = family.is_explicit()
                       ? sup_integral(family, [&eta](double u) { return u * eta(u); })
                       : tight.bound;
  return DlvpPsi(std::move(eta), alpha, c);
}

ConvexCriterion check_convex_criterion(const MeasureFamily& family, double m) {
  require_nonneg(m, "check_convex_criterion");
  if (!family.is_explicit() && !family.oracle().has_moment_tail()) return {false, kInf};
  const double bound = ui_tail(family, m);
  return {std::isfinite(bound), bound};
}

}  // namespace sdlattice
