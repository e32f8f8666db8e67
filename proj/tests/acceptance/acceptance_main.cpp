// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "properties.hpp"

using namespace sdlattice;
using sdtest::Report;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ------------------------------------------------------------ golden values

enum class Kind { survival, icx, icv };

// Distribution recovered from a transform sampled on a dense grid.
DiscreteDistribution recover(const std::vector<double>& grid, const std::vector<double>& values, Kind kind) {
  std::vector<double> masses(grid.size());
  if (kind == Kind::survival) {
    masses = sdtest::oracle::masses_from_survival(values);
    return DiscreteDistribution::from_masses(grid, masses, 1e-9);
  }
  std::vector<double> slopes{kind == Kind::icx ? -1.0 : 0.0};
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    slopes.push_back((values[k + 1] - values[k]) / (grid[k + 1] - grid[k]));
  }
  slopes.push_back(kind == Kind::icx ? 0.0 : -1.0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double jump = slopes[k + 1] - slopes[k];
    masses[k] = std::max(0.0, kind == Kind::icx ? jump : -jump);
  }
  return DiscreteDistribution::from_masses(grid, masses, 1e-9);
}

struct Golden {
  std::string name;
  DiscreteDistribution a, b, expected;
  Order order;
  bool upper;
};

Report golden_instances() {
  const auto mu = make_discrete({{0.0, 0.5}, {2.0, 0.5}});
  const auto nu = DiscreteDistribution::dirac(1.5);
  const auto d0 = DiscreteDistribution::dirac(0.0);
  const auto wide = make_discrete({{-1.0, 0.5}, {10.0, 0.5}});
  const std::vector<Golden> cases{
      {"join_st", mu, nu, make_discrete({{1.5, 0.5}, {2.0, 0.5}}), Order::st, true},
      {"meet_st", mu, nu, make_discrete({{0.0, 0.5}, {1.5, 0.5}}), Order::st, false},
      {"join_icx", mu, nu, make_discrete({{1.0, 0.5}, {2.0, 0.5}}), Order::icx, true},
      {"meet_icx", mu, nu, make_discrete({{0.0, 1.0 / 3.0}, {1.5, 2.0 / 3.0}}), Order::icx, false},
      {"join_icv", d0, wide, make_discrete({{0.0, 0.55}, {10.0, 0.45}}), Order::icv, true},
      {"meet_icv", d0, wide, make_discrete({{-1.0, 0.5}, {1.0, 0.5}}), Order::icv, false},
  };
  Report r;
  for (const auto& c : cases) {
    ++r.cases;
    const double lo = std::min(c.a.min(), c.b.min()) - 2.0;
    const double hi = std::max(c.a.max(), c.b.max()) + 2.0;
    const auto grid = sdtest::oracle::dense_grid(lo, hi, 1e-3, union_support(c.a, c.b));
    std::vector<double> values(grid.size());
    Kind kind = Kind::survival;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double s = grid[k];
      double fa = 0.0, fb = 0.0;
      switch (c.order) {
        case Order::st:
          fa = sdtest::oracle::survival(c.a, s), fb = sdtest::oracle::survival(c.b, s);
          break;
        case Order::icx:
          fa = sdtest::oracle::icx(c.a, s), fb = sdtest::oracle::icx(c.b, s), kind = Kind::icx;
          break;
        default:
          fa = sdtest::oracle::icv(c.a, s), fb = sdtest::oracle::icv(c.b, s), kind = Kind::icv;
          break;
      }
      values[k] = c.upper ? std::max(fa, fb) : std::min(fa, fb);
    }
    // Envelopes are only needed where the pointwise extremum is not itself in the class.
    if (c.order == Order::icx && !c.upper) values = sdtest::oracle::lower_hull_values(grid, values);
    if (c.order == Order::icv && c.upper) values = sdtest::oracle::upper_hull_values(grid, values);

    const auto derived = recover(grid, values, kind);
    const auto computed = c.upper ? join(c.a, c.b, c.order) : meet(c.a, c.b, c.order);
    r.check(approx_equal(derived, c.expected, 1e-9), c.name + ": oracle gives " + sdtest::show(derived));
    r.check(approx_equal(computed, c.expected, 1e-9), c.name + ": library gives " + sdtest::show(computed));
  }
  return r;
}

// ------------------------------------------------------------ criteria

Report all_of(std::initializer_list<Report> parts) {
  Report r;
  for (const auto& p : parts) r.absorb(p);
  return r;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Report()> run;
  double time_limit = 0.0;  // seconds; 0 means none
};

}  // namespace

int main() {
  const auto start = Clock::now();
  const std::vector<Criterion> criteria{
      {1, "lattice laws (st, icv, icx; 1000 triples)",
       [] {
         return all_of({sdtest::lattice_laws(Order::st, 1000, 101), sdtest::lattice_laws(Order::icv, 1000, 102),
                        sdtest::lattice_laws(Order::icx, 1000, 103)});
       },
       30.0},
      {2, "bounds and least bounds (st, icv, icx, cx; 1000 triples)",
       [] {
         return all_of({sdtest::bound_laws(Order::st, 1000, 201), sdtest::bound_laws(Order::icv, 1000, 202),
                        sdtest::bound_laws(Order::icx, 1000, 203), sdtest::bound_laws(Order::cx, 1000, 204)});
       }},
      {3, "exact derived instances", golden_instances},
      {4, "order implications, cx decomposition, reflection duality, Jensen bounds",
       [] {
         return all_of({sdtest::st_implies_second_order(1000, 401), sdtest::cx_decomposition(1000, 402),
                        sdtest::reflection_duality(1000, 403), sdtest::jensen_bounds(500, 404),
                        sdtest::verdicts_match_oracle(Order::st, 500, 405),
                        sdtest::verdicts_match_oracle(Order::icv, 500, 406),
                        sdtest::verdicts_match_oracle(Order::icx, 500, 407),
                        sdtest::verdicts_match_oracle(Order::cx, 500, 408)});
       }},
      {5, "means of inf_icv and sup_icx (200 families)", [] { return sdtest::minmax_means(200, 501); }},
      {6, "envelope oracle (200 pairs, grid step 1e-3)", [] { return sdtest::envelope_oracle(200, 1e-3, 601); }},
      {7, "W1 sorted-sample oracle and metric axioms",
       [] { return all_of({sdtest::w1_sorted_oracle(200, 1000, 701), sdtest::metric_axioms(1000, 702)}); }},
      {8, "convergence of monotone approximations",
       [] {
         return all_of({sdtest::levy_dirac_sequence(100), sdtest::monotone_dirac_convergence(),
                        sdtest::icx_monotone_convergence(50, 801)});
       }},
      {9, "psi constructions (tight, strict, dlvp)",
       [] {
         return all_of({sdtest::psi_tight_suite(100, 901), sdtest::psi_strict_suite(100, 902),
                        sdtest::psi_dlvp_suite(100, 0.5, 903)});
       }},
      {10, "flows (enumeration, strictness, rescaling)",
       [] {
         return all_of({sdtest::flow_finite_enumeration(100, 1001),
                        sdtest::flow_functional_strictness(Order::st, 1000, 1002),
                        sdtest::flow_functional_strictness(Order::icv, 1000, 1003),
                        sdtest::flow_functional_strictness(Order::icx, 1000, 1004), sdtest::flow_rescaling(200, 1005)});
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Report r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    if (c.time_limit > 0.0 && elapsed >= c.time_limit) r.fail("took " + std::to_string(elapsed) + " s");
    const bool ok = r.ok();
    failed += ok ? 0 : 1;
    std::printf("[%s] %2d %s (%s; %.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), r.summary().c_str(),
                elapsed);
    std::fflush(stdout);
  }
  const double total = seconds_since(start);
  const bool in_time = total < 300.0;
  failed += in_time ? 0 : 1;
  std::printf("[%s] 11 full suite under 5 minutes (%.2f s)\n", in_time ? "PASS" : "FAIL", total);
  return failed == 0 ? 0 : 1;
}
