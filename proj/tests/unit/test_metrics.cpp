#include "doctest.h"
#include "properties.hpp"
#include "sdlattice/error.hpp"

using namespace sdlattice;

TEST_CASE("distances between point masses") {
  const auto a = DiscreteDistribution::dirac(0.0);
  const auto b = DiscreteDistribution::dirac(3.0);
  CHECK(wasserstein1(a, b) == doctest::Approx(3.0));
  CHECK(kolmogorov(a, b) == doctest::Approx(1.0));
  CHECK(levy(a, b) == doctest::Approx(1.0).epsilon(1e-9));
  const auto c = DiscreteDistribution::dirac(0.25);
  CHECK(levy(a, c) == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("distances for a two-point law") {
  const auto mu = make_discrete({{0.0, 0.5}, {2.0, 0.5}});
  const auto nu = DiscreteDistribution::dirac(1.5);
  CHECK(wasserstein1(mu, nu) == doctest::Approx(1.0));
  CHECK(kolmogorov(mu, nu) == doctest::Approx(0.5));
  CHECK(levy(mu, nu) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("metric properties") {
  for (const auto& r : {sdtest::w1_sorted_oracle(40, 200, 51), sdtest::metric_axioms(200, 52),
                        sdtest::levy_dirac_sequence(100)}) {
    CHECK_MESSAGE(r.ok(), r.summary());
  }
}

TEST_CASE("monotone approximation converges") {
  const auto dirac = sdtest::monotone_dirac_convergence();
  CHECK_MESSAGE(dirac.ok(), dirac.summary());
  const auto icx = sdtest::icx_monotone_convergence(5, 53);
  CHECK_MESSAGE(icx.ok(), icx.summary());
}

TEST_CASE("monotone approximation of a finite family reaches its extremum") {
  sdtest::Gen g(54);
  for (Order o : {Order::st, Order::icv, Order::icx}) {
    for (Direction d : {Direction::sup, Direction::inf}) {
      std::vector<DiscreteDistribution> fam;
      for (int k = 0; k < 6; ++k) fam.push_back(sdtest::distribution(g));
      const auto res = monotone_sup_approx(enumerate(fam), o, d, 0.0);
      CHECK(res.converged);
      CHECK(res.consumed == fam.size());
      CHECK(approx_equal(res.limit, extremum(fam, o, d), 1e-9));
    }
  }
}

TEST_CASE("monotone approximation rejects bad input") {
  const auto fam = enumerate(std::vector<DiscreteDistribution>{DiscreteDistribution::dirac(0.0)});
  CHECK_THROWS_AS(monotone_sup_approx(fam, Order::cx), ContractError);
  CHECK_THROWS_AS(monotone_sup_approx(enumerate(std::vector<DiscreteDistribution>{}), Order::st), ContractError);

  auto liar = enumerate(std::vector<DiscreteDistribution>{DiscreteDistribution::dirac(0.0), DiscreteDistribution::dirac(1.0)});
  liar.dominator = [](const DiscreteDistribution&, const DiscreteDistribution&) {
    return std::optional<DiscreteDistribution>(DiscreteDistribution::dirac(0.5));
  };
  CHECK_THROWS_AS(monotone_sup_approx(liar, Order::st), DomainError);

  auto unbounded = enumerate(std::vector<DiscreteDistribution>{DiscreteDistribution::dirac(0.0), DiscreteDistribution::dirac(1.0)});
  unbounded.dominator = [](const DiscreteDistribution&, const DiscreteDistribution&) {
    return std::optional<DiscreteDistribution>();
  };
  CHECK_THROWS_AS(monotone_sup_approx(unbounded, Order::st), DomainError);
}

TEST_CASE("step budget stops an unbounded family") {
  auto fam = generate_family<DiscreteDistribution>(
      [](std::size_t n) { return DiscreteDistribution::dirac(static_cast<double>(n)); });
  const auto res = monotone_sup_approx(fam, Order::st, Direction::sup, 1e-8, 50);
  CHECK_FALSE(res.converged);
  CHECK(res.consumed == 50);
}
