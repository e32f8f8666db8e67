#include "doctest.h"
#include "properties.hpp"
#include "sdlattice/error.hpp"

using namespace sdlattice;

namespace {

const auto kMu = make_discrete({{0.0, 0.5}, {2.0, 0.5}});
const auto kNu = DiscreteDistribution::dirac(1.5);

}  // namespace

TEST_CASE("st join and meet of a two-point law and a point mass") {
  CHECK(approx_equal(join_st(kMu, kNu), make_discrete({{1.5, 0.5}, {2.0, 0.5}})));
  CHECK(approx_equal(meet_st(kMu, kNu), make_discrete({{0.0, 0.5}, {1.5, 0.5}})));
}

TEST_CASE("st comparison reports the smallest violating point") {
  const auto w = leq_st(kMu, kNu);
  CHECK_FALSE(w.holds);
  REQUIRE(w.witness);
  CHECK(*w.witness == doctest::Approx(1.5));
  CHECK(kMu.survival(*w.witness) > kNu.survival(*w.witness));
  CHECK(leq_st(kNu, kMu).holds == false);
  CHECK(leq_st(meet_st(kMu, kNu), join_st(kMu, kNu)).holds);
}

TEST_CASE("st lattice agrees with the quantile construction") {
  sdtest::Gen g(21);
  for (int i = 0; i < 300; ++i) {
    const auto a = sdtest::distribution(g);
    const auto b = sdtest::distribution(g);
    CHECK(approx_equal(join_st(a, b), sdtest::st_join_by_quantiles(a, b), 1e-9));
    CHECK(approx_equal(meet_st(a, b), sdtest::st_meet_by_quantiles(a, b), 1e-9));
  }
}

TEST_CASE("st family extrema") {
  const std::vector<DiscreteDistribution> fam{kMu, kNu, DiscreteDistribution::dirac(-1.0)};
  CHECK(approx_equal(sup_st(fam), join_st(join_st(fam[0], fam[1]), fam[2])));
  CHECK(approx_equal(inf_st(fam), DiscreteDistribution::dirac(-1.0)));
  CHECK_THROWS_AS(sup_st(std::vector<DiscreteDistribution>{}), ContractError);
}

TEST_CASE("st functional is strictly monotone on ordered distinct pairs") {
  sdtest::Gen g(22);
  for (int i = 0; i < 200; ++i) {
    const auto a = sdtest::distribution(g, 8, {-5.0, 5.0});
    const auto b = sdtest::shifted(sdtest::quantile_bound(g, a, a, true, 1.0), 0.01);
    REQUIRE(leq_st(a, b).holds);
    CHECK(st_functional(a) < st_functional(b));
  }
}

TEST_CASE("st lattice properties on random triples") {
  const auto laws = sdtest::lattice_laws(Order::st, 150, 23);
  CHECK_MESSAGE(laws.ok(), laws.summary());
  const auto bounds = sdtest::bound_laws(Order::st, 150, 24);
  CHECK_MESSAGE(bounds.ok(), bounds.summary());
  const auto verdicts = sdtest::verdicts_match_oracle(Order::st, 300, 25);
  CHECK_MESSAGE(verdicts.ok(), verdicts.summary());
}

TEST_CASE("st join and meet survivals match the pointwise extrema on a grid") {
  sdtest::Gen g(26);
  for (int i = 0; i < 100; ++i) {
    const auto a = sdtest::distribution(g);
    const auto b = sdtest::distribution(g);
    const auto j = join_st(a, b);
    const auto m = meet_st(a, b);
    const auto grid = sdtest::oracle::dense_grid(std::min(a.min(), b.min()) - 1.0, std::max(a.max(), b.max()) + 1.0,
                                                 0.01, sdtest::oracle::probe_points({&a, &b}));
    for (double s : grid) {
      const double sa = sdtest::oracle::survival(a, s), sb = sdtest::oracle::survival(b, s);
      CHECK(std::abs(sdtest::oracle::survival(j, s) - std::max(sa, sb)) <= 1e-12);
      CHECK(std::abs(sdtest::oracle::survival(m, s) - std::min(sa, sb)) <= 1e-12);
    }
  }
}
