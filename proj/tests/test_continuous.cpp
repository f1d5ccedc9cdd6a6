#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "sargame/continuous.hpp"

using namespace sargame;

TEST_CASE("continuous adaptive closed form") {
  auto s1 = continuous_adaptive_solution(ContinuousGame(1, 0.25));
  CHECK(s1.value == Catch::Approx(0.5).epsilon(1e-15));
  CHECK(s1.hider_points == std::vector<double>{0.5});
  CHECK(s1.searcher_rule_count == 2);

  auto s2 = continuous_adaptive_solution(ContinuousGame(2, 0.5));
  CHECK(s2.value == Catch::Approx(std::pow(0.5, 2.0 / 3.0)).epsilon(1e-15));
  CHECK(s2.value == Catch::Approx(0.62996052494743658).epsilon(1e-14));
  REQUIRE(s2.hider_points.size() == 2);
  CHECK(s2.hider_points[0] == Catch::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(s2.hider_points[1] == Catch::Approx(2.0 / 3.0).epsilon(1e-15));

  CHECK_THROWS_AS(ContinuousGame(0, 0.5), invalid_instance_error);
  CHECK_THROWS_AS(ContinuousGame(1, 1.0), invalid_instance_error);
}

TEST_CASE("placement payoff against the uniform adaptive mix") {
  ContinuousGame g(1, 0.25);
  CHECK(adaptive_pure_payoff(g, CirclePlacement{{0.9}}) ==
        Catch::Approx(0.57886257602269138).epsilon(1e-14));
  // the equally spaced placement attains the value exactly
  CHECK(adaptive_pure_payoff(g, CirclePlacement{{0.5}}) ==
        Catch::Approx(0.5).epsilon(1e-14));

  ContinuousGame g2(2, 0.5);
  CHECK(adaptive_pure_payoff(g2, CirclePlacement{{1.0 / 3, 2.0 / 3}}) ==
        Catch::Approx(std::pow(0.5, 2.0 / 3.0)).epsilon(1e-14));

  CHECK_THROWS_AS(adaptive_pure_payoff(g2, CirclePlacement{{0.5}}), invalid_strategy_error);
  CHECK_THROWS_AS(adaptive_pure_payoff(g2, CirclePlacement{{0.6, 0.4}}), invalid_strategy_error);
}

TEST_CASE("every placement pays at least the adaptive value") {
  // convexity of t -> p^t makes the balanced split the unique minimum
  for (int k : {1, 2, 3})
    for (double p : {0.1, 0.5, 0.9}) {
      ContinuousGame g(k, p);
      const double v = continuous_adaptive_solution(g).value;
      std::mt19937_64 rng(1234 + k);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> pts(k);
        for (double& x : pts) x = 1e-9 + (1.0 - 2e-9) * u(rng);
        std::sort(pts.begin(), pts.end());
        bool distinct = true;
        for (int i = 1; i < k; ++i)
          if (pts[i] <= pts[i - 1]) distinct = false;
        if (!distinct) continue;
        CHECK(adaptive_pure_payoff(g, CirclePlacement{pts}) >= v - 1e-12);
      }
    }
}

TEST_CASE("split-search payoff") {
  ContinuousGame g(1, 0.5);
  CHECK(searcher_star_payoff(g, CirclePlacement{{0.3}}) ==
        Catch::Approx(0.71391230151434691).epsilon(1e-14));
  // symmetric placement: both directions equivalent
  CHECK(searcher_star_payoff(g, CirclePlacement{{0.5}}) ==
        Catch::Approx(std::pow(0.5, 0.5)).epsilon(1e-14));

  // s* guarantees the lower bound against arbitrary placements
  for (int k : {1, 2, 3})
    for (double p : {0.1, 0.5, 0.9}) {
      ContinuousGame gk(k, p);
      const double floor = std::pow(p, 1.0 - 1.0 / (2.0 * k));
      std::mt19937_64 rng(99 + k);
      std::uniform_real_distribution<double> u(1e-6, 1.0 - 1e-6);
      for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> pts(k);
        for (double& x : pts) x = u(rng);
        std::sort(pts.begin(), pts.end());
        bool distinct = true;
        for (int i = 1; i < k; ++i)
          if (pts[i] <= pts[i - 1]) distinct = false;
        if (!distinct) continue;
        CHECK(searcher_star_payoff(gk, CirclePlacement{pts}) >= floor - 1e-12);
      }
    }
}

TEST_CASE("value bounds") {
  auto b = continuous_bounds(ContinuousGame(2, 0.5));
  CHECK(b.lower == Catch::Approx(0.59460355750136051).epsilon(1e-14));
  CHECK(b.upper == Catch::Approx(0.59758385230461568).epsilon(1e-14));
  CHECK(b.gap == Catch::Approx(0.0029802948032552).margin(1e-13));
  CHECK(b.ratio == Catch::Approx(b.upper / b.lower).epsilon(1e-14));

  CHECK(continuous_bounds(ContinuousGame(1, 0.5)).upper ==
        Catch::Approx(0.72134752044448169).epsilon(1e-14));

  // ordering holds across the parameter range
  for (int k : {1, 2, 5, 20})
    for (int i = 1; i < 100; ++i) {
      auto bb = continuous_bounds(ContinuousGame(k, i / 100.0));
      CHECK(bb.lower <= bb.upper + 1e-15);
      CHECK(bb.lower <= std::pow(bb.upper / bb.lower, 0.0) * bb.upper);  // sanity
    }
}

TEST_CASE("maximum bound gap") {
  auto [p2, g2] = max_bound_gap(2);
  CHECK(p2 == Catch::Approx(0.065308723).margin(1e-6));
  CHECK(g2 == Catch::Approx(0.0102552299).margin(1e-9));

  auto [p3, g3] = max_bound_gap(3);
  CHECK(g3 == Catch::Approx(0.0036381585).margin(1e-8));

  // the k = 1 bounds are loose: the worst-case gap is large and sits near 0
  auto [p1, g1] = max_bound_gap(1);
  CHECK(p1 == Catch::Approx(0.0042623975).margin(1e-5));
  CHECK(g1 == Catch::Approx(0.1171518691).margin(1e-7));

  CHECK_THROWS_AS(max_bound_gap(0), invalid_instance_error);
}

TEST_CASE("bound ratio monotonicity") {
  CHECK(ratio_derivative_numerator(2, 0.5) == Catch::Approx(-0.71053913874402700).epsilon(1e-13));

  for (int k : {1, 2, 5}) {
    std::vector<double> grid;
    for (int i = 1; i < 100; ++i) grid.push_back(i / 100.0);
    auto rep = ratio_monotonicity_check(k, grid);
    CHECK(rep.ratio_strictly_decreasing);
    CHECK(rep.derivative_numerator_negative);
    CHECK(rep.worst_ratio_step < 0.0);
    CHECK(rep.worst_numerator < 0.0);
  }

  // the ratio tends to 1 as p -> 1
  CHECK(bound_ratio(2, 0.999) == Catch::Approx(1.0).margin(1e-4));
  CHECK_THROWS_AS(ratio_monotonicity_check(2, std::vector<double>{0.5}), invalid_instance_error);
}

TEST_CASE("star-vs-star Monte Carlo stays within the bounds") {
  for (int k : {1, 2, 3}) {
    ContinuousGame g(k, 0.5);
    auto b = continuous_bounds(g);
    auto est = star_vs_star_monte_carlo(g, 20000, 42);
    CHECK(est.mean >= b.lower - 3 * est.std_error - 1e-9);
    CHECK(est.mean <= b.upper + 3 * est.std_error + 1e-9);
    // determinism under a fixed seed
    auto again = star_vs_star_monte_carlo(g, 20000, 42);
    CHECK(est.mean == again.mean);
  }
}
