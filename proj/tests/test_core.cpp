#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "sargame/core.hpp"

using namespace sargame;

namespace {

std::vector<std::vector<int>> orders_of(const std::vector<ExpandingSearch>& ss) {
  std::vector<std::vector<int>> out;
  for (const auto& s : ss) out.push_back(s.order);
  return out;
}

bool prefix_is_root_arc(int n, const std::vector<int>& order, int len) {
  // searched set {0} + order[0..len) must be contiguous on the cycle 0..n
  std::set<int> searched{0};
  for (int i = 0; i < len; ++i) searched.insert(order[i]);
  int boundary_edges = 0;
  for (int v = 0; v <= n; ++v) {
    const int next = (v + 1) % (n + 1);
    if (searched.count(v) != searched.count(next)) ++boundary_edges;
  }
  return boundary_edges <= 2;
}

}  // namespace

TEST_CASE("expanding search enumeration") {
  auto two = orders_of(enumerate_expanding_searches(2));
  CHECK(two == std::vector<std::vector<int>>{{1, 2}, {2, 1}});

  auto three = orders_of(enumerate_expanding_searches(3));
  std::set<std::vector<int>> got(three.begin(), three.end());
  CHECK(got == std::set<std::vector<int>>{{1, 2, 3}, {1, 3, 2}, {3, 1, 2}, {3, 2, 1}});

  CHECK(enumerate_expanding_searches(10).size() == 512);
  CHECK_THROWS_AS(enumerate_expanding_searches(1), invalid_instance_error);
}

TEST_CASE("enumeration count and distinctness up to n = 16") {
  for (int n = 2; n <= 16; ++n) {
    auto all = enumerate_expanding_searches(n);
    std::set<std::vector<int>> distinct;
    for (const auto& s : all) distinct.insert(s.order);
    CHECK(distinct.size() == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("every prefix of an enumerated search is a root arc") {
  for (int n = 2; n <= 12; ++n)
    for (const auto& s : enumerate_expanding_searches(n))
      for (int len = 1; len <= n; ++len)
        REQUIRE(prefix_is_root_arc(n, s.order, len));
}

TEST_CASE("order and move string are mutually derivable") {
  for (int n : {3, 5, 8}) {
    for (const auto& s : enumerate_expanding_searches(n)) {
      CHECK(search_from_order(n, s.order).moves == s.moves);
      CHECK(search_from_moves(n, s.moves).order == s.order);
    }
  }
  CHECK_THROWS_AS(search_from_order(4, std::vector<int>{2, 1, 3, 4}), invalid_strategy_error);
}

TEST_CASE("single-target payoff") {
  CycleGame half(3, 0.5, 1);
  auto cw = clockwise_search(3);
  CHECK(payoff(half, HiderPlacement::single(2), cw) == Catch::Approx(0.25).epsilon(1e-15));

  CycleGame g(3, std::vector<double>{0.9, 0.5, 0.9}, 1);
  CHECK(payoff(g, HiderPlacement::single(2), anticlockwise_search(3)) ==
        Catch::Approx(0.45).epsilon(1e-15));

  CHECK_THROWS_AS(payoff(half, HiderPlacement::single(4), cw), invalid_strategy_error);
  CHECK_THROWS_AS(payoff(half, HiderPlacement::single(0), cw), invalid_strategy_error);
}

TEST_CASE("multi-target payoff stops at the last target") {
  CycleGame g(4, 0.5, 2);
  CHECK(payoff(g, HiderPlacement{{1, 3}}, clockwise_search(4)) ==
        Catch::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("payoff is non-increasing in the target position") {
  CycleGame g(6, std::vector<double>{0.3, 0.8, 0.55, 0.9, 0.2, 0.7}, 1);
  for (const auto& s : enumerate_expanding_searches(6)) {
    double prev = 1.0;
    for (int v : s.order) {
      const double cur = payoff(g, HiderPlacement::single(v), s);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("primed payoff") {
  CycleGame half(3, 0.5, 1);
  CHECK(payoff_prime(half, 2, clockwise_search(3)) ==
        Catch::Approx(0.5 * std::sqrt(0.5)).epsilon(1e-12));
  CHECK(payoff_prime(half, 1, clockwise_search(3)) ==
        Catch::Approx(std::sqrt(0.5)).epsilon(1e-12));

  CycleGame g(3, std::vector<double>{0.9, 0.5, 0.9}, 1);
  CHECK(payoff_prime(g, 2, anticlockwise_search(3)) ==
        Catch::Approx(0.9 * std::sqrt(0.5)).epsilon(1e-12));

  CycleGame two_targets(3, 0.5, 2);
  CHECK_THROWS_AS(payoff_prime(two_targets, 1, clockwise_search(3)), unsupported_error);
}

TEST_CASE("primed payoff times sqrt(p) recovers the payoff") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.05, 0.95);
  std::vector<double> p(6);
  for (double& x : p) x = dist(rng);
  CycleGame g(6, p, 1);
  for (const auto& s : enumerate_expanding_searches(6))
    for (int j = 1; j <= 6; ++j)
      CHECK(payoff_prime(g, j, s) * std::sqrt(p[j - 1]) ==
            Catch::Approx(payoff(g, HiderPlacement::single(j), s)).margin(1e-15));
}

TEST_CASE("mixed payoff") {
  CycleGame half(3, 0.5, 1);
  auto h = MixedStrategy<HiderPlacement>::point_mass(HiderPlacement::single(2));
  auto s = MixedStrategy<ExpandingSearch>{{{clockwise_search(3), 0.5}, {anticlockwise_search(3), 0.5}}};
  CHECK(mixed_payoff(half, h, s) == Catch::Approx(0.25).epsilon(1e-15));

  // degenerate mixture reduces to the pure payoff
  auto sp = MixedStrategy<ExpandingSearch>::point_mass(clockwise_search(3));
  CHECK(mixed_payoff(half, h, sp) ==
        Catch::Approx(payoff(half, HiderPlacement::single(2), clockwise_search(3))));

  CycleGame two(2, 0.5, 1);
  auto hu = MixedStrategy<HiderPlacement>{{{HiderPlacement::single(1), 0.5},
                                           {HiderPlacement::single(2), 0.5}}};
  auto su = MixedStrategy<ExpandingSearch>{{{clockwise_search(2), 0.5},
                                            {anticlockwise_search(2), 0.5}}};
  CHECK(mixed_payoff(two, hu, su) == Catch::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("mixed strategy validation") {
  MixedStrategy<HiderPlacement> bad_sum{{{HiderPlacement::single(1), 0.5}}};
  CHECK_THROWS_AS(bad_sum.validate(), invalid_strategy_error);

  MixedStrategy<HiderPlacement> dup{{{HiderPlacement::single(1), 0.5},
                                     {HiderPlacement::single(1), 0.5}}};
  CHECK_THROWS_AS(dup.validate(), invalid_strategy_error);

  MixedStrategy<HiderPlacement> negative{{{HiderPlacement::single(1), 1.5},
                                          {HiderPlacement::single(2), -0.5}}};
  CHECK_THROWS_AS(negative.validate(), invalid_strategy_error);
}

TEST_CASE("game construction rejects degenerate instances") {
  CHECK_THROWS_AS(CycleGame(1, 0.5, 1), invalid_instance_error);
  CHECK_THROWS_AS(CycleGame(3, 1.0, 1), invalid_instance_error);
  CHECK_THROWS_AS(CycleGame(3, 0.0, 1), invalid_instance_error);
  CHECK_THROWS_AS(CycleGame(3, 0.5, 0), invalid_instance_error);
  CHECK_THROWS_AS(CycleGame(3, 0.5, 4), invalid_instance_error);
  CHECK_THROWS_AS(CycleGame(3, std::vector<double>{0.5, 0.5}, 1), invalid_instance_error);
}
