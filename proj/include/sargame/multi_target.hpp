// Multi-target machinery: balanced placement families, their binomial counts,
// the adaptive equal-p solution, and the k = n-1 reduction to the
// unstructured game.

#pragma once

#include <cmath>

#include "sargame/core.hpp"
#include "sargame/single_target.hpp"
#include "sargame/solution.hpp"

namespace sargame {

// Consecutive gaps of a placement, with sentinels v_0 = 0 and v_{k+1} = n+1;
// k+1 gaps summing to n+1.
struct SpacingProfile {
  std::vector<int> gaps;

  int n() const {
    int total = 0;
    for (int g : gaps) total += g;
    return total - 1;
  }
  int k() const { return static_cast<int>(gaps.size()) - 1; }
};

inline SpacingProfile spacing_profile(const HiderPlacement& h, int n) {
  SpacingProfile out;
  int prev = 0;
  for (int v : h.vertices) {
    if (v <= prev || v > n)
      throw invalid_strategy_error("spacing_profile: invalid placement");
    out.gaps.push_back(v - prev);
    prev = v;
  }
  out.gaps.push_back(n + 1 - prev);
  return out;
}

// Expected payoff of a placement against the uniform mix over the adaptive
// rules sigma_0..sigma_k: (1/(k+1)) sum_j p^(n - gap_j + 1).
inline double adaptive_expected_payoff(const SpacingProfile& profile, double p) {
  const int n = profile.n();
  double total = 0.0;
  for (int gap : profile.gaps) {
    if (gap < 1) throw invalid_strategy_error("adaptive_expected_payoff: gap below 1");
    total += std::pow(p, n - gap + 1);
  }
  return total / static_cast<double>(profile.gaps.size());
}

// The balanced placements: every gap equals floor((n+1)/(k+1)) or its
// ceiling. The minus/plus split is by the first gap.
struct PlacementFamily {
  std::vector<HiderPlacement> members;
  long s = 0;        // |family|
  long s_minus = 0;  // first gap = floor
  long s_plus = 0;   // first gap = ceil
};

inline PlacementFamily enumerate_snk(int n, int k) {
  if (k < 1 || k > n) throw invalid_instance_error("enumerate_snk: k out of range");
  const int lo = (n + 1) / (k + 1), hi = (n + 1 + k) / (k + 1);
  PlacementFamily fam;
  std::vector<int> vertices;
  // choose k+1 gaps from {lo, hi} summing to n+1; the last gap closes the
  // ring without placing a vertex
  auto rec = [&](auto&& self, int slot, int pos) -> void {
    if (slot == k) {
      const int closing = n + 1 - pos;
      if (closing == lo || closing == hi) {
        fam.members.push_back(HiderPlacement{vertices});
        ++fam.s;
        if (vertices.front() == lo) ++fam.s_minus;
        if (vertices.front() == hi) ++fam.s_plus;
      }
      return;
    }
    for (int gap = lo; gap <= hi; ++gap) {
      if (pos + gap > n) continue;
      vertices.push_back(pos + gap);
      self(self, slot + 1, pos + gap);
      vertices.pop_back();
    }
  };
  rec(rec, 0, 0);
  if (lo == hi) fam.s_minus = fam.s_plus = fam.s;  // singleton family
  return fam;
}

inline long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long result = 1;
  for (int i = 0; i < r; ++i) result = result * (n - i) / (i + 1);
  return result;
}

struct SnkCounts {
  long s = 0;
  long s_minus = 0;
  long s_plus = 0;
};

// Closed-form counts via the decomposition n = a(k+1) + b, 0 <= b <= k.
inline SnkCounts count_snk(int n, int k) {
  if (k < 1 || k > n) throw invalid_instance_error("count_snk: k out of range");
  const int a = n / (k + 1), b = n % (k + 1);
  if (a < 1) throw invalid_instance_error("count_snk: requires a >= 1 in n = a(k+1)+b");
  SnkCounts c;
  c.s = binomial(k + 1, b + 1);
  if (b == k) {
    c.s_minus = c.s_plus = c.s;  // singleton family, floor = ceil
  } else {
    c.s_minus = binomial(k, b + 1);
    c.s_plus = binomial(k, b);
  }
  return c;
}

// Adaptive equal-p value and optimal mixes: searcher uniform over the k+1
// switching rules, hider uniform over the balanced placements.
inline GameSolution adaptive_solution(int n, int k, double p) {
  if (n < 2 || k < 1 || k > n) throw invalid_instance_error("adaptive_solution: bad instance");
  if (!(p > 0.0 && p < 1.0))
    throw invalid_instance_error("adaptive_solution: p must lie in (0,1)");
  const int a = n / (k + 1), b = n % (k + 1);
  GameSolution sol;
  sol.method = Method::Adaptive;
  sol.value = (static_cast<double>(k - b) / (k + 1)) * std::pow(p, n - a + 1) +
              (static_cast<double>(b + 1) / (k + 1)) * std::pow(p, n - a);
  std::vector<AdaptiveRule> rules;
  for (int j = 0; j <= k; ++j) rules.push_back(AdaptiveRule{j});
  sol.searcher_rules = MixedStrategy<AdaptiveRule>::uniform(std::move(rules));
  sol.hider = MixedStrategy<HiderPlacement>::uniform(enumerate_snk(n, k).members);
  return sol;
}

inline GameSolution adaptive_solution(const CycleGame& g) {
  if (!g.equal_p())
    throw wrong_solver_error("adaptive_solution: requires equal success probabilities");
  return adaptive_solution(g.n, g.k, g.p.front());
}

// k = n-1: the search order is determined by the final vertex alone, so the
// cycle imposes no constraint and the unstructured solution applies. The
// searcher strategy is materialized as concrete expanding searches ending at
// each candidate final vertex.
inline GameSolution k_equals_n_minus_1_solution(const CycleGame& g) {
  if (g.k != g.n - 1)
    throw wrong_solver_error("k_equals_n_minus_1_solution: requires k = n-1");
  GameSolution sol = unstructured_solution(g.p, g.k);
  sol.method = Method::KReduction;

  // final vertex v is chosen with the weight of the first-subset {1..n}\{v}
  sol.searcher.support.clear();
  for (const auto& [subset, weight] : sol.searcher_first_subset.support) {
    int final_vertex = 0;
    for (int v = 1, idx = 0; v <= g.n; ++v) {
      if (idx < g.k && subset.vertices[idx] == v)
        ++idx;
      else
        final_vertex = v;
    }
    std::vector<int> order;
    for (int v = 1; v < final_vertex; ++v) order.push_back(v);
    for (int v = g.n; v > final_vertex; --v) order.push_back(v);
    order.push_back(final_vertex);
    sol.searcher.support.emplace_back(search_from_order(g.n, std::move(order)), weight);
  }
  return sol;
}

}  // namespace sargame
