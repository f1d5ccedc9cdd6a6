// Core types for the search-and-rescue game on cycle graphs: game instances,
// expanding searches, hider placements, mixed strategies and the payoff
// functions P and P'.
//
// The cycle C_n has vertices {0,1,...,n} with vertex 0 as the root. The root
// always survives (p_0 = 1), is searched first by construction, and never
// hosts a target, so it is kept implicit: instances store only p_1..p_n.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sargame {

// Error taxonomy. Everything derives from std::runtime_error so callers can
// catch coarsely or finely.
struct invalid_instance_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_strategy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct wrong_solver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct instance_too_large_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct solver_failure_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A game instance: ring size n, survival probabilities p_1..p_n (each strictly
// inside (0,1)), and target count k with 1 <= k <= n.
struct CycleGame {
  int n = 0;
  std::vector<double> p;
  int k = 1;

  CycleGame(int n_, std::vector<double> p_, int k_) : n(n_), p(std::move(p_)), k(k_) {
    if (n < 2) throw invalid_instance_error("CycleGame: n must be at least 2");
    if (static_cast<int>(p.size()) != n)
      throw invalid_instance_error("CycleGame: p must have exactly n entries");
    for (double pi : p)
      if (!(pi > 0.0 && pi < 1.0))
        throw invalid_instance_error("CycleGame: probabilities must lie strictly in (0,1)");
    if (k < 1 || k > n) throw invalid_instance_error("CycleGame: k must satisfy 1 <= k <= n");
  }

  CycleGame(int n_, double p_, int k_) : CycleGame(n_, std::vector<double>(n_, p_), k_) {}

  bool equal_p() const {
    for (double pi : p)
      if (pi != p.front()) return false;
    return true;
  }
};

// A non-adaptive searcher pure strategy. The searched set after any prefix is
// an arc of the cycle containing the root, so the search is equivalently a
// move string over {C,A}: C extends the clockwise end of the arc, A the
// anticlockwise end. Canonical form: the final move (where both ends coincide)
// is written C.
struct ExpandingSearch {
  std::vector<int> order;  // order[j] = (j+1)-th vertex searched, 1-based vertices
  std::string moves;       // length n over {C,A}

  bool operator==(const ExpandingSearch& o) const { return order == o.order; }
};

inline ExpandingSearch search_from_moves(int n, std::string moves) {
  if (n < 2) throw invalid_instance_error("search_from_moves: n must be at least 2");
  if (static_cast<int>(moves.size()) != n)
    throw invalid_strategy_error("search_from_moves: move string must have length n");
  ExpandingSearch s;
  s.order.reserve(n);
  int cw = 1, acw = n;
  for (char m : moves) {
    if (cw > acw) throw invalid_strategy_error("search_from_moves: ran past the far end");
    if (m == 'C')
      s.order.push_back(cw++);
    else if (m == 'A')
      s.order.push_back(acw--);
    else
      throw invalid_strategy_error("search_from_moves: moves must be over {C,A}");
  }
  if (moves.back() == 'A') moves.back() = 'C';  // canonical final move
  s.moves = std::move(moves);
  return s;
}

inline ExpandingSearch search_from_order(int n, std::vector<int> order) {
  if (static_cast<int>(order.size()) != n)
    throw invalid_strategy_error("search_from_order: order must be a permutation of 1..n");
  std::string moves;
  moves.reserve(n);
  int cw = 1, acw = n;
  for (int v : order) {
    if (v == cw && cw <= acw)
      moves.push_back('C'), ++cw;
    else if (v == acw && cw <= acw)
      moves.push_back('A'), --acw;
    else
      throw invalid_strategy_error("search_from_order: prefix is not a root arc");
  }
  moves.back() = 'C';
  return ExpandingSearch{std::move(order), std::move(moves)};
}

inline ExpandingSearch clockwise_search(int n) {
  return search_from_moves(n, std::string(n, 'C'));
}

inline ExpandingSearch anticlockwise_search(int n) {
  std::string m(n, 'A');
  return search_from_moves(n, std::move(m));
}

// All canonical expanding searches of C_n: one per choice of the first n-1
// moves, 2^(n-1) in total.
inline std::vector<ExpandingSearch> enumerate_expanding_searches(int n) {
  if (n < 2) throw invalid_instance_error("enumerate_expanding_searches: n must be at least 2");
  if (n > 30) throw instance_too_large_error("enumerate_expanding_searches: n too large");
  std::vector<ExpandingSearch> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
    std::string moves(n, 'C');
    for (int i = 0; i < n - 1; ++i)
      if (mask >> i & 1) moves[i] = 'A';
    out.push_back(search_from_moves(n, std::move(moves)));
  }
  return out;
}

// A hider pure strategy: a strictly increasing k-tuple of ring vertices.
struct HiderPlacement {
  std::vector<int> vertices;

  bool operator==(const HiderPlacement& o) const { return vertices == o.vertices; }
  static HiderPlacement single(int v) { return HiderPlacement{{v}}; }
};

inline void validate_placement(const CycleGame& g, const HiderPlacement& h) {
  if (static_cast<int>(h.vertices.size()) != g.k)
    throw invalid_strategy_error("placement: must contain exactly k vertices");
  int prev = 0;
  for (int v : h.vertices) {
    if (v <= prev || v > g.n)
      throw invalid_strategy_error("placement: vertices must be strictly increasing in 1..n");
    prev = v;
  }
}

// All k-subsets of {1..n} in lexicographic order.
inline std::vector<HiderPlacement> enumerate_placements(int n, int k) {
  std::vector<HiderPlacement> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(HiderPlacement{cur});
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// P(H, sigma): product of survival probabilities of all vertices searched up
// to and including the last target.
inline double payoff(const CycleGame& g, const HiderPlacement& h, const ExpandingSearch& sigma) {
  validate_placement(g, h);
  if (static_cast<int>(sigma.order.size()) != g.n)
    throw invalid_strategy_error("payoff: search inconsistent with game size");
  int remaining = g.k;
  double prod = 1.0;
  for (int v : sigma.order) {
    prod *= g.p[v - 1];
    if (std::binary_search(h.vertices.begin(), h.vertices.end(), v)) --remaining;
    if (remaining == 0) return prod;
  }
  throw invalid_strategy_error("payoff: search never covers the placement");
}

// P'(j, sigma) = P({j}, sigma) / sqrt(p_j). Defined for the single-target
// auxiliary game only.
inline double payoff_prime(const CycleGame& g, int j, const ExpandingSearch& sigma) {
  if (g.k != 1) throw unsupported_error("payoff_prime: defined only for k = 1");
  return payoff(g, HiderPlacement::single(j), sigma) / std::sqrt(g.p[j - 1]);
}

// A finitely supported distribution over pure strategies.
template <class Pure>
struct MixedStrategy {
  std::vector<std::pair<Pure, double>> support;

  void validate() const {
    double total = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (support[i].second < 0.0)
        throw invalid_strategy_error("mixed strategy: negative probability");
      total += support[i].second;
      for (std::size_t j = i + 1; j < support.size(); ++j)
        if (support[i].first == support[j].first)
          throw invalid_strategy_error("mixed strategy: duplicate support entry");
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw invalid_strategy_error("mixed strategy: probabilities must sum to 1");
  }

  static MixedStrategy point_mass(Pure s) { return MixedStrategy{{{std::move(s), 1.0}}}; }

  static MixedStrategy uniform(std::vector<Pure> pures) {
    MixedStrategy m;
    const double w = 1.0 / static_cast<double>(pures.size());
    for (auto& s : pures) m.support.emplace_back(std::move(s), w);
    return m;
  }
};

// Expected payoff of a mixed hider strategy against a mixed searcher strategy.
inline double mixed_payoff(const CycleGame& g, const MixedStrategy<HiderPlacement>& h,
                           const MixedStrategy<ExpandingSearch>& s) {
  h.validate();
  s.validate();
  double total = 0.0;
  for (const auto& [hp, hw] : h.support)
    for (const auto& [sp, sw] : s.support) total += hw * sw * payoff(g, hp, sp);
  return total;
}

}  // namespace sargame
