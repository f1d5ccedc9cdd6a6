// Closed-form solutions for the single-target game: the unstructured game,
// equal-p cycles, the two-point solution under the cross-ratio condition, the
// full n = 3 solution, and the sqrt-weighted auxiliary game with its
// alpha-approximation guarantee.

#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "sargame/core.hpp"
#include "sargame/matrix.hpp"
#include "sargame/solution.hpp"

namespace sargame {

// Prefix/suffix products of the survival probabilities, 1-based with
// sentinels pi[n+1] = 0 and bar[n+1] = 1 so the boundary-index comparisons are
// always well formed. The primed variants replace the boundary factor by its
// square root.
struct PrefixProducts {
  int n = 0;
  std::vector<double> pi;    // pi[j]  = p_1 ... p_j
  std::vector<double> bar;   // bar[j] = p_j ... p_n
  std::vector<double> pip;   // pip[j]  = p_1 ... p_{j-1} sqrt(p_j)
  std::vector<double> barp;  // barp[j] = sqrt(p_j) p_{j+1} ... p_n
};

inline PrefixProducts prefix_products(const std::vector<double>& p) {
  const int n = static_cast<int>(p.size());
  PrefixProducts pp;
  pp.n = n;
  pp.pi.assign(n + 2, 0.0);
  pp.bar.assign(n + 2, 0.0);
  pp.pip.assign(n + 2, 0.0);
  pp.barp.assign(n + 2, 0.0);
  pp.pi[0] = 1.0;
  for (int j = 1; j <= n; ++j) {
    pp.pi[j] = pp.pi[j - 1] * p[j - 1];
    pp.pip[j] = pp.pi[j - 1] * std::sqrt(p[j - 1]);
  }
  pp.bar[n + 1] = 1.0;
  for (int j = n; j >= 1; --j) {
    pp.bar[j] = pp.bar[j + 1] * p[j - 1];
    pp.barp[j] = pp.bar[j + 1] * std::sqrt(p[j - 1]);
  }
  pp.pi[n + 1] = 0.0;
  pp.barp[n + 1] = 1.0;
  pp.pip[n + 1] = 0.0;
  return pp;
}

// The unique j with pi_j >= bar_j and pi_{j+1} < bar_{j+1}.
inline int boundary_index(const PrefixProducts& pp) {
  for (int j = 1; j <= pp.n; ++j)
    if (pp.pi[j] >= pp.bar[j] && pp.pi[j + 1] < pp.bar[j + 1]) return j;
  throw solver_failure_error("boundary_index: no boundary found");
}

inline int gamma_prime_boundary_index(const PrefixProducts& pp) {
  for (int j = 1; j <= pp.n; ++j)
    if (pp.pip[j] >= pp.barp[j] && pp.pip[j + 1] < pp.barp[j + 1]) return j;
  throw solver_failure_error("gamma_prime_boundary_index: no boundary found");
}

// Cross-ratio condition at the boundary index, in cross-multiplied form. The
// linear form (pi_i - pi_j)(bar_{j+1} - bar_j) >= (pi_j - pi_{j+1})(bar_j - bar_i)
// is exactly the statement that the two-point searcher mix covers hider
// vertex i, so it is valid for every i without sign caveats.
inline bool condition1_holds(const PrefixProducts& pp, int j) {
  for (int i = 1; i <= pp.n; ++i) {
    if (i == j || i == j + 1) continue;
    const double lhs = (pp.pi[i] - pp.pi[j]) * (pp.bar[j + 1] - pp.bar[j]);
    const double rhs = (pp.pi[j] - pp.pi[j + 1]) * (pp.bar[j] - pp.bar[i]);
    if (!(lhs >= rhs - 1e-12)) return false;
  }
  return true;
}

// Value of the unstructured game (no graph constraint). The optimal hider
// weights every k-subset A proportionally to prod_{i in A} (1-p_i)/p_i; this
// mix equalizes over all search orders, so for k > 1 the value is its expected
// payoff against any fixed order.
inline GameSolution unstructured_solution(const std::vector<double>& p, int k) {
  const int n = static_cast<int>(p.size());
  if (n < 1) throw invalid_instance_error("unstructured_solution: empty p");
  for (double pi : p)
    if (!(pi > 0.0 && pi < 1.0))
      throw invalid_instance_error("unstructured_solution: probabilities must lie in (0,1)");
  if (k < 1 || k > n) throw invalid_instance_error("unstructured_solution: k out of range");

  auto subsets = enumerate_placements(n, k);
  if (subsets.size() > 100000)
    throw instance_too_large_error("unstructured_solution: C(n,k) exceeds 10^5");
  std::vector<double> w(subsets.size());
  double total = 0.0;
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    double wa = 1.0;
    for (int v : subsets[a].vertices) wa *= (1.0 - p[v - 1]) / p[v - 1];
    w[a] = wa;
    total += wa;
  }

  GameSolution sol;
  sol.method = k == 1 ? Method::Theorem1 : Method::Theorem1Derived;
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    sol.hider.support.emplace_back(subsets[a], w[a] / total);
    sol.searcher_first_subset.support.emplace_back(subsets[a], w[a] / total);
  }

  if (k == 1) {
    double prod = 1.0, recip = 0.0;
    for (double pi : p) {
      prod *= pi;
      recip += (1.0 - pi) / pi;
    }
    sol.value = (1.0 - prod) / recip;
  } else {
    // expected payoff of the hider optimum against the identity order
    std::vector<double> prefix(n + 1, 1.0);
    for (int j = 1; j <= n; ++j) prefix[j] = prefix[j - 1] * p[j - 1];
    double value = 0.0;
    for (std::size_t a = 0; a < subsets.size(); ++a)
      value += (w[a] / total) * prefix[subsets[a].vertices.back()];
    sol.value = value;
  }
  return sol;
}

// Ceiling on the cycle game's value: the hider optimum of the unstructured
// game is available on any graph.
inline double theorem1_upper_bound(const CycleGame& g) {
  return unstructured_solution(g.p, g.k).value;
}

// Equal-p cycle, one target: hider on the one or two middle vertices,
// searcher an even coin between the two full traversals.
inline GameSolution equal_p_solution(int n, double p) {
  if (n < 2) throw invalid_instance_error("equal_p_solution: n must be at least 2");
  if (!(p > 0.0 && p < 1.0))
    throw invalid_instance_error("equal_p_solution: p must lie in (0,1)");
  const int lo = (n + 1) / 2, hi = (n + 2) / 2;
  GameSolution sol;
  sol.method = Method::EqualP;
  sol.value = (std::pow(p, lo) + std::pow(p, hi)) / 2.0;
  if (lo == hi)
    sol.hider = MixedStrategy<HiderPlacement>::point_mass(HiderPlacement::single(lo));
  else
    sol.hider.support = {{HiderPlacement::single(lo), 0.5}, {HiderPlacement::single(hi), 0.5}};
  sol.searcher.support = {{clockwise_search(n), 0.5}, {anticlockwise_search(n), 0.5}};
  return sol;
}

inline GameSolution equal_p_solution(const CycleGame& g) {
  if (g.k != 1) throw wrong_solver_error("equal_p_solution: requires k = 1");
  if (!g.equal_p())
    throw wrong_solver_error("equal_p_solution: requires equal success probabilities");
  return equal_p_solution(g.n, g.p.front());
}

// Two-point solution under the cross-ratio condition: hider on {j, j+1},
// searcher mixing the two full traversals.
inline GameSolution two_point_solution(const CycleGame& g) {
  if (g.k != 1) throw wrong_solver_error("two_point_solution: requires k = 1");
  const PrefixProducts pp = prefix_products(g.p);
  const int j = boundary_index(pp);
  if (!condition1_holds(pp, j))
    throw wrong_solver_error("two_point_solution: cross-ratio condition fails");

  const double denom = pp.pi[j] - pp.pi[j + 1] + pp.bar[j + 1] - pp.bar[j];
  const double value = (pp.bar[j + 1] * pp.pi[j] - pp.pi[j + 1] * pp.bar[j]) / denom;
  const double q = (pp.bar[j + 1] - pp.pi[j + 1]) / denom;
  const double r = (pp.bar[j + 1] - pp.bar[j]) / denom;

  GameSolution sol;
  sol.method = Method::TwoPoint;
  sol.value = value;
  if (j == pp.n || q >= 1.0)
    sol.hider = MixedStrategy<HiderPlacement>::point_mass(HiderPlacement::single(j));
  else
    sol.hider.support = {{HiderPlacement::single(j), q}, {HiderPlacement::single(j + 1), 1.0 - q}};
  sol.searcher.support = {{clockwise_search(g.n), r}, {anticlockwise_search(g.n), 1.0 - r}};

  // the searcher mix must cover every hider vertex at the value
  for (int i = 1; i <= pp.n; ++i)
    if (r * pp.pi[i] + (1.0 - r) * pp.bar[i] < value - 1e-9)
      throw solver_failure_error("two_point_solution: coverage certificate violated");
  return sol;
}

namespace detail {

// 3x3 linear solve by Gaussian elimination with partial pivoting; returns
// false when the system is (near-)singular.
inline bool solve3(std::array<std::array<double, 3>, 3> a, std::array<double, 3> b,
                   std::array<double, 3>& x) {
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) < 1e-14) return false;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (int cc = c; cc < 3; ++cc) a[r][cc] -= f * a[c][cc];
      b[r] -= f * b[c];
    }
  }
  for (int c = 0; c < 3; ++c) x[c] = b[c] / a[c][c];
  return true;
}

}  // namespace detail

// Full n = 3, k = 1 solution. Orientation is normalized to p1 >= p3 before
// solving and mapped back afterwards. The case split is the cross-ratio
// condition itself, which for n = 3 reduces to
// (1-p2)^2 >= p2^2 (1-p1)(1-p3); note the square on p2.
// The case 2 searcher mix is computed by equalizing the expected payoff over
// the three hider vertices; the LP oracle is the fallback if that system is
// singular or leaves the simplex.
inline GameSolution n3_solution(double p1, double p2, double p3) {
  const bool reversed = p1 < p3;
  if (reversed) std::swap(p1, p3);
  const CycleGame g(3, std::vector<double>{p1, p2, p3}, 1);
  const PrefixProducts pp = prefix_products(g.p);
  const int j = boundary_index(pp);

  GameSolution sol;
  std::vector<std::pair<int, double>> hider;          // (vertex, prob) in normalized labels
  std::vector<std::pair<std::vector<int>, double>> searcher;  // (order, prob)

  if (condition1_holds(pp, j)) {
    sol.method = Method::N3Case1;
    sol.value = p1 * p2 * p3 * (1.0 - p2 * p3) / (p1 * p2 * (1.0 - p3) + p3 * (1.0 - p2));
    const double h2 = p3 * (1.0 - p1 * p2), h3 = p2 * (p1 - p3);
    hider = {{2, h2 / (h2 + h3)}};
    if (h3 > 0.0) hider.push_back({3, h3 / (h2 + h3)});
    const double sc = p3 * (1.0 - p2), sa = p1 * p2 * (1.0 - p3);
    searcher = {{{1, 2, 3}, sc / (sc + sa)}, {{3, 2, 1}, sa / (sc + sa)}};
  } else {
    sol.method = Method::N3Case2;
    double recip = 0.0;
    for (double p : g.p) recip += (1.0 - p) / p;
    sol.value = (1.0 - p1 * p2 * p3) / recip;
    for (int v = 1; v <= 3; ++v) hider.push_back({v, (1.0 - g.p[v - 1]) / g.p[v - 1] / recip});

    // equalize the searcher mix over orders {sigma^C, sigma^A, (1,3,2)}
    const std::array<std::vector<int>, 3> orders = {{{1, 2, 3}, {3, 2, 1}, {1, 3, 2}}};
    std::array<std::array<double, 3>, 3> m{};  // m[vertex][order]
    for (int o = 0; o < 3; ++o) {
      auto search = search_from_order(3, orders[o]);
      for (int v = 1; v <= 3; ++v)
        m[v - 1][o] = payoff(g, HiderPlacement::single(v), search);
    }
    std::array<double, 3> w{};
    bool ok = detail::solve3(m, {sol.value, sol.value, sol.value}, w);
    if (ok) {
      double total = 0.0;
      for (double& x : w) {
        if (x < -1e-9) ok = false;
        x = std::max(x, 0.0);
        total += x;
      }
      ok = ok && std::abs(total - 1.0) < 1e-9;
      if (ok)
        for (int o = 0; o < 3; ++o)
          if (w[o] / total > 0.0) searcher.push_back({orders[o], w[o] / total});
    }
    if (!ok) {
      auto built = build_discrete_game_matrix(g);
      auto oracle = solve_matrix_game(built.matrix);
      for (std::size_t i = 0; i < built.row_searches.size(); ++i)
        if (oracle.row_strategy[i] > 1e-12)
          searcher.push_back({built.row_searches[i].order, oracle.row_strategy[i]});
    }
  }

  auto map_vertex = [&](int v) { return reversed ? 4 - v : v; };
  for (auto& [v, prob] : hider)
    sol.hider.support.emplace_back(HiderPlacement::single(map_vertex(v)), prob);
  std::sort(sol.hider.support.begin(), sol.hider.support.end(),
            [](const auto& a, const auto& b) { return a.first.vertices < b.first.vertices; });
  for (auto& [order, prob] : searcher) {
    std::vector<int> mapped;
    for (int v : order) mapped.push_back(map_vertex(v));
    sol.searcher.support.emplace_back(search_from_order(3, std::move(mapped)), prob);
  }
  return sol;
}

inline GameSolution n3_solution(const CycleGame& g) {
  if (g.n != 3 || g.k != 1) throw wrong_solver_error("n3_solution: requires n = 3, k = 1");
  return n3_solution(g.p[0], g.p[1], g.p[2]);
}

// Solution of the auxiliary game with payoff P' = P / sqrt(p_hider). Both
// players need at most two pure strategies: the hider sits on the primed
// boundary pair, the searcher mixes the two full traversals.
inline GameSolution gamma_prime_solution(const CycleGame& g) {
  if (g.k != 1) throw wrong_solver_error("gamma_prime_solution: requires k = 1");
  const PrefixProducts pp = prefix_products(g.p);
  const int j = gamma_prime_boundary_index(pp);

  GameSolution sol;
  sol.method = Method::GammaPrime;
  double beta;  // probability on sigma^C
  if (std::abs(pp.pip[j] - pp.barp[j]) <= 1e-12) {
    sol.value = std::sqrt(pp.pi[g.n]);
    beta = 0.5;
    sol.hider = MixedStrategy<HiderPlacement>::point_mass(HiderPlacement::single(j));
  } else {
    const double a = pp.pip[j], b = pp.pip[j + 1];
    const double c = pp.barp[j], d = pp.barp[j + 1];
    const double denom = a - b - c + d;
    sol.value = (a * d - b * c) / denom;
    beta = (d - c) / denom;
    const double q = (d - b) / denom;
    sol.hider.support = {{HiderPlacement::single(j), q},
                         {HiderPlacement::single(j + 1), 1.0 - q}};
  }
  sol.searcher.support = {{clockwise_search(g.n), beta}, {anticlockwise_search(g.n), 1.0 - beta}};

  // convexity certificate: the traversal mix covers every hider vertex
  for (int i = 1; i <= g.n; ++i)
    if (beta * pp.pip[i] + (1.0 - beta) * pp.barp[i] < sol.value - 1e-12)
      throw solver_failure_error("gamma_prime_solution: coverage certificate violated");
  return sol;
}

// Auxiliary-game strategies replayed in the real game, with a certified
// payoff floor and ceiling a factor alpha apart.
inline GameSolution approx_solution(const CycleGame& g) {
  if (g.k != 1) throw wrong_solver_error("approx_solution: requires k = 1");
  GameSolution sol = gamma_prime_solution(g);
  const double v_prime = sol.value;
  const PrefixProducts pp = prefix_products(g.p);
  const int j = gamma_prime_boundary_index(pp);

  double min_sqrt = 1.0;
  for (double p : g.p) min_sqrt = std::min(min_sqrt, std::sqrt(p));
  const double boundary_sqrt =
      j < g.n ? std::max(std::sqrt(g.p[j - 1]), std::sqrt(g.p[j])) : std::sqrt(g.p[j - 1]);

  Guarantee guar{min_sqrt * v_prime, boundary_sqrt * v_prime};
  if (guar.floor > guar.ceiling)
    throw solver_failure_error("approx_solution: inverted guarantee");
  sol.method = Method::Approx;
  sol.value = guar.floor;
  sol.guarantee = guar;
  return sol;
}

// Condition-count over a parameter grid for n = 3: every triple
// (p1,p2,p3) from the grid values, checked against the cross-ratio condition.
struct Grid3Report {
  int total = 0;
  int satisfied = 0;

  double fraction() const { return static_cast<double>(satisfied) / total; }
};

inline Grid3Report count_condition1_grid(
    const std::vector<double>& values,
    const std::function<void(double, double, double, bool)>& per_triple = nullptr) {
  Grid3Report report;
  for (double p1 : values)
    for (double p2 : values)
      for (double p3 : values) {
        const PrefixProducts pp = prefix_products({p1, p2, p3});
        const bool ok = condition1_holds(pp, boundary_index(pp));
        ++report.total;
        if (ok) ++report.satisfied;
        if (per_triple) per_triple(p1, p2, p3, ok);
      }
  return report;
}

}  // namespace sargame
