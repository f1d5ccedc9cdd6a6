// Finite zero-sum matrix games and the LP oracle used to verify every closed
// form. The solver is a dense primal simplex on the shift-and-normalize
// transform, with Bland's rule as an anti-cycling fallback, so results are
// deterministic given the matrix.

#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "sargame/core.hpp"
#include "sargame/solution.hpp"

namespace sargame {

// Row player maximizes, column player minimizes.
struct MatrixGame {
  std::vector<std::vector<double>> m;

  int rows() const { return static_cast<int>(m.size()); }
  int cols() const { return m.empty() ? 0 : static_cast<int>(m.front().size()); }
};

struct MatrixSolution {
  double value = 0.0;
  std::vector<double> row_strategy;
  std::vector<double> col_strategy;
  double feasibility_tol = 1e-10;
  double certificate_tol = 1e-9;
};

namespace detail {

// Simplex on: maximize sum(z) subject to A z <= 1, z >= 0, where A is the
// payoff matrix shifted to be strictly positive. The slack basis is feasible,
// the optimum gives the (scaled) column strategy, and the duals under the
// slack columns give the (scaled) row strategy.
struct SimplexResult {
  std::vector<double> primal;  // z
  std::vector<double> dual;    // y
  double objective = 0.0;
};

inline SimplexResult simplex_positive(const std::vector<std::vector<double>>& a) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(a.front().size());
  const double tol = 1e-10;

  // tableau: m constraint rows over columns [z | slack | rhs], plus reduced
  // cost row obj.
  std::vector<std::vector<double>> t(m, std::vector<double>(n + m + 1, 0.0));
  std::vector<double> obj(n + m + 1, 0.0);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1.0;
    t[i][n + m] = 1.0;
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) obj[j] = -1.0;

  bool bland = false;
  long degenerate = 0;
  const long degenerate_cap = 10L * (m + n);
  const long pivot_cap = 200L * (m + n) + 10000;
  for (long pivots = 0;; ++pivots) {
    if (pivots > pivot_cap)
      throw solver_failure_error("simplex: pivot cap exceeded");

    int enter = -1;
    if (!bland) {
      double best = -tol;
      for (int j = 0; j < n + m; ++j)
        if (obj[j] < best) best = obj[j], enter = j;
    } else {
      for (int j = 0; j < n + m; ++j)
        if (obj[j] < -tol) { enter = j; break; }
    }
    if (enter < 0) break;  // optimal

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] > tol) {
        double ratio = t[i][n + m] / t[i][enter];
        if (ratio < best_ratio - tol ||
            (ratio < best_ratio + tol && (leave < 0 || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) throw solver_failure_error("simplex: unbounded (matrix not positive?)");
    if (best_ratio < 1e-12 && ++degenerate > degenerate_cap) bland = true;

    const double piv = t[leave][enter];
    for (double& x : t[leave]) x /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0.0) continue;
      const double f = t[i][enter];
      for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
    }
    const double fo = obj[enter];
    if (fo != 0.0)
      for (int j = 0; j <= n + m; ++j) obj[j] -= fo * t[leave][j];
    basis[leave] = enter;
  }

  SimplexResult r;
  r.primal.assign(n, 0.0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) r.primal[basis[i]] = t[i][n + m];
  r.dual.assign(m, 0.0);
  for (int i = 0; i < m; ++i) r.dual[i] = obj[n + i];
  r.objective = obj[n + m];
  return r;
}

}  // namespace detail

inline MatrixSolution solve_matrix_game(const MatrixGame& g) {
  const int m = g.rows(), n = g.cols();
  if (m == 0 || n == 0) throw invalid_instance_error("solve_matrix_game: empty matrix");
  double lo = g.m[0][0];
  for (const auto& row : g.m) {
    if (static_cast<int>(row.size()) != n)
      throw invalid_instance_error("solve_matrix_game: ragged matrix");
    for (double x : row) {
      if (!std::isfinite(x)) throw invalid_instance_error("solve_matrix_game: non-finite entry");
      lo = std::min(lo, x);
    }
  }
  const double shift = 1.0 - lo;
  std::vector<std::vector<double>> a(m, std::vector<double>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = g.m[i][j] + shift;

  auto r = detail::simplex_positive(a);
  if (r.objective <= 0.0) throw solver_failure_error("solve_matrix_game: degenerate objective");
  const double shifted_value = 1.0 / r.objective;

  MatrixSolution sol;
  sol.value = shifted_value - shift;
  sol.col_strategy = std::move(r.primal);
  sol.row_strategy = std::move(r.dual);
  for (auto* v : {&sol.row_strategy, &sol.col_strategy}) {
    double total = 0.0;
    for (double x : *v) total += x;
    for (double& x : *v) x /= total;
  }

  // duality certificate
  double row_floor = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i < m; ++i) col += sol.row_strategy[i] * g.m[i][j];
    row_floor = std::min(row_floor, col);
  }
  double col_ceiling = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += g.m[i][j] * sol.col_strategy[j];
    col_ceiling = std::max(col_ceiling, row);
  }
  if (row_floor < sol.value - sol.certificate_tol || col_ceiling > sol.value + sol.certificate_tol)
    throw solver_failure_error("solve_matrix_game: certificate violated");
  return sol;
}

inline void check_matrix_size_guard(const CycleGame& g) {
  if (g.n > 16) throw instance_too_large_error("game matrix: n must be at most 16");
  double combos = 1.0;
  for (int i = 0; i < g.k; ++i) combos = combos * (g.n - i) / (i + 1);
  if (combos > 1e5) throw instance_too_large_error("game matrix: C(n,k) exceeds 10^5");
}

// Non-adaptive game matrix: one row per canonical expanding search, one column
// per k-subset of ring vertices.
struct DiscreteGameMatrix {
  MatrixGame matrix;
  std::vector<ExpandingSearch> row_searches;
  std::vector<HiderPlacement> col_placements;
};

inline DiscreteGameMatrix build_discrete_game_matrix(const CycleGame& g) {
  check_matrix_size_guard(g);
  DiscreteGameMatrix out;
  out.row_searches = enumerate_expanding_searches(g.n);
  out.col_placements = enumerate_placements(g.n, g.k);
  out.matrix.m.reserve(out.row_searches.size());
  for (const auto& s : out.row_searches) {
    std::vector<double> row;
    row.reserve(out.col_placements.size());
    for (const auto& h : out.col_placements) row.push_back(payoff(g, h, s));
    out.matrix.m.push_back(std::move(row));
  }
  return out;
}

// Payoff of the adaptive rule sigma_j against a fixed placement, by direct
// simulation of the stated rule.
inline double adaptive_rule_payoff(const CycleGame& g, const AdaptiveRule& rule,
                                   const HiderPlacement& h) {
  validate_placement(g, h);
  if (rule.switch_after < 0 || rule.switch_after > g.k)
    throw invalid_strategy_error("adaptive_rule_payoff: j must lie in 0..k");
  auto hidden = [&](int v) {
    return std::binary_search(h.vertices.begin(), h.vertices.end(), v);
  };
  int found = 0;
  double prod = 1.0;
  int cw = 1;
  while (found < rule.switch_after && cw <= g.n) {
    prod *= g.p[cw - 1];
    if (hidden(cw)) ++found;
    ++cw;
  }
  for (int acw = g.n; found < g.k && acw >= cw; --acw) {
    prod *= g.p[acw - 1];
    if (hidden(acw)) ++found;
  }
  if (found < g.k) throw invalid_strategy_error("adaptive_rule_payoff: targets not all found");
  return prod;
}

// Adaptive game matrix: rows sigma_0..sigma_k, columns all k-subsets.
struct AdaptiveGameMatrix {
  MatrixGame matrix;
  std::vector<AdaptiveRule> row_rules;
  std::vector<HiderPlacement> col_placements;
};

inline AdaptiveGameMatrix build_adaptive_game_matrix(const CycleGame& g) {
  check_matrix_size_guard(g);
  AdaptiveGameMatrix out;
  for (int j = 0; j <= g.k; ++j) out.row_rules.push_back(AdaptiveRule{j});
  out.col_placements = enumerate_placements(g.n, g.k);
  for (const auto& rule : out.row_rules) {
    std::vector<double> row;
    row.reserve(out.col_placements.size());
    for (const auto& h : out.col_placements) row.push_back(adaptive_rule_payoff(g, rule, h));
    out.matrix.m.push_back(std::move(row));
  }
  return out;
}

// Payoff of a general switching strategy: clockwise until x_1 targets found,
// anticlockwise until y_1 found, clockwise until x_2, and so on. Used to test
// that every such strategy collapses onto sigma_{sum x_i}.
inline double switching_payoff(const CycleGame& g, const std::vector<int>& x,
                               const std::vector<int>& y, const HiderPlacement& h) {
  validate_placement(g, h);
  if (x.size() != y.size())
    throw invalid_strategy_error("switching_payoff: x and y must have equal length");
  int quota_total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || y[i] < 0) throw invalid_strategy_error("switching_payoff: negative quota");
    quota_total += x[i] + y[i];
  }
  if (quota_total != g.k)
    throw invalid_strategy_error("switching_payoff: quotas must sum to k");
  auto hidden = [&](int v) {
    return std::binary_search(h.vertices.begin(), h.vertices.end(), v);
  };
  int cw = 1, acw = g.n, found = 0;
  double prod = 1.0;
  for (std::size_t phase = 0; phase < x.size(); ++phase) {
    for (int dir = 0; dir < 2; ++dir) {
      int quota = dir == 0 ? x[phase] : y[phase];
      int in_phase = 0;
      while (in_phase < quota && cw <= acw) {
        int v = dir == 0 ? cw++ : acw--;
        prod *= g.p[v - 1];
        if (hidden(v)) ++in_phase, ++found;
      }
      if (found == g.k) return prod;
    }
  }
  throw invalid_strategy_error("switching_payoff: targets not all found");
}

}  // namespace sargame
