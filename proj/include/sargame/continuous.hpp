// Continuous game on the unit circle: adaptive closed form, the star
// strategies for the non-adaptive game, value bounds, ratio analysis and the
// maximum bound-gap search.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "sargame/core.hpp"

namespace sargame {

// Search time t in [0,1], payoff p^t for survival base p.
struct ContinuousGame {
  int k = 1;
  double p = 0.5;

  ContinuousGame(int k_, double p_) : k(k_), p(p_) {
    if (k < 1) throw invalid_instance_error("ContinuousGame: k must be at least 1");
    if (!(p > 0.0 && p < 1.0))
      throw invalid_instance_error("ContinuousGame: p must lie strictly in (0,1)");
  }
};

// k clockwise positions from the root, strictly increasing in (0,1).
struct CirclePlacement {
  std::vector<double> points;
};

inline void validate_circle_placement(const ContinuousGame& g, const CirclePlacement& h) {
  if (static_cast<int>(h.points.size()) != g.k)
    throw invalid_strategy_error("circle placement: must contain exactly k points");
  double prev = 0.0;
  for (double x : h.points) {
    if (!(x > prev && x < 1.0))
      throw invalid_strategy_error("circle placement: points must be strictly increasing in (0,1)");
    prev = x;
  }
}

struct ContinuousSolution {
  double value = 0.0;
  std::vector<double> hider_points;
  int searcher_rule_count = 0;  // uniform mix over "clockwise until j found" rules
};

// Adaptive game: value p^(k/(k+1)), hider equally spaced, searcher uniform
// over the k+1 switching rules.
inline ContinuousSolution continuous_adaptive_solution(const ContinuousGame& g) {
  ContinuousSolution sol;
  sol.value = std::pow(g.p, static_cast<double>(g.k) / (g.k + 1));
  for (int j = 1; j <= g.k; ++j)
    sol.hider_points.push_back(static_cast<double>(j) / (g.k + 1));
  sol.searcher_rule_count = g.k + 1;
  return sol;
}

// Expected payoff of a fixed placement against the uniform adaptive mix:
// search time is 1 - (gap j) with probability 1/(k+1).
inline double adaptive_pure_payoff(const ContinuousGame& g, const CirclePlacement& h) {
  validate_circle_placement(g, h);
  double total = 0.0;
  double prev = 0.0;
  for (int j = 0; j <= g.k; ++j) {
    const double next = j < g.k ? h.points[j] : 1.0;
    total += std::pow(g.p, 1.0 - (next - prev));
    prev = next;
  }
  return total / (g.k + 1);
}

// Expected payoff ceiling from the uniform-offset hider: k(p - p^(1-1/k))/ln p.
// For k = 1 this is the mean of p^t over t in [0,1]. Written via expm1 so the
// near-cancelling difference keeps full relative precision as p -> 1.
inline double hider_star_upper_bound(const ContinuousGame& g) {
  const double log_p = std::log(g.p);
  return -g.k * g.p * std::expm1(-log_p / g.k) / log_p;
}

// Exact expected payoff of the split-search mix s* against a fixed placement:
// uniform over j in 1..k and direction, search an arc of length j/k one way,
// then the complementary arc the other way from the root. Targets exactly on
// an arc boundary count as found (closed arcs).
inline double searcher_star_payoff(const ContinuousGame& g, const CirclePlacement& h) {
  validate_circle_placement(g, h);
  double total = 0.0;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<double> xs = h.points;
    if (dir == 1) {  // anticlockwise first: reflect the circle
      for (double& x : xs) x = 1.0 - x;
      std::reverse(xs.begin(), xs.end());
    }
    for (int j = 1; j <= g.k; ++j) {
      const double split = static_cast<double>(j) / g.k;
      double t;
      if (xs.back() <= split) {
        t = xs.back();  // everything lies in the first arc
      } else {
        double first_outside = 2.0;
        for (double x : xs)
          if (x > split) { first_outside = x; break; }
        t = split + (1.0 - first_outside);
      }
      total += std::pow(g.p, t);
    }
  }
  return total / (2.0 * g.k);
}

struct ContinuousBounds {
  double lower = 0.0;  // p^(1 - 1/(2k)), guaranteed by s*
  double upper = 0.0;  // k(p - p^(1-1/k))/ln p, forced by h*
  double ratio = 0.0;  // upper / lower
  double gap = 0.0;    // upper - lower
};

inline double bound_ratio(int k, double p) {
  return k * (std::pow(p, 1.0 / (2.0 * k)) - std::pow(p, -1.0 / (2.0 * k))) / std::log(p);
}

inline ContinuousBounds continuous_bounds(const ContinuousGame& g) {
  ContinuousBounds b;
  b.lower = std::pow(g.p, 1.0 - 1.0 / (2.0 * g.k));
  b.upper = hider_star_upper_bound(g);
  b.ratio = bound_ratio(g.k, g.p);
  b.gap = b.upper - b.lower;
  if (b.lower > b.upper + 1e-12)
    throw solver_failure_error("continuous_bounds: bound ordering violated");
  return b;
}

// Maximize the absolute bound gap over p in (0,1): coarse 1000-point grid to
// bracket the peak, then golden-section refinement to interval width 1e-8.
// The grid guards against a missed peak since unimodality is unproven.
inline std::pair<double, double> max_bound_gap(int k) {
  if (k < 1) throw invalid_instance_error("max_bound_gap: k must be at least 1");
  auto gap = [k](double p) { return continuous_bounds(ContinuousGame(k, p)).gap; };

  const int grid = 1000;
  double best_p = 0.5, best_gap = -1.0;
  for (int i = 1; i < grid; ++i) {
    const double p = static_cast<double>(i) / grid;
    const double gp = gap(p);
    if (gp > best_gap) best_gap = gp, best_p = p;
  }
  double a = std::max(best_p - 1.0 / grid, 1e-12);
  double b = std::min(best_p + 1.0 / grid, 1.0 - 1e-12);

  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = gap(c), fd = gap(d);
  while (b - a > 1e-8) {
    if (fc > fd) {
      b = d, d = c, fd = fc;
      c = b - phi * (b - a);
      fc = gap(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + phi * (b - a);
      fd = gap(d);
    }
  }
  const double p_star = (a + b) / 2.0;
  return {p_star, gap(p_star)};
}

// d/dp numerator of the bound ratio; negative on (0,1), zero at p = 1.
inline double ratio_derivative_numerator(int k, double p) {
  const double u = std::pow(p, 1.0 / (2.0 * k));
  return std::log(p) * (u + 1.0 / u) - k * (u - 1.0 / u);
}

struct MonotonicityReport {
  bool ratio_strictly_decreasing = true;
  bool derivative_numerator_negative = true;
  double worst_ratio_step = 0.0;  // max consecutive f difference (want < 0)
  double worst_numerator = 0.0;   // max g over the grid (want < 0)
};

inline MonotonicityReport ratio_monotonicity_check(int k, const std::vector<double>& grid) {
  if (grid.size() < 2)
    throw invalid_instance_error("ratio_monotonicity_check: need at least two grid points");
  MonotonicityReport rep;
  rep.worst_ratio_step = -std::numeric_limits<double>::infinity();
  rep.worst_numerator = -std::numeric_limits<double>::infinity();
  double prev = bound_ratio(k, grid.front());
  rep.worst_numerator = ratio_derivative_numerator(k, grid.front());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = bound_ratio(k, grid[i]);
    rep.worst_ratio_step = std::max(rep.worst_ratio_step, cur - prev);
    if (cur >= prev) rep.ratio_strictly_decreasing = false;
    prev = cur;
    const double gnum = ratio_derivative_numerator(k, grid[i]);
    rep.worst_numerator = std::max(rep.worst_numerator, gnum);
    if (gnum >= 0.0) rep.derivative_numerator_negative = false;
  }
  return rep;
}

// Seeded Monte-Carlo estimate of s* against h* (uniform-offset equally spaced
// hider). Deterministic given the seed.
struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

inline MonteCarloEstimate star_vs_star_monte_carlo(const ContinuousGame& g, int samples,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> offset(1e-12, 1.0 / g.k);
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = offset(rng);
    CirclePlacement h;
    for (int j = 0; j < g.k; ++j) h.points.push_back(x + static_cast<double>(j) / g.k);
    const double v = searcher_star_payoff(g, h);
    sum += v;
    sum_sq += v * v;
  }
  MonteCarloEstimate est;
  est.mean = sum / samples;
  const double var = (sum_sq - sum * sum / samples) / (samples - 1);
  est.std_error = std::sqrt(std::max(var, 0.0) / samples);
  return est;
}

}  // namespace sargame
