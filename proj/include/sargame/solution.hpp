// Solved-game representation shared by the closed-form solvers and the
// matrix-game oracle.

#pragma once

#include <optional>
#include <string>

#include "sargame/core.hpp"

namespace sargame {

// Adaptive searcher pure strategy sigma_j: search clockwise until j targets
// are found, then anticlockwise starting from the root's other side.
struct AdaptiveRule {
  int switch_after = 0;  // j

  bool operator==(const AdaptiveRule& o) const { return switch_after == o.switch_after; }
};

enum class Method {
  Theorem1,         // unstructured game, closed-form value (k = 1)
  Theorem1Derived,  // unstructured game, value derived from the optimal hider mix (k > 1)
  EqualP,           // equal-p cycle, two-point solution
  TwoPoint,         // unequal p under the cross-ratio condition
  N3Case1,
  N3Case2,
  GammaPrime,  // auxiliary game with payoff P'
  Approx,      // alpha-approximate strategies lifted from the auxiliary game
  Adaptive,    // adaptive multi-target closed form
  KReduction,  // k = n-1 reduction to the unstructured game
  Oracle,      // LP oracle on the full payoff matrix
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Theorem1: return "theorem-1";
    case Method::Theorem1Derived: return "theorem-1-derived";
    case Method::EqualP: return "theorem-2";
    case Method::TwoPoint: return "two-point";
    case Method::N3Case1: return "n3-case1";
    case Method::N3Case2: return "n3-case2";
    case Method::GammaPrime: return "gamma-prime";
    case Method::Approx: return "approx";
    case Method::Adaptive: return "adaptive";
    case Method::KReduction: return "k-reduction";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

// Payoff floor/ceiling certified for an approximate solution. For exact
// solutions floor == ceiling == value.
struct Guarantee {
  double floor = 0.0;
  double ceiling = 0.0;

  double alpha() const { return ceiling / floor; }
};

struct GameSolution {
  double value = 0.0;
  Method method = Method::Oracle;
  MixedStrategy<HiderPlacement> hider;

  // Searcher strategy, in whichever of the three forms the solver produces.
  // Explicit search orderings:
  MixedStrategy<ExpandingSearch> searcher;
  // Adaptive rules sigma_j:
  MixedStrategy<AdaptiveRule> searcher_rules;
  // Structural form (unstructured game): first-k-subset weights, completed
  // with the remaining vertices in uniformly random order:
  MixedStrategy<HiderPlacement> searcher_first_subset;

  std::optional<Guarantee> guarantee;
};

}  // namespace sargame
