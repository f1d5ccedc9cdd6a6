// Instance dispatch: route a game to the applicable closed form, or to the LP
// oracle when no closed form covers it.

#pragma once

#include "sargame/matrix.hpp"
#include "sargame/multi_target.hpp"
#include "sargame/single_target.hpp"
#include "sargame/solution.hpp"

namespace sargame {

inline GameSolution oracle_solution(const CycleGame& g, bool adaptive) {
  GameSolution sol;
  sol.method = Method::Oracle;
  if (adaptive) {
    auto built = build_adaptive_game_matrix(g);
    auto ms = solve_matrix_game(built.matrix);
    sol.value = ms.value;
    for (std::size_t i = 0; i < built.row_rules.size(); ++i)
      if (ms.row_strategy[i] > 1e-12)
        sol.searcher_rules.support.emplace_back(built.row_rules[i], ms.row_strategy[i]);
    for (std::size_t j = 0; j < built.col_placements.size(); ++j)
      if (ms.col_strategy[j] > 1e-12)
        sol.hider.support.emplace_back(built.col_placements[j], ms.col_strategy[j]);
  } else {
    auto built = build_discrete_game_matrix(g);
    auto ms = solve_matrix_game(built.matrix);
    sol.value = ms.value;
    for (std::size_t i = 0; i < built.row_searches.size(); ++i)
      if (ms.row_strategy[i] > 1e-12)
        sol.searcher.support.emplace_back(built.row_searches[i], ms.row_strategy[i]);
    for (std::size_t j = 0; j < built.col_placements.size(); ++j)
      if (ms.col_strategy[j] > 1e-12)
        sol.hider.support.emplace_back(built.col_placements[j], ms.col_strategy[j]);
  }
  return sol;
}

inline double oracle_value(const CycleGame& g, bool adaptive) {
  if (adaptive) return solve_matrix_game(build_adaptive_game_matrix(g).matrix).value;
  return solve_matrix_game(build_discrete_game_matrix(g).matrix).value;
}

inline GameSolution solve_instance(const CycleGame& g, bool adaptive) {
  if (adaptive) {
    if (g.equal_p()) return adaptive_solution(g);
    return oracle_solution(g, true);
  }
  if (g.k == 1) {
    if (g.equal_p()) return equal_p_solution(g);
    if (g.n == 3) return n3_solution(g);
    const PrefixProducts pp = prefix_products(g.p);
    if (condition1_holds(pp, boundary_index(pp))) return two_point_solution(g);
    return oracle_solution(g, false);
  }
  if (g.k == g.n - 1) return k_equals_n_minus_1_solution(g);
  return oracle_solution(g, false);
}

}  // namespace sargame
