// sargame: solve cycle search games, verify closed forms against the LP
// oracle, and emit experiment data.
//
// Output is key=value text on stdout; CSV is written only behind --csv.
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 solver
// failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sargame/continuous.hpp"
#include "sargame/multi_target.hpp"
#include "sargame/single_target.hpp"
#include "sargame/solve.hpp"

using namespace sargame;

namespace {

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::vector<double> parse_p_list(const std::string& text, int n) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    out.push_back(std::stod(item, &pos));
    if (pos != item.size()) throw invalid_instance_error("--p: malformed number '" + item + "'");
  }
  if (out.size() == 1) out.assign(n, out.front());  // scalar means equal-p
  return out;
}

std::string placement_key(const HiderPlacement& h) {
  std::string s;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(h.vertices[i]);
  }
  return s;
}

void print_solution(const GameSolution& sol) {
  std::printf("value=%s\n", fmt(sol.value).c_str());
  std::printf("method=%s\n", method_name(sol.method));
  for (const auto& [h, w] : sol.hider.support)
    std::printf("hider %s:%s\n", placement_key(h).c_str(), fmt(w).c_str());
  for (const auto& [s, w] : sol.searcher.support)
    std::printf("searcher %s:%s\n", s.moves.c_str(), fmt(w).c_str());
  for (const auto& [r, w] : sol.searcher_rules.support)
    std::printf("searcher sigma%d:%s\n", r.switch_after, fmt(w).c_str());
  for (const auto& [h, w] : sol.searcher_first_subset.support)
    std::printf("searcher-first-subset %s:%s\n", placement_key(h).c_str(), fmt(w).c_str());
  if (sol.guarantee) {
    std::printf("floor=%s\n", fmt(sol.guarantee->floor).c_str());
    std::printf("ceiling=%s\n", fmt(sol.guarantee->ceiling).c_str());
    std::printf("alpha=%s\n", fmt(sol.guarantee->alpha()).c_str());
  }
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: LF line endings everywhere
  if (!out) throw invalid_instance_error("--csv: cannot open '" + path + "'");
  return out;
}

struct Args {
  int n = 0;
  int k = 1;
  std::string p_text = "0.5";
  bool adaptive = false;
  bool oracle = false;
  std::uint64_t seed = 0;
  std::string csv_path;
  int sweep = 0;
  bool gap = false;
  double p_scalar = 0.5;
  bool p_scalar_given = false;
};

int cmd_solve(const Args& a) {
  CycleGame g(a.n, parse_p_list(a.p_text, a.n), a.k);
  const auto start = std::chrono::steady_clock::now();
  GameSolution sol = a.oracle ? oracle_solution(g, a.adaptive) : solve_instance(g, a.adaptive);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("n=%d\nk=%d\nadaptive=%d\n", g.n, g.k, a.adaptive ? 1 : 0);
  print_solution(sol);
  std::printf("seconds=%s\n", fmt(secs).c_str());
  if (!a.csv_path.empty()) {
    auto out = open_csv(a.csv_path);
    out << "n,k,adaptive,method,value\n";
    out << g.n << ',' << g.k << ',' << (a.adaptive ? 1 : 0) << ',' << method_name(sol.method)
        << ',' << fmt(sol.value) << '\n';
  }
  return 0;
}

int cmd_verify(const Args& a) {
  CycleGame g(a.n, parse_p_list(a.p_text, a.n), a.k);
  GameSolution sol = solve_instance(g, a.adaptive);
  const double oracle = oracle_value(g, a.adaptive);
  const double diff = std::abs(sol.value - oracle);
  std::printf("n=%d\nk=%d\nadaptive=%d\n", g.n, g.k, a.adaptive ? 1 : 0);
  std::printf("method=%s\n", method_name(sol.method));
  std::printf("value=%s\n", fmt(sol.value).c_str());
  std::printf("oracle=%s\n", fmt(oracle).c_str());
  std::printf("diff=%s\n", fmt(diff).c_str());
  const bool ok = diff <= 1e-9;
  std::printf("verified=%d\n", ok ? 1 : 0);
  return ok ? 0 : 2;
}

int cmd_grid3(const Args& a) {
  std::vector<double> values;
  for (int i = 1; i <= 9; ++i) values.push_back(i / 10.0);
  std::ofstream csv;
  if (!a.csv_path.empty()) {
    csv = open_csv(a.csv_path);
    csv << "p1,p2,p3,condition\n";
  }
  auto report = count_condition1_grid(values, [&](double p1, double p2, double p3, bool ok) {
    if (csv.is_open())
      csv << fmt(p1) << ',' << fmt(p2) << ',' << fmt(p3) << ',' << (ok ? 1 : 0) << '\n';
  });
  std::printf("total=%d\n", report.total);
  std::printf("count=%d\n", report.satisfied);
  std::printf("fraction=%s\n", fmt(report.fraction()).c_str());
  return 0;
}

int cmd_continuous(const Args& a) {
  if (a.gap) {
    auto [p_star, gap_star] = max_bound_gap(a.k);
    std::printf("k=%d\n", a.k);
    std::printf("p_star=%s\n", fmt(p_star).c_str());
    std::printf("gap_star=%s\n", fmt(gap_star).c_str());
    return 0;
  }
  if (a.sweep > 0) {
    if (a.csv_path.empty())
      throw invalid_instance_error("continuous --sweep requires --csv PATH");
    auto out = open_csv(a.csv_path);
    out << "p,lower,upper,ratio,gap\n";
    for (int i = 1; i <= a.sweep; ++i) {
      const double p = static_cast<double>(i) / (a.sweep + 1);
      auto b = continuous_bounds(ContinuousGame(a.k, p));
      out << fmt(p) << ',' << fmt(b.lower) << ',' << fmt(b.upper) << ',' << fmt(b.ratio) << ','
          << fmt(b.gap) << '\n';
    }
    std::printf("k=%d\nrows=%d\n", a.k, a.sweep);
    return 0;
  }
  ContinuousGame g(a.k, a.p_scalar);
  auto adaptive = continuous_adaptive_solution(g);
  auto b = continuous_bounds(g);
  std::printf("k=%d\np=%s\n", a.k, fmt(g.p).c_str());
  std::printf("adaptive_value=%s\n", fmt(adaptive.value).c_str());
  std::printf("lower=%s\n", fmt(b.lower).c_str());
  std::printf("upper=%s\n", fmt(b.upper).c_str());
  std::printf("ratio=%s\n", fmt(b.ratio).c_str());
  std::printf("gap=%s\n", fmt(b.gap).c_str());
  auto mc = star_vs_star_monte_carlo(g, 10000, a.seed);
  std::printf("star_vs_star_mean=%s\n", fmt(mc.mean).c_str());
  std::printf("star_vs_star_std_error=%s\n", fmt(mc.std_error).c_str());
  return 0;
}

int cmd_enumerate(const Args& a, bool k_given) {
  std::ofstream csv;
  if (!a.csv_path.empty()) csv = open_csv(a.csv_path);
  if (k_given) {
    auto fam = enumerate_snk(a.n, a.k);
    std::printf("n=%d\nk=%d\n", a.n, a.k);
    std::printf("s=%ld\ns_minus=%ld\ns_plus=%ld\n", fam.s, fam.s_minus, fam.s_plus);
    if (csv.is_open()) csv << "placement\n";
    for (const auto& h : fam.members) {
      std::printf("placement %s\n", placement_key(h).c_str());
      if (csv.is_open()) csv << placement_key(h) << '\n';
    }
  } else {
    auto all = enumerate_expanding_searches(a.n);
    std::printf("n=%d\n", a.n);
    std::printf("count=%zu\n", all.size());
    if (csv.is_open()) csv << "moves\n";
    for (const auto& s : all) {
      std::printf("search %s\n", s.moves.c_str());
      if (csv.is_open()) csv << s.moves << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search game solver for cycle graphs"};
  app.require_subcommand(1);
  Args a;

  auto* solve = app.add_subcommand("solve", "solve an instance");
  auto* verify = app.add_subcommand("verify", "compare a closed form with the LP oracle");
  auto* grid3 = app.add_subcommand("grid3", "condition census over the 0.1..0.9 triple grid");
  auto* cont = app.add_subcommand("continuous", "continuous circle game bounds and experiments");
  auto* enumerate = app.add_subcommand("enumerate", "dump expanding searches or balanced placements");

  for (auto* cmd : {solve, verify}) {
    cmd->add_option("--n", a.n, "cycle length")->required();
    cmd->add_option("--k", a.k, "number of targets");
    cmd->add_option("--p", a.p_text, "success probability (scalar or comma list)");
    cmd->add_flag("--adaptive", a.adaptive, "adaptive searcher");
  }
  solve->add_flag("--oracle", a.oracle, "solve with the LP oracle regardless of shape");
  solve->add_option("--csv", a.csv_path, "write the result row as CSV");
  grid3->add_option("--csv", a.csv_path, "write per-triple results as CSV");

  cont->add_option("--k", a.k, "number of targets");
  auto* cont_p = cont->add_option("--p", a.p_scalar, "success probability");
  cont->add_option("--sweep", a.sweep, "emit an N-row bound sweep as CSV");
  cont->add_flag("--gap", a.gap, "maximize the bound gap over p");
  cont->add_option("--seed", a.seed, "Monte-Carlo seed");
  cont->add_option("--csv", a.csv_path, "CSV output path");

  enumerate->add_option("--n", a.n, "cycle length")->required();
  auto* enum_k = enumerate->add_option("--k", a.k, "dump balanced placements for k targets");
  enumerate->add_option("--csv", a.csv_path, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // help/version exit 0, any parse error is usage
  }

  try {
    if (solve->parsed()) return cmd_solve(a);
    if (verify->parsed()) return cmd_verify(a);
    if (grid3->parsed()) return cmd_grid3(a);
    if (cont->parsed()) {
      (void)cont_p;
      return cmd_continuous(a);
    }
    if (enumerate->parsed()) return cmd_enumerate(a, enum_k->count() > 0);
  } catch (const invalid_instance_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const invalid_strategy_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "solver error: %s\n", e.what());
    return 3;
  }
  return 1;
}
