#include "bargain/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include "bargain/circle.hpp"
#include "bargain/io.hpp"
#include "bargain/solve.hpp"

namespace bargain {

namespace {

void emit(const RunConfig& cfg, const Json& j) {
  if (cfg.output_path.empty()) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw InputError("cannot write file: " + cfg.output_path);
  out << j.dump() << "\n";
}

// Solution plus (optionally) the verification report and the numeric
// oracle's agreement data.
Json solved_object(const Game2& game, const Solution& sol, bool verify, double tol) {
  Json j = solution_to_json(sol);
  if (!verify) return j;
  const VerificationReport rep = verify_solution(game, sol);
  Json v = report_to_json(rep);
  const OracleResult oracle = numeric_maximize(normalize(game), tol);
  Json o = oracle_to_json(oracle);
  o["delta"] = Json::array({std::fabs(sol.y(0).to_double() - oracle.y1),
                            std::fabs(sol.y(1).to_double() - oracle.y2)});
  v["oracle"] = std::move(o);
  j["verification"] = std::move(v);
  if (!rep.all_pass()) throw SolverBugError("emitted solution failed verification");
  return j;
}

int run_solve(const RunConfig& cfg, bool always_verify) {
  const Game2 game = game_from_json(load_json_file(cfg.input_path));
  const Solution sol = solve(game);
  emit(cfg, solved_object(game, sol, always_verify || cfg.verify_flag, cfg.tol));
  return 0;
}

int run_dg2(const RunConfig& cfg) {
  const Dg2Instance inst = dg2_from_json(load_json_file(cfg.input_path));
  const Game2 game = build_dg2(inst);
  const Solution sol = solve(game);
  const Dg2Flows flows = extract_flows(inst, sol);
  Json j = solved_object(game, sol, cfg.verify_flag, cfg.tol);
  j["flows"] = flows_to_json(inst, flows);
  emit(cfg, j);
  return 0;
}

int run_adnb2(const RunConfig& cfg) {
  const Adnb2Instance raw = adnb2_from_json(load_json_file(cfg.input_path));
  const Adnb2Instance merged = merge_goods(raw);
  const Adnb2Equilibrium eq = solve_adnb2(merged);
  Json j = equilibrium_to_json(merged, eq);
  if (cfg.verify_flag) {
    const VerificationReport rep = verify_equilibrium(merged, eq);
    j["verification"] = report_to_json(rep);
    if (!rep.all_pass()) throw SolverBugError("emitted equilibrium failed verification");
  }
  if (cfg.cross_check) {
    const Solution via = adnb2_via_lnb2(raw);
    const bool match = via.v(0) == eq.v1 && via.v(1) == eq.v2;
    Json c;
    c["match"] = match;
    c["v"] = Json::array({format_rational(via.v(0)), format_rational(via.v(1))});
    j["cross_check"] = std::move(c);
    if (!match) throw SolverBugError("combinatorial and generic routes disagree");
  }
  emit(cfg, j);
  return 0;
}

int run_circle(const RunConfig& cfg) {
  const CirclePoint q = solve_circle(cfg.c1, cfg.c2, cfg.tol);
  Json j;
  j["x"] = q.x;
  j["y"] = q.y;
  j["residual"] = q.residual;
  emit(cfg, j);
  return 0;
}

int run_oracle(const RunConfig& cfg) {
  const Game2 game = game_from_json(load_json_file(cfg.input_path));
  const Feasibility feas = check_feasible(game);
  if (!feas.feasible) {
    Json j;
    j["status"] = "infeasible";
    if (feas.t_star) j["t_star"] = format_rational(*feas.t_star);
    emit(cfg, j);
    return 2;
  }
  const NormalizedGame ng = normalize(game);
  Json j = sweep_to_json(brute_force_faces(ng, cfg.grid));
  j["numeric"] = oracle_to_json(numeric_maximize(ng, cfg.tol));
  emit(cfg, j);
  return 0;
}

}  // namespace

int run(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case RunConfig::Command::solve:
        return run_solve(cfg, false);
      case RunConfig::Command::verify:
        return run_solve(cfg, true);
      case RunConfig::Command::dg2:
        return run_dg2(cfg);
      case RunConfig::Command::adnb2:
        return run_adnb2(cfg);
      case RunConfig::Command::circle:
        return run_circle(cfg);
      case RunConfig::Command::oracle:
        return run_oracle(cfg);
    }
    return 1;
  } catch (const InfeasibleGameError& e) {
    Json j;
    j["status"] = "infeasible";
    if (e.has_t_star) j["t_star"] = format_rational(e.t_star);
    emit(cfg, j);
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const InfeasibleMarketError& e) {
    Json j;
    j["status"] = "infeasible";
    j["k1"] = e.k1;
    j["k2"] = e.k2;
    emit(cfg, j);
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bargain
