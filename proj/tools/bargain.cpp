#include "CLI11.hpp"

#include "bargain/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for 2-player bargaining games with linear feasible sets"};
  app.require_subcommand(1);

  bargain::RunConfig cfg;
  using Command = bargain::RunConfig::Command;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output_path, "Write the result object to a file");
  };

  auto* solve = app.add_subcommand("solve", "Solve a game file");
  solve->add_option("--game", cfg.input_path, "Game file")->required();
  solve->add_flag("--verify", cfg.verify_flag, "Embed exact checks and the numeric oracle");
  solve->add_option("--tol", cfg.tol, "Oracle tolerance");
  add_common(solve);

  auto* verify = app.add_subcommand("verify", "Solve a game file and always emit the full report");
  verify->add_option("--game", cfg.input_path, "Game file")->required();
  verify->add_option("--tol", cfg.tol, "Oracle tolerance");
  add_common(verify);

  auto* dg2 = app.add_subcommand("dg2", "Solve a two-commodity flow bargaining instance");
  dg2->add_option("--graph", cfg.input_path, "Graph file")->required();
  dg2->add_flag("--verify", cfg.verify_flag, "Embed exact checks and the numeric oracle");
  dg2->add_option("--tol", cfg.tol, "Oracle tolerance");
  add_common(dg2);

  auto* adnb2 = app.add_subcommand("adnb2", "Solve a two-buyer linear market instance");
  adnb2->add_option("--market", cfg.input_path, "Market file")->required();
  adnb2->add_flag("--verify", cfg.verify_flag, "Embed exact equilibrium checks");
  adnb2->add_flag("--cross-check", cfg.cross_check, "Also solve via the generic pipeline and compare");
  add_common(adnb2);

  auto* circle = app.add_subcommand("circle", "Solve the unit-quarter-disk game");
  circle->add_option("--c1", cfg.c1, "Disagreement utility of player 1")->required();
  circle->add_option("--c2", cfg.c2, "Disagreement utility of player 2")->required();
  circle->add_option("--tol", cfg.tol, "Bisection tolerance");
  add_common(circle);

  auto* oracle = app.add_subcommand("oracle", "Run the face sweep and numeric maximizer on a game");
  oracle->add_option("--game", cfg.input_path, "Game file")->required();
  oracle->add_option("--grid", cfg.grid, "Sweep density");
  oracle->add_option("--tol", cfg.tol, "Numeric tolerance");
  add_common(oracle);

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) cfg.command = Command::solve;
  else if (verify->parsed()) cfg.command = Command::verify;
  else if (dg2->parsed()) cfg.command = Command::dg2;
  else if (adnb2->parsed()) cfg.command = Command::adnb2;
  else if (circle->parsed()) cfg.command = Command::circle;
  else cfg.command = Command::oracle;

  return bargain::run(cfg);
}
