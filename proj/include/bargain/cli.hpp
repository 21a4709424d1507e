#pragma once

#include <string>

namespace bargain {

/// Parsed command line.  One structured result object goes to the output
/// path (standard output by default); diagnostics go to standard error.
struct RunConfig {
  enum class Command { solve, dg2, adnb2, circle, verify, oracle };
  Command command = Command::solve;
  std::string input_path;   // required for everything except `circle`
  std::string output_path;  // empty = standard output
  double tol = 1e-12;
  bool verify_flag = false;
  bool cross_check = false;
  int grid = 256;
  double c1 = 0, c2 = 0;  // circle scalars
};

/// Exit codes: 0 success, 1 malformed input or internal error, 2 infeasible
/// instance (with a diagnostic object on the output stream).
int run(const RunConfig& config);

}  // namespace bargain
