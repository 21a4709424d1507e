#pragma once

#include <string>
#include <vector>

#include "bargain/adnb2.hpp"
#include "bargain/solve.hpp"

namespace bargain {

struct OracleResult {
  double y1 = 0, y2 = 0;
  double objective = 0;  // w1*log(y1) + w2*log(y2)
  std::string method;
  double tolerance = 0;
};

/// Floating-point check of the solver: golden-section search of the weighted
/// log objective along the upper boundary of the feasible polytope,
/// parameterized over each coordinate in turn.
OracleResult numeric_maximize(const NormalizedGame& ng, double tol);

/// Slope sweep over [alpha^1, alpha^2]: classifies the optimal boundary
/// piece at `grid` evenly spaced slopes, merges duplicates, and fills the
/// faces skipped between neighbouring probes from the segment geometry.
struct SweepResult {
  std::vector<Face> faces;         // ordered along the boundary
  std::vector<Rational> probe_alpha;
  std::vector<int> probe_face;     // probe index -> index into faces
  AlphaInterval interval;
};

SweepResult brute_force_faces(const NormalizedGame& ng, int grid);

/// The market instance expressed as a generic bargaining game: allocation
/// variables per (player, good), utility-defining rows, packing rows.
Game2 adnb2_game(const Adnb2Instance& inst);

/// Cross-check route for the market solver via the generic pipeline.
Solution adnb2_via_lnb2(const Adnb2Instance& inst);

}  // namespace bargain
