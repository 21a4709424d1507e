#pragma once

#include "bargain/game.hpp"

namespace bargain {

/// Point on the unit circle; `residual` is the defect of the degree-4
/// optimality identity (2y^2 - c2*y - 1)^2 = c1^2 (1 - y^2).
struct CirclePoint {
  double x = 0, y = 0;
  double residual = 0;
};

/// Solution of the unit-quarter-disk game with disagreement point (c1, c2):
/// the unique boundary point where the angle of PQ against the x-axis equals
/// the angle of OQ against the y-axis.  Bisection on that angle gap; the
/// quartic identity is evaluated afterwards as an independent residual.
/// Requires c1, c2 >= 0 and c1^2 + c2^2 < 1.
CirclePoint solve_circle(double c1, double c2, double tol = 1e-12);

}  // namespace bargain
