#include "bargain/circle.hpp"

#include <cmath>

namespace bargain {

CirclePoint solve_circle(double c1, double c2, double tol) {
  if (!(c1 >= 0.0) || !(c2 >= 0.0) || !(c1 * c1 + c2 * c2 < 1.0))
    throw InputError("circle: disagreement point must satisfy c1, c2 >= 0 and c1^2 + c2^2 < 1");
  if (!(tol > 0.0)) throw InputError("circle: tolerance must be positive");

  // Feasible arc: y > c2 bounds the angle from below, x > c1 from above.
  double lo = std::asin(c2);
  double hi = std::acos(c1);

  // gap(theta) = angle(PQ, x-axis) - angle(OQ, y-axis); strictly increasing,
  // negative at the low end and positive at the high end.
  const auto gap = [&](double th) {
    const double x = std::cos(th), y = std::sin(th);
    return std::atan2(y - c2, x - c1) - (M_PI / 2 - th);
  };

  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) < 0 ? lo : hi) = mid;
  }

  const double th = 0.5 * (lo + hi);
  CirclePoint q;
  q.x = std::cos(th);
  q.y = std::sin(th);
  const double lhs = 2 * q.y * q.y - c2 * q.y - 1;
  q.residual = std::fabs(lhs * lhs - c1 * c1 * (1 - q.y * q.y));
  return q;
}

}  // namespace bargain
