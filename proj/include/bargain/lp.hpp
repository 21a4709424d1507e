#pragma once

#include <vector>

#include "bargain/rational.hpp"

namespace bargain {

enum class Sense { maximize, minimize };
enum class Relation { le, eq, ge };

struct LpConstraint {
  RationalVector row;
  Relation rel = Relation::le;
  Rational rhs;
};

/// A linear program in the general row form
///   opt  objective . x
///   s.t. row_j . x  (<= | = | >=)  rhs_j      for every constraint j
///        x_i >= 0                             where nonneg[i] (default: all)
struct LpProblem {
  Sense sense = Sense::maximize;
  RationalVector objective;
  std::vector<LpConstraint> constraints;
  std::vector<bool> nonneg;  // empty means every variable is nonnegative

  Eigen::Index n_vars() const { return objective.size(); }

  void add(RationalVector row, Relation rel, Rational rhs) {
    constraints.push_back({std::move(row), rel, std::move(rhs)});
  }
  bool var_nonneg(Eigen::Index i) const {
    return nonneg.empty() || nonneg[static_cast<std::size_t>(i)];
  }
};

enum class LpStatus { optimal, infeasible, unbounded };

/// Exact solver result. When optimal, `primal` satisfies every constraint
/// exactly and `dual` (one multiplier per constraint, shadow-price sign
/// convention) certifies optimality: objective.primal == sum dual_j * rhs_j.
struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  RationalVector primal;
  Rational value;
  RationalVector dual;
};

/// Two-phase simplex with Bland's pivot rule over exact rationals.
/// Deterministic; throws std::invalid_argument on dimension mismatches.
LpOutcome solve_lp(const LpProblem& problem);

}  // namespace bargain
