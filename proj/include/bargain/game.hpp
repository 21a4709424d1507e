#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bargain/rational.hpp"

namespace bargain {

/// Malformed instance data, violated preconditions, rejected games.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The feasible utility region is unbounded; such games are rejected.
struct NoncompactError : InputError {
  using InputError::InputError;
};

/// Game failed the feasibility test.  Carries the optimum of the test LP
/// when that LP itself was solvable.
struct InfeasibleGameError : std::runtime_error {
  explicit InfeasibleGameError(std::string msg) : std::runtime_error(std::move(msg)) {}
  InfeasibleGameError(std::string msg, Rational t)
      : std::runtime_error(std::move(msg)), t_star(std::move(t)), has_t_star(true) {}
  Rational t_star;
  bool has_t_star = false;
};

/// Market cannot give both players strictly more than their fallback
/// utilities.  k1/k2 are the 1-based goods reached by the greedy sweep.
struct InfeasibleMarketError : std::runtime_error {
  InfeasibleMarketError(std::string msg, int k1_, int k2_)
      : std::runtime_error(std::move(msg)), k1(k1_), k2(k2_) {}
  int k1, k2;
};

/// Invariant breaks inside the solver itself.
struct SolverBugError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Two-player bargaining instance over the linearly constrained region
///   { (x, v1, v2) : A x + b1 v1 + b2 v2 <= e, x >= 0 }
/// with fallback utilities (c1, c2) and positive integer clouts (w1, w2).
struct Game2 {
  RationalMatrix A;        // m x n auxiliary-variable coefficients
  RationalVector b1, b2;   // length m, coefficients of v1 / v2
  RationalVector e;        // length m right-hand sides
  Rational c1, c2;
  long long w1 = 1, w2 = 1;

  Eigen::Index rows() const { return A.rows(); }
  Eigen::Index vars() const { return A.cols(); }

  void validate() const {
    if (b1.size() != rows() || b2.size() != rows() || e.size() != rows())
      throw InputError("game: b1, b2, e must all have one entry per constraint row");
    if (w1 < 1 || w2 < 1) throw InputError("game: clouts w must be positive integers");
  }
};

/// Game recentered at the disagreement point: y_i = v_i - c_i, with
/// right-hand sides d = e - c1 b1 - c2 b2.
struct NormalizedGame {
  Game2 base;
  RationalVector d;
};

inline bool same_point(const Vector2r& a, const Vector2r& b) {
  return a(0) == b(0) && a(1) == b(1);
}

struct FacetFace {
  Rational alpha;    // > 0 on every useful facet
  Rational beta;     // > 0
  Vector2r low;      // endpoint with the smaller y1
  Vector2r high;     // endpoint with the larger y1

  friend bool operator==(const FacetFace& a, const FacetFace& b) {
    return a.alpha == b.alpha && a.beta == b.beta && same_point(a.low, b.low) &&
           same_point(a.high, b.high);
  }
};

struct VertexFace {
  Rational alpha1, alpha2;  // supporting-slope range, alpha1 < alpha2
  Vector2r coords;
  bool lo_capped = false;   // slope range clamped at 0
  bool hi_capped = false;   // slope range clamped at the 2^(2*kappa) cap

  friend bool operator==(const VertexFace& a, const VertexFace& b) {
    return a.alpha1 == b.alpha1 && a.alpha2 == b.alpha2 && same_point(a.coords, b.coords) &&
           a.lo_capped == b.lo_capped && a.hi_capped == b.hi_capped;
  }
};

using Face = std::variant<FacetFace, VertexFace>;

/// Bargaining solution with its allocation witness and the face it lies on.
struct Solution {
  Vector2r v;        // player utilities
  Vector2r y;        // v - c
  RationalVector x;  // allocation/auxiliary witness, feasible exactly
  Face face;
  int iterations = 0;
};

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckItem> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace bargain
