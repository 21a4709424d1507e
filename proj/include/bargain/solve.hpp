#pragma once

#include <optional>
#include <utility>

#include "bargain/game.hpp"
#include "bargain/lp.hpp"

namespace bargain {

struct Feasibility {
  bool feasible = false;
  std::optional<Rational> t_star;  // empty when the test LP is itself infeasible
};

/// Feasibility test: the game admits a point with v_i > c_i for both players
/// iff the optimum t* of the slack-maximizing LP is strictly positive.
/// Throws NoncompactError when t is unbounded.
Feasibility check_feasible(const Game2& game);

NormalizedGame normalize(const Game2& game);

/// A point of the constraint polyhedron of the normalized game.
struct PiPoint {
  RationalVector x;
  Rational y1, y2;
};

struct Extremes {
  Vector2r l;  // lexicographic max of (y1, y2)
  Vector2r h;  // lexicographic max of (y2, y1)
};

/// Both extreme points are vertices of the projected feasible polytope.
/// Throws NoncompactError when y1 or y2 is unbounded.
Extremes compute_extremes(const NormalizedGame& ng);

/// Supporting-slope interval of the boundary point carried by `witness`:
/// the set of slopes a > 0 for which max(y1 + a*y2) is attained there,
/// clamped to [0, 2^(2*kappa)] with cap flags at degenerate corners.
struct AlphaRange {
  Rational lo, hi;
  bool lo_capped = false;
  bool hi_capped = false;
};

AlphaRange alpha_range_at_point(const NormalizedGame& ng, const PiPoint& witness);

/// Classifies the boundary piece supporting direction (1, alpha): a facet
/// (positive-length optimal segment) or a vertex with its slope range.
Face find_face_by_alpha(const NormalizedGame& ng, const Rational& alpha);

/// Classifies the face a boundary point lies on.  Throws InputError when the
/// point is outside the polytope or not on any supported boundary piece.
Face find_face_by_point(const NormalizedGame& ng, const Vector2r& point);

struct AlphaInterval {
  Rational lo, hi;
  bool lo_capped = false;
  bool hi_capped = false;
  bool collapsed = false;  // single dominant point, no search needed
  Vector2r l_point, h_point;
};

/// Search interval [alpha^1, alpha^2] spanned by the slopes supporting the
/// two extreme points.
AlphaInterval compute_alpha_interval(const NormalizedGame& ng);

/// Bit budget for the search grid: large enough that every facet slope and
/// vertex coordinate fits in kappa-bit numerator and denominator.
int kappa(const NormalizedGame& ng);

/// floor(x * 2^kappa) / 2^kappa for x >= 0.
Rational truncate(const Rational& x, int kappa);

struct SearchState {
  Rational l, h;               // current interval ends
  Rational alpha_lo, alpha_hi; // full search interval
  int kappa = 0;
  Rational r;                  // w1 / (w1 + w2)
};

/// Full pipeline: feasibility, normalization, interval setup, and the
/// truncated binary search over facet slopes.  Exact output.
Solution solve(const Game2& game);

/// Exact re-checks of a claimed solution: polyhedron membership, the facet
/// tangency identity, or the vertex slope sandwich.
VerificationReport verify_solution(const Game2& game, const Solution& sol);

// Low-level probes shared with the verification oracles.

/// max y1 + alpha*y2 over the polyhedron; returns the value and a witness.
std::pair<Rational, PiPoint> support(const NormalizedGame& ng, const Rational& alpha);

/// min/max of y1 over the optimal face {y1 + alpha*y2 = beta}.
std::pair<Rational, PiPoint> min_y1_on_face(const NormalizedGame& ng, const Rational& alpha,
                                            const Rational& beta);
std::pair<Rational, PiPoint> max_y1_on_face(const NormalizedGame& ng, const Rational& alpha,
                                            const Rational& beta);

/// Feasible witness with the given exact utilities; empty when none exists.
std::optional<PiPoint> pi_witness(const NormalizedGame& ng, const Rational& y1,
                                  const Rational& y2);

/// Extremes of one coordinate over the polyhedron slice fixing the other;
/// empty when the slice is infeasible.
std::optional<Rational> max_y2_given_y1(const NormalizedGame& ng, const Rational& y1);
std::optional<Rational> min_y2_given_y1(const NormalizedGame& ng, const Rational& y1);
std::optional<Rational> max_y1_given_y2(const NormalizedGame& ng, const Rational& y2);

}  // namespace bargain
