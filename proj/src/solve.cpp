#include "bargain/solve.hpp"

#include <utility>

namespace bargain {

namespace {

// Column layout of polyhedron LPs: [x_0 .. x_{n-1}, y1, y2], all nonnegative.
LpProblem pi_base(const NormalizedGame& ng) {
  const Eigen::Index n = ng.base.vars();
  const Eigen::Index m = ng.base.rows();
  LpProblem lp;
  lp.objective = RationalVector::Zero(n + 2);
  for (Eigen::Index j = 0; j < m; ++j) {
    RationalVector row(n + 2);
    for (Eigen::Index i = 0; i < n; ++i) row(i) = ng.base.A(j, i);
    row(n) = ng.base.b1(j);
    row(n + 1) = ng.base.b2(j);
    lp.add(std::move(row), Relation::le, ng.d(j));
  }
  return lp;
}

RationalVector unit_row(Eigen::Index size, Eigen::Index at, Rational value = Rational(1)) {
  RationalVector row = RationalVector::Zero(size);
  row(at) = std::move(value);
  return row;
}

PiPoint to_pi_point(const NormalizedGame& ng, const RationalVector& primal) {
  const Eigen::Index n = ng.base.vars();
  return PiPoint{primal.head(n), primal(n), primal(n + 1)};
}

[[noreturn]] void feasibility_lost() {
  throw SolverBugError("polytope probe infeasible for a feasible game");
}

struct RawRange {
  bool supported = false;
  bool lo_unbounded = false, hi_unbounded = false;
  Rational lo, hi;
};

// Feasible multipliers of the supporting-slope system at a boundary point:
// tight rows only, normalized against the y1 coefficient, with the reduced
// costs of positive witness coordinates pinned to zero.  The objective
// (the y2 coefficient sum) spans exactly the supporting slopes.
RawRange alpha_range_raw(const NormalizedGame& ng, const PiPoint& w) {
  const Eigen::Index n = ng.base.vars();
  const Eigen::Index m = ng.base.rows();
  if (w.x.size() != n) throw InputError("witness has the wrong number of coordinates");

  std::vector<Eigen::Index> tight;
  for (Eigen::Index j = 0; j < m; ++j) {
    Rational lhs = ng.base.b1(j) * w.y1 + ng.base.b2(j) * w.y2;
    for (Eigen::Index i = 0; i < n; ++i) lhs += ng.base.A(j, i) * w.x(i);
    if (lhs == ng.d(j)) tight.push_back(j);
  }
  RawRange out;
  if (tight.empty()) return out;

  const auto t = static_cast<Eigen::Index>(tight.size());
  LpProblem lp;
  lp.objective = RationalVector::Zero(t);
  for (Eigen::Index k = 0; k < t; ++k) lp.objective(k) = ng.base.b2(tight[static_cast<std::size_t>(k)]);

  RationalVector norm_row(t);
  for (Eigen::Index k = 0; k < t; ++k) norm_row(k) = ng.base.b1(tight[static_cast<std::size_t>(k)]);
  lp.add(norm_row, w.y1.is_zero() ? Relation::ge : Relation::eq, Rational(1));

  for (Eigen::Index i = 0; i < n; ++i) {
    RationalVector row(t);
    for (Eigen::Index k = 0; k < t; ++k) row(k) = ng.base.A(tight[static_cast<std::size_t>(k)], i);
    lp.add(std::move(row), w.x(i).sign() > 0 ? Relation::eq : Relation::ge, Rational(0));
  }

  lp.sense = Sense::minimize;
  const LpOutcome lo = solve_lp(lp);
  if (lo.status == LpStatus::infeasible) return out;
  lp.sense = Sense::maximize;
  const LpOutcome hi = solve_lp(lp);

  out.supported = true;
  out.lo_unbounded = lo.status == LpStatus::unbounded;
  if (!out.lo_unbounded) out.lo = lo.value;
  out.hi_unbounded = hi.status == LpStatus::unbounded;
  if (!out.hi_unbounded) out.hi = hi.value;
  return out;
}

AlphaRange finalize_range(const NormalizedGame& ng, const PiPoint& w, const RawRange& raw) {
  AlphaRange ar;
  if (raw.hi_unbounded) {
    ar.hi = pow2(2L * kappa(ng));
    ar.hi_capped = true;
  } else {
    ar.hi = raw.hi;
  }
  // A witness with y2 = 0 pins only the upper end; everything below it
  // supports the point as well.
  if (w.y2.is_zero() || raw.lo_unbounded || raw.lo.sign() < 0) {
    ar.lo = Rational(0);
    ar.lo_capped = true;
  } else {
    ar.lo = raw.lo;
    ar.lo_capped = raw.lo.is_zero();  // range touches zero
  }
  return ar;
}

FacetFace facet_at(const NormalizedGame& ng, const Rational& alpha, const Rational& beta) {
  FacetFace f;
  f.alpha = alpha;
  f.beta = beta;
  if (alpha.sign() > 0) {
    const auto [a1, w_lo] = min_y1_on_face(ng, alpha, beta);
    const auto [a2, w_hi] = max_y1_on_face(ng, alpha, beta);
    f.low = Vector2r(a1, (beta - a1) / alpha);
    f.high = Vector2r(a2, (beta - a2) / alpha);
  } else {
    // Vertical boundary piece y1 = beta; occurs only outside the useful
    // slope range.
    const auto top = max_y2_given_y1(ng, beta);
    const auto bottom = min_y2_given_y1(ng, beta);
    if (!top || !bottom) feasibility_lost();
    f.low = Vector2r(beta, *top);
    f.high = Vector2r(beta, *bottom);
  }
  return f;
}

}  // namespace

Feasibility check_feasible(const Game2& game) {
  game.validate();
  const Eigen::Index n = game.vars();
  const Eigen::Index m = game.rows();
  // Variables [x, v1, v2, t]; only x is sign-constrained.
  LpProblem lp;
  lp.objective = unit_row(n + 3, n + 2);
  lp.nonneg.assign(static_cast<std::size_t>(n + 3), true);
  lp.nonneg[static_cast<std::size_t>(n)] = false;
  lp.nonneg[static_cast<std::size_t>(n + 1)] = false;
  lp.nonneg[static_cast<std::size_t>(n + 2)] = false;

  RationalVector r1 = RationalVector::Zero(n + 3);
  r1(n) = -1;
  r1(n + 2) = 1;
  lp.add(std::move(r1), Relation::le, -game.c1);
  RationalVector r2 = RationalVector::Zero(n + 3);
  r2(n + 1) = -1;
  r2(n + 2) = 1;
  lp.add(std::move(r2), Relation::le, -game.c2);
  for (Eigen::Index j = 0; j < m; ++j) {
    RationalVector row = RationalVector::Zero(n + 3);
    for (Eigen::Index i = 0; i < n; ++i) row(i) = game.A(j, i);
    row(n) = game.b1(j);
    row(n + 1) = game.b2(j);
    lp.add(std::move(row), Relation::le, game.e(j));
  }

  const LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::infeasible) return {false, std::nullopt};
  if (out.status == LpStatus::unbounded)
    throw NoncompactError("game rejected: utilities are unbounded, the feasible set is not compact");
  return {out.value.sign() > 0, out.value};
}

NormalizedGame normalize(const Game2& game) {
  game.validate();
  NormalizedGame ng;
  ng.base = game;
  ng.d = game.e - game.c1 * game.b1 - game.c2 * game.b2;
  return ng;
}

std::pair<Rational, PiPoint> support(const NormalizedGame& ng, const Rational& alpha) {
  LpProblem lp = pi_base(ng);
  const Eigen::Index n = ng.base.vars();
  lp.objective(n) = 1;
  lp.objective(n + 1) = alpha;
  const LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::infeasible) feasibility_lost();
  if (out.status == LpStatus::unbounded)
    throw NoncompactError("game rejected: feasible utility set is unbounded");
  return {out.value, to_pi_point(ng, out.primal)};
}

namespace {
std::pair<Rational, PiPoint> y1_extreme_on_face(const NormalizedGame& ng, const Rational& alpha,
                                                const Rational& beta, Sense sense) {
  LpProblem lp = pi_base(ng);
  const Eigen::Index n = ng.base.vars();
  RationalVector row = RationalVector::Zero(n + 2);
  row(n) = 1;
  row(n + 1) = alpha;
  lp.add(std::move(row), Relation::eq, beta);
  lp.objective(n) = 1;
  lp.sense = sense;
  const LpOutcome out = solve_lp(lp);
  if (out.status != LpStatus::optimal) feasibility_lost();
  return {out.value, to_pi_point(ng, out.primal)};
}
}  // namespace

std::pair<Rational, PiPoint> min_y1_on_face(const NormalizedGame& ng, const Rational& alpha,
                                            const Rational& beta) {
  return y1_extreme_on_face(ng, alpha, beta, Sense::minimize);
}

std::pair<Rational, PiPoint> max_y1_on_face(const NormalizedGame& ng, const Rational& alpha,
                                            const Rational& beta) {
  return y1_extreme_on_face(ng, alpha, beta, Sense::maximize);
}

std::optional<PiPoint> pi_witness(const NormalizedGame& ng, const Rational& y1,
                                  const Rational& y2) {
  LpProblem lp = pi_base(ng);
  const Eigen::Index n = ng.base.vars();
  lp.add(unit_row(n + 2, n), Relation::eq, y1);
  lp.add(unit_row(n + 2, n + 1), Relation::eq, y2);
  const LpOutcome out = solve_lp(lp);
  if (out.status != LpStatus::optimal) return std::nullopt;
  return to_pi_point(ng, out.primal);
}

namespace {
std::optional<Rational> axis_extreme(const NormalizedGame& ng, Eigen::Index fix_col,
                                     const Rational& fix_value, Eigen::Index opt_col,
                                     Sense sense) {
  LpProblem lp = pi_base(ng);
  const Eigen::Index n = ng.base.vars();
  lp.add(unit_row(n + 2, fix_col), Relation::eq, fix_value);
  lp.objective(opt_col) = 1;
  lp.sense = sense;
  const LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::infeasible) return std::nullopt;
  if (out.status == LpStatus::unbounded)
    throw NoncompactError("game rejected: feasible utility set is unbounded");
  return out.value;
}
}  // namespace

std::optional<Rational> max_y2_given_y1(const NormalizedGame& ng, const Rational& y1) {
  return axis_extreme(ng, ng.base.vars(), y1, ng.base.vars() + 1, Sense::maximize);
}

std::optional<Rational> min_y2_given_y1(const NormalizedGame& ng, const Rational& y1) {
  return axis_extreme(ng, ng.base.vars(), y1, ng.base.vars() + 1, Sense::minimize);
}

std::optional<Rational> max_y1_given_y2(const NormalizedGame& ng, const Rational& y2) {
  return axis_extreme(ng, ng.base.vars() + 1, y2, ng.base.vars(), Sense::maximize);
}

Extremes compute_extremes(const NormalizedGame& ng) {
  const Eigen::Index n = ng.base.vars();
  LpProblem lp = pi_base(ng);
  lp.objective(n) = 1;
  LpOutcome m1 = solve_lp(lp);
  if (m1.status == LpStatus::infeasible) feasibility_lost();
  if (m1.status == LpStatus::unbounded)
    throw NoncompactError("game rejected: y1 is unbounded, the feasible set is not compact");
  const Rational l1 = m1.value;

  lp.objective(n) = 0;
  lp.objective(n + 1) = 1;
  LpOutcome m2 = solve_lp(lp);
  if (m2.status == LpStatus::unbounded)
    throw NoncompactError("game rejected: y2 is unbounded, the feasible set is not compact");
  const Rational h2 = m2.value;

  const auto l2 = max_y2_given_y1(ng, l1);
  const auto h1 = max_y1_given_y2(ng, h2);
  if (!l2 || !h1) feasibility_lost();

  Extremes ex{Vector2r(l1, *l2), Vector2r(*h1, h2)};
  if (!(ex.l(0) >= ex.h(0) && ex.h(1) >= ex.l(1)))
    throw SolverBugError("extreme points are not ordered");
  return ex;
}

AlphaRange alpha_range_at_point(const NormalizedGame& ng, const PiPoint& witness) {
  const RawRange raw = alpha_range_raw(ng, witness);
  if (!raw.supported)
    throw SolverBugError("witness point admits no supporting slope (not on the useful boundary)");
  return finalize_range(ng, witness, raw);
}

Face find_face_by_alpha(const NormalizedGame& ng, const Rational& alpha) {
  const auto [beta, w0] = support(ng, alpha);
  const auto [a1, w_lo] = min_y1_on_face(ng, alpha, beta);
  const auto [a2, w_hi] = max_y1_on_face(ng, alpha, beta);
  if (a1 < a2) {
    FacetFace f;
    f.alpha = alpha;
    f.beta = beta;
    f.low = Vector2r(a1, (beta - a1) / alpha);
    f.high = Vector2r(a2, (beta - a2) / alpha);
    return f;
  }
  const Rational a = a1;
  const Rational b = alpha.sign() > 0 ? (beta - a) / alpha : w_lo.y2;
  PiPoint witness{w_lo.x, a, b};
  const AlphaRange ar = alpha_range_at_point(ng, witness);
  if (ar.lo == ar.hi) return facet_at(ng, ar.lo, a + ar.lo * b);
  return VertexFace{ar.lo, ar.hi, Vector2r(a, b), ar.lo_capped, ar.hi_capped};
}

Face find_face_by_point(const NormalizedGame& ng, const Vector2r& point) {
  const auto w = pi_witness(ng, point(0), point(1));
  if (!w) throw InputError("point is not in the feasible polytope");
  const RawRange raw = alpha_range_raw(ng, *w);
  if (!raw.supported)
    throw InputError("point is interior or on the unsupported lower boundary of the polytope");
  const AlphaRange ar = finalize_range(ng, *w, raw);
  if (ar.lo < ar.hi)
    return VertexFace{ar.lo, ar.hi, point, ar.lo_capped, ar.hi_capped};
  return facet_at(ng, ar.lo, point(0) + ar.lo * point(1));
}

AlphaInterval compute_alpha_interval(const NormalizedGame& ng) {
  const Extremes ex = compute_extremes(ng);
  AlphaInterval out;
  out.l_point = ex.l;
  out.h_point = ex.h;
  if (same_point(ex.l, ex.h)) {
    out.collapsed = true;
    return out;
  }

  const auto wl = pi_witness(ng, ex.l(0), ex.l(1));
  const auto wh = pi_witness(ng, ex.h(0), ex.h(1));
  if (!wl || !wh) feasibility_lost();
  const AlphaRange rl = alpha_range_at_point(ng, *wl);
  const AlphaRange rh = alpha_range_at_point(ng, *wh);

  // At a corner on the y1 axis only the inner (upper) end of the slope range
  // carries information; symmetrically on the y2 axis.
  if (ex.l(1).is_zero()) {
    out.lo = rl.hi;
    out.lo_capped = rl.hi_capped;
  } else {
    out.lo = rl.lo;
    out.lo_capped = rl.lo_capped;
  }
  if (ex.h(0).is_zero()) {
    out.hi = rh.lo;
    out.hi_capped = rh.lo_capped;
  } else {
    out.hi = rh.hi;
    out.hi_capped = rh.hi_capped;
  }
  if (out.lo > out.hi) throw SolverBugError("slope interval ends are out of order");
  return out;
}

int kappa(const NormalizedGame& ng) {
  const Eigen::Index n = ng.base.vars();
  const Eigen::Index m = ng.base.rows();
  Int max_entry = 1;
  for (Eigen::Index j = 0; j < m; ++j) {
    // Clear the row to integers before measuring magnitudes.
    Int lcm_den = 1;
    auto take_den = [&](const Rational& q) { lcm_den = boost::multiprecision::lcm(lcm_den, q.denominator()); };
    for (Eigen::Index i = 0; i < n; ++i) take_den(ng.base.A(j, i));
    take_den(ng.base.b1(j));
    take_den(ng.base.b2(j));
    take_den(ng.d(j));
    auto take_mag = [&](const Rational& q) {
      Int cleared = boost::multiprecision::abs(q.numerator() * (lcm_den / q.denominator()));
      if (cleared > max_entry) max_entry = cleared;
    };
    for (Eigen::Index i = 0; i < n; ++i) take_mag(ng.base.A(j, i));
    take_mag(ng.base.b1(j));
    take_mag(ng.base.b2(j));
    take_mag(ng.d(j));
  }
  // Hadamard-style bound: all face data fits in determinant ratios of
  // (m+2)-dimensional subsystems of the cleared coefficients.
  const Int base = Int(m + 2) * (1 + max_entry);
  const Int bound = boost::multiprecision::pow(base, static_cast<unsigned>(m + 2));
  return static_cast<int>(ceil_log2(bound)) + 2;
}

Rational truncate(const Rational& x, int kappa) {
  if (x.sign() < 0) throw InputError("truncate: argument must be nonnegative");
  if (kappa < 0) throw InputError("truncate: kappa must be nonnegative");
  const Int scaled = (x.numerator() << static_cast<unsigned>(kappa)) / x.denominator();
  return Rational(scaled, Int(1) << static_cast<unsigned>(kappa));
}

namespace {

enum class Move { accept, up, down };  // up = solution lies at a larger slope

Move test_facet(const FacetFace& f, const Rational& r) {
  const Rational t_min = f.low(0) / f.beta;
  const Rational t_max = f.high(0) / f.beta;
  if (r < t_min) return Move::up;
  if (r > t_max) return Move::down;
  return Move::accept;  // closed interval: boundary ties stay on the facet
}

Move test_vertex(const VertexFace& v, const Rational& r) {
  const Rational& a = v.coords(0);
  const Rational& b = v.coords(1);
  if (a.is_zero()) return Move::down;  // y1 = 0 can never carry the solution
  if (b.is_zero()) return Move::up;
  const Rational beta1 = a + v.alpha1 * b;
  const Rational beta2 = a + v.alpha2 * b;
  if (!v.hi_capped && r * beta2 <= a) return Move::up;    // r <= a/beta2
  if (r * beta1 >= a) return Move::down;                  // r >= a/beta1
  return Move::accept;                                    // open interval
}

struct Searcher {
  const NormalizedGame& ng;
  const Game2& game;
  Rational r;
  int iterations = 0;

  Solution at_point(const Vector2r& y, Face face) const {
    const auto w = pi_witness(ng, y(0), y(1));
    if (!w) throw SolverBugError("solution point lost polytope membership");
    Solution s;
    s.y = y;
    s.v = Vector2r(y(0) + game.c1, y(1) + game.c2);
    s.x = w->x;
    s.face = std::move(face);
    s.iterations = iterations;
    return s;
  }

  Solution on_facet(const FacetFace& f) const {
    const Rational y1 = r * f.beta;
    const Rational y2 = (f.beta - y1) / f.alpha;
    return at_point(Vector2r(y1, y2), f);
  }

  Solution accept(const Face& face) const {
    if (const auto* f = std::get_if<FacetFace>(&face)) return on_facet(*f);
    return at_point(std::get<VertexFace>(face).coords, face);
  }

  // Fallback when the truncated midpoint cannot make progress: probe the
  // exact midpoint and walk face by face in the indicated direction.
  Solution walk(const Rational& from_l, const Rational& from_h) {
    Face face = find_face_by_alpha(ng, (from_l + from_h) / 2);
    ++iterations;
    const int guard = 2 * static_cast<int>(ng.base.rows()) + 8;
    for (int step = 0; step < guard; ++step) {
      Move mv;
      if (const auto* f = std::get_if<FacetFace>(&face)) {
        mv = test_facet(*f, r);
        if (mv == Move::accept) return on_facet(*f);
        face = find_face_by_point(ng, mv == Move::up ? f->low : f->high);
      } else {
        const auto& v = std::get<VertexFace>(face);
        mv = test_vertex(v, r);
        if (mv == Move::accept) return at_point(v.coords, face);
        face = find_face_by_alpha(ng, mv == Move::up ? v.alpha2 : v.alpha1);
      }
      ++iterations;
    }
    throw SolverBugError("face walk failed to locate the accepting face");
  }
};

}  // namespace

Solution solve(const Game2& game) {
  const Feasibility feas = check_feasible(game);
  if (!feas.feasible) {
    if (feas.t_star)
      throw InfeasibleGameError("game is infeasible (t* = " + format_rational(*feas.t_star) + ")",
                                *feas.t_star);
    throw InfeasibleGameError("game is infeasible (contradictory constraints)");
  }

  const NormalizedGame ng = normalize(game);
  const AlphaInterval interval = compute_alpha_interval(ng);
  Searcher searcher{ng, game, Rational(Int(game.w1), Int(game.w1 + game.w2))};

  if (interval.collapsed) {
    // One corner dominates the whole polytope in both coordinates.
    const auto w = pi_witness(ng, interval.l_point(0), interval.l_point(1));
    if (!w) feasibility_lost();
    const AlphaRange ar = alpha_range_at_point(ng, *w);
    return searcher.at_point(
        interval.l_point,
        VertexFace{ar.lo, ar.hi, interval.l_point, ar.lo_capped, ar.hi_capped});
  }

  const int kap = kappa(ng);
  const int max_iterations = 2 * kap + 8;
  const Rational min_width = pow2(-2L * kap);
  SearchState state{interval.lo, interval.hi, interval.lo, interval.hi, kap, searcher.r};

  while (true) {
    if (searcher.iterations >= max_iterations)
      throw SolverBugError("binary search exceeded its iteration bound");
    if (state.h - state.l < min_width) return searcher.walk(state.l, state.h);
    const Rational mid = truncate((state.l + state.h) / 2, kap);
    if (mid <= state.l) return searcher.walk(state.l, state.h);

    Face face = find_face_by_alpha(ng, mid);
    ++searcher.iterations;
    if (const auto* f = std::get_if<FacetFace>(&face)) {
      switch (test_facet(*f, searcher.r)) {
        case Move::accept:
          return searcher.on_facet(*f);
        case Move::up:
          state.l = mid;
          break;
        case Move::down:
          state.h = mid;
          break;
      }
    } else {
      const auto& v = std::get<VertexFace>(face);
      switch (test_vertex(v, searcher.r)) {
        case Move::accept:
          return searcher.at_point(v.coords, face);
        case Move::up:
          state.l = v.alpha2;
          break;
        case Move::down:
          state.h = v.alpha1;
          break;
      }
    }
  }
}

VerificationReport verify_solution(const Game2& game, const Solution& sol) {
  VerificationReport rep;
  auto add = [&rep](std::string name, bool pass, std::string detail = {}) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  add("utility-shift", sol.v(0) == sol.y(0) + game.c1 && sol.v(1) == sol.y(1) + game.c2,
      "v_i = y_i + c_i");
  add("gain-positive", sol.y(0).sign() > 0 && sol.y(1).sign() > 0, "y1 > 0 and y2 > 0");

  bool member = sol.x.size() == game.vars();
  if (member) {
    for (Eigen::Index i = 0; i < sol.x.size() && member; ++i) member = sol.x(i).sign() >= 0;
    const NormalizedGame ng = normalize(game);
    for (Eigen::Index j = 0; j < game.rows() && member; ++j) {
      Rational lhs = game.b1(j) * sol.y(0) + game.b2(j) * sol.y(1);
      for (Eigen::Index i = 0; i < game.vars(); ++i) lhs += game.A(j, i) * sol.x(i);
      member = lhs <= ng.d(j);
    }
  }
  add("membership", member, "(x, y1, y2) satisfies every constraint exactly");

  // z = (y1/w1)/(y2/w2), compared cross-multiplied to stay exact.
  const Rational zn = sol.y(0) * Rational(Int(game.w2));
  const Rational zd = sol.y(1) * Rational(Int(game.w1));
  if (const auto* f = std::get_if<FacetFace>(&sol.face)) {
    add("facet-form", f->alpha.sign() > 0 && f->beta.sign() > 0, "alpha > 0 and beta > 0");
    add("facet-on-line", sol.y(0) + f->alpha * sol.y(1) == f->beta, "y1 + alpha*y2 = beta");
    add("facet-tangency", zn == f->alpha * zd, "(y1/w1)/(y2/w2) = alpha");
  } else {
    const auto& v = std::get<VertexFace>(sol.face);
    add("vertex-coords", same_point(sol.y, v.coords), "solution sits on the vertex");
    add("vertex-slope-sandwich", v.alpha1 * zd < zn && zn < v.alpha2 * zd,
        "alpha1 < (y1/w1)/(y2/w2) < alpha2");
  }
  return rep;
}

}  // namespace bargain
