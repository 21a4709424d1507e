#include "bargain/oracle.hpp"

#include <cmath>
#include <limits>

namespace bargain {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

template <class F>
double golden_argmax(double lo, double hi, F&& f, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  const double stop = tol * std::max(1.0, std::fabs(hi - lo));
  while (b - a > stop) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

OracleResult numeric_maximize(const NormalizedGame& ng, double tol) {
  if (!(tol > 0)) throw InputError("oracle: tolerance must be positive");
  const double w1 = static_cast<double>(ng.base.w1);
  const double w2 = static_cast<double>(ng.base.w2);
  const Extremes ex = compute_extremes(ng);

  const auto objective = [&](double y1, double y2) {
    if (!(y1 > 0) || !(y2 > 0)) return kNegInf;
    return w1 * std::log(y1) + w2 * std::log(y2);
  };

  const auto upper_y2 = [&](double y1) -> double {
    const auto v = max_y2_given_y1(ng, Rational::from_double(y1));
    return v ? v->to_double() : kNegInf;
  };
  const auto upper_y1 = [&](double y2) -> double {
    const auto v = max_y1_given_y2(ng, Rational::from_double(y2));
    return v ? v->to_double() : kNegInf;
  };

  const double l1 = ex.l(0).to_double();
  const double h2 = ex.h(1).to_double();

  const double y1a = golden_argmax(
      0.0, l1, [&](double y1) { return objective(y1, upper_y2(y1)); }, tol);
  const double y2a = upper_y2(y1a);

  const double y2b = golden_argmax(
      0.0, h2, [&](double y2) { return objective(upper_y1(y2), y2); }, tol);
  const double y1b = upper_y1(y2b);

  OracleResult res;
  res.method = "golden-section-boundary";
  res.tolerance = tol;
  if (objective(y1a, y2a) >= objective(y1b, y2b)) {
    res.y1 = y1a;
    res.y2 = y2a;
  } else {
    res.y1 = y1b;
    res.y2 = y2b;
  }
  res.objective = objective(res.y1, res.y2);
  return res;
}

namespace {

bool same_geometry(const Face& a, const Face& b) {
  if (const auto* fa = std::get_if<FacetFace>(&a)) {
    const auto* fb = std::get_if<FacetFace>(&b);
    return fb && fa->alpha == fb->alpha && fa->beta == fb->beta &&
           same_point(fa->low, fb->low) && same_point(fa->high, fb->high);
  }
  const auto* vb = std::get_if<VertexFace>(&b);
  return vb && same_point(std::get<VertexFace>(a).coords, vb->coords);
}

VertexFace bare_vertex(const Vector2r& p) { return VertexFace{Rational(0), Rational(0), p}; }

// Facet through two boundary points, the first having the larger y1.
std::optional<FacetFace> chord(const Vector2r& high, const Vector2r& low) {
  if (low(1) == high(1)) return std::nullopt;
  FacetFace f;
  f.alpha = (high(0) - low(0)) / (low(1) - high(1));
  f.beta = high(0) + f.alpha * high(1);
  f.low = low;
  f.high = high;
  return f;
}

// Probe classification from segment geometry alone.
Face probe_face_geometry(const NormalizedGame& ng, const Rational& alpha) {
  const auto [beta, w] = support(ng, alpha);
  const auto [a1, w_lo] = min_y1_on_face(ng, alpha, beta);
  const auto [a2, w_hi] = max_y1_on_face(ng, alpha, beta);
  if (alpha.sign() > 0) {
    if (a1 < a2) {
      return FacetFace{alpha, beta, Vector2r(a1, (beta - a1) / alpha),
                       Vector2r(a2, (beta - a2) / alpha)};
    }
    return bare_vertex(Vector2r(a1, (beta - a1) / alpha));
  }
  // Slope zero: the optimal face is the vertical piece y1 = beta.
  const auto top = max_y2_given_y1(ng, beta);
  const auto bottom = min_y2_given_y1(ng, beta);
  if (!top || !bottom) throw SolverBugError("support face lost feasibility");
  if (*top == *bottom) return bare_vertex(Vector2r(beta, *top));
  return FacetFace{Rational(0), beta, Vector2r(beta, *top), Vector2r(beta, *bottom)};
}

}  // namespace

SweepResult brute_force_faces(const NormalizedGame& ng, int grid) {
  if (grid < 2) throw InputError("sweep: grid must be at least 2");
  SweepResult res;
  res.interval = compute_alpha_interval(ng);

  if (res.interval.collapsed) {
    const auto w = pi_witness(ng, res.interval.l_point(0), res.interval.l_point(1));
    if (!w) throw SolverBugError("collapsed interval point lost feasibility");
    const AlphaRange ar = alpha_range_at_point(ng, *w);
    res.faces.push_back(
        VertexFace{ar.lo, ar.hi, res.interval.l_point, ar.lo_capped, ar.hi_capped});
    return res;
  }

  std::vector<Face> raw;
  std::vector<int> probe_to_raw;
  const Rational span = res.interval.hi - res.interval.lo;
  for (int k = 0; k < grid; ++k) {
    const Rational alpha = res.interval.lo + span * Rational(k) / Rational(grid - 1);
    res.probe_alpha.push_back(alpha);
    Face f = probe_face_geometry(ng, alpha);
    if (raw.empty() || !same_geometry(raw.back(), f)) raw.push_back(std::move(f));
    probe_to_raw.push_back(static_cast<int>(raw.size()) - 1);
  }

  // Splice in the faces the grid stepped over: consecutive distinct probe
  // faces must share an endpoint, otherwise the connecting vertex/facet is
  // reconstructed from the segment geometry.
  std::vector<int> raw_to_out(raw.size());
  auto endpoint_toward_h = [](const Face& f) {
    return std::holds_alternative<FacetFace>(f) ? std::get<FacetFace>(f).low
                                                : std::get<VertexFace>(f).coords;
  };
  auto endpoint_toward_l = [](const Face& f) {
    return std::holds_alternative<FacetFace>(f) ? std::get<FacetFace>(f).high
                                                : std::get<VertexFace>(f).coords;
  };
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i > 0) {
      const Vector2r from = endpoint_toward_h(raw[i - 1]);  // smaller y1 side
      const Vector2r to = endpoint_toward_l(raw[i]);
      const bool prev_facet = std::holds_alternative<FacetFace>(raw[i - 1]);
      const bool next_facet = std::holds_alternative<FacetFace>(raw[i]);
      if (same_point(from, to)) {
        if (prev_facet && next_facet) res.faces.push_back(bare_vertex(from));
      } else {
        if (prev_facet) res.faces.push_back(bare_vertex(from));
        if (auto f = chord(from, to)) res.faces.push_back(*f);
        if (next_facet) res.faces.push_back(bare_vertex(to));
      }
    }
    raw_to_out[i] = static_cast<int>(res.faces.size());
    res.faces.push_back(raw[i]);
  }
  for (int k = 0; k < grid; ++k)
    res.probe_face.push_back(raw_to_out[static_cast<std::size_t>(probe_to_raw[static_cast<std::size_t>(k)])]);

  // Vertex slope ranges come from the adjacent facets; the outer ends of the
  // boundary walk fall back to the search interval.
  for (std::size_t i = 0; i < res.faces.size(); ++i) {
    auto* v = std::get_if<VertexFace>(&res.faces[i]);
    if (!v) continue;
    if (i > 0 && std::holds_alternative<FacetFace>(res.faces[i - 1])) {
      v->alpha1 = std::get<FacetFace>(res.faces[i - 1]).alpha;
    } else {
      v->alpha1 = res.interval.lo;
      v->lo_capped = res.interval.lo_capped;
    }
    if (i + 1 < res.faces.size() && std::holds_alternative<FacetFace>(res.faces[i + 1])) {
      v->alpha2 = std::get<FacetFace>(res.faces[i + 1]).alpha;
    } else {
      v->alpha2 = res.interval.hi;
      v->hi_capped = res.interval.hi_capped;
    }
  }
  return res;
}

Game2 adnb2_game(const Adnb2Instance& inst) {
  inst.validate();
  const auto g = static_cast<Eigen::Index>(inst.goods());
  const Eigen::Index n = 2 * g;  // x_1j then x_2j
  const Eigen::Index m = g + 4;  // packing rows plus two utility ties

  Game2 game;
  game.A = RationalMatrix::Zero(m, n);
  game.b1 = RationalVector::Zero(m);
  game.b2 = RationalVector::Zero(m);
  game.e = RationalVector::Zero(m);
  game.c1 = inst.c1;
  game.c2 = inst.c2;
  game.w1 = inst.w1;
  game.w2 = inst.w2;

  Eigen::Index row = 0;
  for (Eigen::Index j = 0; j < g; ++j) {
    game.A(row, j) = 1;
    game.A(row, g + j) = 1;
    game.e(row) = inst.amounts.empty() ? Rational(1) : inst.amounts[static_cast<std::size_t>(j)];
    ++row;
  }
  for (int i = 0; i < 2; ++i) {
    const auto& u = i == 0 ? inst.u1 : inst.u2;
    auto& b = i == 0 ? game.b1 : game.b2;
    for (Eigen::Index j = 0; j < g; ++j)
      game.A(row, i * g + j) = -Rational(u[static_cast<std::size_t>(j)]);
    b(row) = 1;
    ++row;
    for (Eigen::Index j = 0; j < g; ++j)
      game.A(row, i * g + j) = Rational(u[static_cast<std::size_t>(j)]);
    b(row) = -1;
    ++row;
  }
  return game;
}

Solution adnb2_via_lnb2(const Adnb2Instance& inst) { return solve(adnb2_game(inst)); }

}  // namespace bargain
