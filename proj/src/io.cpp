#include "bargain/io.hpp"

#include <fstream>

namespace bargain {

namespace {

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

long long int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw InputError(where + ": expected an integer");
  return j.get<long long>();
}

std::string str_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

RationalVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  RationalVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Json vector_to_json(const RationalVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(rational_to_json(v(i)));
  return a;
}

Vector2r pair_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected a pair");
  return Vector2r(rational_from_json(j[0], where + "[0]"), rational_from_json(j[1], where + "[1]"));
}

Json pair_to_json(const Vector2r& p) {
  return Json::array({rational_to_json(p(0)), rational_to_json(p(1))});
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected a rational (integer or \"p/q\" string)");
}

Json rational_to_json(const Rational& r) { return format_rational(r); }

Game2 game_from_json(const Json& j) {
  Game2 g;
  const Json& w = need(j, "w", "game");
  if (!w.is_array() || w.size() != 2) throw InputError("game: field \"w\" must be [int, int]");
  g.w1 = int_from_json(w[0], "game: w[0]");
  g.w2 = int_from_json(w[1], "game: w[1]");
  const Vector2r c = pair_from_json(need(j, "c", "game"), "game: c");
  g.c1 = c(0);
  g.c2 = c(1);
  const Json& a = need(j, "A", "game");
  if (!a.is_array()) throw InputError("game: field \"A\" must be an array of rows");
  const auto m = static_cast<Eigen::Index>(a.size());
  Eigen::Index n = 0;
  for (Eigen::Index r = 0; r < m; ++r) {
    RationalVector row = vector_from_json(a[static_cast<std::size_t>(r)],
                                          "game: A[" + std::to_string(r) + "]");
    if (r == 0) {
      n = row.size();
      g.A = RationalMatrix::Zero(m, n);
    } else if (row.size() != n) {
      throw InputError("game: A[" + std::to_string(r) + "] has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n));
    }
    g.A.row(r) = row.transpose();
  }
  if (m == 0) g.A = RationalMatrix::Zero(0, 0);
  g.b1 = vector_from_json(need(j, "b1", "game"), "game: b1");
  g.b2 = vector_from_json(need(j, "b2", "game"), "game: b2");
  g.e = vector_from_json(need(j, "e", "game"), "game: e");
  g.validate();
  return g;
}

Dg2Instance dg2_from_json(const Json& j) {
  Dg2Instance inst;
  const Json& verts = need(j, "vertices", "graph");
  if (!verts.is_array()) throw InputError("graph: field \"vertices\" must be an array");
  for (std::size_t i = 0; i < verts.size(); ++i)
    inst.vertices.push_back(str_from_json(verts[i], "graph: vertices[" + std::to_string(i) + "]"));

  const Json& edges = need(j, "edges", "graph");
  if (!edges.is_array()) throw InputError("graph: field \"edges\" must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "graph: edges[" + std::to_string(i) + "]";
    Dg2Edge e;
    e.from = str_from_json(need(edges[i], "from", where), where + ".from");
    e.to = str_from_json(need(edges[i], "to", where), where + ".to");
    e.cap = rational_from_json(need(edges[i], "cap", where), where + ".cap");
    inst.edges.push_back(std::move(e));
  }

  const Json& pairs = need(j, "pairs", "graph");
  if (!pairs.is_array() || pairs.size() != 2)
    throw InputError("graph: field \"pairs\" must list exactly two source-sink pairs");
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string where = "graph: pairs[" + std::to_string(i) + "]";
    Dg2Pair& p = inst.pairs[i];
    p.source = str_from_json(need(pairs[i], "s", where), where + ".s");
    p.sink = str_from_json(need(pairs[i], "t", where), where + ".t");
    p.c = rational_from_json(need(pairs[i], "c", where), where + ".c");
    p.w = int_from_json(need(pairs[i], "w", where), where + ".w");
  }
  inst.validate();
  return inst;
}

Adnb2Instance adnb2_from_json(const Json& j) {
  Adnb2Instance inst;
  const Json& u = need(j, "u", "market");
  if (!u.is_array() || u.size() != 2)
    throw InputError("market: field \"u\" must be two utility rows");
  for (std::size_t i = 0; i < 2; ++i) {
    if (!u[i].is_array()) throw InputError("market: u[" + std::to_string(i) + "] must be an array");
    auto& row = i == 0 ? inst.u1 : inst.u2;
    for (std::size_t k = 0; k < u[i].size(); ++k)
      row.push_back(Int(int_from_json(u[i][k], "market: u[" + std::to_string(i) + "][" +
                                                   std::to_string(k) + "]")));
  }
  if (j.contains("amounts")) {
    const Json& am = j.at("amounts");
    if (!am.is_array()) throw InputError("market: field \"amounts\" must be an array");
    for (std::size_t k = 0; k < am.size(); ++k)
      inst.amounts.push_back(
          rational_from_json(am[k], "market: amounts[" + std::to_string(k) + "]"));
  }
  const Vector2r c = pair_from_json(need(j, "c", "market"), "market: c");
  inst.c1 = c(0);
  inst.c2 = c(1);
  const Json& w = need(j, "w", "market");
  if (!w.is_array() || w.size() != 2) throw InputError("market: field \"w\" must be [int, int]");
  inst.w1 = int_from_json(w[0], "market: w[0]");
  inst.w2 = int_from_json(w[1], "market: w[1]");
  inst.validate();
  return inst;
}

Json face_to_json(const Face& f) {
  Json j;
  if (const auto* facet = std::get_if<FacetFace>(&f)) {
    j["kind"] = "facet";
    j["alpha"] = rational_to_json(facet->alpha);
    j["beta"] = rational_to_json(facet->beta);
    j["endpoint_low"] = pair_to_json(facet->low);
    j["endpoint_high"] = pair_to_json(facet->high);
  } else {
    const auto& v = std::get<VertexFace>(f);
    j["kind"] = "vertex";
    j["alpha1"] = rational_to_json(v.alpha1);
    j["alpha2"] = rational_to_json(v.alpha2);
    j["coords"] = pair_to_json(v.coords);
    if (v.lo_capped) j["alpha1_capped"] = true;
    if (v.hi_capped) j["alpha2_capped"] = true;
  }
  return j;
}

Face face_from_json(const Json& j) {
  const std::string kind = str_from_json(need(j, "kind", "face"), "face: kind");
  if (kind == "facet") {
    FacetFace f;
    f.alpha = rational_from_json(need(j, "alpha", "face"), "face: alpha");
    f.beta = rational_from_json(need(j, "beta", "face"), "face: beta");
    f.low = pair_from_json(need(j, "endpoint_low", "face"), "face: endpoint_low");
    f.high = pair_from_json(need(j, "endpoint_high", "face"), "face: endpoint_high");
    return f;
  }
  if (kind != "vertex") throw InputError("face: unknown kind \"" + kind + "\"");
  VertexFace v;
  v.alpha1 = rational_from_json(need(j, "alpha1", "face"), "face: alpha1");
  v.alpha2 = rational_from_json(need(j, "alpha2", "face"), "face: alpha2");
  v.coords = pair_from_json(need(j, "coords", "face"), "face: coords");
  v.lo_capped = j.value("alpha1_capped", false);
  v.hi_capped = j.value("alpha2_capped", false);
  return v;
}

Json solution_to_json(const Solution& s) {
  Json j;
  j["status"] = "solved";
  j["v"] = pair_to_json(s.v);
  j["y"] = pair_to_json(s.y);
  j["x"] = vector_to_json(s.x);
  j["face"] = face_to_json(s.face);
  j["iterations"] = s.iterations;
  return j;
}

Solution solution_from_json(const Json& j) {
  Solution s;
  s.v = pair_from_json(need(j, "v", "solution"), "solution: v");
  s.y = pair_from_json(need(j, "y", "solution"), "solution: y");
  s.x = vector_from_json(need(j, "x", "solution"), "solution: x");
  s.face = face_from_json(need(j, "face", "solution"));
  s.iterations = static_cast<int>(int_from_json(need(j, "iterations", "solution"), "solution: iterations"));
  return s;
}

Json report_to_json(const VerificationReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  Json j;
  j["checks"] = std::move(checks);
  j["all_pass"] = rep.all_pass();
  return j;
}

Json flows_to_json(const Dg2Instance& inst, const Dg2Flows& flows) {
  Json edges = Json::array();
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    Json item;
    item["from"] = inst.edges[e].from;
    item["to"] = inst.edges[e].to;
    item["f1"] = rational_to_json(flows.edge_flow[e][0]);
    item["f2"] = rational_to_json(flows.edge_flow[e][1]);
    edges.push_back(std::move(item));
  }
  Json j;
  j["edges"] = std::move(edges);
  j["totals"] = pair_to_json(flows.totals);
  return j;
}

Json equilibrium_to_json(const Adnb2Instance& inst, const Adnb2Equilibrium& eq) {
  Json j;
  j["status"] = "solved";
  Json prices = Json::array(), alloc1 = Json::array(), alloc2 = Json::array();
  for (std::size_t k = 0; k < eq.prices.size(); ++k) {
    prices.push_back(rational_to_json(eq.prices[k]));
    alloc1.push_back(rational_to_json(eq.alloc[k][0]));
    alloc2.push_back(rational_to_json(eq.alloc[k][1]));
  }
  j["prices"] = std::move(prices);
  j["alloc"] = Json::array({std::move(alloc1), std::move(alloc2)});
  j["v"] = Json::array({rational_to_json(eq.v1), rational_to_json(eq.v2)});
  j["bang_per_buck"] = Json::array({rational_to_json(eq.gamma1), rational_to_json(eq.gamma2)});
  j["money"] = Json::array({rational_to_json(eq.m1), rational_to_json(eq.m2)});
  if (eq.split_good) j["split_good"] = *eq.split_good;
  Json goods = Json::array(), amounts = Json::array();
  for (std::size_t k = 0; k < inst.goods(); ++k) {
    goods.push_back(Json::array({inst.u1[k].str(), inst.u2[k].str()}));
    amounts.push_back(rational_to_json(inst.amounts.empty() ? Rational(1) : inst.amounts[k]));
  }
  j["goods_u"] = std::move(goods);
  j["goods_amount"] = std::move(amounts);
  return j;
}

Json oracle_to_json(const OracleResult& res) {
  Json j;
  j["y"] = Json::array({res.y1, res.y2});
  j["objective"] = res.objective;
  j["method"] = res.method;
  j["tolerance"] = res.tolerance;
  return j;
}

Json sweep_to_json(const SweepResult& sweep) {
  Json faces = Json::array();
  for (const auto& f : sweep.faces) faces.push_back(face_to_json(f));
  Json j;
  j["faces"] = std::move(faces);
  j["interval"] = Json::array(
      {rational_to_json(sweep.interval.lo), rational_to_json(sweep.interval.hi)});
  j["collapsed"] = sweep.interval.collapsed;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("parse failure in " + path + ": " + e.what());
  }
}

}  // namespace bargain
