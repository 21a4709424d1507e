#include "bargain/dg2.hpp"

#include <unordered_map>
#include <unordered_set>

namespace bargain {

void Dg2Instance::validate() const {
  std::unordered_set<std::string> known(vertices.begin(), vertices.end());
  if (known.size() != vertices.size()) throw InputError("graph: duplicate vertex id");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!known.count(edges[e].from) || !known.count(edges[e].to))
      throw InputError("graph: edge " + std::to_string(e) + " references an undeclared vertex");
    if (edges[e].cap.sign() < 0)
      throw InputError("graph: edge " + std::to_string(e) + " has negative capacity");
  }
  for (const auto& p : pairs) {
    if (!known.count(p.source) || !known.count(p.sink))
      throw InputError("graph: pair references an undeclared vertex");
    if (p.source == p.sink) throw InputError("graph: pair has identical source and sink");
    if (p.c.sign() < 0) throw InputError("graph: disagreement flow must be nonnegative");
    if (p.w < 1) throw InputError("graph: clout must be a positive integer");
  }
}

namespace {
// Flow variable of commodity i on edge e.
inline Eigen::Index flow_col(std::size_t n_edges, int commodity, std::size_t e) {
  return static_cast<Eigen::Index>(commodity * n_edges + e);
}
}  // namespace

Game2 build_dg2(const Dg2Instance& inst) {
  inst.validate();
  const std::size_t ne = inst.edges.size();
  const auto n = static_cast<Eigen::Index>(2 * ne);

  // Two inequality rows encode each equality (conservation and the rows
  // tying the utility variables to net source outflow).
  const Eigen::Index m = static_cast<Eigen::Index>(ne)                        // capacities
                         + 4 * static_cast<Eigen::Index>(inst.vertices.size() - 2)  // conservation
                         + 4;                                                 // utility ties

  Game2 g;
  g.A = RationalMatrix::Zero(m, n);
  g.b1 = RationalVector::Zero(m);
  g.b2 = RationalVector::Zero(m);
  g.e = RationalVector::Zero(m);
  g.c1 = inst.pairs[0].c;
  g.c2 = inst.pairs[1].c;
  g.w1 = inst.pairs[0].w;
  g.w2 = inst.pairs[1].w;

  Eigen::Index row = 0;
  for (std::size_t e = 0; e < ne; ++e) {
    g.A(row, flow_col(ne, 0, e)) = 1;
    g.A(row, flow_col(ne, 1, e)) = 1;
    g.e(row) = inst.edges[e].cap;
    ++row;
  }

  for (int i = 0; i < 2; ++i) {
    const auto& pair = inst.pairs[static_cast<std::size_t>(i)];
    for (const auto& v : inst.vertices) {
      if (v == pair.source || v == pair.sink) continue;
      RationalVector net = RationalVector::Zero(n);  // inflow - outflow at v
      for (std::size_t e = 0; e < ne; ++e) {
        if (inst.edges[e].to == v) net(flow_col(ne, i, e)) += 1;
        if (inst.edges[e].from == v) net(flow_col(ne, i, e)) -= 1;
      }
      g.A.row(row++) = net.transpose();
      g.A.row(row++) = -net.transpose();
    }
    // v_i = net outflow of the commodity's source.
    RationalVector out = RationalVector::Zero(n);
    for (std::size_t e = 0; e < ne; ++e) {
      if (inst.edges[e].from == pair.source) out(flow_col(ne, i, e)) += 1;
      if (inst.edges[e].to == pair.source) out(flow_col(ne, i, e)) -= 1;
    }
    auto& b = i == 0 ? g.b1 : g.b2;
    g.A.row(row) = -out.transpose();
    b(row) = 1;
    ++row;
    g.A.row(row) = out.transpose();
    b(row) = -1;
    ++row;
  }
  return g;
}

Dg2Flows extract_flows(const Dg2Instance& inst, const Solution& sol) {
  const std::size_t ne = inst.edges.size();
  if (sol.x.size() != static_cast<Eigen::Index>(2 * ne))
    throw InputError("solution witness does not match the instance's edge count");

  Dg2Flows flows;
  flows.edge_flow.resize(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    for (int i = 0; i < 2; ++i) {
      const Rational& f = sol.x(flow_col(ne, i, e));
      if (f.sign() < 0) throw SolverBugError("negative edge flow in solution witness");
      flows.edge_flow[e][static_cast<std::size_t>(i)] = f;
    }
    if (flows.edge_flow[e][0] + flows.edge_flow[e][1] > inst.edges[e].cap)
      throw SolverBugError("edge flow exceeds capacity in solution witness");
  }

  for (int i = 0; i < 2; ++i) {
    const auto& pair = inst.pairs[static_cast<std::size_t>(i)];
    for (const auto& v : inst.vertices) {
      if (v == pair.source || v == pair.sink) continue;
      Rational net;
      for (std::size_t e = 0; e < ne; ++e) {
        if (inst.edges[e].to == v) net += flows.edge_flow[e][static_cast<std::size_t>(i)];
        if (inst.edges[e].from == v) net -= flows.edge_flow[e][static_cast<std::size_t>(i)];
      }
      if (!net.is_zero()) throw SolverBugError("flow conservation violated at vertex " + v);
    }
    Rational total;
    for (std::size_t e = 0; e < ne; ++e) {
      if (inst.edges[e].from == pair.source) total += flows.edge_flow[e][static_cast<std::size_t>(i)];
      if (inst.edges[e].to == pair.source) total -= flows.edge_flow[e][static_cast<std::size_t>(i)];
    }
    if (total != sol.v(i)) throw SolverBugError("total routed flow disagrees with the solution");
    flows.totals(i) = total;
  }
  return flows;
}

}  // namespace bargain
