#pragma once

#include <array>
#include <string>
#include <vector>

#include "bargain/game.hpp"

namespace bargain {

struct Dg2Edge {
  std::string from, to;
  Rational cap;
};

struct Dg2Pair {
  std::string source, sink;
  Rational c;       // disagreement flow value
  long long w = 1;  // clout
};

/// Capacitated directed graph with two source-sink pairs; each pair is a
/// player whose utility is the total flow it routes.
struct Dg2Instance {
  std::vector<std::string> vertices;
  std::vector<Dg2Edge> edges;
  std::array<Dg2Pair, 2> pairs;

  void validate() const;
};

struct Dg2Flows {
  std::vector<std::array<Rational, 2>> edge_flow;  // per edge, per commodity
  Vector2r totals;
};

/// Encodes the flow polytope as a bargaining game: variables are the per-edge
/// per-commodity flows, utilities are the net outflows of the two sources.
Game2 build_dg2(const Dg2Instance& inst);

/// Unpacks a solution witness into named edge flows, re-checking capacity
/// and conservation exactly.
Dg2Flows extract_flows(const Dg2Instance& inst, const Solution& sol);

}  // namespace bargain
