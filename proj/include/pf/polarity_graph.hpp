#pragma once

#include <string>

#include "pf/graph.hpp"
#include "pf/plane.hpp"
#include "pf/rational.hpp"

namespace pf {

/// Polarity graph G_pi: vertices are the plane's points, u ~ v iff u lies
/// on pi(v), with a loop at every absolute point. Every vertex has degree
/// exactly q+1 (a loop adds 1).
struct PolarityGraph {
  BitGraph g;
  std::int64_t q = 0;
  std::string plane_source;   // "pg(2,q)" | "loaded"
  std::string polarity_kind;  // "orthogonal" | "explicit"

  std::int32_t n() const { return g.n(); }
  std::vector<std::int32_t> absolute_points() const { return g.loop_vertices(); }
};

/// Builds G_pi and verifies symmetry, the q+1 degree invariant and the
/// loop/absolute-point correspondence. Throws Errc::InvalidPolarity.
PolarityGraph build_polarity_graph(const Plane& pl, const Polarity& pi);

/// Everything the Erdos-Renyi orthogonal polarity graph pipeline needs.
struct ErContext {
  Field field;
  Plane plane;
  Polarity polarity;
  PolarityGraph graph;
};

/// PG(2,q) with the orthogonal polarity: the graph ER_q.
ErContext build_er_context(const Field& f);

/// Outcome of the exact integer check A^2 = J + qI, which certifies the
/// spectrum {q+1, +-sqrt(q)} without any floating-point eigensolve.
struct SquareIdentityReport {
  bool pass = true;
  std::int32_t bad_i = -1, bad_j = -1;   // first violating pair, row-major
  std::int64_t got = -1, expected = -1;  // entry values at that pair
};

SquareIdentityReport square_identity_check(const BitGraph& g, std::int64_t q);

/// Lemma bound e(S) >= (q+1)|S|^2 / (2(q^2+q+1)) - sqrt(q)|S|/2 as an exact
/// rational-plus-surd value.
SurdBound mixing_lower_bound(std::int64_t q, std::int64_t s);

}  // namespace pf
