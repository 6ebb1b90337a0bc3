#include "pf/polarity_graph.hpp"

#include <bit>

#include "pf/errors.hpp"

namespace pf {

PolarityGraph build_polarity_graph(const Plane& pl, const Polarity& pi) {
  validate_polarity(pl, pi);
  const std::int32_t n = pl.size();
  PolarityGraph pg;
  pg.q = pl.order();
  pg.plane_source =
      pl.source() == PlaneSource::Generated ? "pg(2," + std::to_string(pl.order()) + ")" : "loaded";
  pg.polarity_kind = "explicit";
  pg.g = BitGraph(n);

  for (std::int32_t v = 0; v < n; ++v) {
    auto words = pg.g.row(v);
    for (PointIndex u : pl.line_points(pi.point_to_line[v]))
      words[u >> 6] |= std::uint64_t(1) << (u & 63);
  }

  // symmetry: u on pi(v) iff v on pi(u)
  for (std::int32_t u = 0; u < n; ++u)
    for (std::int32_t v : pg.g.neighbors(u))
      if (!pg.g.adjacent(v, u))
        fail(Errc::InvalidPolarity, "adjacency not symmetric at " + std::to_string(u) + "," +
                                        std::to_string(v));
  for (std::int32_t v = 0; v < n; ++v)
    if (pg.g.degree(v) != pg.q + 1)
      fail(Errc::InvalidPolarity, "vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(pg.g.degree(v)) + ", expected " +
                                      std::to_string(pg.q + 1));
  return pg;
}

ErContext build_er_context(const Field& f) {
  Plane plane = pg_build(f);
  Polarity pi = orthogonal_polarity(plane);
  PolarityGraph g = build_polarity_graph(plane, pi);
  g.polarity_kind = "orthogonal";
  return ErContext{f, std::move(plane), std::move(pi), std::move(g)};
}

SquareIdentityReport square_identity_check(const BitGraph& g, std::int64_t q) {
  const std::int32_t n = g.n();
  const std::int32_t words = g.words_per_row();
  SquareIdentityReport rep;
  for (std::int32_t i = 0; i < n; ++i) {
    auto ri = g.row(i);
    for (std::int32_t j = i; j < n; ++j) {
      auto rj = g.row(j);
      std::int64_t dot = 0;
      for (std::int32_t w = 0; w < words; ++w) dot += std::popcount(ri[w] & rj[w]);
      std::int64_t want = (i == j) ? q + 1 : 1;
      if (dot != want) {
        rep.pass = false;
        rep.bad_i = i;
        rep.bad_j = j;
        rep.got = dot;
        rep.expected = want;
        return rep;
      }
    }
  }
  return rep;
}

SurdBound mixing_lower_bound(std::int64_t q, std::int64_t s) {
  SurdBound b;
  b.q = q;
  std::int64_t n = q * q + q + 1;
  if (s < 0 || s > n) throw std::invalid_argument("subset size out of range");
  b.rational_part = Rational(Int(q + 1) * s * s, Int(2) * n);
  b.surd_coeff = Rational(Int(s), Int(2));
  return b;
}

}  // namespace pf
