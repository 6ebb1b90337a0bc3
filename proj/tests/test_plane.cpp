#include "doctest.h"

#include <sstream>

#include "pf/plane.hpp"

using namespace pf;

TEST_CASE("pg_build sizes: Fano and friends") {
  Plane p2 = pg_build(Field::make(2, 1));
  CHECK(p2.size() == 7);
  CHECK(p2.order() == 2);

  Plane p3 = pg_build(Field::make(3, 1));
  CHECK(p3.size() == 13);
  for (LineIndex l = 0; l < p3.size(); ++l) CHECK(p3.line_points(l).size() == 4);

  Plane p4 = pg_build(Field::make(2, 2));
  CHECK(p4.size() == 21);
}

TEST_CASE("plane counts and incidence regularity up to q = 32") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32}) {
    Plane pl = pg_build(field_of_order(q));
    CHECK(pl.size() == q * q + q + 1);
    for (PointIndex p = 0; p < pl.size(); ++p)
      CHECK(static_cast<std::int64_t>(pl.point_lines(p).size()) == q + 1);
    pl.validate_axioms();  // throws on violation
  }
}

TEST_CASE("orthogonal polarity: involution and absolute points") {
  Plane pl = pg_build(Field::make(3, 1));
  Polarity pi = orthogonal_polarity(pl);
  for (PointIndex p = 0; p < pl.size(); ++p)
    CHECK(pi.line_to_point[pi.point_to_line[p]] == p);

  // oracle: count canonical points with x^2+y^2+z^2 = 0 by enumeration
  const Field& f = pl.field();
  int absolute = 0;
  for (PointIndex p = 0; p < pl.size(); ++p) {
    const Triple& c = pl.point_coords(p);
    if (pl.dot(c, c).value == 0) ++absolute;
  }
  CHECK(absolute == 4);  // q + 1 for q = 3

  int on_own_polar = 0;
  for (PointIndex p = 0; p < pl.size(); ++p)
    if (pl.incident(p, pi.point_to_line[p])) ++on_own_polar;
  CHECK(on_own_polar == 4);
  CHECK(f.order() == 3);
}

TEST_CASE("polarity of PG(2,2): polar line of (1,0,0)") {
  Plane pl = pg_build(Field::make(2, 1));
  Polarity pi = orthogonal_polarity(pl);
  const Field& f = pl.field();
  PointIndex p = pl.point_index({f.one(), f.zero(), f.zero()});
  LineIndex l = pi.point_to_line[p];
  // oracle: the points with first coordinate 0
  std::vector<PointIndex> expect;
  for (PointIndex v = 0; v < pl.size(); ++v)
    if (pl.point_coords(v)[0].value == 0) expect.push_back(v);
  CHECK(expect.size() == 3);
  CHECK(pl.line_points(l) == expect);
}

TEST_CASE("incidence preservation, exhaustive for q <= 9") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    Plane pl = pg_build(field_of_order(q));
    Polarity pi = orthogonal_polarity(pl);
    for (PointIndex p = 0; p < pl.size(); ++p)
      for (LineIndex l = 0; l < pl.size(); ++l)
        CHECK(pl.incident(p, l) == pl.incident(pi.line_to_point[l], pi.point_to_line[p]));
  }
}

TEST_CASE("plane save/load round trip preserves incidence") {
  Plane pl = pg_build(Field::make(3, 1));
  std::stringstream ss;
  save_plane(pl, ss);
  Plane re = load_plane(ss);
  CHECK(re.order() == 3);
  CHECK(re.size() == pl.size());
  for (LineIndex l = 0; l < pl.size(); ++l) CHECK(re.line_points(l) == pl.line_points(l));
  CHECK(re.source() == PlaneSource::Loaded);
  CHECK_FALSE(re.has_coordinates());
  CHECK_THROWS_AS(orthogonal_polarity(re), Error);
}

TEST_CASE("Fano plane from a handwritten file") {
  // the classical 7-line presentation
  std::stringstream ss("order 2\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n");
  Plane pl = load_plane(ss);
  CHECK(pl.order() == 2);
  CHECK(pl.size() == 7);
}

TEST_CASE("two lines sharing two points is rejected") {
  std::stringstream ss("0 1 2\n0 1 3\n0 4 5\n1 4 6\n2 3 4\n2 5 6\n3 5 6\n");
  try {
    load_plane(ss);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AxiomViolation);
  }
}

TEST_CASE("ragged line file is rejected") {
  std::stringstream ss("0 1 2\n0 3 4 5\n");
  try {
    load_plane(ss);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RaggedLine);
  }
}

TEST_CASE("polarity file round trip on a loaded plane") {
  Plane pl = pg_build(Field::make(2, 1));
  Polarity pi = orthogonal_polarity(pl);
  std::stringstream plane_ss, pol_ss;
  save_plane(pl, plane_ss);
  save_polarity(pi, pol_ss);
  Plane re = load_plane(plane_ss);
  Polarity rp = load_polarity(re, pol_ss);
  CHECK(rp.point_to_line == pi.point_to_line);

  // a permutation that is not incidence-preserving must be rejected
  std::stringstream bad;
  bad << "0 1\n1 0\n";
  for (int i = 2; i < 7; ++i) bad << i << " " << i << "\n";
  CHECK_THROWS_AS(load_polarity(re, bad), Error);
}

TEST_CASE("conic oval points") {
  SUBCASE("q=2: three points") {
    Plane pl = pg_build(Field::make(2, 1));
    const Field& f = pl.field();
    Oval o = conic_oval(pl);
    REQUIRE(o.points.size() == 3);
    std::vector<PointIndex> expect{
        pl.point_index({f.one(), f.zero(), f.zero()}),   // t = 0
        pl.point_index({f.one(), f.one(), f.one()}),     // t = 1
        pl.point_index({f.zero(), f.zero(), f.one()})};  // parabola's infinite point
    std::sort(expect.begin(), expect.end());
    CHECK(o.points == expect);
  }
  SUBCASE("q=3: 4 points, no 3 collinear by exhaustive triple check") {
    Plane pl = pg_build(Field::make(3, 1));
    Oval o = conic_oval(pl);
    REQUIRE(o.points.size() == 4);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) {
        LineIndex l = pl.line_through(o.points[a], o.points[b]);
        for (std::size_t c = b + 1; c < 4; ++c) CHECK_FALSE(pl.incident(o.points[c], l));
      }
  }
  SUBCASE("q=4: five points") {
    Plane pl = pg_build(Field::make(2, 2));
    CHECK(conic_oval(pl).points.size() == 5);
  }
  SUBCASE("sizes are q+1 for every q up to 32") {
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32})
      CHECK(conic_oval(pg_build(field_of_order(q))).points.size() ==
            static_cast<std::size_t>(q + 1));
  }
}

TEST_CASE("line classification against the closed forms") {
  auto comb2 = [](std::int64_t x) { return x * (x - 1) / 2; };
  SUBCASE("conic ovals, k = q+1") {
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      Plane pl = pg_build(field_of_order(q));
      Oval o = conic_oval(pl);
      LineClassification lc = classify_lines(pl, o.points);
      CHECK(lc.exterior == comb2(q));  // C(q,2) + C(1,2)
      CHECK(lc.tangent == q + 1);      // (q+1) * 1
      CHECK(lc.secant == comb2(q + 1));
      CHECK(lc.exterior + lc.tangent + lc.secant == q * q + q + 1);
    }
  }
  SUBCASE("q=4 oval: (6, 5, 10)") {
    Plane pl = pg_build(Field::make(2, 2));
    LineClassification lc = classify_lines(pl, conic_oval(pl).points);
    CHECK(lc.exterior == 6);
    CHECK(lc.tangent == 5);
    CHECK(lc.secant == 10);
  }
  SUBCASE("single point: q+1 tangents, no secants") {
    Plane pl = pg_build(Field::make(5, 1));
    LineClassification lc = classify_lines(pl, {0});
    CHECK(lc.tangent == 6);
    CHECK(lc.secant == 0);
    CHECK(lc.exterior == pl.size() - 6);
  }
  SUBCASE("q=5 oval: 15 secants") {
    Plane pl = pg_build(Field::make(5, 1));
    LineClassification lc = classify_lines(pl, conic_oval(pl).points);
    CHECK(lc.secant == 15);
  }
  SUBCASE("general k-arc formulas, k < q+1") {
    for (std::int64_t q : {5, 7, 8}) {
      Plane pl = pg_build(field_of_order(q));
      Oval o = conic_oval(pl);
      for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<PointIndex> arc(o.points.begin(), o.points.begin() + k);
        LineClassification lc = classify_lines(pl, arc);
        CHECK(lc.exterior == comb2(q) + comb2(q + 2 - static_cast<std::int64_t>(k)));
        CHECK(lc.tangent == static_cast<std::int64_t>(k) * (q + 2 - static_cast<std::int64_t>(k)));
        CHECK(lc.secant == comb2(static_cast<std::int64_t>(k)));
      }
    }
  }
  SUBCASE("a set with 3 collinear points is not an arc") {
    Plane pl = pg_build(Field::make(3, 1));
    std::vector<PointIndex> bad(pl.line_points(0).begin(), pl.line_points(0).begin() + 3);
    try {
      classify_lines(pl, bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotAnArc);
    }
  }
}
