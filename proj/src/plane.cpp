#include "pf/plane.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pf {

namespace {

// Deterministic pair sampler for axiom spot-checks on big planes.
struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 11;
  }
};

Triple canonicalize(const Field& f, Triple v) {
  for (int i = 0; i < 3; ++i) {
    if (v[i].value != 0) {
      FieldElement s = f.inv(v[i]);
      for (int j = 0; j < 3; ++j) v[j] = f.mul(v[j], s);
      return v;
    }
  }
  throw std::invalid_argument("zero triple has no projective point");
}

// number of common entries of two sorted vectors
template <typename T>
int count_common(const std::vector<T>& a, const std::vector<T>& b) {
  int r = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else {
      ++r;
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

bool Plane::incident(PointIndex p, LineIndex l) const {
  const auto& pts = line_points_[l];
  return std::binary_search(pts.begin(), pts.end(), p);
}

LineIndex Plane::line_through(PointIndex a, PointIndex b) const {
  const auto& la = point_lines_[a];
  const auto& lb = point_lines_[b];
  std::size_t i = 0, j = 0;
  while (i < la.size() && j < lb.size()) {
    if (la[i] < lb[j])
      ++i;
    else if (lb[j] < la[i])
      ++j;
    else
      return la[i];
  }
  fail(Errc::AxiomViolation,
       "no line through points " + std::to_string(a) + " and " + std::to_string(b));
}

const Field& Plane::field() const {
  if (!field_) fail(Errc::NoCoordinates, "loaded plane has no field");
  return *field_;
}

const Triple& Plane::point_coords(PointIndex p) const {
  if (!has_coordinates()) fail(Errc::NoCoordinates, "loaded plane has no coordinates");
  return point_coords_[p];
}

const Triple& Plane::line_coords(LineIndex l) const {
  if (!has_coordinates()) fail(Errc::NoCoordinates, "loaded plane has no coordinates");
  return line_coords_[l];
}

FieldElement Plane::dot(const Triple& a, const Triple& b) const {
  const Field& f = field();
  FieldElement s = f.zero();
  for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

PointIndex Plane::point_index(const Triple& v) const {
  const Field& f = field();
  Triple c = canonicalize(f, v);
  const std::int64_t q = q_;
  if (c[0].value == 1) return static_cast<PointIndex>(c[1].value * q + c[2].value);
  if (c[1].value == 1) return static_cast<PointIndex>(q * q + c[2].value);
  return static_cast<PointIndex>(q * q + q);
}

LineIndex Plane::line_index(const Triple& v) const { return point_index(v); }

void Plane::index_lines_by_points() {
  point_lines_.assign(n_, {});
  for (LineIndex l = 0; l < static_cast<LineIndex>(line_points_.size()); ++l)
    for (PointIndex p : line_points_[l]) point_lines_[p].push_back(l);
  for (auto& v : point_lines_) std::sort(v.begin(), v.end());
}

void Plane::validate_axioms(bool force_exhaustive) const {
  const std::int64_t n = n_;
  if (static_cast<std::int64_t>(line_points_.size()) != n)
    fail(Errc::AxiomViolation, "expected " + std::to_string(n) + " lines, found " +
                                   std::to_string(line_points_.size()));
  for (PointIndex p = 0; p < n; ++p)
    if (static_cast<std::int64_t>(point_lines_[p].size()) != q_ + 1)
      fail(Errc::AxiomViolation,
           "point " + std::to_string(p) + " lies on " + std::to_string(point_lines_[p].size()) +
               " lines, expected " + std::to_string(q_ + 1));

  const std::int64_t pair_budget = 700000;
  bool exhaustive = force_exhaustive || n * (n - 1) / 2 <= pair_budget;

  auto check_point_pair = [&](PointIndex a, PointIndex b) {
    int c = count_common(point_lines_[a], point_lines_[b]);
    if (c != 1)
      fail(Errc::AxiomViolation, "points " + std::to_string(a) + "," + std::to_string(b) +
                                     " lie on " + std::to_string(c) + " common lines");
  };
  auto check_line_pair = [&](LineIndex a, LineIndex b) {
    int c = count_common(line_points_[a], line_points_[b]);
    if (c != 1)
      fail(Errc::AxiomViolation, "lines " + std::to_string(a) + "," + std::to_string(b) +
                                     " meet in " + std::to_string(c) + " points");
  };

  if (exhaustive) {
    for (PointIndex a = 0; a < n; ++a)
      for (PointIndex b = a + 1; b < n; ++b) check_point_pair(a, b);
    for (LineIndex a = 0; a < n; ++a)
      for (LineIndex b = a + 1; b < n; ++b) check_line_pair(a, b);
  } else {
    Lcg rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n));
    for (int t = 0; t < 200000; ++t) {
      PointIndex a = static_cast<PointIndex>(rng.next() % n);
      PointIndex b = static_cast<PointIndex>(rng.next() % n);
      if (a == b) continue;
      check_point_pair(a, b);
      check_line_pair(a, b);
    }
  }

  // quadrilateral: four points, no three collinear
  if (q_ >= 2) {
    PointIndex a = line_points_[0][0], b = line_points_[0][1];
    LineIndex lab = 0;
    PointIndex c = -1;
    for (PointIndex p = 0; p < n; ++p)
      if (!incident(p, lab)) {
        c = p;
        break;
      }
    if (c < 0) fail(Errc::AxiomViolation, "all points collinear");
    LineIndex lac = line_through(a, c), lbc = line_through(b, c);
    bool found = false;
    for (PointIndex d = 0; d < n && !found; ++d)
      found = !incident(d, lab) && !incident(d, lac) && !incident(d, lbc);
    if (!found) fail(Errc::AxiomViolation, "no quadrilateral exists");
  }
}

Plane pg_build(const Field& f) {
  Plane pl;
  pl.q_ = f.order();
  const std::int64_t q = pl.q_;
  pl.n_ = static_cast<std::int32_t>(q * q + q + 1);
  pl.source_ = PlaneSource::Generated;
  pl.field_ = std::make_shared<Field>(f);

  pl.point_coords_.reserve(pl.n_);
  for (std::int64_t y = 0; y < q; ++y)
    for (std::int64_t z = 0; z < q; ++z)
      pl.point_coords_.push_back({f.one(), f.element(y), f.element(z)});
  for (std::int64_t z = 0; z < q; ++z)
    pl.point_coords_.push_back({f.zero(), f.one(), f.element(z)});
  pl.point_coords_.push_back({f.zero(), f.zero(), f.one()});
  pl.line_coords_ = pl.point_coords_;

  pl.line_points_.assign(pl.n_, {});
  for (LineIndex l = 0; l < pl.n_; ++l) {
    auto& pts = pl.line_points_[l];
    pts.reserve(q + 1);
    for (PointIndex p = 0; p < pl.n_; ++p)
      if (pl.dot(pl.point_coords_[p], pl.line_coords_[l]).value == 0) pts.push_back(p);
    if (static_cast<std::int64_t>(pts.size()) != q + 1)
      fail(Errc::AxiomViolation, "line " + std::to_string(l) + " carries " +
                                     std::to_string(pts.size()) + " points");
  }
  pl.index_lines_by_points();
  pl.validate_axioms();
  return pl;
}

Polarity orthogonal_polarity(const Plane& pl) {
  if (!pl.has_coordinates())
    fail(Errc::NoCoordinates, "orthogonal polarity needs coordinates; supply a polarity file");
  const std::int32_t n = pl.size();
  Polarity pi;
  pi.point_to_line.resize(n);
  pi.line_to_point.assign(n, -1);
  for (PointIndex p = 0; p < n; ++p) {
    LineIndex l = pl.line_index(pl.point_coords(p));
    pi.point_to_line[p] = l;
    pi.line_to_point[l] = p;
  }
  validate_polarity(pl, pi);
  return pi;
}

void validate_polarity(const Plane& pl, const Polarity& pi) {
  const std::int32_t n = pl.size();
  if (static_cast<std::int32_t>(pi.point_to_line.size()) != n ||
      static_cast<std::int32_t>(pi.line_to_point.size()) != n)
    fail(Errc::InvalidPolarity, "permutation size does not match the plane");
  std::vector<char> seen(n, 0);
  for (PointIndex p = 0; p < n; ++p) {
    LineIndex l = pi.point_to_line[p];
    if (l < 0 || l >= n || seen[l])
      fail(Errc::InvalidPolarity, "point_to_line is not a bijection");
    seen[l] = 1;
    if (pi.line_to_point[l] != p)
      fail(Errc::InvalidPolarity, "line_to_point is not the inverse map (not an involution)");
  }
  // incidence preservation: P on L iff pi(L) on pi(P)
  for (PointIndex p = 0; p < n; ++p)
    for (LineIndex l : pl.point_lines(p))
      if (!pl.incident(pi.line_to_point[l], pi.point_to_line[p]))
        fail(Errc::InvalidPolarity, "incidence not preserved at point " + std::to_string(p) +
                                        ", line " + std::to_string(l));
}

Plane load_plane(std::istream& in) {
  std::vector<std::vector<PointIndex>> rows;
  std::optional<std::int64_t> header_q;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (first) {
      first = false;
      std::string w;
      ls >> w;
      if (w == "order") {
        std::int64_t q;
        if (!(ls >> q)) fail(Errc::BadFormat, "bad order header");
        header_q = q;
        continue;
      }
      ls.clear();
      ls.seekg(0);
    }
    std::vector<PointIndex> row;
    std::int64_t v;
    while (ls >> v) row.push_back(static_cast<PointIndex>(v));
    if (!ls.eof()) fail(Errc::BadFormat, "non-numeric token in plane file");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(Errc::BadFormat, "empty plane file");

  std::size_t width = rows[0].size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != width)
      fail(Errc::RaggedLine, "line " + std::to_string(i) + " has " +
                                 std::to_string(rows[i].size()) + " points, expected " +
                                 std::to_string(width));
  if (width < 3) fail(Errc::RaggedLine, "lines must carry at least 3 points");
  std::int64_t q = static_cast<std::int64_t>(width) - 1;
  if (header_q && *header_q != q)
    fail(Errc::BadFormat, "order header says " + std::to_string(*header_q) +
                              " but lines carry " + std::to_string(width) + " points");

  Plane pl;
  pl.q_ = q;
  pl.n_ = static_cast<std::int32_t>(q * q + q + 1);
  pl.source_ = PlaneSource::Loaded;

  if (static_cast<std::int64_t>(rows.size()) != pl.n_)
    fail(Errc::AxiomViolation, "expected " + std::to_string(pl.n_) + " lines, file has " +
                                   std::to_string(rows.size()));
  std::vector<char> seen_point(pl.n_, 0);
  for (auto& row : rows) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      fail(Errc::BadFormat, "repeated point inside a line row");
    for (PointIndex p : row) {
      if (p < 0 || p >= pl.n_)
        fail(Errc::AxiomViolation, "point index " + std::to_string(p) + " out of range");
      seen_point[p] = 1;
    }
  }
  for (PointIndex p = 0; p < pl.n_; ++p)
    if (!seen_point[p])
      fail(Errc::AxiomViolation, "point " + std::to_string(p) + " lies on no line");

  pl.line_points_ = std::move(rows);
  pl.index_lines_by_points();
  pl.validate_axioms();
  return pl;
}

Plane load_plane_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoFailure, "cannot open " + path);
  return load_plane(in);
}

void save_plane(const Plane& pl, std::ostream& out) {
  out << "order " << pl.order() << "\n";
  for (LineIndex l = 0; l < pl.size(); ++l) {
    const auto& pts = pl.line_points(l);
    for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << pts[i];
    out << "\n";
  }
}

Polarity load_polarity(const Plane& pl, std::istream& in) {
  const std::int32_t n = pl.size();
  Polarity pi;
  pi.point_to_line.assign(n, -1);
  pi.line_to_point.assign(n, -1);
  std::int64_t p, l;
  while (in >> p >> l) {
    if (p < 0 || p >= n || l < 0 || l >= n)
      fail(Errc::InvalidPolarity, "index out of range in polarity file");
    if (pi.point_to_line[p] != -1) fail(Errc::InvalidPolarity, "duplicate point row");
    pi.point_to_line[p] = static_cast<LineIndex>(l);
    pi.line_to_point[l] = static_cast<PointIndex>(p);
  }
  for (PointIndex i = 0; i < n; ++i)
    if (pi.point_to_line[i] < 0)
      fail(Errc::InvalidPolarity, "point " + std::to_string(i) + " missing from polarity file");
  validate_polarity(pl, pi);
  return pi;
}

Polarity load_polarity_file(const Plane& pl, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoFailure, "cannot open " + path);
  return load_polarity(pl, in);
}

void save_polarity(const Polarity& pi, std::ostream& out) {
  for (std::size_t p = 0; p < pi.point_to_line.size(); ++p)
    out << p << " " << pi.point_to_line[p] << "\n";
}

LineClassification classify_lines(const Plane& pl, const std::vector<PointIndex>& arc) {
  std::vector<char> in_arc(pl.size(), 0);
  for (PointIndex p : arc) {
    if (p < 0 || p >= pl.size()) throw std::invalid_argument("arc point out of range");
    in_arc[p] = 1;
  }
  LineClassification r;
  for (LineIndex l = 0; l < pl.size(); ++l) {
    int hits = 0;
    for (PointIndex p : pl.line_points(l)) hits += in_arc[p];
    if (hits >= 3)
      fail(Errc::NotAnArc, "line " + std::to_string(l) + " meets the set in " +
                               std::to_string(hits) + " points");
    if (hits == 0)
      ++r.exterior;
    else if (hits == 1)
      ++r.tangent;
    else
      ++r.secant;
  }
  return r;
}

Oval make_arc(const Plane& pl, std::vector<PointIndex> pts) {
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw std::invalid_argument("repeated point in arc");
  classify_lines(pl, pts);  // throws NotAnArc on a 3-point line
  return Oval{std::move(pts), pl.order()};
}

Oval conic_oval(const Plane& pl) {
  const Field& f = pl.field();
  std::vector<PointIndex> pts;
  pts.reserve(pl.order() + 1);
  for (FieldElement t : f.elements())
    pts.push_back(pl.point_index({f.one(), t, f.mul(t, t)}));
  pts.push_back(pl.point_index({f.zero(), f.zero(), f.one()}));
  return make_arc(pl, std::move(pts));
}

}  // namespace pf
