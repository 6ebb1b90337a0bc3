#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pf/field.hpp"

namespace pf {

using PointIndex = std::int32_t;
using LineIndex = std::int32_t;

/// Homogeneous coordinate triple; canonical form has its first nonzero
/// coordinate equal to 1, so each projective point has a unique
/// representative of shape (1,y,z), (0,1,z) or (0,0,1).
using Triple = std::array<FieldElement, 3>;

enum class PlaneSource { Generated, Loaded };

/// A finite projective plane of order q: q^2+q+1 points and lines, each
/// line carrying q+1 points. Generated planes keep the PG(2,q) coordinates;
/// loaded planes are pure incidence structures. Immutable after build.
class Plane {
 public:
  std::int64_t order() const { return q_; }
  std::int32_t size() const { return n_; }  // number of points = number of lines
  PlaneSource source() const { return source_; }
  bool has_coordinates() const { return field_ != nullptr; }

  const std::vector<PointIndex>& line_points(LineIndex l) const { return line_points_[l]; }
  const std::vector<LineIndex>& point_lines(PointIndex p) const { return point_lines_[p]; }
  bool incident(PointIndex p, LineIndex l) const;
  /// The unique line through two distinct points.
  LineIndex line_through(PointIndex a, PointIndex b) const;

  const Field& field() const;
  const Triple& point_coords(PointIndex p) const;
  const Triple& line_coords(LineIndex l) const;
  /// Index of the canonical point with the given (not necessarily canonical,
  /// nonzero) coordinates.
  PointIndex point_index(const Triple& v) const;
  LineIndex line_index(const Triple& v) const;
  FieldElement dot(const Triple& a, const Triple& b) const;

  /// Checks the projective-plane axioms: every pair of distinct points on
  /// exactly one common line, every pair of distinct lines meeting in
  /// exactly one point, and some quadrilateral. Exhaustive when the pair
  /// count is small, deterministically sampled above that. Throws
  /// Errc::AxiomViolation with an offending pair.
  void validate_axioms(bool force_exhaustive = false) const;

  friend Plane pg_build(const Field& f);
  friend Plane load_plane(std::istream& in);

 private:
  Plane() = default;
  void index_lines_by_points();

  std::int64_t q_ = 0;
  std::int32_t n_ = 0;
  PlaneSource source_ = PlaneSource::Generated;
  std::shared_ptr<const Field> field_;  // null for loaded planes
  std::vector<Triple> point_coords_, line_coords_;
  std::vector<std::vector<PointIndex>> line_points_;  // sorted
  std::vector<std::vector<LineIndex>> point_lines_;   // sorted
};

/// The Desarguesian plane PG(2,q) over the given field, with points and
/// lines enumerated in canonical coordinate order: all (1,y,z) by (y,z),
/// then (0,1,z), then (0,0,1).
Plane pg_build(const Field& f);

/// Incidence-preserving involution swapping points and lines.
struct Polarity {
  std::vector<LineIndex> point_to_line;
  std::vector<PointIndex> line_to_point;
};

/// The orthogonal polarity of a generated plane: the point with canonical
/// coordinates v maps to the line with the same coordinates. Requires
/// coordinates; loaded planes must supply an explicit permutation.
Polarity orthogonal_polarity(const Plane& pl);

/// Validates that `pi` is a polarity of `pl` (bijective, involutive by
/// construction of the pair file, incidence-preserving).
void validate_polarity(const Plane& pl, const Polarity& pi);

/// Plane file: first row "order q", then one row per line listing its
/// 0-based point indices.
Plane load_plane(std::istream& in);
Plane load_plane_file(const std::string& path);
void save_plane(const Plane& pl, std::ostream& out);

/// Polarity file: rows "point_index line_index".
Polarity load_polarity(const Plane& pl, std::istream& in);
Polarity load_polarity_file(const Plane& pl, const std::string& path);
void save_polarity(const Polarity& pi, std::ostream& out);

/// A (q+1)-arc: no three points collinear.
struct Oval {
  std::vector<PointIndex> points;  // sorted
  std::int64_t q = 0;
};

/// The conic oval {(1,t,t^2) : t in GF(q)} plus the parabola's point at
/// infinity (0,0,1). Verified to be an arc at construction.
Oval conic_oval(const Plane& pl);

/// Validates that `pts` is a k-arc of `pl` and wraps it. For ovals pass
/// k = q+1. Exhaustive arc check for q <= 32, sampled above.
Oval make_arc(const Plane& pl, std::vector<PointIndex> pts);

struct LineClassification {
  std::int64_t exterior = 0;
  std::int64_t tangent = 0;
  std::int64_t secant = 0;
};

/// Labels every line by its intersection size with the arc (0, 1 or 2);
/// throws Errc::NotAnArc if some line meets it in 3 or more points.
LineClassification classify_lines(const Plane& pl, const std::vector<PointIndex>& arc);

}  // namespace pf
