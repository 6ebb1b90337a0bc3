#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace pf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

/// C(n, k); 0 when k < 0 or k > n.
Int binomial(std::int64_t n, std::int64_t k);

/// Largest r with r*r <= n. Requires n >= 0.
Int isqrt_floor(const Int& n);

/// "num/den" with den always printed, e.g. "72/13", "5/1".
std::string to_string(const Rational& r);

/// Smallest integer >= r.
Int ceil_rational(const Rational& r);

/// A value of the form  rational_part - surd_coeff * sqrt(q)  with
/// surd_coeff >= 0. Comparisons against integers are decided by squaring,
/// so no floating point enters any certified inequality.
struct SurdBound {
  Rational rational_part{0};
  Rational surd_coeff{0};
  std::int64_t q = 0;

  /// bound <= e ?
  bool at_most(const Int& e) const;
  /// bound > e ?
  bool exceeds(const Int& e) const { return !at_most(e); }
  /// Smallest integer >= bound (so e >= bound for integer e iff e >= this).
  Int ceil() const;
  /// Display value only; never used in a certified comparison.
  double approx() const;
};

}  // namespace pf
