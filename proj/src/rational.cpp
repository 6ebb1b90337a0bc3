#include "pf/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace pf {

Int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

std::string to_string(const Rational& r) {
  return r.numerator().str() + "/" + r.denominator().str();
}

Int ceil_rational(const Rational& r) {
  Int q = r.numerator() / r.denominator();  // truncates toward zero
  Int rem = r.numerator() % r.denominator();
  if (rem > 0) ++q;
  return q;
}

bool SurdBound::at_most(const Int& e) const {
  Rational d = rational_part - Rational(e);
  if (d <= Rational(0)) return true;
  // d <= surd_coeff * sqrt(q), both sides nonnegative: square.
  return d * d <= surd_coeff * surd_coeff * Rational(Int(q));
}

Int SurdBound::ceil() const {
  Int hi = ceil_rational(rational_part);
  Rational b2 = surd_coeff * surd_coeff * Rational(Int(q));
  Int a = isqrt_floor(b2.numerator() / b2.denominator());
  Int lo = hi - a - 3;  // strictly below the bound; hi is at or above it
  // smallest t in (lo, hi] with at_most(t); at_most is monotone in t
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (at_most(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double SurdBound::approx() const {
  double r = boost::rational_cast<double>(rational_part);
  double c = boost::rational_cast<double>(surd_coeff);
  return r - c * std::sqrt(static_cast<double>(q));
}

}  // namespace pf
