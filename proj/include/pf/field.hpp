#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pf/errors.hpp"

namespace pf {

/// Element of GF(p^k) in the polynomial basis. `value` encodes the
/// coefficient vector (c0..c_{k-1}, constant term first) as the base-p
/// integer sum c_i * p^i, so ordering elements by `value` gives the
/// canonical enumeration order (zero first). Elements carry no reference
/// to their field; every operation takes the Field explicitly.
struct FieldElement {
  std::uint32_t value = 0;
  auto operator<=>(const FieldElement&) const = default;
};

/// Exact arithmetic in GF(q), q = p^k, with a named monic irreducible
/// modulus polynomial stored constant-term-first. Immutable once built.
class Field {
 public:
  /// When no modulus is given, picks the lexicographically smallest monic
  /// irreducible of degree k over GF(p), comparing coefficient vectors
  /// low-degree-first. A supplied modulus must be monic of degree k and is
  /// checked for irreducibility by trial division against all monic
  /// polynomials of degree <= k/2.
  static Field make(std::int64_t p, int k,
                    const std::optional<std::vector<int>>& modulus = std::nullopt);

  std::int64_t p() const { return p_; }
  int k() const { return k_; }
  std::int64_t order() const { return q_; }
  /// Length k+1, constant term first, last coefficient 1.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::int64_t index) const;
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::int64_t e) const;

  std::vector<int> coeffs(FieldElement a) const;
  FieldElement from_coeffs(const std::vector<int>& c) const;

  /// "p^k:c0,c1,...,ck", e.g. "2^2:1,1,1".
  std::string descriptor() const;
  static Field parse_descriptor(const std::string& s);

  std::string to_string(FieldElement a) const;

 private:
  Field() = default;
  void check(FieldElement a) const {
    if (a.value >= static_cast<std::uint64_t>(q_))
      fail(Errc::FieldMismatch, "element " + std::to_string(a.value) +
                                    " out of range for field of order " + std::to_string(q_));
  }
  FieldElement mul_direct(FieldElement a, FieldElement b) const;

  std::int64_t p_ = 0;
  int k_ = 0;
  std::int64_t q_ = 0;
  std::vector<int> modulus_;
  // dense op tables, built when q <= kTableLimit
  std::vector<std::uint16_t> add_table_, mul_table_;
  std::vector<std::uint32_t> inv_table_, neg_table_;
};

bool is_prime(std::int64_t n);
/// Decomposes q = p^k with p prime; false if q is not a prime power.
bool prime_power(std::int64_t q, std::int64_t& p, int& k);
/// Field of the given prime-power order with the default modulus; throws
/// std::invalid_argument when q is not a prime power.
Field field_of_order(std::int64_t q);

namespace poly {
// Dense polynomials over GF(p), coefficients constant-term-first, int in [0,p).
int degree(const std::vector<int>& f);
std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b, std::int64_t p);
std::vector<int> mod(std::vector<int> a, const std::vector<int>& b, std::int64_t p);
bool is_irreducible(const std::vector<int>& f, std::int64_t p);
}  // namespace poly

}  // namespace pf
