#include "pf/field.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pf {

namespace {

constexpr std::int64_t kTableLimit = 1024;

std::vector<int> decode(std::uint32_t value, std::int64_t p, int k) {
  std::vector<int> c(k, 0);
  for (int i = 0; i < k; ++i) {
    c[i] = static_cast<int>(value % p);
    value = static_cast<std::uint32_t>(value / p);
  }
  return c;
}

std::uint32_t encode(const std::vector<int>& c, std::int64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return static_cast<std::uint32_t>(v);
}

}  // namespace

namespace poly {

int degree(const std::vector<int>& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<int>(i);
  return -1;
}

std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
  }
  return r;
}

// remainder of a modulo monic b
std::vector<int> mod(std::vector<int> a, const std::vector<int>& b, std::int64_t p) {
  int db = degree(b);
  for (int da = degree(a); da >= db && db >= 0; da = degree(a)) {
    std::int64_t c = a[da];  // b monic, so the quotient coefficient is just c
    for (int i = 0; i <= db; ++i) {
      std::int64_t t = (a[da - db + i] - c * b[i]) % p;
      a[da - db + i] = static_cast<int>((t + p) % p);
    }
  }
  a.resize(db >= 0 ? db : 0);
  return a;
}

bool is_irreducible(const std::vector<int>& f, std::int64_t p) {
  int k = degree(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  // trial division by every monic polynomial of degree d <= k/2
  for (int d = 1; 2 * d <= k; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::vector<int> g = decode(static_cast<std::uint32_t>(idx), p, d);
      g.push_back(1);
      if (degree(mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace poly

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(std::int64_t q, std::int64_t& p, int& k) {
  if (q < 2) return false;
  std::int64_t d = 2;
  while (d * d <= q && q % d != 0) ++d;
  p = (d * d <= q) ? d : q;
  std::int64_t m = q;
  k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return m == 1;
}

Field field_of_order(std::int64_t q) {
  std::int64_t p;
  int k;
  if (!prime_power(q, p, k))
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return Field::make(p, k);
}

Field Field::make(std::int64_t p, int k, const std::optional<std::vector<int>>& modulus) {
  if (!is_prime(p)) fail(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");

  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = 1;
  for (int i = 0; i < k; ++i) {
    f.q_ *= p;
    if (f.q_ > (std::int64_t(1) << 31)) throw std::invalid_argument("field order too large");
  }

  if (modulus) {
    std::vector<int> m = *modulus;
    if (static_cast<int>(m.size()) != k + 1)
      throw std::invalid_argument("modulus must have k+1 coefficients");
    for (int& c : m) c = static_cast<int>(((c % p) + p) % p);
    if (m[k] != 1) throw std::invalid_argument("modulus must be monic");
    if (!poly::is_irreducible(m, p))
      fail(Errc::ReduciblePolynomial, "supplied modulus factors over GF(" + std::to_string(p) + ")");
    f.modulus_ = m;
  } else {
    // lexicographically smallest monic irreducible, low-degree coefficients first
    std::vector<int> m(k + 1, 0);
    m[k] = 1;
    bool found = false;
    std::function<bool(int)> search = [&](int pos) {
      if (pos == k) return poly::is_irreducible(m, p);
      for (int c = 0; c < p; ++c) {
        m[pos] = c;
        if (search(pos + 1)) return true;
      }
      m[pos] = 0;
      return false;
    };
    found = search(0);
    if (!found) fail(Errc::ReduciblePolynomial, "no irreducible polynomial found");  // unreachable
    f.modulus_ = m;
  }

  if (f.q_ <= kTableLimit) {
    const std::int64_t q = f.q_;
    f.add_table_.resize(q * q);
    f.mul_table_.resize(q * q);
    f.neg_table_.resize(q);
    f.inv_table_.assign(q, 0);
    for (std::int64_t a = 0; a < q; ++a) {
      std::vector<int> ca = decode(static_cast<std::uint32_t>(a), p, k);
      for (std::int64_t b = 0; b < q; ++b) {
        std::vector<int> cb = decode(static_cast<std::uint32_t>(b), p, k);
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = static_cast<int>((ca[i] + cb[i]) % p);
        f.add_table_[a * q + b] = static_cast<std::uint16_t>(encode(s, p));
        std::vector<int> prod = poly::mod(poly::mul(ca, cb, p), f.modulus_, p);
        prod.resize(k, 0);
        std::uint32_t pv = encode(prod, p);
        f.mul_table_[a * q + b] = static_cast<std::uint16_t>(pv);
        if (pv == 1) {
          f.inv_table_[a] = static_cast<std::uint32_t>(b);
          f.inv_table_[b] = static_cast<std::uint32_t>(a);
        }
      }
      std::vector<int> n(k);
      for (int i = 0; i < k; ++i) n[i] = static_cast<int>((p - ca[i]) % p);
      f.neg_table_[a] = encode(n, p);
    }
    for (std::int64_t a = 1; a < q; ++a)
      if (f.inv_table_[a] == 0) fail(Errc::ReduciblePolynomial, "nonzero element without inverse");
  }
  return f;
}

FieldElement Field::element(std::int64_t index) const {
  if (index < 0 || index >= q_)
    fail(Errc::FieldMismatch, "element index out of range");
  return {static_cast<std::uint32_t>(index)};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> v(q_);
  for (std::int64_t i = 0; i < q_; ++i) v[i] = {static_cast<std::uint32_t>(i)};
  return v;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (!add_table_.empty()) return {add_table_[static_cast<std::size_t>(a.value) * q_ + b.value]};
  std::vector<int> ca = decode(a.value, p_, k_), cb = decode(b.value, p_, k_);
  for (int i = 0; i < k_; ++i) ca[i] = static_cast<int>((ca[i] + cb[i]) % p_);
  return {encode(ca, p_)};
}

FieldElement Field::neg(FieldElement a) const {
  check(a);
  if (!neg_table_.empty()) return {neg_table_[a.value]};
  std::vector<int> c = decode(a.value, p_, k_);
  for (int i = 0; i < k_; ++i) c[i] = static_cast<int>((p_ - c[i]) % p_);
  return {encode(c, p_)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul_direct(FieldElement a, FieldElement b) const {
  std::vector<int> prod = poly::mod(
      poly::mul(decode(a.value, p_, k_), decode(b.value, p_, k_), p_), modulus_, p_);
  prod.resize(k_, 0);
  return {encode(prod, p_)};
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (!mul_table_.empty()) return {mul_table_[static_cast<std::size_t>(a.value) * q_ + b.value]};
  return mul_direct(a, b);
}

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
  check(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  FieldElement r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.value == 0) fail(Errc::ZeroInverse, "zero has no multiplicative inverse");
  if (!inv_table_.empty()) return {inv_table_[a.value]};
  return pow(a, q_ - 2);
}

std::vector<int> Field::coeffs(FieldElement a) const {
  check(a);
  return decode(a.value, p_, k_);
}

FieldElement Field::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > k_) throw std::invalid_argument("too many coefficients");
  std::vector<int> r(k_, 0);
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = static_cast<int>(((c[i] % p_) + p_) % p_);
  return {encode(r, p_)};
}

std::string Field::descriptor() const {
  std::ostringstream os;
  os << p_ << "^" << k_ << ":";
  for (int i = 0; i <= k_; ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

Field Field::parse_descriptor(const std::string& s) {
  auto caret = s.find('^');
  auto colon = s.find(':');
  if (caret == std::string::npos || colon == std::string::npos || caret > colon)
    fail(Errc::BadFormat, "field descriptor must look like p^k:c0,c1,...,ck");
  std::int64_t p = 0;
  int k = 0;
  try {
    p = std::stoll(s.substr(0, caret));
    k = std::stoi(s.substr(caret + 1, colon - caret - 1));
  } catch (const std::exception&) {
    fail(Errc::BadFormat, "bad p^k in field descriptor");
  }
  std::vector<int> coeffs;
  std::stringstream cs(s.substr(colon + 1));
  std::string tok;
  while (std::getline(cs, tok, ','))
    try {
      coeffs.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(Errc::BadFormat, "bad coefficient in field descriptor");
    }
  return make(p, k, coeffs);
}

std::string Field::to_string(FieldElement a) const {
  check(a);
  if (k_ == 1) return std::to_string(a.value);
  std::vector<int> c = decode(a.value, p_, k_);
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < k_; ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

}  // namespace pf
