#include "pf/graph_io.hpp"

#include <openssl/evp.h>

#include <istream>
#include <ostream>
#include <sstream>

#include "pf/errors.hpp"

namespace pf {

namespace {

void append_n(std::string& s, std::int64_t n) {
  if (n <= 62) {
    s.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    s.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      s.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    s.push_back(126);
    s.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      s.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

std::string to_graph6(const BitGraph& g) {
  const std::int32_t n = g.n();
  std::string s;
  append_n(s, n);
  int bit = 5;
  char cur = 0;
  for (std::int32_t j = 1; j < n; ++j)
    for (std::int32_t i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) cur |= 1 << bit;
      if (--bit < 0) {
        s.push_back(static_cast<char>(cur + 63));
        cur = 0;
        bit = 5;
      }
    }
  if (bit != 5) s.push_back(static_cast<char>(cur + 63));
  return s;
}

BitGraph from_graph6(const std::string& s) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (pos + k > s.size()) fail(Errc::BadFormat, "truncated graph6 string");
  };
  need(1);
  std::int64_t n;
  if (s[pos] != 126) {
    n = s[pos++] - 63;
  } else {
    ++pos;
    need(1);
    int bytes = 3;
    if (s[pos] == 126) {
      ++pos;
      bytes = 6;
    }
    need(bytes);
    n = 0;
    for (int i = 0; i < bytes; ++i) n = (n << 6) | (s[pos++] - 63);
  }
  if (n < 0) fail(Errc::BadFormat, "bad graph6 vertex count");
  BitGraph g(static_cast<std::int32_t>(n));
  std::int64_t nbits = n * (n - 1) / 2;
  if (static_cast<std::int64_t>(s.size() - pos) != (nbits + 5) / 6)
    fail(Errc::BadFormat, "graph6 length does not match vertex count");
  std::int64_t b = 0;
  for (std::int32_t j = 1; j < n; ++j)
    for (std::int32_t i = 0; i < j; ++i, ++b) {
      int c = s[pos + b / 6] - 63;
      if (c < 0 || c > 63) fail(Errc::BadFormat, "bad graph6 byte");
      if ((c >> (5 - b % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

void write_edge_list(const BitGraph& g, std::ostream& out) {
  for (const auto& e : g.edges()) out << e[0] << " " << e[1] << "\n";
}

BitGraph read_edge_list(std::istream& in, std::int32_t force_n) {
  std::vector<std::array<std::int32_t, 2>> edges;
  std::int64_t u, v, n = 0;
  while (in >> u >> v) {
    if (u < 0 || v < 0) fail(Errc::BadFormat, "negative vertex in edge list");
    edges.push_back({static_cast<std::int32_t>(u), static_cast<std::int32_t>(v)});
    n = std::max({n, u + 1, v + 1});
  }
  if (!in.eof()) fail(Errc::BadFormat, "non-numeric token in edge list");
  if (force_n >= 0) {
    if (n > force_n) fail(Errc::BadFormat, "edge list mentions vertex beyond declared n");
    n = force_n;
  }
  BitGraph g(static_cast<std::int32_t>(n));
  for (const auto& e : edges) g.add_edge(e[0], e[1]);
  return g;
}

std::string canonical_edge_list(const BitGraph& g) {
  std::ostringstream os;
  for (const auto& e : g.edges())
    if (e[0] != e[1]) os << e[0] << " " << e[1] << "\n";
  return os.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    fail(Errc::IoFailure, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

}  // namespace pf
