#include "pf/graph.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace pf {

BitGraph::BitGraph(std::int32_t n) : n_(n), stride_((n + 63) / 64), bits_(size_t(n) * stride_, 0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void BitGraph::add_edge(std::int32_t u, std::int32_t v) {
  row_ptr(u)[v >> 6] |= std::uint64_t(1) << (v & 63);
  row_ptr(v)[u >> 6] |= std::uint64_t(1) << (u & 63);
}

void BitGraph::remove_edge(std::int32_t u, std::int32_t v) {
  row_ptr(u)[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
  row_ptr(v)[u >> 6] &= ~(std::uint64_t(1) << (u & 63));
}

std::int64_t BitGraph::degree(std::int32_t v) const {
  std::int64_t d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::int64_t BitGraph::loop_count() const {
  std::int64_t c = 0;
  for (std::int32_t v = 0; v < n_; ++v) c += has_loop(v);
  return c;
}

std::int64_t BitGraph::nonloop_edge_count() const {
  std::int64_t total = 0;
  for (std::int32_t v = 0; v < n_; ++v) total += degree(v);
  return (total - loop_count()) / 2;
}

std::vector<std::int32_t> BitGraph::loop_vertices() const {
  std::vector<std::int32_t> r;
  for (std::int32_t v = 0; v < n_; ++v)
    if (has_loop(v)) r.push_back(v);
  return r;
}

std::vector<std::int32_t> BitGraph::neighbors(std::int32_t v) const {
  std::vector<std::int32_t> r;
  auto words = row(v);
  for (std::int32_t w = 0; w < stride_; ++w) {
    std::uint64_t x = words[w];
    while (x) {
      r.push_back((w << 6) + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return r;
}

BitGraph BitGraph::without_loops() const {
  BitGraph g = *this;
  for (std::int32_t v = 0; v < n_; ++v)
    g.row_ptr(v)[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
  return g;
}

BitGraph BitGraph::induced(const std::vector<std::int32_t>& vertices) const {
  BitGraph g(static_cast<std::int32_t>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (adjacent(vertices[i], vertices[i])) g.add_edge(int32_t(i), int32_t(i));
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) g.add_edge(int32_t(i), int32_t(j));
  }
  return g;
}

BitGraph BitGraph::deleted(const std::vector<std::int32_t>& removed) const {
  std::vector<char> gone(n_, 0);
  for (std::int32_t v : removed) gone[v] = 1;
  std::vector<std::int32_t> keep;
  keep.reserve(n_ - removed.size());
  for (std::int32_t v = 0; v < n_; ++v)
    if (!gone[v]) keep.push_back(v);
  return induced(keep);
}

std::vector<std::array<std::int32_t, 2>> BitGraph::edges() const {
  std::vector<std::array<std::int32_t, 2>> r;
  for (std::int32_t u = 0; u < n_; ++u)
    for (std::int32_t v : neighbors(u))
      if (v >= u) r.push_back({u, v});
  return r;
}

EdgeLedger edge_ledger(const BitGraph& g, const std::vector<std::int32_t>& S) {
  VertexSet set(g.n());
  for (std::int32_t v : S) set.insert(v);
  EdgeLedger led;
  std::int64_t inside_endpoints = 0;  // sum over v in S of |row(v) & S|
  for (std::int32_t v : S) {
    auto words = g.row(v);
    std::int64_t in = 0;
    for (std::int32_t w = 0; w < g.words_per_row(); ++w)
      in += std::popcount(words[w] & set.words()[w]);
    inside_endpoints += in;
    led.cut += g.degree(v) - in;
    led.l += g.has_loop(v);
  }
  led.ehat = (inside_endpoints - led.l) / 2;
  led.e = led.ehat + led.l;
  return led;
}

std::optional<C4Witness> find_c4(const BitGraph& g) {
  const std::int64_t n = g.n();
  const bool dense_marks = n <= 4096;
  std::vector<std::int32_t> mark_dense;
  std::unordered_map<std::int64_t, std::int32_t> mark_sparse;
  if (dense_marks) mark_dense.assign(size_t(n) * n, -1);

  auto probe = [&](std::int32_t a, std::int32_t b, std::int32_t center) -> std::int32_t {
    std::int64_t key = std::int64_t(a) * n + b;
    if (dense_marks) {
      std::int32_t prev = mark_dense[key];
      if (prev < 0) mark_dense[key] = center;
      return prev;
    }
    auto [it, inserted] = mark_sparse.try_emplace(key, center);
    return inserted ? -1 : it->second;
  };

  for (std::int32_t v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == v) continue;  // loops never lie on a 4-cycle
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (nb[j] == v) continue;
        std::int32_t prev = probe(nb[i], nb[j], v);
        if (prev >= 0) return C4Witness{{nb[i], prev, nb[j], v}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace pf
