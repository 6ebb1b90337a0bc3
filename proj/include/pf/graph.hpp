#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pf {

/// Undirected graph on vertices 0..n-1 stored as one n-bit adjacency row
/// per vertex. A set diagonal bit is a loop. Degree counts a loop once.
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(std::int32_t n);

  std::int32_t n() const { return n_; }
  std::int32_t words_per_row() const { return stride_; }

  void add_edge(std::int32_t u, std::int32_t v);
  void remove_edge(std::int32_t u, std::int32_t v);
  bool adjacent(std::int32_t u, std::int32_t v) const {
    return (row_ptr(u)[v >> 6] >> (v & 63)) & 1;
  }
  bool has_loop(std::int32_t v) const { return adjacent(v, v); }

  std::span<const std::uint64_t> row(std::int32_t v) const { return {row_ptr(v), size_t(stride_)}; }
  std::span<std::uint64_t> row(std::int32_t v) { return {row_ptr(v), size_t(stride_)}; }

  /// Popcount of the row; a loop contributes 1.
  std::int64_t degree(std::int32_t v) const;
  std::int64_t loop_count() const;
  std::int64_t nonloop_edge_count() const;
  std::vector<std::int32_t> loop_vertices() const;

  /// Neighbors in ascending order, including v itself when it has a loop.
  std::vector<std::int32_t> neighbors(std::int32_t v) const;

  BitGraph without_loops() const;
  /// Induced subgraph; vertex i of the result is vertices[i] (must be sorted
  /// and duplicate-free).
  BitGraph induced(const std::vector<std::int32_t>& vertices) const;
  /// Induced subgraph on the complement of `removed` (sorted ascending
  /// relabeling of the kept vertices).
  BitGraph deleted(const std::vector<std::int32_t>& removed) const;

  /// Pairs (u,v) with u <= v; loops appear as (u,u).
  std::vector<std::array<std::int32_t, 2>> edges() const;

  bool operator==(const BitGraph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  const std::uint64_t* row_ptr(std::int32_t v) const { return bits_.data() + size_t(v) * stride_; }
  std::uint64_t* row_ptr(std::int32_t v) { return bits_.data() + size_t(v) * stride_; }

  std::int32_t n_ = 0;
  std::int32_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Vertex sets as bitmasks, for the ledger arithmetic below.
class VertexSet {
 public:
  VertexSet(std::int32_t n) : n_(n), words_((n + 63) / 64, 0) {}
  void insert(std::int32_t v) { words_[v >> 6] |= std::uint64_t(1) << (v & 63); }
  bool contains(std::int32_t v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
  std::int32_t n() const { return n_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::int32_t n_;
  std::vector<std::uint64_t> words_;
};

/// Edge counts for a vertex set S: e(S) counts loops once, ehat(S) is the
/// non-loop count, l(S) the loops, cut the S-to-complement edges (loops
/// excluded). Identities: e = ehat + l; sum of degrees over S = 2*ehat + l + cut.
struct EdgeLedger {
  std::int64_t e = 0;
  std::int64_t ehat = 0;
  std::int64_t l = 0;
  std::int64_t cut = 0;
};

EdgeLedger edge_ledger(const BitGraph& g, const std::vector<std::int32_t>& S);

struct C4Witness {
  std::array<std::int32_t, 4> cycle;  // consecutive vertices of the 4-cycle
};

/// First 4-cycle of the loopless part in vertex-index sweep order, or
/// nullopt when no two distinct vertices share two neighbors. O(sum deg^2).
std::optional<C4Witness> find_c4(const BitGraph& g);
inline bool is_c4_free(const BitGraph& g) { return !find_c4(g).has_value(); }

}  // namespace pf
