#pragma once

#include <cstdint>
#include <vector>

#include "pf/polarity_graph.hpp"
#include "pf/rational.hpp"

namespace pf {

/// For each oval pair {h_i, h_j} the unique secant-pole vertex adjacent to
/// exactly those two oval points. pole(i,j) indexes oval positions i < j.
class SecantMap {
 public:
  SecantMap(const PolarityGraph& g, const Oval& H);
  std::int32_t oval_size() const { return k_; }
  std::int32_t pole(std::int32_t i, std::int32_t j) const;

 private:
  std::int32_t k_ = 0;
  std::vector<std::int32_t> pole_;  // row-major upper triangle
};

/// Y_S = vertices with exactly two neighbors in S. Requires S to be a
/// subset of the oval; |Y_S| = C(|S|,2) is verified. Sorted output.
std::vector<std::int32_t> y_set(const PolarityGraph& g, const Oval& H,
                                const std::vector<std::int32_t>& S);

/// X_S = Y_S minus S.
std::vector<std::int32_t> x_set(const PolarityGraph& g, const Oval& H,
                                const std::vector<std::int32_t>& S);

struct DenseLedger {
  std::int64_t e_S_XS = 0;     // edges between S and X_S; always 2|X_S|
  std::int64_t e_XS = 0;       // e(G[X_S]), loops counted once
  std::int64_t e_W = 0;        // e(G[S u X_S]), loops counted once
  std::int64_t guarantee = 0;  // 2*C(m,2) - 2m, the deterministic part
};

/// A concrete witness for the dense-subgraph theorem: S inside the oval,
/// the secant poles X_S, and W = S u X_S with exact edge counts.
struct DenseSubgraphResult {
  std::int64_t q = 0;
  std::int32_t m = 0;
  std::vector<std::int32_t> oval;
  std::vector<std::int32_t> S;
  std::vector<std::int32_t> X_S;
  std::vector<std::int32_t> W;
  DenseLedger ledger;
  std::uint64_t seed = 0;
  std::int64_t trial = 0;  // winning trial (sampling) or subset rank (exhaustive)
  // subfield construction only: embedding[i] = vertex of this graph hosting
  // vertex i of the embedded copy
  std::vector<std::int32_t> embedding;

  std::string to_json() const;
};

/// Draws `trials` uniform m-subsets of the oval with a seeded deterministic
/// generator (per-trial splitmix64-derived streams) and returns the result
/// maximizing e(G[W]), ties broken by lexicographically smallest S.
DenseSubgraphResult sample_dense(const PolarityGraph& g, const Oval& H, std::int32_t m,
                                 std::int64_t trials, std::uint64_t seed);

/// True maximum of e(G[W]) over all C(q+1, m) subsets, enumerated in
/// lexicographic order. Throws Errc::BudgetExceeded when C(q+1,m) > budget.
DenseSubgraphResult exhaustive_dense(const PolarityGraph& g, const Oval& H, std::int32_t m,
                                     std::int64_t budget = 1000000);

/// Exact E[e(G[X_S])] over uniform m-subsets S of the oval: each edge (or
/// loop) of G[Y_H] contributes C(q+1-c-b, m-c)/C(q+1, m) where c counts the
/// oval neighbors that must land in S and b the endpoints lying in the oval
/// that must stay out.
Rational exact_expectation(const PolarityGraph& g, const Oval& H, std::int32_t m);

}  // namespace pf
