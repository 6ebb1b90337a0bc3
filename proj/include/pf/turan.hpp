#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pf/dense.hpp"
#include "pf/graph.hpp"

namespace pf {

/// Largest m with m + C(m,2) <= 2q+3, by integer search, cross-checked
/// against the closed form floor(sqrt(4q + 25/4) - 1/2) without floating
/// point.
std::int32_t theorem_m(std::int64_t q);

/// How the deleted set is padded up to 2q+3 vertices: Greedy adds the
/// vertex with the most edges into the current set (maximizing e(X)),
/// Lex adds the smallest unused indices.
enum class PadStrategy { Greedy, Lex };
const char* pad_strategy_name(PadStrategy s);
PadStrategy parse_pad_strategy(const std::string& s);

/// Verifiable record of a C4-free construction. `edges` counts simple
/// edges of the retained graph; `hash` is the SHA-256 of its canonical
/// edge list; `abl_threshold` is floor(q^3/2 - q^2), and beats_abl uses
/// the exact (unfloored) comparison.
struct TuranCertificate {
  std::string construction;
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::int64_t edges = 0;
  std::vector<std::int32_t> deleted;  // original vertex indices in ER_q
  std::string hash;
  bool c4free = false;
  std::int64_t abl_threshold = 0;
  bool beats_abl = false;
  std::uint64_t seed = 0;
  std::string pad_strategy;

  std::string to_json() const;
  static TuranCertificate from_json(const std::string& text);
};

/// Exact deletion bookkeeping in the loop-counting convention
/// (e counts a loop once): e(G \ X) = e(G) - e(X) - e(X, X^c).
struct DeletionStats {
  EdgeLedger X;
  std::int64_t e_G = 0;
  std::int64_t ehat_G = 0;
  std::int64_t e_retained = 0;  // recounted from the retained vertex set
  std::int64_t retained_loops = 0;
};

struct ConstructionOutput {
  TuranCertificate cert;
  BitGraph graph;  // retained graph, loopless, vertices relabeled ascending
  DeletionStats stats;
  DenseSubgraphResult dense;  // corollary construction only
};

/// Corollary pipeline: ER_q, dense extraction on the conic oval with
/// m = theorem_m(q), pad X to exactly 2q+3 vertices, delete, recount,
/// verify C4-freeness. The output has q^2-q-2 vertices.
ConstructionOutput corollary_construct(std::int64_t q, std::int64_t trials, std::uint64_t seed,
                                       PadStrategy pad);

/// q a power of 2 with q-1 prime: deletes the three smallest absolute
/// points (the degree-(q-1) vertices) of loopless ER_{q-1}, yielding
/// q^2-q-2 vertices and at least (q-1)q^2/2 - 3(q-1) edges.
ConstructionOutput mersenne_construct(std::int64_t q);

/// q an odd square: embeds ER_sqrt(q) into ER_q along the subfield, takes
/// S = the copy's absolute points (inside the oval of absolute points of
/// ER_q), and returns W = S u Y_S. Verifies that Y_S induces a
/// (sqrt(q)-1)/2-regular graph inside the copy. The embedding map is
/// recorded in the result.
DenseSubgraphResult subfield_dense(const Field& f);

struct OracleResult {
  std::int32_t n = 0;
  std::int64_t max_edges = 0;  // exact ex(n, C4)
  BitGraph witness;
};

/// Exact ex(n, C4) by edge-slot branch and bound with incremental
/// common-neighbor feasibility and the Kovari-Sos-Turan cap as pruning.
OracleResult oracle_ex(std::int32_t n, std::int32_t max_n = 9);

/// Independent recheck: vertex/edge counts, canonical hash, C4-freeness.
/// Throws Errc::CountMismatch / HashMismatch / C4Found.
void verify_certificate(const TuranCertificate& cert, const BitGraph& graph);

}  // namespace pf
