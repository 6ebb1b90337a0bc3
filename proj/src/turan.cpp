#include "pf/turan.hpp"

#include <algorithm>
#include <bit>

#include "pf/errors.hpp"
#include "pf/graph_io.hpp"
#include "pf/polarity_graph.hpp"

#include "json.hpp"

namespace pf {

std::int32_t theorem_m(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  std::int64_t cap = 2 * q + 3;
  std::int32_t m = 1;
  while ((m + 1) + std::int64_t(m + 1) * m / 2 <= cap) ++m;
  // closed form: m = floor(sqrt(4q + 25/4) - 1/2), equivalently the largest
  // m with (2m+1)^2 <= 16q + 25
  Int a = isqrt_floor(Int(16 * q + 25));
  std::int64_t m_formula = static_cast<std::int64_t>((a - 1) / 2);
  if (m_formula != m) throw std::logic_error("theorem_m: search and closed form disagree");
  return m;
}

const char* pad_strategy_name(PadStrategy s) {
  return s == PadStrategy::Greedy ? "greedy" : "lex";
}

PadStrategy parse_pad_strategy(const std::string& s) {
  if (s == "greedy") return PadStrategy::Greedy;
  if (s == "lex") return PadStrategy::Lex;
  throw std::invalid_argument("pad strategy must be greedy or lex");
}

namespace {

std::int64_t abl_threshold_floor(std::int64_t q) { return (q * q * q - 2 * q * q) / 2; }

// edges > q^3/2 - q^2, compared exactly
bool beats_abl_exact(std::int64_t q, std::int64_t edges) {
  return 2 * edges > q * q * q - 2 * q * q;
}

DeletionStats deletion_stats(const BitGraph& g, const std::vector<std::int32_t>& X) {
  DeletionStats st;
  st.X = edge_ledger(g, X);
  st.ehat_G = g.nonloop_edge_count();
  st.e_G = st.ehat_G + g.loop_count();
  std::vector<char> gone(g.n(), 0);
  for (std::int32_t v : X) gone[v] = 1;
  std::vector<std::int32_t> keep;
  for (std::int32_t v = 0; v < g.n(); ++v)
    if (!gone[v]) keep.push_back(v);
  EdgeLedger kept = edge_ledger(g, keep);
  st.e_retained = kept.e;
  st.retained_loops = kept.l;
  return st;
}

ConstructionOutput finish_deletion(const std::string& name, std::int64_t q, const BitGraph& er,
                                   std::vector<std::int32_t> X, std::uint64_t seed,
                                   const std::string& pad_name) {
  std::sort(X.begin(), X.end());
  ConstructionOutput out;
  out.stats = deletion_stats(er, X);
  out.graph = er.deleted(X).without_loops();

  TuranCertificate& c = out.cert;
  c.construction = name;
  c.q = q;
  c.n = out.graph.n();
  c.edges = out.graph.nonloop_edge_count();
  c.deleted = std::move(X);
  c.hash = sha256_hex(canonical_edge_list(out.graph));
  c.c4free = is_c4_free(out.graph);
  c.abl_threshold = abl_threshold_floor(q);
  c.beats_abl = beats_abl_exact(q, c.edges);
  c.seed = seed;
  c.pad_strategy = pad_name;

  // ledger identity, recounted: e(G\X) = e(G) - e(X) - e(X, X^c)
  if (out.stats.e_retained != out.stats.e_G - out.stats.X.e - out.stats.X.cut)
    throw std::logic_error("deletion ledger identity failed");
  if (c.edges != out.stats.e_retained - out.stats.retained_loops)
    throw std::logic_error("simple edge recount mismatch");
  return out;
}

}  // namespace

ConstructionOutput corollary_construct(std::int64_t q, std::int64_t trials, std::uint64_t seed,
                                       PadStrategy pad) {
  ErContext ctx = build_er_context(field_of_order(q));
  Oval H = conic_oval(ctx.plane);
  std::int32_t m = theorem_m(q);
  DenseSubgraphResult dense = sample_dense(ctx.graph, H, m, trials, seed);

  const std::int64_t target = 2 * q + 3;
  std::vector<std::int32_t> X = dense.W;
  if (static_cast<std::int64_t>(X.size()) > target)
    throw std::logic_error("W larger than 2q+3");

  const BitGraph& g = ctx.graph.g;
  if (pad == PadStrategy::Lex) {
    VertexSet in_X(g.n());
    for (std::int32_t v : X) in_X.insert(v);
    for (std::int32_t v = 0; v < g.n() && static_cast<std::int64_t>(X.size()) < target; ++v)
      if (!in_X.contains(v)) X.push_back(v);
  } else {
    VertexSet in_X(g.n());
    for (std::int32_t v : X) in_X.insert(v);
    while (static_cast<std::int64_t>(X.size()) < target) {
      std::int32_t best = -1;
      std::int64_t best_gain = -1;
      for (std::int32_t v = 0; v < g.n(); ++v) {
        if (in_X.contains(v)) continue;
        auto words = g.row(v);
        std::int64_t gain = g.has_loop(v);  // e(X u {v}) - e(X)
        for (std::int32_t w = 0; w < g.words_per_row(); ++w)
          gain += std::popcount(words[w] & in_X.words()[w]);
        if (gain > best_gain) {
          best_gain = gain;
          best = v;
        }
      }
      X.push_back(best);
      in_X.insert(best);
    }
  }

  ConstructionOutput out =
      finish_deletion("corollary", q, g, std::move(X), seed, pad_strategy_name(pad));
  out.dense = std::move(dense);
  if (out.cert.n != q * q - q - 2) throw std::logic_error("corollary vertex count off");
  return out;
}

ConstructionOutput mersenne_construct(std::int64_t q) {
  if (q < 4 || (q & (q - 1)) != 0)
    fail(Errc::NotMersenneSetting, std::to_string(q) + " is not a power of 2 (>= 4)");
  if (!is_prime(q - 1))
    fail(Errc::NotMersenneSetting, std::to_string(q - 1) + " is not prime");

  ErContext ctx = build_er_context(field_of_order(q - 1));
  std::vector<std::int32_t> abs = ctx.graph.absolute_points();
  // the degree-(q-1) vertices of loopless ER_{q-1} are exactly the absolute
  // points; take the three smallest for determinism
  std::vector<std::int32_t> X(abs.begin(), abs.begin() + 3);
  ConstructionOutput out = finish_deletion("mersenne", q, ctx.graph.g, std::move(X), 0, "none");
  if (out.cert.n != q * q - q - 2) throw std::logic_error("mersenne vertex count off");
  return out;
}

DenseSubgraphResult subfield_dense(const Field& f) {
  const std::int64_t q = f.order();
  if (q % 2 == 0) fail(Errc::NotOddSquare, "q must be odd");
  if (f.k() % 2 != 0) fail(Errc::NotOddSquare, std::to_string(q) + " is not a square");
  std::int64_t r = 1;
  for (int i = 0; i < f.k() / 2; ++i) r *= f.p();  // r = sqrt(q)

  Field sub = Field::make(f.p(), f.k() / 2);
  ErContext small = build_er_context(sub);
  ErContext big = build_er_context(f);

  // root of the subfield modulus inside GF(q), smallest in element order
  FieldElement beta{0};
  bool found = false;
  for (std::int64_t i = 0; i < q && !found; ++i) {
    FieldElement x = f.element(i);
    FieldElement acc = f.zero();
    const auto& mod = sub.modulus();
    for (std::size_t d = mod.size(); d-- > 0;)
      acc = f.add(f.mul(acc, x), f.from_coeffs({mod[d]}));
    if (acc.value == 0) {
      beta = x;
      found = true;
    }
  }
  if (!found) throw std::logic_error("subfield modulus has no root in GF(q)");

  // phi: GF(r) -> GF(q), sum c_i alpha^i -> sum c_i beta^i
  auto phi = [&](FieldElement a) {
    std::vector<int> c = sub.coeffs(a);
    FieldElement acc = f.zero();
    for (std::size_t d = c.size(); d-- > 0;)
      acc = f.add(f.mul(acc, beta), f.from_coeffs({c[d]}));
    return acc;
  };
  for (std::int64_t a = 0; a < r; ++a)
    for (std::int64_t b = 0; b < r; ++b) {
      FieldElement ea = sub.element(a), eb = sub.element(b);
      if (phi(sub.add(ea, eb)).value != f.add(phi(ea), phi(eb)).value ||
          phi(sub.mul(ea, eb)).value != f.mul(phi(ea), phi(eb)).value)
        throw std::logic_error("subfield embedding is not a homomorphism");
    }

  // vertex map of the embedded copy
  std::vector<std::int32_t> embed(small.plane.size());
  for (PointIndex p = 0; p < small.plane.size(); ++p) {
    const Triple& c = small.plane.point_coords(p);
    embed[p] = big.plane.point_index({phi(c[0]), phi(c[1]), phi(c[2])});
  }
  for (PointIndex a = 0; a < small.plane.size(); ++a)
    for (PointIndex b = a; b < small.plane.size(); ++b)
      if (small.graph.g.adjacent(a, b) != big.graph.g.adjacent(embed[a], embed[b]))
        throw std::logic_error("embedded copy does not preserve adjacency");

  // S = absolute points of the copy; the oval is the absolute-point conic
  // of ER_q (q odd)
  std::vector<std::int32_t> S;
  for (std::int32_t v : small.graph.absolute_points()) S.push_back(embed[v]);
  std::sort(S.begin(), S.end());
  Oval H = make_arc(big.plane, big.graph.absolute_points());

  DenseSubgraphResult res;
  res.q = q;
  res.m = static_cast<std::int32_t>(S.size());
  res.oval = H.points;
  res.S = S;
  res.X_S = x_set(big.graph, H, S);
  std::vector<std::int32_t> Y = y_set(big.graph, H, S);
  res.W = S;
  res.W.insert(res.W.end(), res.X_S.begin(), res.X_S.end());
  std::sort(res.W.begin(), res.W.end());
  res.embedding = embed;

  // Y_S must lie inside the copy and induce a (sqrt(q)-1)/2-regular graph
  // there (the copy is induced, so ER_q edges among copy vertices are F's)
  std::vector<std::int32_t> image = embed;
  std::sort(image.begin(), image.end());
  for (std::int32_t v : Y)
    if (!std::binary_search(image.begin(), image.end(), v))
      throw std::logic_error("Y_S leaves the embedded copy");
  const std::int64_t want_deg = (r - 1) / 2;
  for (std::int32_t v : Y) {
    std::int64_t d = 0;
    for (std::int32_t w : Y) d += (w != v) && big.graph.g.adjacent(v, w);
    if (d != want_deg)
      throw std::logic_error("Y_S regularity violated: degree " + std::to_string(d) +
                             ", expected " + std::to_string(want_deg));
  }

  res.ledger.guarantee = std::int64_t(res.m) * (res.m - 1) - 2 * res.m;
  res.ledger.e_XS = edge_ledger(big.graph.g, res.X_S).e;
  res.ledger.e_W = edge_ledger(big.graph.g, res.W).e;
  std::int64_t cross = 0;
  for (std::int32_t v : res.X_S)
    for (std::int32_t s : res.S) cross += big.graph.g.adjacent(v, s);
  res.ledger.e_S_XS = cross;
  res.seed = 0;
  res.trial = 0;
  return res;
}

namespace {

// branch-and-bound search state for exact ex(n, C4)
struct OracleSearch {
  std::int32_t n;
  std::vector<std::array<std::int32_t, 2>> slots;
  std::vector<std::uint32_t> adj;
  std::vector<std::uint8_t> cn;  // common-neighbor counts, n*n
  std::vector<std::int32_t> deg;
  std::int64_t cherries = 0;  // sum over v of C(deg v, 2)
  std::int64_t best = -1;
  std::vector<std::uint32_t> best_adj;
  std::int64_t cap;            // KST ceiling, safe over-approximation
  std::int64_t cherry_budget;  // C(n,2): every pair has at most one common neighbor

  explicit OracleSearch(std::int32_t n_)
      : n(n_), adj(n_, 0), cn(size_t(n_) * n_, 0), deg(n_, 0) {
    for (std::int32_t j = 1; j < n; ++j)
      for (std::int32_t i = 0; i < j; ++i) slots.push_back({i, j});
    Int a = isqrt_floor(Int(n) * n * n);
    cap = static_cast<std::int64_t>((a + n + 2) / 2);
    cherry_budget = std::int64_t(n) * (n - 1) / 2;
  }

  // Most edges addable before the cherry budget is spent, ignoring which
  // slots remain: water-fill degree increments onto the smallest degrees.
  std::int64_t cherry_room(std::int64_t slots_left) const {
    std::int64_t budget = cherry_budget - cherries;
    std::array<std::int32_t, 40> cnt{};
    for (std::int32_t v = 0; v < n; ++v) ++cnt[deg[v]];
    std::int64_t r = 0;
    std::int32_t low = 0;
    while (r < slots_left) {
      std::int64_t cost = 0;
      for (int unit = 0; unit < 2; ++unit) {
        while (cnt[low] == 0) ++low;
        cost += low;
        --cnt[low];
        ++cnt[low + 1];
        if (low > 0) --low;  // the new minimum can only be one step back
      }
      if (cost > budget) break;
      budget -= cost;
      ++r;
    }
    return r;
  }

  bool can_add(std::int32_t u, std::int32_t v) const {
    for (std::uint32_t x = adj[u] & ~(1u << v); x; x &= x - 1)
      if (cn[size_t(v) * n + std::countr_zero(x)]) return false;
    for (std::uint32_t x = adj[v] & ~(1u << u); x; x &= x - 1)
      if (cn[size_t(u) * n + std::countr_zero(x)]) return false;
    return true;
  }

  void bump(std::int32_t u, std::int32_t v, int d) {
    for (std::uint32_t x = adj[u] & ~(1u << v); x; x &= x - 1) {
      std::int32_t w = std::countr_zero(x);
      cn[size_t(v) * n + w] += d;
      cn[size_t(w) * n + v] += d;
    }
    for (std::uint32_t x = adj[v] & ~(1u << u); x; x &= x - 1) {
      std::int32_t w = std::countr_zero(x);
      cn[size_t(u) * n + w] += d;
      cn[size_t(w) * n + u] += d;
    }
  }

  void dfs(std::size_t idx, std::int64_t e) {
    if (e > best) {
      best = e;
      best_adj = adj;
    }
    if (idx == slots.size()) return;
    std::int64_t slots_left = static_cast<std::int64_t>(slots.size() - idx);
    std::int64_t reachable = std::min(e + slots_left, cap);
    if (reachable <= best) return;
    if (e + cherry_room(slots_left) <= best) return;
    auto [u, v] = slots[idx];
    if (can_add(u, v)) {
      cherries += deg[u] + deg[v];
      ++deg[u];
      ++deg[v];
      bump(u, v, +1);
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
      dfs(idx + 1, e + 1);
      adj[u] &= ~(1u << v);
      adj[v] &= ~(1u << u);
      bump(u, v, -1);
      --deg[u];
      --deg[v];
      cherries -= deg[u] + deg[v];
    }
    dfs(idx + 1, e);
  }
};

}  // namespace

OracleResult oracle_ex(std::int32_t n, std::int32_t max_n) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > max_n)
    fail(Errc::TooLarge, "n = " + std::to_string(n) + " exceeds the oracle limit " +
                             std::to_string(max_n));
  OracleResult r;
  r.n = n;
  if (n <= 1) {
    r.witness = BitGraph(n);
    r.max_edges = 0;
    return r;
  }
  OracleSearch s(n);
  s.dfs(0, 0);
  r.max_edges = s.best;
  r.witness = BitGraph(n);
  for (std::int32_t u = 0; u < n; ++u)
    for (std::int32_t v = u + 1; v < n; ++v)
      if ((s.best_adj[u] >> v) & 1) r.witness.add_edge(u, v);
  return r;
}

void verify_certificate(const TuranCertificate& cert, const BitGraph& graph) {
  if (graph.n() != cert.n)
    fail(Errc::CountMismatch, "graph has " + std::to_string(graph.n()) + " vertices, certificate says " +
                                  std::to_string(cert.n));
  if (graph.loop_count() != 0)
    fail(Errc::CountMismatch, "certificate graphs are loopless");
  std::int64_t edges = graph.nonloop_edge_count();
  if (edges != cert.edges)
    fail(Errc::CountMismatch, "graph has " + std::to_string(edges) + " edges, certificate says " +
                                  std::to_string(cert.edges));
  std::string h = sha256_hex(canonical_edge_list(graph));
  if (h != cert.hash) fail(Errc::HashMismatch, "canonical edge list hashes to " + h);
  if (auto w = find_c4(graph))
    fail(Errc::C4Found, "4-cycle " + std::to_string(w->cycle[0]) + "-" +
                            std::to_string(w->cycle[1]) + "-" + std::to_string(w->cycle[2]) + "-" +
                            std::to_string(w->cycle[3]));
  if (!cert.c4free) fail(Errc::C4Found, "certificate claims c4free=false for a C4-free graph");
}

std::string TuranCertificate::to_json() const {
  nlohmann::json j;
  j["construction"] = construction;
  j["q"] = q;
  j["n"] = n;
  j["edges"] = edges;
  j["deleted"] = deleted;
  j["hash"] = hash;
  j["c4free"] = c4free;
  j["abl_threshold"] = abl_threshold;
  j["beats_abl"] = beats_abl;
  j["seed"] = seed;
  j["pad_strategy"] = pad_strategy;
  return j.dump();
}

TuranCertificate TuranCertificate::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::BadFormat, std::string("certificate JSON: ") + e.what());
  }
  TuranCertificate c;
  try {
    c.construction = j.at("construction").get<std::string>();
    c.q = j.at("q").get<std::int64_t>();
    c.n = j.at("n").get<std::int64_t>();
    c.edges = j.at("edges").get<std::int64_t>();
    c.deleted = j.at("deleted").get<std::vector<std::int32_t>>();
    c.hash = j.at("hash").get<std::string>();
    c.c4free = j.at("c4free").get<bool>();
    c.abl_threshold = j.at("abl_threshold").get<std::int64_t>();
    c.beats_abl = j.at("beats_abl").get<bool>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.pad_strategy = j.at("pad_strategy").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::BadFormat, std::string("certificate JSON: ") + e.what());
  }
  return c;
}

}  // namespace pf
