#include "pf/dense.hpp"

#include <algorithm>
#include <bit>

#include "pf/errors.hpp"
#include "pf/random.hpp"

#include "json.hpp"

namespace pf {

namespace {

// oval positions of the (at most two) oval members adjacent to v
std::vector<std::int32_t> oval_neighbors(const PolarityGraph& g, const Oval& H, std::int32_t v) {
  std::vector<std::int32_t> r;
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(H.points.size()); ++i)
    if (g.g.adjacent(v, H.points[i])) r.push_back(i);
  return r;
}

std::int64_t count_induced_edges(const BitGraph& g, const std::vector<std::int32_t>& verts) {
  // loops counted once, matching the e(S) convention
  VertexSet set(g.n());
  for (std::int32_t v : verts) set.insert(v);
  std::int64_t endpoints = 0, loops = 0;
  for (std::int32_t v : verts) {
    auto words = g.row(v);
    for (std::int32_t w = 0; w < g.words_per_row(); ++w)
      endpoints += std::popcount(words[w] & set.words()[w]);
    loops += g.has_loop(v);
  }
  return (endpoints - loops) / 2 + loops;
}

struct Candidate {
  std::vector<std::int32_t> positions;  // sorted oval positions of S
  std::int64_t e_W = -1;
  std::int64_t trial = -1;
};

// e(G[W]) for S given by sorted oval positions; fills W
std::int64_t evaluate(const PolarityGraph& g, const Oval& H, const SecantMap& sm,
                      const std::vector<std::int32_t>& positions,
                      std::vector<std::int32_t>* W_out) {
  std::vector<std::int32_t> W;
  W.reserve(positions.size() * (positions.size() + 1) / 2);
  for (std::int32_t i : positions) W.push_back(H.points[i]);
  for (std::size_t a = 0; a < positions.size(); ++a)
    for (std::size_t b = a + 1; b < positions.size(); ++b)
      W.push_back(sm.pole(positions[a], positions[b]));
  std::sort(W.begin(), W.end());
  W.erase(std::unique(W.begin(), W.end()), W.end());
  if (W_out) *W_out = W;
  return count_induced_edges(g.g, W);
}

DenseSubgraphResult finish(const PolarityGraph& g, const Oval& H, std::int32_t m,
                           const Candidate& best, std::uint64_t seed) {
  DenseSubgraphResult r;
  r.q = g.q;
  r.m = m;
  r.oval = H.points;
  r.seed = seed;
  r.trial = best.trial;
  for (std::int32_t i : best.positions) r.S.push_back(H.points[i]);
  std::sort(r.S.begin(), r.S.end());
  r.X_S = x_set(g, H, r.S);
  r.W = r.S;
  r.W.insert(r.W.end(), r.X_S.begin(), r.X_S.end());
  std::sort(r.W.begin(), r.W.end());

  r.ledger.guarantee = std::int64_t(m) * (m - 1) - 2 * m;  // 2*C(m,2) - 2m
  r.ledger.e_XS = count_induced_edges(g.g, r.X_S);
  r.ledger.e_W = count_induced_edges(g.g, r.W);
  std::int64_t cross = 0;
  for (std::int32_t v : r.X_S)
    for (std::int32_t s : r.S) cross += g.g.adjacent(v, s);
  r.ledger.e_S_XS = cross;
  if (cross != 2 * static_cast<std::int64_t>(r.X_S.size()))
    throw std::logic_error("e(S, X_S) != 2|X_S|");
  return r;
}

void check_m(const Oval& H, std::int32_t m) {
  if (m < 1 || m > static_cast<std::int32_t>(H.points.size()))
    fail(Errc::BadM, "m = " + std::to_string(m) + " outside 1.." +
                         std::to_string(H.points.size()));
}

}  // namespace

SecantMap::SecantMap(const PolarityGraph& g, const Oval& H) {
  k_ = static_cast<std::int32_t>(H.points.size());
  pole_.assign(std::size_t(k_) * k_, -1);
  std::int64_t found = 0;
  for (std::int32_t v = 0; v < g.n(); ++v) {
    auto nb = oval_neighbors(g, H, v);
    if (nb.size() != 2) continue;
    auto& slot = pole_[std::size_t(nb[0]) * k_ + nb[1]];
    if (slot != -1)
      fail(Errc::NotAnArc, "two vertices adjacent to the same oval pair");
    slot = v;
    ++found;
  }
  if (found != std::int64_t(k_) * (k_ - 1) / 2)
    fail(Errc::NotAnArc, "expected " + std::to_string(std::int64_t(k_) * (k_ - 1) / 2) +
                             " secant poles, found " + std::to_string(found));
}

std::int32_t SecantMap::pole(std::int32_t i, std::int32_t j) const {
  if (i > j) std::swap(i, j);
  return pole_[std::size_t(i) * k_ + j];
}

std::vector<std::int32_t> y_set(const PolarityGraph& g, const Oval& H,
                                const std::vector<std::int32_t>& S) {
  VertexSet in_S(g.n());
  for (std::int32_t s : S) {
    if (!std::binary_search(H.points.begin(), H.points.end(), s))
      fail(Errc::NotSubsetOfOval, "vertex " + std::to_string(s) + " is not an oval point");
    in_S.insert(s);
  }
  std::vector<std::int32_t> Y;
  for (std::int32_t v = 0; v < g.n(); ++v) {
    int c = 0;
    for (std::int32_t s : S) c += g.g.adjacent(v, s);
    if (c == 2) Y.push_back(v);
  }
  std::int64_t want = std::int64_t(S.size()) * (std::int64_t(S.size()) - 1) / 2;
  if (static_cast<std::int64_t>(Y.size()) != want)
    fail(Errc::NotAnArc, "|Y_S| = " + std::to_string(Y.size()) + ", expected C(|S|,2) = " +
                             std::to_string(want));
  return Y;
}

std::vector<std::int32_t> x_set(const PolarityGraph& g, const Oval& H,
                                const std::vector<std::int32_t>& S) {
  std::vector<std::int32_t> Y = y_set(g, H, S);
  std::vector<std::int32_t> sorted_S = S;
  std::sort(sorted_S.begin(), sorted_S.end());
  std::vector<std::int32_t> X;
  std::set_difference(Y.begin(), Y.end(), sorted_S.begin(), sorted_S.end(),
                      std::back_inserter(X));
  return X;
}

DenseSubgraphResult sample_dense(const PolarityGraph& g, const Oval& H, std::int32_t m,
                                 std::int64_t trials, std::uint64_t seed) {
  check_m(H, m);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  SecantMap sm(g, H);

  std::vector<std::int32_t> all_positions(H.points.size());
  for (std::size_t i = 0; i < all_positions.size(); ++i)
    all_positions[i] = static_cast<std::int32_t>(i);

  Candidate best;
  std::uint64_t stream = seed;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(splitmix64(stream));
    std::vector<std::int32_t> pos = sample_prefix(all_positions, m, rng);
    std::sort(pos.begin(), pos.end());
    std::int64_t e_W = evaluate(g, H, sm, pos, nullptr);
    if (e_W > best.e_W || (e_W == best.e_W && pos < best.positions)) {
      best.positions = pos;
      best.e_W = e_W;
      best.trial = t;
    }
  }
  return finish(g, H, m, best, seed);
}

DenseSubgraphResult exhaustive_dense(const PolarityGraph& g, const Oval& H, std::int32_t m,
                                     std::int64_t budget) {
  check_m(H, m);
  const std::int32_t k = static_cast<std::int32_t>(H.points.size());
  Int total = binomial(k, m);
  if (total > budget)
    fail(Errc::BudgetExceeded, "C(" + std::to_string(k) + "," + std::to_string(m) + ") = " +
                                   total.str() + " exceeds budget " + std::to_string(budget));
  SecantMap sm(g, H);

  // lexicographic combination enumeration; strict improvement keeps the
  // lexicographically smallest maximizer
  std::vector<std::int32_t> pos(m);
  for (std::int32_t i = 0; i < m; ++i) pos[i] = i;
  Candidate best;
  std::int64_t rank = 0;
  while (true) {
    std::int64_t e_W = evaluate(g, H, sm, pos, nullptr);
    if (e_W > best.e_W) {
      best.positions = pos;
      best.e_W = e_W;
      best.trial = rank;
    }
    ++rank;
    std::int32_t i = m - 1;
    while (i >= 0 && pos[i] == k - m + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (std::int32_t j = i + 1; j < m; ++j) pos[j] = pos[j - 1] + 1;
  }
  return finish(g, H, m, best, 0);
}

Rational exact_expectation(const PolarityGraph& g, const Oval& H, std::int32_t m) {
  check_m(H, m);
  const std::int32_t k = static_cast<std::int32_t>(H.points.size());  // q+1
  std::vector<std::int32_t> YH = y_set(g, H, H.points);

  VertexSet in_oval(g.n());
  for (std::int32_t h : H.points) in_oval.insert(h);

  std::vector<std::int32_t> oval_pos(g.n(), -1);
  for (std::int32_t i = 0; i < k; ++i) oval_pos[H.points[i]] = i;

  Int denom = binomial(k, m);
  Int num = 0;
  for (std::size_t a = 0; a < YH.size(); ++a) {
    for (std::size_t b = a; b < YH.size(); ++b) {
      std::int32_t u = YH[a], v = YH[b];
      if (!g.g.adjacent(u, v)) continue;  // a == b probes the loop bit
      // oval positions forced into S: both endpoints need their two oval
      // neighbors chosen
      auto need = oval_neighbors(g, H, u);
      for (std::int32_t i : oval_neighbors(g, H, v)) need.push_back(i);
      std::sort(need.begin(), need.end());
      need.erase(std::unique(need.begin(), need.end()), need.end());
      // an endpoint lying in the oval must itself stay outside S
      int banned = 0;
      bool impossible = false;
      std::vector<std::int32_t> endpoints{u};
      if (v != u) endpoints.push_back(v);
      for (std::int32_t w : endpoints) {
        if (!in_oval.contains(w)) continue;
        if (std::binary_search(need.begin(), need.end(), oval_pos[w]))
          impossible = true;  // would have to be both inside and outside S
        else
          ++banned;
      }
      if (impossible) continue;
      std::int64_t c = static_cast<std::int64_t>(need.size());
      num += binomial(k - c - banned, m - c);
    }
  }
  return Rational(num, denom);
}

std::string DenseSubgraphResult::to_json() const {
  nlohmann::json j;
  j["q"] = q;
  j["m"] = m;
  j["oval"] = oval;
  j["S"] = S;
  j["X_S"] = X_S;
  j["W"] = W;
  j["ledger"] = {{"e_S_XS", ledger.e_S_XS},
                 {"e_XS", ledger.e_XS},
                 {"e_W", ledger.e_W},
                 {"guarantee", ledger.guarantee}};
  j["seed"] = seed;
  j["trial"] = trial;
  if (!embedding.empty()) j["embedding"] = embedding;
  return j.dump();
}

}  // namespace pf
