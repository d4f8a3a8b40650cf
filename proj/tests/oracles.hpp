#pragma once

// Test-only oracles, written independently of the library implementation
// path they check. Intentionally naive.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "snark/graph.hpp"

namespace oracle {

// graph6 encoder straight from the format description: N(n) then the upper
// triangle column by column, six bits per byte.
inline std::string graph6_encode(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  std::vector<int> bits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(adj[u][v] ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (size_t i = 0; i < bits.size(); i += 6) {
    int x = 0;
    for (int j = 0; j < 6; ++j) x = (x << 1) | bits[i + j];
    out.push_back(static_cast<char>(63 + x));
  }
  return out;
}

// girth by BFS from every vertex; digons give 2
inline std::optional<int> girth_bfs(const snark::CubicMultigraph& g) {
  int best = -1;
  for (const snark::Edge& e : g.edges())
    if (e.mult >= 2) return 2;
  for (int root = 0; root < g.n(); ++root) {
    std::vector<int> dist(g.n(), -1), parent_edge(g.n(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [id, w] : g.incident(v)) {
        if (id == parent_edge[v]) continue;
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent_edge[w] = id;
          q.push(w);
        } else {
          int len = dist[v] + dist[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

// perfect matching count by recursion on the highest-index uncovered vertex
inline long long count_matchings(const snark::CubicMultigraph& g, snark::VertexSet covered = 0) {
  snark::VertexSet uncovered = snark::all_vertices(g.n()) & ~covered;
  if (uncovered == 0) return 1;
  int v = 63 - std::countl_zero(uncovered);
  long long total = 0;
  for (auto [id, w] : g.incident(v)) {
    (void)id;
    if (covered >> w & 1) continue;
    total += count_matchings(g, covered | snark::vertex_bit(v) | snark::vertex_bit(w));
  }
  return total;
}

// plain index-order backtracking k-edge-colouring decision: no ordering
// heuristics, no symmetry breaking, no propagation
inline bool naive_colorable(const snark::CubicMultigraph& g, int k) {
  std::vector<std::uint32_t> used(g.n(), 0);
  std::uint32_t full = (k >= 32) ? ~0u : ((1u << k) - 1);
  auto rec = [&](auto&& self, int e) -> bool {
    if (e == g.m()) return true;
    int u = g.edge(e).u, v = g.edge(e).v, mult = g.edge(e).mult;
    std::uint32_t avail = full & ~used[u] & ~used[v];
    std::vector<int> bits;
    for (int c = 0; c < k; ++c)
      if (avail >> c & 1) bits.push_back(c);
    if (static_cast<int>(bits.size()) < mult) return false;
    std::vector<int> idx(mult);
    for (int i = 0; i < mult; ++i) idx[i] = i;
    for (;;) {
      std::uint32_t set = 0;
      for (int i : idx) set |= 1u << bits[i];
      used[u] |= set;
      used[v] |= set;
      if (self(self, e + 1)) return true;
      used[u] &= ~set;
      used[v] &= ~set;
      int i = mult - 1;
      while (i >= 0 && idx[i] == static_cast<int>(bits.size()) - mult + i) --i;
      if (i < 0) return false;
      ++idx[i];
      for (int j = i + 1; j < mult; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  return rec(rec, 0);
}

// exhaustive parity-subgraph search: does some spanning subgraph have degree
// 3 at u and w and degree 1 everywhere else
inline bool coverable_subset_search(const snark::CubicMultigraph& g, int u, int w) {
  int m = g.m();
  if (m > 20) throw std::runtime_error("oracle limited to 20 edges");
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> deg(g.n(), 0);
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        deg[g.edge(e).u] += g.edge(e).mult;
        deg[g.edge(e).v] += g.edge(e).mult;
      }
    bool ok = true;
    for (int v = 0; v < g.n() && ok; ++v) {
      int want = (v == u || v == w) ? 3 : 1;
      if (deg[v] != want) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// seeded random simple cubic graph via the pairing model, rejecting loops
// and parallel edges
inline snark::CubicMultigraph random_cubic(int n, std::uint64_t seed) {
  std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (;;) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < 3; ++i) stubs.push_back(v);
    for (size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[next() % i]);
    std::vector<std::pair<int, int>> pairs;
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) {
        ok = false;
        break;
      }
      pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (!ok) continue;
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) continue;
    std::vector<snark::Edge> edges;
    for (auto [a, b] : pairs) edges.push_back({a, b, 1, {}});
    return snark::CubicMultigraph(n, std::move(edges));
  }
}

}  // namespace oracle
