#include "snark/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace snark {

CubicMultigraph::CubicMultigraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw ContractViolation("vertex count out of range 0..64: " + std::to_string(n));
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw ContractViolation("loops are not allowed");
    if (e.u < 0 || e.v >= n) throw ContractViolation("edge endpoint out of range");
    if (e.mult <= 0) throw ContractViolation("edge multiplicity must be positive");
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  // merge parallel records into multiplicities
  for (const Edge& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().mult += e.mult;
      if (edges_.back().label.empty()) edges_.back().label = e.label;
    } else {
      edges_.push_back(e);
    }
  }
  adj_.assign(n_, {});
  degree_.assign(n_, 0);
  for (int id = 0; id < m(); ++id) {
    const Edge& e = edges_[id];
    adj_[e.u].emplace_back(id, e.v);
    adj_[e.v].emplace_back(id, e.u);
    degree_[e.u] += e.mult;
    degree_[e.v] += e.mult;
    instance_count_ += e.mult;
    if (e.mult > 1) simple_ = false;
  }
  delta_ = 0;
  for (int v = 0; v < n_; ++v) delta_ = std::max(delta_, degree_[v]);
  for (int v = 0; v < n_; ++v)
    if (degree_[v] != delta_) regular_ = false;
}

std::optional<int> CubicMultigraph::edge_between(int u, int v) const {
  for (auto [id, other] : adj_[u])
    if (other == v) return id;
  return std::nullopt;
}

CubicMultigraph CubicMultigraph::with_added_edges(const EdgeBits& subset) const {
  std::vector<Edge> es = edges_;
  for (int id = subset.first(); id >= 0; id = subset.next(id)) {
    if (id >= m()) throw ContractViolation("edge id out of range");
    es[id].mult += 1;
  }
  return CubicMultigraph(n_, std::move(es));
}

CubicMultigraph CubicMultigraph::scaled(int factor) const {
  if (factor <= 0) throw ContractViolation("scale factor must be positive");
  std::vector<Edge> es = edges_;
  for (Edge& e : es) e.mult *= factor;
  return CubicMultigraph(n_, std::move(es));
}

std::uint64_t CubicMultigraph::structural_digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (const Edge& e : edges_) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
    mix(static_cast<std::uint64_t>(e.mult));
  }
  return h;
}

void GraphBuilder::add_edge(int u, int v, int mult, std::string label) {
  Edge e;
  e.u = std::min(u, v);
  e.v = std::max(u, v);
  e.mult = mult;
  e.label = std::move(label);
  edges_.push_back(std::move(e));
}

CubicMultigraph GraphBuilder::build() { return CubicMultigraph(n_, std::move(edges_)); }

// --- traversal ---

std::vector<VertexSet> components(const CubicMultigraph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (seen & vertex_bit(s)) continue;
    VertexSet comp = 0;
    std::vector<int> stack{s};
    seen |= vertex_bit(s);
    comp |= vertex_bit(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [id, w] : g.incident(v)) {
        (void)id;
        if (!(seen & vertex_bit(w))) {
          seen |= vertex_bit(w);
          comp |= vertex_bit(w);
          stack.push_back(w);
        }
      }
    }
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const CubicMultigraph& g) {
  if (g.n() == 0) return true;
  return components(g).size() == 1;
}

std::optional<VertexSet> bipartition(const CubicMultigraph& g) {
  std::vector<int> colour(g.n(), -1);
  VertexSet side = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [id, w] : g.incident(v)) {
        (void)id;
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (colour[v] == 0) side |= vertex_bit(v);
  return side;
}

std::vector<int> bridges(const CubicMultigraph& g) {
  // lowlink over base edges; a base edge of multiplicity >= 2 is never a
  // bridge
  int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> result;
  int timer = 0;
  // iterative DFS to stay safe on deep graphs
  struct Frame {
    int v;
    int parent_edge;
    size_t idx;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    std::vector<Frame> stack;
    disc[s] = low[s] = timer++;
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.idx < g.incident(f.v).size()) {
        auto [id, w] = g.incident(f.v)[f.idx++];
        if (id == f.parent_edge) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p] && g.edge(pe).mult == 1) result.push_back(pe);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<int> girth(const CubicMultigraph& g) {
  int best = -1;
  for (const Edge& e : g.edges())
    if (e.mult >= 2) best = 2;
  if (best == 2) return 2;
  // shortest cycle through each edge: shortest u-v path avoiding that edge
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[e.u] = 0;
    q.push(e.u);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (v == e.v) break;
      for (auto [eid, w] : g.incident(v)) {
        if (eid == id) continue;
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    if (dist[e.v] != -1) {
      int len = dist[e.v] + 1;
      if (best == -1 || len < best) best = len;
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

bool is_petersen(const CubicMultigraph& g) {
  return g.n() == 10 && g.is_simple() && g.is_cubic() && girth(g) == 5;
}

// --- cuts ---

namespace {

// components of g with the given base edges removed
std::vector<VertexSet> components_without(const CubicMultigraph& g, const EdgeBits& removed) {
  std::vector<VertexSet> comps;
  VertexSet seen = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (seen & vertex_bit(s)) continue;
    VertexSet comp = vertex_bit(s);
    seen |= vertex_bit(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [id, w] : g.incident(v)) {
        if (removed.test(id)) continue;
        if (!(seen & vertex_bit(w))) {
          seen |= vertex_bit(w);
          comp |= vertex_bit(w);
          stack.push_back(w);
        }
      }
    }
    comps.push_back(comp);
  }
  return comps;
}

bool edges_exactly_between(const CubicMultigraph& g, const std::vector<int>& ids, VertexSet a,
                           VertexSet b) {
  EdgeBits set = EdgeBits::of(ids);
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    bool crosses = ((a >> e.u) & 1 && (b >> e.v) & 1) || ((b >> e.u) & 1 && (a >> e.v) & 1);
    if (crosses != set.test(id)) return false;
  }
  return true;
}

}  // namespace

bool classify_cut(const CubicMultigraph& g, const std::vector<int>& edge_ids, EdgeCut* out) {
  EdgeBits removed = EdgeBits::of(edge_ids);
  auto comps = components_without(g, removed);
  if (comps.size() < 2) return false;
  // try unions of components as one side (few components in practice)
  int c = static_cast<int>(comps.size());
  if (c > 16) return false;
  for (unsigned mask = 1; mask + 1 < (1u << c); ++mask) {
    VertexSet a = 0;
    for (int i = 0; i < c; ++i)
      if (mask >> i & 1) a |= comps[i];
    VertexSet b = all_vertices(g.n()) & ~a;
    if (edges_exactly_between(g, edge_ids, a, b)) {
      if (out) {
        out->edge_ids = edge_ids;
        std::sort(out->edge_ids.begin(), out->edge_ids.end());
        out->side_a = a;
        out->side_b = b;
      }
      return true;
    }
  }
  return false;
}

namespace {

// base-id subsets whose multiplicities sum to `size`, ascending id tuples
std::vector<std::vector<int>> cut_candidates(const CubicMultigraph& g, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> ids;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(ids);
      return;
    }
    for (int id = start; id < g.m(); ++id) {
      if (g.edge(id).mult > remaining) continue;
      ids.push_back(id);
      self(self, id + 1, remaining - g.edge(id).mult);
      ids.pop_back();
    }
  };
  rec(rec, 0, size);
  return out;
}

}  // namespace

std::vector<EdgeCut> find_two_cuts(const CubicMultigraph& g) {
  std::vector<EdgeCut> cuts;
  for (const auto& ids : cut_candidates(g, 2)) {
    EdgeCut cut;
    if (classify_cut(g, ids, &cut)) cuts.push_back(std::move(cut));
  }
  return cuts;
}

std::vector<EdgeCut> find_nontrivial_three_cuts(const CubicMultigraph& g) {
  std::vector<EdgeCut> cuts;
  for (const auto& ids : cut_candidates(g, 3)) {
    EdgeCut cut;
    if (classify_cut(g, ids, &cut) && std::popcount(cut.side_a) >= 2 &&
        std::popcount(cut.side_b) >= 2)
      cuts.push_back(std::move(cut));
  }
  return cuts;
}

// --- cyclic connectivity ---

namespace {

bool vertex_set_has_circuit(const CubicMultigraph& g, VertexSet verts) {
  // a component of the induced subgraph has a circuit iff its instance count
  // reaches its order
  std::vector<int> idx(g.n(), -1);
  std::vector<int> vs;
  for (int v = 0; v < g.n(); ++v)
    if (verts >> v & 1) {
      idx[v] = static_cast<int>(vs.size());
      vs.push_back(v);
    }
  int k = static_cast<int>(vs.size());
  std::vector<int> parent(k);
  for (int i = 0; i < k; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> edges_in(k, 0), verts_in(k, 1);
  for (const Edge& e : g.edges()) {
    if (idx[e.u] < 0 || idx[e.v] < 0) continue;
    int a = find(idx[e.u]), b = find(idx[e.v]);
    if (a == b) {
      edges_in[a] += e.mult;
    } else {
      parent[b] = a;
      edges_in[a] += edges_in[b] + e.mult;
      verts_in[a] += verts_in[b];
    }
  }
  for (int i = 0; i < k; ++i)
    if (find(i) == i && edges_in[i] >= verts_in[i]) return true;
  return false;
}

bool subgraph_minus_has_circuit(const CubicMultigraph& g, const EdgeBits& removed,
                                int* num_circuit_components) {
  auto comps = components_without(g, removed);
  int count = 0;
  for (VertexSet c : comps) {
    // count instances inside c not removed
    int verts = std::popcount(c);
    int edges = 0;
    for (int id = 0; id < g.m(); ++id) {
      if (removed.test(id)) continue;
      const Edge& e = g.edge(id);
      if ((c >> e.u & 1) && (c >> e.v & 1)) edges += e.mult;
    }
    if (edges >= verts) ++count;
  }
  *num_circuit_components = count;
  return count >= 2;
}

std::optional<std::vector<int>> shortest_circuit_vertices(const CubicMultigraph& g) {
  // digon first
  for (const Edge& e : g.edges())
    if (e.mult >= 2) return std::vector<int>{e.u, e.v};
  std::optional<std::vector<int>> best;
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    std::vector<int> dist(g.n(), -1), from(g.n(), -1);
    std::queue<int> q;
    dist[e.u] = 0;
    q.push(e.u);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [eid, w] : g.incident(v)) {
        if (eid == id) continue;
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          from[w] = v;
          q.push(w);
        }
      }
    }
    if (dist[e.v] == -1) continue;
    std::vector<int> path;
    for (int v = e.v; v != -1; v = from[v]) path.push_back(v);
    if (!best || path.size() < best->size()) best = path;
  }
  return best;
}

}  // namespace

bool has_two_vertex_disjoint_circuits(const CubicMultigraph& g) {
  auto circuit = shortest_circuit_vertices(g);
  if (!circuit) return false;
  VertexSet cv = 0;
  for (int v : *circuit) cv |= vertex_bit(v);
  VertexSet rest = all_vertices(g.n()) & ~cv;
  if (vertex_set_has_circuit(g, rest)) return true;
  // For a cubic graph whose shortest circuit leaves a forest, n <= 2g-2, so
  // the brute force below only ever runs on tiny graphs.
  if (g.n() > 20)
    throw std::logic_error("unexpected: large cubic graph with forest remainder");
  for (VertexSet s = 1; s < all_vertices(g.n()); ++s) {
    if (!vertex_set_has_circuit(g, s)) continue;
    if (vertex_set_has_circuit(g, all_vertices(g.n()) & ~s)) return true;
  }
  return false;
}

CyclicConnectivity cyclic_connectivity(const CubicMultigraph& g, int cap) {
  if (!g.is_cubic() || !is_connected(g))
    throw ContractViolation("cyclic connectivity requires a connected cubic graph");
  if (!has_two_vertex_disjoint_circuits(g)) {
    CyclicConnectivity r;
    r.value = g.instance_count() - g.n() + 1;
    r.from_rank = true;
    return r;
  }
  // enumerate instance subsets of size k; a parallel class contributes
  // per-instance choices, so allow removing 1..mult copies of a base edge
  // (removing j < mult instances never disconnects, so only full classes
  // matter for separation; classes count with their multiplicity toward k)
  std::optional<int> gi = girth(g);
  int bound = std::min(cap, gi.value_or(cap));
  std::vector<int> choice;
  int m = g.m();
  for (int k = 1; k <= bound; ++k) {
    // choose base classes with total multiplicity <= k and full removal;
    // a cut of size k uses full parallel classes summing exactly k
    std::vector<int> ids;
    bool found = false;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
      if (found) return;
      if (remaining == 0) {
        EdgeBits removed = EdgeBits::of(ids);
        int nc = 0;
        if (subgraph_minus_has_circuit(g, removed, &nc)) found = true;
        return;
      }
      for (int id = start; id < m; ++id) {
        if (g.edge(id).mult > remaining) continue;
        ids.push_back(id);
        self(self, id + 1, remaining - g.edge(id).mult);
        ids.pop_back();
        if (found) return;
      }
    };
    rec(rec, 0, k);
    if (found) return {k, true, false};
  }
  return {bound + 1, false, false};
}

// --- surgeries ---

namespace {

// map a vertex set to 0..k-1 preserving index order
std::vector<int> index_map(int n, VertexSet side) {
  std::vector<int> map(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (side >> v & 1) map[v] = next++;
  return map;
}

void copy_side(const CubicMultigraph& g, VertexSet side, const std::vector<int>& map,
               const EdgeBits& skip, GraphBuilder* b) {
  for (int id = 0; id < g.m(); ++id) {
    if (skip.test(id)) continue;
    const Edge& e = g.edge(id);
    if ((side >> e.u & 1) && (side >> e.v & 1))
      b->add_edge(map[e.u], map[e.v], e.mult, e.label);
  }
}

}  // namespace

std::pair<CubicMultigraph, CubicMultigraph> two_edge_reduction(const CubicMultigraph& g,
                                                               const EdgeCut& cut) {
  if (cut.edge_ids.size() != 2) throw ContractViolation("2-edge-reduction needs a cut of size 2");
  EdgeCut checked;
  if (!classify_cut(g, cut.edge_ids, &checked))
    throw ContractViolation("edge set is not a cut");
  EdgeBits skip = EdgeBits::of(checked.edge_ids);
  const Edge& e1 = g.edge(checked.edge_ids[0]);
  const Edge& e2 = g.edge(checked.edge_ids[1]);
  auto reduce_side = [&](VertexSet side) {
    auto map = index_map(g.n(), side);
    GraphBuilder b(std::popcount(side));
    copy_side(g, side, map, skip, &b);
    int a = (side >> e1.u & 1) ? e1.u : e1.v;
    int c = (side >> e2.u & 1) ? e2.u : e2.v;
    if (a == c) throw ContractViolation("cut edges share an endpoint; not a 2-cut of a bridgeless cubic graph");
    b.add_edge(map[a], map[c], 1, "reduction");
    return b.build();
  };
  return {reduce_side(checked.side_a), reduce_side(checked.side_b)};
}

std::pair<CubicMultigraph, CubicMultigraph> three_edge_reduction(const CubicMultigraph& g,
                                                                 const EdgeCut& cut) {
  if (cut.edge_ids.size() != 3) throw ContractViolation("3-edge-reduction needs a cut of size 3");
  EdgeCut checked;
  if (!classify_cut(g, cut.edge_ids, &checked))
    throw ContractViolation("edge set is not a cut");
  if (std::popcount(checked.side_a) < 2 || std::popcount(checked.side_b) < 2)
    throw ContractViolation("trivial 3-cut rejected");
  EdgeBits skip = EdgeBits::of(checked.edge_ids);
  auto reduce_side = [&](VertexSet side) {
    auto map = index_map(g.n(), side);
    int k = std::popcount(side);
    GraphBuilder b(k + 1);
    copy_side(g, side, map, skip, &b);
    for (int id : checked.edge_ids) {
      const Edge& e = g.edge(id);
      int a = (side >> e.u & 1) ? e.u : e.v;
      b.add_edge(map[a], k, e.mult, "reduction");
    }
    return b.build();
  };
  return {reduce_side(checked.side_a), reduce_side(checked.side_b)};
}

CubicMultigraph two_cut_connection(const CubicMultigraph& g1, int e1, const CubicMultigraph& g2,
                                   int e2) {
  if (e1 < 0 || e1 >= g1.m() || e2 < 0 || e2 >= g2.m())
    throw ContractViolation("edge id out of range");
  if (g1.edge(e1).mult != 1 || g2.edge(e2).mult != 1)
    throw ContractViolation("2-cut-connection on a parallel class is not supported");
  GraphBuilder b(g1.n() + g2.n());
  for (int id = 0; id < g1.m(); ++id) {
    if (id == e1) continue;
    const Edge& e = g1.edge(id);
    b.add_edge(e.u, e.v, e.mult, e.label);
  }
  int off = g1.n();
  for (int id = 0; id < g2.m(); ++id) {
    if (id == e2) continue;
    const Edge& e = g2.edge(id);
    b.add_edge(e.u + off, e.v + off, e.mult, e.label);
  }
  const Edge& a = g1.edge(e1);
  const Edge& c = g2.edge(e2);
  b.add_edge(a.u, c.u + off, 1, "principal");
  b.add_edge(a.v, c.v + off, 1, "principal");
  return b.build();
}

namespace {

// incidence stubs of v in edge-id order, one per instance
std::vector<std::pair<int, int>> stubs_of(const CubicMultigraph& g, int v) {
  std::vector<std::pair<int, int>> stubs;  // (edge id, other endpoint)
  for (auto [id, w] : g.incident(v))
    for (int i = 0; i < g.edge(id).mult; ++i) stubs.emplace_back(id, w);
  return stubs;
}

}  // namespace

CubicMultigraph three_cut_connection(const CubicMultigraph& g1, int v1, const CubicMultigraph& g2,
                                     int v2, const std::array<int, 3>& pairing) {
  if (v1 < 0 || v1 >= g1.n() || v2 < 0 || v2 >= g2.n())
    throw ContractViolation("vertex out of range");
  if (g1.degree(v1) != 3 || g2.degree(v2) != 3)
    throw ContractViolation("3-cut-connection needs degree-3 vertices");
  {
    std::array<bool, 3> seen{false, false, false};
    for (int p : pairing) {
      if (p < 0 || p > 2 || seen[p]) throw ContractViolation("pairing must be a permutation of 0,1,2");
      seen[p] = true;
    }
  }
  auto stubs1 = stubs_of(g1, v1);
  auto stubs2 = stubs_of(g2, v2);
  // vertices: g1 - v1 keeps order, then g2 - v2
  auto map1 = index_map(g1.n(), all_vertices(g1.n()) & ~vertex_bit(v1));
  auto map2 = index_map(g2.n(), all_vertices(g2.n()) & ~vertex_bit(v2));
  int off = g1.n() - 1;
  GraphBuilder b(g1.n() + g2.n() - 2);
  for (int id = 0; id < g1.m(); ++id) {
    const Edge& e = g1.edge(id);
    if (e.u == v1 || e.v == v1) continue;
    b.add_edge(map1[e.u], map1[e.v], e.mult, e.label);
  }
  for (int id = 0; id < g2.m(); ++id) {
    const Edge& e = g2.edge(id);
    if (e.u == v2 || e.v == v2) continue;
    b.add_edge(map2[e.u] + off, map2[e.v] + off, e.mult, e.label);
  }
  for (int i = 0; i < 3; ++i)
    b.add_edge(map1[stubs1[i].second], map2[stubs2[pairing[i]].second] + off, 1, "principal");
  return b.build();
}

CubicMultigraph expand_vertex_to_triangle(const CubicMultigraph& g, int v) {
  if (v < 0 || v >= g.n()) throw ContractViolation("vertex out of range");
  if (g.degree(v) != 3) throw ContractViolation("triangle expansion needs a degree-3 vertex");
  auto stubs = stubs_of(g, v);
  int t1 = v, t2 = g.n(), t3 = g.n() + 1;
  GraphBuilder b(g.n() + 2);
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    if (e.u == v || e.v == v) continue;
    b.add_edge(e.u, e.v, e.mult, e.label);
  }
  int attach[3] = {t1, t2, t3};
  for (int i = 0; i < 3; ++i)
    b.add_edge(attach[i], stubs[i].second, 1, g.edge(stubs[i].first).label);
  b.add_edge(t1, t2, 1, "triangle");
  b.add_edge(t2, t3, 1, "triangle");
  b.add_edge(t1, t3, 1, "triangle");
  return b.build();
}

// --- edge list text ---

std::string to_edge_list_text(const CubicMultigraph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << ' ' << e.mult << '\n';
  return os.str();
}

CubicMultigraph parse_edge_list_text(const std::string& text) {
  std::istringstream is(text);
  int n = 0, m = 0;
  if (!(is >> n >> m)) throw ContractViolation("edge list: missing header");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    Edge e;
    if (!(is >> e.u >> e.v >> e.mult)) throw ContractViolation("edge list: truncated");
    edges.push_back(e);
  }
  return CubicMultigraph(n, std::move(edges));
}

}  // namespace snark
