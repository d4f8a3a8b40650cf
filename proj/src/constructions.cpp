#include "snark/constructions.hpp"

#include <algorithm>
#include <json.hpp>

namespace snark {

CubicMultigraph petersen() {
  GraphBuilder b(10);
  // outer cycle, spokes, pentagram
  int outer[5][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  for (auto& e : outer) b.add_edge(e[0], e[1]);
  for (int i = 0; i < 5; ++i) b.add_edge(i, i + 5);
  int inner[5][2] = {{5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}};
  for (auto& e : inner) b.add_edge(e[0], e[1]);
  return b.build();
}

CubicMultigraph flower_snark(int n) {
  if (n < 3 || n % 2 == 0) throw ContractViolation("flower snark needs odd n >= 3");
  if (4 * n > kMaxVertices) throw ContractViolation("flower snark too large");
  // pole i: hub 4i, star centre 4i+1, outer 4i+2 and 4i+3
  auto hub = [](int i) { return 4 * i; };
  auto centre = [](int i) { return 4 * i + 1; };
  auto outer_c = [](int i) { return 4 * i + 2; };
  auto outer_d = [](int i) { return 4 * i + 3; };
  GraphBuilder b(4 * n);
  for (int i = 0; i < n; ++i) {
    b.add_edge(hub(i), centre(i), 1, "spoke:" + std::to_string(i));
    b.add_edge(centre(i), outer_c(i), 1);
    b.add_edge(centre(i), outer_d(i), 1);
  }
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    std::string tag = "link:" + std::to_string(i) + ":";
    b.add_edge(outer_d(i), outer_c(j), 1, tag + "1");
    b.add_edge(hub(i), hub(j), 1, tag + "2");
    b.add_edge(outer_c(i), outer_d(j), 1, tag + "3");
  }
  return b.build();
}

CubicMultigraph circular_ladder(int rungs) {
  if (rungs < 3) throw ContractViolation("circular ladder needs at least 3 rungs");
  if (2 * rungs > kMaxVertices) throw ContractViolation("ladder too large");
  GraphBuilder b(2 * rungs);
  for (int i = 0; i < rungs; ++i) {
    b.add_edge(i, (i + 1) % rungs);
    b.add_edge(rungs + i, rungs + (i + 1) % rungs);
    b.add_edge(i, rungs + i);
  }
  return b.build();
}

CubicMultigraph moebius_ladder(int rungs) {
  if (rungs < 2) throw ContractViolation("moebius ladder needs at least 2 rungs");
  if (2 * rungs > kMaxVertices) throw ContractViolation("ladder too large");
  int n = 2 * rungs;
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  for (int i = 0; i < rungs; ++i) b.add_edge(i, i + rungs);
  return b.build();
}

CubicMultigraph windmill() { return treelike_snark(claw_spec()); }

CubicMultigraph generate(const std::string& name, std::optional<int> parameter) {
  auto need = [&](const char* what) -> int {
    if (!parameter) throw ContractViolation(std::string("generator '") + what + "' needs a parameter");
    return *parameter;
  };
  if (name == "petersen") return petersen();
  if (name == "tietze") return tietze();
  if (name == "flower") return flower_snark(need("flower"));
  if (name == "circular_ladder") return circular_ladder(need("circular_ladder"));
  if (name == "moebius_ladder") return moebius_ladder(need("moebius_ladder"));
  if (name == "windmill") return windmill();
  if (name == "k4") return moebius_ladder(2);
  if (name == "k33") return moebius_ladder(3);
  if (name == "prism") return circular_ladder(3);
  if (name == "cube") return circular_ladder(4);
  throw ContractViolation("unknown generator: " + name);
}

std::vector<int> flower_spokes(const CubicMultigraph& g) {
  std::vector<std::pair<int, int>> found;  // (pole index, edge id)
  for (int id = 0; id < g.m(); ++id) {
    const std::string& l = g.edge(id).label;
    if (l.rfind("spoke:", 0) == 0) found.emplace_back(std::stoi(l.substr(6)), id);
  }
  std::sort(found.begin(), found.end());
  std::vector<int> ids;
  for (auto& [i, id] : found) ids.push_back(id);
  return ids;
}

std::vector<std::array<int, 3>> flower_links(const CubicMultigraph& g) {
  int n = static_cast<int>(flower_spokes(g).size());
  std::vector<std::array<int, 3>> links(n, {-1, -1, -1});
  for (int id = 0; id < g.m(); ++id) {
    const std::string& l = g.edge(id).label;
    if (l.rfind("link:", 0) != 0) continue;
    auto colon = l.find(':', 5);
    int i = std::stoi(l.substr(5, colon - 5));
    int j = std::stoi(l.substr(colon + 1));
    links[i][j - 1] = id;
  }
  return links;
}

std::optional<DfPolePosition> detect_good_df_pole(const CubicMultigraph& f,
                                                  const PerfectMatching& m) {
  auto links = flower_links(f);
  int n = static_cast<int>(links.size());
  if (n == 0) throw ContractViolation("host is not a labelled flower snark");
  for (int i = 0; i < n; ++i) {
    const auto& left = links[(i - 1 + n) % n];   // boundary into pole i
    const auto& right = links[(i + 1) % n];      // boundary out of pole i+1
    EdgeBits boundary;
    for (int j = 0; j < 3; ++j) {
      boundary.set(left[j]);
      boundary.set(right[j]);
    }
    EdgeBits hit = m.edges & boundary;
    if (hit.count() != 2) continue;
    for (int j = 0; j < 3; ++j)
      if (hit.test(left[j]) && hit.test(right[j])) return DfPolePosition{i, j + 1};
  }
  return std::nullopt;
}

CubicMultigraph extend_with_petersens(const CubicMultigraph& g, int u) {
  auto part = bipartition(g);
  if (!part || !g.is_cubic()) throw ContractViolation("extension needs a bipartite cubic graph");
  if (u < 0 || u >= g.n()) throw ContractViolation("vertex out of range");
  VertexSet u_side = (*part >> u & 1) ? *part : (all_vertices(g.n()) & ~*part);
  VertexSet w_side = all_vertices(g.n()) & ~u_side;
  int nw = std::popcount(w_side);
  int keep = g.n() - nw;
  if (keep + 9 * nw + 2 > kMaxVertices) throw ContractViolation("extension too large");

  std::vector<int> map(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v)
    if (u_side >> v & 1) map[v] = next++;

  CubicMultigraph p = petersen();
  GraphBuilder b(keep + 9 * nw);
  for (const Edge& e : g.edges())
    if ((u_side >> e.u & 1) && (u_side >> e.v & 1)) b.add_edge(map[e.u], map[e.v], e.mult, e.label);

  int block = keep;
  int index = 0;
  for (int w = 0; w < g.n(); ++w) {
    if (!(w_side >> w & 1)) continue;
    // Petersen minus vertex 0, remapped to block..block+8
    for (const Edge& e : p.edges()) {
      if (e.u == 0 || e.v == 0) continue;
      b.add_edge(block + e.u - 1, block + e.v - 1, 1);
    }
    // stubs of w joined to the former neighbours of 0, both in index order
    std::vector<int> stubs;
    for (auto [id, x] : g.incident(w))
      for (int i = 0; i < g.edge(id).mult; ++i) stubs.push_back(x);
    int pn[3] = {1, 4, 5};
    for (int i = 0; i < 3; ++i)
      b.add_edge(map[stubs[i]], block + pn[i] - 1, 1, "principal:" + std::to_string(index));
    block += 9;
    ++index;
  }
  return expand_vertex_to_triangle(b.build(), map[u]);
}

std::vector<int> extension_principal_cut(const CubicMultigraph& h, int i) {
  std::vector<int> ids;
  std::string want = "principal:" + std::to_string(i);
  for (int id = 0; id < h.m(); ++id)
    if (h.edge(id).label == want) ids.push_back(id);
  return ids;
}

std::optional<ExtensionWitness> extension_witness(const CubicMultigraph& h,
                                                  const MatchingList& list) {
  std::vector<std::vector<int>> candidates;
  for (int i = 0;; ++i) {
    auto cut = extension_principal_cut(h, i);
    if (cut.empty()) break;
    EdgeBits bits = EdgeBits::of(cut);
    std::vector<int> cands;
    for (int j = 0; j < list.size(); ++j)
      if (bits.is_subset_of(list[j].edges)) cands.push_back(j);
    if (cands.empty()) return std::nullopt;
    candidates.push_back(std::move(cands));
  }
  if (candidates.empty()) throw ContractViolation("graph carries no principal cut labels");
  int k = static_cast<int>(candidates.size());
  std::vector<int> pick(k, 0);
  for (;;) {
    std::vector<Edge> edges = h.edges();
    for (int i = 0; i < k; ++i) {
      const EdgeBits& m = list[candidates[i][pick[i]]].edges;
      for (int id = m.first(); id >= 0; id = m.next(id)) edges[id].mult += 1;
    }
    CubicMultigraph host(h.n(), std::move(edges));
    auto r = edge_color(host, k + 3);
    if (r.verdict == ColorVerdict::Colourable) {
      ExtensionWitness w;
      for (int i = 0; i < k; ++i) w.matchings.push_back(candidates[i][pick[i]]);
      w.coloring = r.coloring;
      return w;
    }
    int i = k - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(candidates[i].size())) {
      pick[i] = 0;
      --i;
    }
    if (i < 0) return std::nullopt;
    ++pick[i];
  }
}

TreelikeSpec claw_spec() {
  TreelikeSpec spec;
  spec.tree_n = 4;
  spec.tree_edges = {{0, 1}, {0, 2}, {0, 3}};
  spec.leaf_order = {1, 2, 3};
  spec.poles = {frumious_pole_default(), frumious_pole_default(), frumious_pole_default()};
  return spec;
}

CubicMultigraph treelike_snark(const TreelikeSpec& spec) {
  std::vector<int> deg(spec.tree_n, 0);
  for (auto [a, b] : spec.tree_edges) {
    if (a < 0 || b < 0 || a >= spec.tree_n || b >= spec.tree_n || a == b)
      throw ContractViolation("bad tree edge");
    ++deg[a];
    ++deg[b];
  }
  if (static_cast<int>(spec.tree_edges.size()) != spec.tree_n - 1)
    throw ContractViolation("tree edge count must be n-1");
  std::vector<int> leaves;
  for (int v = 0; v < spec.tree_n; ++v) {
    if (deg[v] != 1 && deg[v] != 3)
      throw ContractViolation("tree degrees must be 1 or 3");
    if (deg[v] == 1) leaves.push_back(v);
  }
  std::vector<int> sorted = spec.leaf_order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != leaves) throw ContractViolation("leaf order must be a permutation of the leaves");
  int nl = static_cast<int>(leaves.size());
  if (static_cast<int>(spec.poles.size()) != nl)
    throw ContractViolation("one pole per circuit edge required");
  for (const FrumiousPole& fp : spec.poles) {
    if (fp.pole.arity() != 4) throw ContractViolation("treelike poles must have arity 4");
    validate_cubic_pole(fp.pole);
  }
  int total = spec.tree_n + 2 * nl;
  for (const FrumiousPole& fp : spec.poles) total += fp.pole.n;
  if (total > kMaxVertices) throw ContractViolation("treelike snark too large");

  GraphBuilder b(total);
  for (auto [x, y] : spec.tree_edges) b.add_edge(x, y, 1, "tree");
  // two pendant vertices per leaf, in leaf_order
  std::vector<std::array<int, 2>> pend(spec.tree_n, {-1, -1});
  int next = spec.tree_n;
  for (int x : spec.leaf_order) {
    pend[x] = {next, next + 1};
    b.add_edge(x, next, 1);
    b.add_edge(x, next + 1, 1);
    next += 2;
  }
  for (int i = 0; i < nl; ++i) {
    int x = spec.leaf_order[i];
    int y = spec.leaf_order[(i + 1) % nl];
    const KPole& pole = spec.poles[i].pole;
    int base = next;
    for (const Edge& e : pole.edges) b.add_edge(base + e.u, base + e.v, e.mult, e.label);
    b.add_edge(base + pole.dangling[0], pend[x][0], 1);
    b.add_edge(base + pole.dangling[1], pend[x][1], 1);
    b.add_edge(base + pole.dangling[2], pend[y][0], 1);
    b.add_edge(base + pole.dangling[3], pend[y][1], 1);
    next += pole.n;
  }
  return b.build();
}

TreelikeSpec parse_treelike_spec_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  TreelikeSpec spec;
  int max_vertex = -1;
  for (const auto& e : j.at("tree")) {
    int a = e.at(0).get<int>();
    int b = e.at(1).get<int>();
    spec.tree_edges.emplace_back(a, b);
    max_vertex = std::max({max_vertex, a, b});
  }
  spec.tree_n = max_vertex + 1;
  for (const auto& l : j.at("leaf_order")) spec.leaf_order.push_back(l.get<int>());
  for (const auto& p : j.at("poles")) {
    std::string name = p.get<std::string>();
    if (name != "petersen")
      throw ContractViolation("unknown pole name: " + name);
    spec.poles.push_back(frumious_pole_default());
  }
  return spec;
}

}  // namespace snark
