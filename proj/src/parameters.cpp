#include "snark/parameters.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace snark {

namespace {

CubicMultigraph induced_on(const CubicMultigraph& g, VertexSet side) {
  std::vector<int> map(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v)
    if (side >> v & 1) map[v] = next++;
  GraphBuilder b(next);
  for (const Edge& e : g.edges())
    if ((side >> e.u & 1) && (side >> e.v & 1)) b.add_edge(map[e.u], map[e.v], e.mult, e.label);
  return b.build();
}

LatticeNode analyze(const CubicMultigraph& g, bool* in_lattice, bool* bridge_failure) {
  LatticeNode node;
  node.graph_text = to_edge_list_text(g);
  if (g.n() == 0 || g.m() == 0) {
    node.kind = LatticeNode::Kind::LeafBipartite;
    *in_lattice = true;
    return node;
  }
  if (!bridges(g).empty()) {
    node.kind = LatticeNode::Kind::LeafBridge;
    *in_lattice = false;
    *bridge_failure = true;
    return node;
  }
  auto comps = components(g);
  if (comps.size() > 1) {
    node.kind = LatticeNode::Kind::ComponentSplit;
    bool all = true;
    for (VertexSet c : comps) {
      bool sub = false;
      node.children.push_back(analyze(induced_on(g, c), &sub, bridge_failure));
      all = all && sub;
    }
    *in_lattice = all;
    return node;
  }
  // cheap positive certificate: bipartite means 3-edge-colourable
  if (is_bipartite(g)) {
    node.kind = LatticeNode::Kind::LeafBipartite;
    *in_lattice = true;
    return node;
  }
  auto two_cuts = find_two_cuts(g);
  if (!two_cuts.empty()) {
    node.kind = LatticeNode::Kind::TwoCutSplit;
    node.cut_edge_ids = two_cuts.front().edge_ids;
    auto [g1, g2] = two_edge_reduction(g, two_cuts.front());
    bool a = false, b = false;
    node.children.push_back(analyze(g1, &a, bridge_failure));
    node.children.push_back(analyze(g2, &b, bridge_failure));
    *in_lattice = a && b;
    return node;
  }
  auto tight = find_nontrivial_tight_three_cuts(g);
  if (!tight.empty()) {
    node.kind = LatticeNode::Kind::TightThreeCutSplit;
    node.cut_edge_ids = tight.front().edge_ids;
    auto [g1, g2] = three_edge_reduction(g, tight.front());
    bool a = false, b = false;
    node.children.push_back(analyze(g1, &a, bridge_failure));
    node.children.push_back(analyze(g2, &b, bridge_failure));
    *in_lattice = a && b;
    return node;
  }
  if (is_petersen(g)) {
    node.kind = LatticeNode::Kind::LeafPetersen;
    *in_lattice = false;
    return node;
  }
  node.kind = LatticeNode::Kind::LeafBrick;
  *in_lattice = true;
  return node;
}

}  // namespace

LatticeVerdict one_in_lattice(const CubicMultigraph& g) {
  LatticeVerdict verdict;
  verdict.root = analyze(g, &verdict.in_lattice, &verdict.bridge_failure);
  return verdict;
}

namespace {

// lexicographically next non-decreasing index tuple over 0..limit-1
bool next_multiset(std::vector<int>* tuple, int limit) {
  auto& t = *tuple;
  int k = static_cast<int>(t.size());
  for (int i = k - 1; i >= 0; --i) {
    if (t[i] + 1 < limit) {
      int v = t[i] + 1;
      for (int j = i; j < k; ++j) t[j] = v;
      return true;
    }
  }
  return false;
}

CubicMultigraph add_matchings(const CubicMultigraph& g, const MatchingList& list,
                              const std::vector<int>& indices) {
  std::vector<Edge> edges = g.edges();
  for (int idx : indices)
    for (int id = list[idx].edges.first(); id >= 0; id = list[idx].edges.next(id))
      edges[id].mult += 1;
  return CubicMultigraph(g.n(), std::move(edges));
}

}  // namespace

LValue l_value(const CubicMultigraph& g, int k_max, std::uint64_t node_limit) {
  LValue result;
  result.certificate = one_in_lattice(g);
  if (!result.certificate.in_lattice) {
    result.kind = LValue::Kind::Infinite;
    return result;
  }
  MatchingList list = enumerate_perfect_matchings(g);
  bool gave_up = false;
  for (int k = 0; k <= k_max; ++k) {
    std::vector<int> tuple(k, 0);
    do {
      CubicMultigraph host = add_matchings(g, list, tuple);
      auto r = edge_color(host, k + 3, node_limit);
      if (r.verdict == ColorVerdict::Colourable) {
        result.kind = LValue::Kind::Finite;
        result.k = k;
        result.witness = tuple;
        result.coloring = r.coloring;
        return result;
      }
      if (r.verdict == ColorVerdict::Indeterminate) gave_up = true;
    } while (k > 0 && next_multiset(&tuple, list.size()));
  }
  result.kind = gave_up ? LValue::Kind::Indeterminate : LValue::Kind::AtLeast;
  result.k = k_max + 1;
  return result;
}

LmValue l_m(const CubicMultigraph& g, const PerfectMatching& m, int t_max,
            std::uint64_t node_limit) {
  bool gave_up = false;
  for (int t = 0; t <= t_max; ++t) {
    std::vector<Edge> edges = g.edges();
    for (int id = m.edges.first(); id >= 0; id = m.edges.next(id)) edges[id].mult += t;
    CubicMultigraph host(g.n(), std::move(edges));
    auto r = edge_color(host, t + 3, node_limit);
    if (r.verdict == ColorVerdict::Colourable) return {LmValue::Kind::Finite, t, r.coloring};
    if (r.verdict == ColorVerdict::Indeterminate) gave_up = true;
  }
  return {gave_up ? LmValue::Kind::Indeterminate : LmValue::Kind::AtLeast, t_max + 1, {}};
}

FrumiousReport frumious_bounded(const CubicMultigraph& g, const MatchingList& list, int t_max,
                                int threads, std::uint64_t node_limit) {
  FrumiousReport report;
  report.t_max = t_max;
  report.table.assign(list.size(), {});
  if (list.size() == 0) {
    report.frumious_up_to = true;  // vacuously: no matchings to probe
    return report;
  }
  if (threads <= 1) {
    for (int i = 0; i < list.size(); ++i) {
      report.table[i] = l_m(g, list[i], t_max, node_limit);
      if (report.table[i].kind == LmValue::Kind::Finite) {
        report.witness_matching = i;
        report.witness = report.table[i];
        return report;
      }
      if (report.table[i].kind == LmValue::Kind::Indeterminate) report.indeterminate = true;
    }
    report.frumious_up_to = !report.indeterminate;
    return report;
  }
  // threaded full scan; the verdict is the lowest Finite index, so the
  // outcome does not depend on scheduling
  std::atomic<int> cursor{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&]() {
      for (;;) {
        int i = cursor.fetch_add(1);
        if (i >= list.size()) return;
        report.table[i] = l_m(g, list[i], t_max, node_limit);
      }
    });
  for (auto& th : pool) th.join();
  for (int i = 0; i < list.size(); ++i) {
    if (report.table[i].kind == LmValue::Kind::Finite) {
      report.witness_matching = i;
      report.witness = report.table[i];
      return report;
    }
    if (report.table[i].kind == LmValue::Kind::Indeterminate) report.indeterminate = true;
  }
  report.frumious_up_to = !report.indeterminate;
  return report;
}

FrumiousReport frumious_bounded(const CubicMultigraph& g, int t_max, int threads,
                                std::uint64_t node_limit) {
  return frumious_bounded(g, enumerate_perfect_matchings(g), t_max, threads, node_limit);
}

SpResult sp_membership_witnessed(const CubicMultigraph& g, int t, std::uint64_t node_limit) {
  if (t < 1) throw ContractViolation("sp membership needs t >= 1");
  auto r = edge_color(g.scaled(t), 3 * t, node_limit);
  SpResult out;
  out.verdict = r.verdict;
  if (r.verdict == ColorVerdict::Colourable) out.coloring = r.coloring;
  return out;
}

bool sp_membership(const CubicMultigraph& g, int t) {
  return sp_membership_witnessed(g, t).verdict == ColorVerdict::Colourable;
}

SpResult sp2_membership_witnessed(const CubicMultigraph& g, int t, std::uint64_t node_limit) {
  if (t < 0) throw ContractViolation("sp2 membership needs t >= 0");
  MatchingList list = enumerate_perfect_matchings(g);
  SpResult out;
  if (t > 0 && list.size() == 0) return out;
  EdgeBits all = EdgeBits::all(g.m());
  bool gave_up = false;
  std::vector<int> tuple(t, 0);
  do {
    std::vector<Edge> edges = g.edges();
    for (int idx : tuple) {
      EdgeBits factor = all & ~list[idx].edges;
      for (int id = factor.first(); id >= 0; id = factor.next(id)) edges[id].mult += 1;
    }
    CubicMultigraph host(g.n(), std::move(edges));
    auto r = edge_color(host, 2 * t + 3, node_limit);
    if (r.verdict == ColorVerdict::Colourable) {
      out.verdict = ColorVerdict::Colourable;
      out.coloring = r.coloring;
      out.factors = tuple;
      return out;
    }
    if (r.verdict == ColorVerdict::Indeterminate) gave_up = true;
  } while (t > 0 && next_multiset(&tuple, list.size()));
  out.verdict = gave_up ? ColorVerdict::Indeterminate : ColorVerdict::NotColourable;
  return out;
}

bool sp2_membership(const CubicMultigraph& g, int t) {
  return sp2_membership_witnessed(g, t).verdict == ColorVerdict::Colourable;
}

}  // namespace snark
