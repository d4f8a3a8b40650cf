#include "snark/matchings.hpp"

#include <algorithm>

namespace snark {

namespace {

void enumerate_rec(const CubicMultigraph& g, VertexSet covered, EdgeBits chosen,
                   std::vector<PerfectMatching>* out) {
  VertexSet uncovered = all_vertices(g.n()) & ~covered;
  if (uncovered == 0) {
    out->push_back({chosen});
    return;
  }
  int v = std::countr_zero(uncovered);
  for (auto [id, w] : g.incident(v)) {
    if (covered >> w & 1) continue;
    EdgeBits next = chosen;
    next.set(id);
    enumerate_rec(g, covered | vertex_bit(v) | vertex_bit(w), next, out);
  }
}

}  // namespace

MatchingList enumerate_perfect_matchings(const CubicMultigraph& g) {
  if (g.m() > EdgeBits::kCapacity)
    throw ContractViolation("edge-set algorithms support at most 128 base edges");
  MatchingList list;
  list.host_digest = g.structural_digest();
  if (g.n() % 2 != 0) return list;  // odd order, no perfect matching
  enumerate_rec(g, 0, {}, &list.matchings);
  // branching on the lowest uncovered vertex with ascending edge ids yields
  // lexicographic order already; keep the invariant explicit
  for (size_t i = 1; i < list.matchings.size(); ++i)
    if (!lex_less(list.matchings[i - 1].edges, list.matchings[i].edges))
      throw std::logic_error("matching enumeration out of order");
  return list;
}

namespace {

struct CoverSearch {
  const MatchingList& list;
  int m;           // base edges of the host
  int max_cover;   // edges one matching can cover
  int k;           // cover size target
  std::vector<char> forbidden;
  std::vector<int> picks;
  std::vector<int> found;

  bool rec(EdgeBits uncovered) {
    if (uncovered.none()) {
      found = picks;
      return true;
    }
    int depth = static_cast<int>(picks.size());
    if (depth == k) return false;
    int need = (uncovered.count() + max_cover - 1) / max_cover;
    if (depth + need > k) return false;
    int e = uncovered.first();
    std::vector<int> cands;
    for (int i = 0; i < list.size(); ++i)
      if (!forbidden[i] && list[i].edges.test(e)) cands.push_back(i);
    // a cover using cands[s] for the lowest uncovered edge is found in
    // branch s; later branches may forbid it
    bool ok = false;
    for (size_t t = 0; t < cands.size() && !ok; ++t) {
      picks.push_back(cands[t]);
      forbidden[cands[t]] = 1;
      ok = rec(uncovered & ~list[cands[t]].edges);
      picks.pop_back();
    }
    for (int c : cands) forbidden[c] = 0;
    return ok;
  }
};

}  // namespace

PmIndexResult perfect_matching_index(const CubicMultigraph& g, const MatchingList& list, int cap) {
  PmIndexResult r;
  r.cap = cap;
  if (has_bridge(g) || list.size() == 0) {
    r.kind = PmIndexResult::Kind::Infinite;
    return r;
  }
  EdgeBits all = EdgeBits::all(g.m());
  for (int k = 1; k <= cap; ++k) {
    CoverSearch search{list, g.m(), g.n() / 2, k, std::vector<char>(list.size(), 0), {}, {}};
    if (search.rec(all)) {
      r.kind = PmIndexResult::Kind::Value;
      r.value = k;
      r.witness = search.found;
      std::sort(r.witness.begin(), r.witness.end());
      return r;
    }
  }
  r.kind = PmIndexResult::Kind::GreaterThanCap;
  return r;
}

PmIndexResult perfect_matching_index(const CubicMultigraph& g, int cap) {
  return perfect_matching_index(g, enumerate_perfect_matchings(g), cap);
}

bool is_tight_cut(const CubicMultigraph& g, const MatchingList& list, const EdgeCut& cut) {
  (void)g;
  EdgeBits cutbits = EdgeBits::of(cut.edge_ids);
  if (list.size() == 0) return false;
  for (const PerfectMatching& pm : list.matchings)
    if ((pm.edges & cutbits).count() != 1) return false;
  return true;
}

bool is_tight_cut(const CubicMultigraph& g, const EdgeCut& cut) {
  return is_tight_cut(g, enumerate_perfect_matchings(g), cut);
}

std::vector<EdgeCut> find_nontrivial_tight_three_cuts(const CubicMultigraph& g,
                                                      const MatchingList& list) {
  std::vector<EdgeCut> out;
  for (EdgeCut& cut : find_nontrivial_three_cuts(g))
    if (is_tight_cut(g, list, cut)) out.push_back(std::move(cut));
  return out;
}

std::vector<EdgeCut> find_nontrivial_tight_three_cuts(const CubicMultigraph& g) {
  return find_nontrivial_tight_three_cuts(g, enumerate_perfect_matchings(g));
}

std::optional<std::array<int, 3>> fan_raspaud(const MatchingList& list) {
  int n = list.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      EdgeBits ij = list[i].edges & list[j].edges;
      for (int k = j + 1; k < n; ++k)
        if ((ij & list[k].edges).none()) return std::array<int, 3>{i, j, k};
    }
  return std::nullopt;
}

std::optional<std::array<int, 3>> fan_raspaud(const CubicMultigraph& g) {
  return fan_raspaud(enumerate_perfect_matchings(g));
}

namespace {

bool has_perfect_matching_on(const CubicMultigraph& g, VertexSet verts) {
  if (verts == 0) return true;
  int v = std::countr_zero(verts);
  for (auto [id, w] : g.incident(v)) {
    (void)id;
    if (!(verts >> w & 1)) continue;
    if (has_perfect_matching_on(g, verts & ~vertex_bit(v) & ~vertex_bit(w))) return true;
  }
  return false;
}

}  // namespace

bool is_coverable(const CubicMultigraph& g, int u) {
  auto part = bipartition(g);
  if (!part) throw ContractViolation("is_coverable requires a bipartite graph");
  if (u < 0 || u >= g.n()) throw ContractViolation("vertex out of range");
  VertexSet u_side = (*part >> u & 1) ? *part : (all_vertices(g.n()) & ~*part);
  VertexSet w_side = all_vertices(g.n()) & ~u_side;
  for (int w = 0; w < g.n(); ++w) {
    if (!(w_side >> w & 1)) continue;
    // all edge instances at u and w are in the subgraph; everyone else needs
    // degree exactly 1
    std::vector<int> load(g.n(), 0);
    bool fits = true;
    for (auto [id, x] : g.incident(u)) load[x] += g.edge(id).mult;
    for (auto [id, x] : g.incident(w))
      if (x != u) load[x] += g.edge(id).mult;
    load[u] = load[w] = 0;
    VertexSet rest = all_vertices(g.n()) & ~vertex_bit(u) & ~vertex_bit(w);
    for (int x = 0; x < g.n(); ++x) {
      if (x == u || x == w) continue;
      if (load[x] > 1) fits = false;
      if (load[x] == 1) rest &= ~vertex_bit(x);
    }
    if (!fits || !has_perfect_matching_on(g, rest)) return false;
  }
  return true;
}

}  // namespace snark
