#include "snark/coloring.hpp"

#include <algorithm>
#include <bit>

namespace snark {

std::vector<std::vector<int>> MultiColoring::as_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(colour_sets.size());
  for (std::uint32_t set : colour_sets) {
    std::vector<int> colours;
    for (int c = 0; set; ++c, set >>= 1)
      if (set & 1) colours.push_back(c);
    out.push_back(std::move(colours));
  }
  return out;
}

namespace {

// Backtracking solver over colour-set assignments per base edge. Fail-first
// edge choice (fewest candidate sets), colour symmetry broken by fixing the
// edges around a max-degree pivot vertex, deterministic tie-breaks by edge
// index.
struct Solver {
  const CubicMultigraph& g;
  int k;
  std::uint64_t node_limit;
  std::uint32_t full;
  std::vector<std::uint32_t> assigned;  // 0 = unassigned
  std::vector<std::uint32_t> used;      // per vertex
  int unassigned_count = 0;
  std::uint64_t nodes = 0;
  bool limit_hit = false;

  Solver(const CubicMultigraph& graph, int colours, std::uint64_t limit)
      : g(graph), k(colours), node_limit(limit) {
    full = (colours >= 32) ? ~0u : ((1u << colours) - 1);
    assigned.assign(g.m(), 0);
    used.assign(g.n(), 0);
    unassigned_count = g.m();
  }

  std::uint32_t avail(int e) const {
    const Edge& ed = g.edge(e);
    return full & ~used[ed.u] & ~used[ed.v];
  }

  static int nchoosek(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return static_cast<int>(std::min<long long>(v, 1 << 30));
  }

  // feasibility around a vertex: each unassigned edge has room, every free
  // colour is usable somewhere, small unions satisfy Hall
  bool vertex_ok(int v) const {
    std::uint32_t local[8];
    int mults[8];
    int cnt = 0;
    int demand = 0;
    for (auto [id, w] : g.incident(v)) {
      (void)w;
      if (assigned[id]) continue;
      std::uint32_t a = avail(id);
      int m = g.edge(id).mult;
      if (std::popcount(a) < m) return false;
      if (cnt < 8) {
        local[cnt] = a;
        mults[cnt] = m;
        ++cnt;
      }
      demand += m;
    }
    if (cnt == 0) return true;
    std::uint32_t free = full & ~used[v];
    if (std::popcount(free) < demand) return false;
    if (cnt <= 4) {
      // Hall condition over all subsets of the unassigned edges at v
      for (unsigned mask = 1; mask < (1u << cnt); ++mask) {
        std::uint32_t uni = 0;
        int need = 0;
        for (int i = 0; i < cnt; ++i)
          if (mask >> i & 1) {
            uni |= local[i];
            need += mults[i];
          }
        if (std::popcount(uni) < need) return false;
      }
      // tight case: every free colour must be usable by some edge here
      if (std::popcount(free) == demand) {
        std::uint32_t uni = 0;
        for (int i = 0; i < cnt; ++i) uni |= local[i];
        if ((free & ~uni) != 0) return false;
      }
    }
    return true;
  }

  bool propagate_around(int e) const {
    const Edge& ed = g.edge(e);
    if (!vertex_ok(ed.u) || !vertex_ok(ed.v)) return false;
    for (auto [id, w] : g.incident(ed.u))
      if (!assigned[id] && !vertex_ok(w)) return false;
    for (auto [id, w] : g.incident(ed.v))
      if (!assigned[id] && !vertex_ok(w)) return false;
    return true;
  }

  void place(int e, std::uint32_t set) {
    assigned[e] = set;
    used[g.edge(e).u] |= set;
    used[g.edge(e).v] |= set;
    --unassigned_count;
  }
  void unplace(int e, std::uint32_t set) {
    assigned[e] = 0;
    used[g.edge(e).u] &= ~set;
    used[g.edge(e).v] &= ~set;
    ++unassigned_count;
  }

  // enumerate size-r subsets of the set bits of `from`, ascending in the
  // positions tuple
  template <typename F>
  static bool for_each_subset(std::uint32_t from, int r, F&& f) {
    int bits[32];
    int nb = 0;
    for (int c = 0; from; ++c, from >>= 1)
      if (from & 1) bits[nb++] = c;
    if (r > nb) return false;
    int idx[32];
    for (int i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
      std::uint32_t set = 0;
      for (int i = 0; i < r; ++i) set |= 1u << bits[idx[i]];
      if (f(set)) return true;
      int i = r - 1;
      while (i >= 0 && idx[i] == nb - r + i) --i;
      if (i < 0) return false;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  bool solve() {
    if (unassigned_count == 0) return true;
    if (node_limit && nodes > node_limit) {
      limit_hit = true;
      return false;
    }
    // fail-first: fewest candidate sets, then lowest edge id
    int best_e = -1;
    int best_count = 1 << 30;
    for (int e = 0; e < g.m(); ++e) {
      if (assigned[e]) continue;
      int c = nchoosek(std::popcount(avail(e)), g.edge(e).mult);
      if (c == 0) return false;
      if (c < best_count) {
        best_count = c;
        best_e = e;
        if (c == 1) break;
      }
    }
    int e = best_e;
    std::uint32_t options = avail(e);
    int mult = g.edge(e).mult;
    bool done = for_each_subset(options, mult, [&](std::uint32_t set) {
      ++nodes;
      if (node_limit && nodes > node_limit) limit_hit = true;
      if (limit_hit) return true;  // abort enumeration at every level
      place(e, set);
      bool ok = propagate_around(e) && solve();
      if (!ok) {
        unplace(e, set);
        if (limit_hit) return true;
      }
      return ok;
    });
    return done && !limit_hit;
  }
};

}  // namespace

EdgeColorResult edge_color(const CubicMultigraph& g, int k, std::uint64_t node_limit) {
  if (k < g.delta()) throw ContractViolation("k must be at least the maximum degree");
  if (k > 32) throw ContractViolation("at most 32 colours supported");
  EdgeColorResult r;
  if (g.m() == 0) {
    r.verdict = ColorVerdict::Colourable;
    r.coloring = {k, {}};
    return r;
  }
  Solver s(g, k, node_limit);
  // symmetry breaking: fix consecutive colour blocks on the edges at a pivot
  // vertex of maximum degree (lowest index among ties)
  int pivot = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > g.degree(pivot)) pivot = v;
  int next_colour = 0;
  for (auto [id, w] : g.incident(pivot)) {
    (void)w;
    std::uint32_t set = 0;
    for (int i = 0; i < g.edge(id).mult; ++i) set |= 1u << next_colour++;
    s.place(id, set);
  }
  bool pre_ok = true;
  for (auto [id, w] : g.incident(pivot)) {
    (void)w;
    if (!s.propagate_around(id)) {
      pre_ok = false;
      break;
    }
  }
  bool solved = pre_ok && s.solve();
  r.nodes = s.nodes;
  if (solved) {
    r.verdict = ColorVerdict::Colourable;
    r.coloring = {k, s.assigned};
  } else if (s.limit_hit) {
    r.verdict = ColorVerdict::Indeterminate;
  } else {
    r.verdict = ColorVerdict::NotColourable;
  }
  return r;
}

bool is_class_one(const CubicMultigraph& g) {
  return edge_color(g, g.delta()).verdict == ColorVerdict::Colourable;
}

bool validate_coloring(const CubicMultigraph& g, const MultiColoring& c) {
  if (static_cast<int>(c.colour_sets.size()) != g.m()) return false;
  std::uint32_t full = (c.k >= 32) ? ~0u : ((1u << c.k) - 1);
  for (int e = 0; e < g.m(); ++e) {
    if ((c.colour_sets[e] & ~full) != 0) return false;
    if (std::popcount(c.colour_sets[e]) != g.edge(e).mult) return false;
  }
  for (int v = 0; v < g.n(); ++v) {
    std::uint32_t seen = 0;
    for (auto [id, w] : g.incident(v)) {
      (void)w;
      if (seen & c.colour_sets[id]) return false;
      seen |= c.colour_sets[id];
    }
  }
  return true;
}

std::vector<EdgeBits> color_classes(const CubicMultigraph& g, const MultiColoring& c) {
  std::vector<EdgeBits> classes(c.k);
  for (int e = 0; e < g.m(); ++e)
    for (int col = 0; col < c.k; ++col)
      if (c.colour_sets[e] >> col & 1) classes[col].set(e);
  return classes;
}

EdgeBits kempe_chain(const CubicMultigraph& g, const MultiColoring& c, int edge_id, int a, int b) {
  std::uint32_t ab = (1u << a) | (1u << b);
  if ((c.colour_sets[edge_id] & ab) == 0)
    throw ContractViolation("start edge carries neither colour");
  EdgeBits chain;
  std::vector<int> stack{edge_id};
  chain.set(edge_id);
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (int v : {g.edge(e).u, g.edge(e).v}) {
      for (auto [id, w] : g.incident(v)) {
        (void)w;
        if (chain.test(id)) continue;
        if (c.colour_sets[id] & ab) {
          chain.set(id);
          stack.push_back(id);
        }
      }
    }
  }
  return chain;
}

MultiColoring kempe_switch(const CubicMultigraph& g, const MultiColoring& c, int edge_id, int a,
                           int b) {
  if (a == b) throw ContractViolation("kempe switch needs two distinct colours");
  if (a < 0 || b < 0 || a >= c.k || b >= c.k) throw ContractViolation("colour out of range");
  EdgeBits chain = kempe_chain(g, c, edge_id, a, b);
  MultiColoring out = c;
  std::uint32_t ab = (1u << a) | (1u << b);
  for (int e = chain.first(); e >= 0; e = chain.next(e)) {
    std::uint32_t inter = out.colour_sets[e] & ab;
    if (inter == 0 || inter == ab) continue;  // both colours: swap is identity
    out.colour_sets[e] ^= ab;
  }
  return out;
}

}  // namespace snark
