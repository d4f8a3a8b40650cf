#pragma once

#include <string>
#include <vector>

#include "snark/coloring.hpp"
#include "snark/graph.hpp"
#include "snark/matchings.hpp"

namespace snark {

// Reduction-tree certificate for deciding whether the all-ones vector lies in
// the perfect matching lattice. Splits use 2-edge-cuts first, then
// non-trivial tight 3-edge-cuts; leaves are bipartite, Petersen, or a brick
// other than Petersen. A bridge is a distinct failure: the lattice argument
// does not apply.
struct LatticeNode {
  enum class Kind {
    ComponentSplit,
    TwoCutSplit,
    TightThreeCutSplit,
    LeafBipartite,
    LeafBrick,
    LeafPetersen,
    LeafBridge,
  };
  Kind kind = Kind::LeafBrick;
  std::string graph_text;         // edge-list serialization of this node's graph
  std::vector<int> cut_edge_ids;  // for the split kinds
  std::vector<LatticeNode> children;
};

struct LatticeVerdict {
  bool in_lattice = false;
  bool bridge_failure = false;
  LatticeNode root;
};

LatticeVerdict one_in_lattice(const CubicMultigraph& g);

// l(G): minimum number of perfect matchings whose addition makes the graph
// Class I. Infinite exactly when the all-ones vector is outside the lattice;
// otherwise searched over canonical multisets (non-decreasing MatchingList
// indices) in lexicographic order.
struct LValue {
  enum class Kind { Finite, AtLeast, Infinite, Indeterminate };
  Kind kind = Kind::AtLeast;
  int k = 0;  // Finite: the value; AtLeast: the exhausted bound + 1
  std::vector<int> witness;  // matching indices, non-decreasing
  MultiColoring coloring;
  LatticeVerdict certificate;  // for Infinite
};

// node_limit 0 is exact; with a limit, a search that gave up anywhere and
// found nothing reports Indeterminate rather than a bound.
LValue l_value(const CubicMultigraph& g, int k_max = 3, std::uint64_t node_limit = 0);

// l_M(G) bounded probe: smallest t <= t_max with g + tM Class I.
struct LmValue {
  enum class Kind { Finite, AtLeast, Indeterminate };
  Kind kind = Kind::AtLeast;
  int t = 0;  // Finite: the value; AtLeast: t_max + 1
  MultiColoring coloring;
};

LmValue l_m(const CubicMultigraph& g, const PerfectMatching& m, int t_max = 3,
            std::uint64_t node_limit = 0);

// Runs l_m over every matching of the list; not-frumious on the first
// Finite entry (lowest matching index when threaded).
struct FrumiousReport {
  bool frumious_up_to = false;
  bool indeterminate = false;  // node-limited probes gave up somewhere
  int t_max = 0;
  int witness_matching = -1;  // set when not frumious
  LmValue witness;
  std::vector<LmValue> table;  // indexed by matching; complete iff frumious_up_to or threads > 1
};

FrumiousReport frumious_bounded(const CubicMultigraph& g, int t_max, int threads = 1,
                                std::uint64_t node_limit = 0);
FrumiousReport frumious_bounded(const CubicMultigraph& g, const MatchingList& list, int t_max,
                                int threads = 1, std::uint64_t node_limit = 0);

// sp(G): t >= 1 with tG = G + (t-1)E(G) Class I, decided directly.
struct SpResult {
  ColorVerdict verdict = ColorVerdict::NotColourable;
  MultiColoring coloring;         // for Colourable
  std::vector<int> factors;       // sp2: complement matching indices used
};

SpResult sp_membership_witnessed(const CubicMultigraph& g, int t, std::uint64_t node_limit = 0);
bool sp_membership(const CubicMultigraph& g, int t);
// sp2(G): t >= 0 such that adding some t 2-factors (complements of perfect
// matchings) gives a Class I graph; direct search, never via the sp shift.
SpResult sp2_membership_witnessed(const CubicMultigraph& g, int t, std::uint64_t node_limit = 0);
bool sp2_membership(const CubicMultigraph& g, int t);

}  // namespace snark
