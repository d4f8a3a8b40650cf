#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "snark/edgebits.hpp"
#include "snark/graph.hpp"

namespace snark {

// Base-edge set covering every vertex exactly once; a parallel class is
// selected as one base edge, multiplicity plays no role.
struct PerfectMatching {
  EdgeBits edges;

  bool operator==(const PerfectMatching& o) const { return edges == o.edges; }
  std::vector<int> edge_ids() const { return edges.to_ids(); }
};

// Complete, duplicate-free, lexicographically ordered list of all perfect
// matchings of a host graph. The memoized universe for every downstream
// search.
struct MatchingList {
  std::uint64_t host_digest = 0;
  std::vector<PerfectMatching> matchings;

  int size() const { return static_cast<int>(matchings.size()); }
  const PerfectMatching& operator[](int i) const { return matchings[i]; }
};

MatchingList enumerate_perfect_matchings(const CubicMultigraph& g);

struct PmIndexResult {
  enum class Kind { Value, GreaterThanCap, Infinite };
  Kind kind = Kind::Infinite;
  int value = 0;  // meaningful for Value
  int cap = 0;
  std::vector<int> witness;  // matching indices into the MatchingList
};

// Minimum number of perfect matchings whose union covers all base edges;
// exhaustive up to cap. Bridges make it infinite.
PmIndexResult perfect_matching_index(const CubicMultigraph& g, int cap = 6);
PmIndexResult perfect_matching_index(const CubicMultigraph& g, const MatchingList& list, int cap);

bool is_tight_cut(const CubicMultigraph& g, const MatchingList& list, const EdgeCut& cut);
bool is_tight_cut(const CubicMultigraph& g, const EdgeCut& cut);

// Non-trivial 3-edge-cuts met by every perfect matching exactly once,
// ascending edge-id-tuple order.
std::vector<EdgeCut> find_nontrivial_tight_three_cuts(const CubicMultigraph& g);
std::vector<EdgeCut> find_nontrivial_tight_three_cuts(const CubicMultigraph& g,
                                                      const MatchingList& list);

// First index triple (i < j < k) with empty triple intersection, or nullopt
// after exhausting the list.
std::optional<std::array<int, 3>> fan_raspaud(const CubicMultigraph& g);
std::optional<std::array<int, 3>> fan_raspaud(const MatchingList& list);

// Bipartite cubic g, u in one part: whether for every w in the opposite part
// there is a spanning subgraph with degree 3 at u and w and degree 1
// elsewhere.
bool is_coverable(const CubicMultigraph& g, int u);

}  // namespace snark
