#pragma once

#include <array>
#include <optional>
#include <vector>

#include "snark/coloring.hpp"
#include "snark/edgebits.hpp"
#include "snark/graph.hpp"
#include "snark/matchings.hpp"

namespace snark {

// A cycle is an even subgraph, kept as a base-edge set; in a cubic host it
// decomposes into vertex-disjoint circuits.
bool is_even_subgraph(const CubicMultigraph& g, const EdgeBits& edges);

struct CycleCover {
  std::vector<EdgeBits> cycles;  // nonempty members
  int length() const {
    int total = 0;
    for (const EdgeBits& c : cycles) total += c.count();
    return total;
  }
};

bool validate_cover(const CubicMultigraph& g, const CycleCover& cover);

// All 2^(m-n+1) even subgraphs of a connected simple cubic graph from a
// fundamental-cycle basis, subset-counter order (index 0 is empty). Refuses
// hosts whose cycle-space dimension exceeds the cap.
std::vector<EdgeBits> enumerate_cycle_space(const CubicMultigraph& g, int dim_cap = 12);

struct SccResult {
  bool found = false;  // false: no cover within the family bound
  int length = 0;
  CycleCover cover;
};

// Minimum total length over families of at most family_bound distinct
// nonempty cycles covering every edge; exact branch-and-bound with the
// 4/3 |E| lower bound on cubic hosts.
SccResult scc_exact(const CubicMultigraph& g, int family_bound = 5, int dim_cap = 12);

// Colouring of g + tM gives the cover {M xor F_i}: length exactly 4/3 |E|,
// M-edges covered twice, the rest once.
CycleCover cover_from_coloring(const CubicMultigraph& g, const PerfectMatching& m, int t,
                               const MultiColoring& coloring);

struct CoverTranslation {
  PerfectMatching m;  // the twice-covered edges
  int t = 0;          // cycles (after padding to 3) minus 3
  MultiColoring coloring;
};

// Inverse direction for covers of length exactly 4/3 |E|.
CoverTranslation coloring_from_cover(const CubicMultigraph& g, const CycleCover& cover);

// Steffen/Hou route: four perfect matchings covering E give the cycle double
// cover {M xor M_i} + complement of M (M = edges in exactly two of them).
CycleCover cdc_from_four_cover(const CubicMultigraph& g, const std::array<EdgeBits, 4>& matchings);

bool is_cycle_double_cover(const CubicMultigraph& g, const std::vector<EdgeBits>& family);

// CDC containing the given 2-factor: constructive when g + complement is
// Class I, otherwise exhaustive over the cycle space. nullopt means none
// within bounds.
std::optional<CycleCover> cdc_extending_two_factor(const CubicMultigraph& g,
                                                   const EdgeBits& two_factor, int dim_cap = 12);

// Theorem route to a 4/3 |E| cover: probe g + tM over all matchings for
// t = 0..t_max and translate the first colouring found.
struct FourThirdsCover {
  int t = 0;
  int matching_index = -1;  // -1 when t == 0
  CycleCover cover;
};

std::optional<FourThirdsCover> four_thirds_cover_via_coloring(const CubicMultigraph& g,
                                                              int t_max = 3);

}  // namespace snark
