#pragma once

#include <cstdint>
#include <vector>

#include "snark/edgebits.hpp"
#include "snark/graph.hpp"

namespace snark {

// Proper multi-edge-colouring: each base edge e carries a set of mult(e)
// colours out of 0..k-1; sets of edges sharing a vertex are disjoint.
struct MultiColoring {
  int k = 0;
  std::vector<std::uint32_t> colour_sets;  // indexed by base edge

  std::vector<std::vector<int>> as_lists() const;
};

enum class ColorVerdict { Colourable, NotColourable, Indeterminate };

struct EdgeColorResult {
  ColorVerdict verdict = ColorVerdict::Indeterminate;
  MultiColoring coloring;  // meaningful iff Colourable
  std::uint64_t nodes = 0;
};

// Exact k-edge-colourability. node_limit 0 means unlimited (exact mode); a
// positive limit may yield Indeterminate with the node count that tripped it.
EdgeColorResult edge_color(const CubicMultigraph& g, int k, std::uint64_t node_limit = 0);

// edge_color(g, delta) succeeds. Exact.
bool is_class_one(const CubicMultigraph& g);

bool validate_coloring(const CubicMultigraph& g, const MultiColoring& c);

// Base edges whose colour set contains each colour 0..k-1.
std::vector<EdgeBits> color_classes(const CubicMultigraph& g, const MultiColoring& c);

// Swap colours a and b along the maximal (a,b)-chain through the given edge.
// The start edge must carry a or b.
MultiColoring kempe_switch(const CubicMultigraph& g, const MultiColoring& c, int edge_id, int a,
                           int b);

// Edge ids of the maximal (a,b)-chain through the given edge.
EdgeBits kempe_chain(const CubicMultigraph& g, const MultiColoring& c, int edge_id, int a, int b);

}  // namespace snark
