#pragma once

#include <string>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

// Graph fragment with ordered dangling edges. Slot order is semantically
// meaningful: (l1, l2, r1, r2) for 4-poles, l1..l3 then r1..r3 for 6-poles.
// Dangling edges are (vertex, slot) stubs, never phantom vertices.
struct KPole {
  int n = 0;
  std::vector<Edge> edges;    // internal edges, endpoints in 0..n-1
  std::vector<int> dangling;  // dangling[slot] = inside endpoint

  int arity() const { return static_cast<int>(dangling.size()); }
};

// Every vertex must reach degree 3 from internal edges plus dangling stubs.
void validate_cubic_pole(const KPole& pole);

// 4-pole closure: new vertices u, v with u ~ v, u ~ l1, l2 and v ~ r1, r2.
CubicMultigraph close_four_pole(const KPole& pole);

// Petersen minus two adjacent vertices; left pair from the first removed
// vertex, right pair from the second.
struct FrumiousPole {
  KPole pole;  // arity 4, slots (l1, l2, r1, r2)
  std::string provenance;
};

FrumiousPole frumious_pole_default();

}  // namespace snark
