#include "snark/kpole.hpp"

#include <algorithm>

namespace snark {

void validate_cubic_pole(const KPole& pole) {
  std::vector<int> deg(pole.n, 0);
  for (const Edge& e : pole.edges) {
    if (e.u == e.v) throw ContractViolation("pole has a loop");
    if (e.u < 0 || e.v >= pole.n) throw ContractViolation("pole edge out of range");
    deg[e.u] += e.mult;
    deg[e.v] += e.mult;
  }
  for (int v : pole.dangling) {
    if (v < 0 || v >= pole.n) throw ContractViolation("dangling stub out of range");
    ++deg[v];
  }
  for (int v = 0; v < pole.n; ++v)
    if (deg[v] != 3) throw ContractViolation("pole vertex degree is not 3");
}

CubicMultigraph close_four_pole(const KPole& pole) {
  if (pole.arity() != 4) throw ContractViolation("closure needs a 4-pole");
  validate_cubic_pole(pole);
  GraphBuilder b(pole.n + 2);
  for (const Edge& e : pole.edges) b.add_edge(e.u, e.v, e.mult, e.label);
  int u = pole.n, v = pole.n + 1;
  b.add_edge(u, v, 1);
  b.add_edge(u, pole.dangling[0], 1);
  b.add_edge(u, pole.dangling[1], 1);
  b.add_edge(v, pole.dangling[2], 1);
  b.add_edge(v, pole.dangling[3], 1);
  return b.build();
}

FrumiousPole frumious_pole_default() {
  // Petersen with outer cycle 0..4, spokes i-(i+5), pentagram inside.
  // Remove the adjacent pair {0, 1}; remap 2..9 to 0..7.
  auto idx = [](int v) { return v - 2; };
  KPole pole;
  pole.n = 8;
  auto add = [&pole, &idx](int a, int b) {
    pole.edges.push_back({idx(std::min(a, b)), idx(std::max(a, b)), 1, {}});
  };
  add(2, 3);
  add(3, 4);
  add(2, 7);
  add(3, 8);
  add(4, 9);
  add(5, 7);
  add(7, 9);
  add(6, 9);
  add(6, 8);
  add(5, 8);
  // left pair: former edges at 0 (to 4 and 5); right pair: at 1 (to 2 and 6)
  pole.dangling = {idx(4), idx(5), idx(2), idx(6)};
  validate_cubic_pole(pole);
  return {pole, "petersen-minus-two-adjacent-vertices"};
}

}  // namespace snark
