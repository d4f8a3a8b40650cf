#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snark/edgebits.hpp"

namespace snark {

// Vertices are indices 0..n-1 with n <= 64, so a vertex set is one word.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline VertexSet all_vertices(int n) {
  return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

struct Edge {
  int u = 0, v = 0;  // u < v
  int mult = 1;
  std::string label;  // construction annotation, empty if none
};

struct ContractViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Regular multigraph without loops. Base edges are kept sorted by
// (u, v) and identified by their list index; parallel edges are a
// multiplicity on the base edge, never separate records. Immutable
// after construction.
class CubicMultigraph {
 public:
  CubicMultigraph() = default;
  CubicMultigraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  // Number of base edges.
  int m() const { return static_cast<int>(edges_.size()); }
  // Number of edge instances, i.e. sum of multiplicities.
  int instance_count() const { return instance_count_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  // (edge id, other endpoint), one entry per base edge, sorted by edge id.
  const std::vector<std::pair<int, int>>& incident(int v) const { return adj_[v]; }

  int degree(int v) const { return degree_[v]; }
  // The constant degree when regular; the max degree otherwise.
  int delta() const { return delta_; }
  bool is_regular() const { return regular_; }
  bool is_cubic() const { return regular_ && delta_ == 3; }
  bool is_simple() const { return simple_; }

  std::optional<int> edge_between(int u, int v) const;

  // Same vertices and base edges with every multiplicity scaled/raised.
  CubicMultigraph with_added_edges(const EdgeBits& subset) const;
  CubicMultigraph scaled(int factor) const;

  // Content (labelled-graph) digest; not isomorphism-invariant.
  std::uint64_t structural_digest() const;

  int other_end(int edge_id, int v) const {
    const Edge& e = edges_[edge_id];
    return e.u == v ? e.v : e.u;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> degree_;
  int instance_count_ = 0;
  int delta_ = 0;
  bool regular_ = true;
  bool simple_ = true;
};

// Incremental construction helper; merges parallel additions into
// multiplicities and sorts on build.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : n_(n) {}
  void add_edge(int u, int v, int mult = 1, std::string label = {});
  CubicMultigraph build();
  int n() const { return n_; }

 private:
  int n_;
  std::vector<Edge> edges_;
};

// An edge cut [sideA, sideB]: removing the cut edges disconnects the sides.
struct EdgeCut {
  std::vector<int> edge_ids;  // sorted
  VertexSet side_a = 0;
  VertexSet side_b = 0;
};

// --- structural queries ---

bool is_connected(const CubicMultigraph& g);
std::vector<VertexSet> components(const CubicMultigraph& g);
// Bipartition as a vertex set (one side) per component, or nullopt.
std::optional<VertexSet> bipartition(const CubicMultigraph& g);
inline bool is_bipartite(const CubicMultigraph& g) { return bipartition(g).has_value(); }
std::vector<int> bridges(const CubicMultigraph& g);
inline bool has_bridge(const CubicMultigraph& g) { return !bridges(g).empty(); }

// Length of a shortest circuit; nullopt for forests. A parallel pair is a
// 2-circuit.
std::optional<int> girth(const CubicMultigraph& g);

// Complete recognition: simple, cubic, n = 10, girth 5 (Moore-graph
// uniqueness).
bool is_petersen(const CubicMultigraph& g);

// Whether the given edge ids form exactly the cut [side, V - side] for some
// union of components of g minus those edges; fills the sides.
bool classify_cut(const CubicMultigraph& g, const std::vector<int>& edge_ids, EdgeCut* out);

// All 2-edge-cuts / all 3-edge-cuts with both sides of size >= 2, in
// ascending edge-id-tuple order.
std::vector<EdgeCut> find_two_cuts(const CubicMultigraph& g);
std::vector<EdgeCut> find_nontrivial_three_cuts(const CubicMultigraph& g);

struct CyclicConnectivity {
  int value = 0;
  bool exact = true;      // false: no cycle-separating cut of size <= cap found
  bool from_rank = false; // no cycle-separating cut exists; value is m - n + 1
};

// Cyclic connectivity by exhaustive enumeration of cut candidates up to
// `cap`. Graphs without any cycle-separating cut get the rank m - n + 1.
CyclicConnectivity cyclic_connectivity(const CubicMultigraph& g, int cap = 6);

bool has_two_vertex_disjoint_circuits(const CubicMultigraph& g);

// --- surgeries ---

std::pair<CubicMultigraph, CubicMultigraph> two_edge_reduction(const CubicMultigraph& g,
                                                               const EdgeCut& cut);
std::pair<CubicMultigraph, CubicMultigraph> three_edge_reduction(const CubicMultigraph& g,
                                                                 const EdgeCut& cut);
CubicMultigraph two_cut_connection(const CubicMultigraph& g1, int e1,
                                   const CubicMultigraph& g2, int e2);
// pairing[i] = stub index of v2 joined to the i-th stub of v1 (stubs in
// incidence order, parallel edges contributing one stub per instance).
CubicMultigraph three_cut_connection(const CubicMultigraph& g1, int v1,
                                     const CubicMultigraph& g2, int v2,
                                     const std::array<int, 3>& pairing = {0, 1, 2});
CubicMultigraph expand_vertex_to_triangle(const CubicMultigraph& g, int v);

// --- plain text edge-list format: "n m\nu v mult\n..." ---

std::string to_edge_list_text(const CubicMultigraph& g);
CubicMultigraph parse_edge_list_text(const std::string& text);

}  // namespace snark
