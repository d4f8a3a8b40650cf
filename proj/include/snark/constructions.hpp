#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "snark/graph.hpp"
#include "snark/kpole.hpp"
#include "snark/matchings.hpp"

namespace snark {

CubicMultigraph petersen();
// 4n vertices from n single-flower 6-poles; spokes carry "spoke:<i>" labels
// and the joined dangling edges carry "link:<i>:<j>" (pole i to pole i+1,
// strand j in 1..3). Odd n >= 3.
CubicMultigraph flower_snark(int n);
inline CubicMultigraph tietze() { return flower_snark(3); }
CubicMultigraph circular_ladder(int rungs);  // 2*rungs vertices, rungs >= 3
CubicMultigraph moebius_ladder(int rungs);   // 2*rungs vertices, rungs >= 2
CubicMultigraph windmill();

// Name-based dispatch for the CLI: petersen, tietze, flower, circular_ladder,
// moebius_ladder, windmill, plus the aliases k4, k33, prism, cube.
CubicMultigraph generate(const std::string& name, std::optional<int> parameter = std::nullopt);

// --- flower snark handles ---

// spoke edge ids by pole index; empty if g lacks flower labels
std::vector<int> flower_spokes(const CubicMultigraph& g);
// links[i][j-1] = edge id of link:<i>:<j>
std::vector<std::array<int, 3>> flower_links(const CubicMultigraph& g);

struct DfPolePosition {
  int pole = 0;    // the DF 6-pole spans poles (pole, pole+1 mod n)
  int strand = 0;  // j in 1..3 with boundary-matching pair {l_j, r_j}
};

// First DF 6-pole of the flower snark that is good with respect to M:
// the matching meets its boundary exactly in the aligned pair
// {l_j of the left side, r_j of the right side}.
std::optional<DfPolePosition> detect_good_df_pole(const CubicMultigraph& f,
                                                  const PerfectMatching& m);

// --- Petersen extension (arbitrarily large finite l) ---

// Replace every vertex of the part opposite u by Petersen-minus-vertex via a
// 3-cut-connection (stubs paired in index order), then expand u to a
// triangle. Principal edges of the i-th replacement carry "principal:<i>".
CubicMultigraph extend_with_petersens(const CubicMultigraph& g, int u);

// edge ids of the i-th principal cut of an extension
std::vector<int> extension_principal_cut(const CubicMultigraph& h, int i);

// Lexicographically first tuple of matchings, the i-th containing the i-th
// principal cut, whose addition makes the extension Class I. The upper-bound
// witness for the extension's l value.
struct ExtensionWitness {
  std::vector<int> matchings;  // indices into the list, one per principal cut
  MultiColoring coloring;
};

std::optional<ExtensionWitness> extension_witness(const CubicMultigraph& h,
                                                  const MatchingList& list);

// --- treelike snarks ---

struct TreelikeSpec {
  int tree_n = 0;
  std::vector<std::pair<int, int>> tree_edges;  // all degrees 1 or 3
  std::vector<int> leaf_order;                  // the circuit on the leaves
  std::vector<FrumiousPole> poles;              // one per circuit edge
};

// Claw tree with Petersen-derived poles; treelike_snark(claw) == windmill.
TreelikeSpec claw_spec();

CubicMultigraph treelike_snark(const TreelikeSpec& spec);

// {"tree": [[u,v],...], "leaf_order": [...], "poles": ["petersen", ...]}
TreelikeSpec parse_treelike_spec_json(const std::string& json_text);

}  // namespace snark
