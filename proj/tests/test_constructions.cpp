#include <doctest.h>

#include "snark/canonical.hpp"
#include "snark/constructions.hpp"
#include "snark/graph.hpp"

using namespace snark;

TEST_CASE("flower snark shape") {
  auto f5 = flower_snark(5);
  CHECK(f5.n() == 20);
  CHECK(f5.m() == 30);
  CHECK(flower_spokes(f5).size() == 5);
  CHECK(f5.is_cubic());
  CHECK(f5.is_simple());
  CHECK(girth(f5) == 5);
  CHECK_THROWS_AS(flower_snark(4), ContractViolation);
  CHECK_THROWS_AS(flower_snark(1), ContractViolation);

  auto links = flower_links(f5);
  REQUIRE(links.size() == 5);
  for (const auto& triple : links)
    for (int id : triple) CHECK(id >= 0);
}

TEST_CASE("tietze graph is petersen with one vertex expanded") {
  auto t = tietze();
  CHECK(t.n() == 12);
  CHECK(girth(t) == 3);
  CHECK(is_isomorphic(t, expand_vertex_to_triangle(petersen(), 0)));
  // and the expansion point does not matter
  CHECK(is_isomorphic(t, expand_vertex_to_triangle(petersen(), 6)));
}

TEST_CASE("flower snark cyclic connectivity from the paper") {
  CHECK(cyclic_connectivity(flower_snark(5)).value == 5);
  auto r7 = cyclic_connectivity(flower_snark(7));
  CHECK(r7.exact);
  CHECK(r7.value == 6);
}

TEST_CASE("ladders") {
  CHECK(is_isomorphic(moebius_ladder(3), parse_edge_list_text("6 9\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n"
                                                              "4 5 1\n0 5 1\n0 3 1\n1 4 1\n2 5 1\n")));
  CHECK(circular_ladder(4).n() == 8);
  CHECK(is_bipartite(circular_ladder(4)));
  CHECK_FALSE(is_bipartite(circular_ladder(3)));
  CHECK(is_bipartite(moebius_ladder(3)));
  CHECK_FALSE(is_bipartite(moebius_ladder(4)));
}

TEST_CASE("frumious pole closes back to petersen") {
  auto fp = frumious_pole_default();
  CHECK(fp.pole.n == 8);
  CHECK(fp.pole.arity() == 4);
  CHECK(is_isomorphic(close_four_pole(fp.pole), petersen()));
}

TEST_CASE("windmill is the claw treelike snark on 34 vertices") {
  auto w = windmill();
  CHECK(w.n() == 34);
  CHECK(w.m() == 51);
  CHECK(w.is_cubic());
  CHECK(w.is_simple());
  CHECK(bridges(w).empty());
  CHECK(is_isomorphic(w, treelike_snark(claw_spec())));
}

TEST_CASE("treelike spec validation") {
  TreelikeSpec bad = claw_spec();
  bad.leaf_order = {1, 2, 2};
  CHECK_THROWS_AS(treelike_snark(bad), ContractViolation);
  TreelikeSpec degree2 = claw_spec();
  degree2.tree_n = 5;
  degree2.tree_edges = {{0, 4}, {4, 1}, {0, 2}, {0, 3}};
  CHECK_THROWS_AS(treelike_snark(degree2), ContractViolation);
}

TEST_CASE("treelike spec parses from json") {
  auto spec = parse_treelike_spec_json(
      R"({"tree": [[0,1],[0,2],[0,3]], "leaf_order": [1,2,3],
          "poles": ["petersen","petersen","petersen"]})");
  CHECK(spec.tree_n == 4);
  CHECK(is_isomorphic(treelike_snark(spec), windmill()));
}

TEST_CASE("extension of k33 has order 32 and is bridgeless cubic") {
  auto h = extend_with_petersens(moebius_ladder(3), 0);
  CHECK(h.n() == 32);
  CHECK(h.is_cubic());
  CHECK(bridges(h).empty());
  for (int i = 0; i < 3; ++i) {
    auto cut = extension_principal_cut(h, i);
    CHECK(cut.size() == 3);
    EdgeCut ec;
    CHECK(classify_cut(h, cut, &ec));
  }
}

TEST_CASE("generate dispatch") {
  CHECK(generate("petersen").n() == 10);
  CHECK(generate("flower", 5).n() == 20);
  CHECK(generate("k4").n() == 4);
  CHECK(generate("cube").n() == 8);
  CHECK_THROWS_AS(generate("flower"), ContractViolation);
  CHECK_THROWS_AS(generate("nope"), ContractViolation);
}
