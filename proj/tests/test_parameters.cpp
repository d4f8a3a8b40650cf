#include <doctest.h>

#include "oracles.hpp"
#include "snark/constructions.hpp"
#include "snark/parameters.hpp"

using namespace snark;

namespace {

CubicMultigraph k4() { return moebius_ladder(2); }

bool leaf_kind_in_tree(const LatticeNode& node, LatticeNode::Kind kind) {
  if (node.kind == kind) return true;
  for (const auto& c : node.children)
    if (leaf_kind_in_tree(c, kind)) return true;
  return false;
}

}  // namespace

TEST_CASE("all-ones lattice membership of the standards") {
  auto p = one_in_lattice(petersen());
  CHECK_FALSE(p.in_lattice);
  CHECK(p.root.kind == LatticeNode::Kind::LeafPetersen);

  CHECK(one_in_lattice(k4()).in_lattice);
  CHECK(one_in_lattice(moebius_ladder(3)).in_lattice);
  CHECK(one_in_lattice(flower_snark(5)).in_lattice);
  CHECK(one_in_lattice(tietze()).in_lattice);
}

TEST_CASE("two-cut composites decide by conjunction of the factors") {
  auto bad = two_cut_connection(petersen(), 0, k4(), 2);
  auto v = one_in_lattice(bad);
  CHECK_FALSE(v.in_lattice);
  CHECK(v.root.kind == LatticeNode::Kind::TwoCutSplit);
  CHECK(leaf_kind_in_tree(v.root, LatticeNode::Kind::LeafPetersen));

  auto good = two_cut_connection(flower_snark(5), 0, k4(), 2);
  CHECK(one_in_lattice(good).in_lattice);
}

TEST_CASE("tight 3-cut reduction path via the k33 star product") {
  auto c = three_cut_connection(moebius_ladder(3), 0, petersen(), 0);
  auto v = one_in_lattice(c);
  CHECK_FALSE(v.in_lattice);
  CHECK(v.root.kind == LatticeNode::Kind::TightThreeCutSplit);
  CHECK(leaf_kind_in_tree(v.root, LatticeNode::Kind::LeafPetersen));
  CHECK(leaf_kind_in_tree(v.root, LatticeNode::Kind::LeafBipartite));
}

TEST_CASE("bridges are reported as a distinct lattice failure") {
  GraphBuilder b(8);
  b.add_edge(0, 1, 2);
  b.add_edge(0, 2);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  b.add_edge(3, 4);
  b.add_edge(3, 5);
  b.add_edge(4, 5);
  b.add_edge(4, 6);
  b.add_edge(5, 7);
  b.add_edge(6, 7, 2);
  auto v = one_in_lattice(b.build());
  CHECK_FALSE(v.in_lattice);
  CHECK(v.bridge_failure);
  CHECK(leaf_kind_in_tree(v.root, LatticeNode::Kind::LeafBridge));
}

TEST_CASE("l values of the standards") {
  auto k = l_value(k4());
  CHECK(k.kind == LValue::Kind::Finite);
  CHECK(k.k == 0);

  auto f = l_value(flower_snark(5), 1);
  REQUIRE(f.kind == LValue::Kind::Finite);
  CHECK(f.k == 1);
  REQUIRE(f.witness.size() == 1);
  // the witness re-validates
  auto list = enumerate_perfect_matchings(flower_snark(5));
  auto host = flower_snark(5).with_added_edges(list[f.witness[0]].edges);
  CHECK(validate_coloring(host, f.coloring));

  auto p = l_value(petersen());
  CHECK(p.kind == LValue::Kind::Infinite);
  CHECK(p.certificate.root.kind == LatticeNode::Kind::LeafPetersen);
}

TEST_CASE("finite l at zero is exactly class one") {
  for (const auto& g : {k4(), moebius_ladder(3), circular_ladder(3), tietze(), flower_snark(5)}) {
    auto l = l_value(g, 1);
    CHECK((l.kind == LValue::Kind::Finite && l.k == 0) == is_class_one(g));
  }
}

TEST_CASE("l equals one exactly when the perfect matching index is four") {
  for (const auto& g : {k4(), moebius_ladder(3), circular_ladder(3), tietze(), flower_snark(5)}) {
    auto l = l_value(g, 1);
    auto chi_e = perfect_matching_index(g);
    bool l_is_one = l.kind == LValue::Kind::Finite && l.k == 1;
    bool chie_is_four = chi_e.kind == PmIndexResult::Kind::Value && chi_e.value == 4;
    CHECK(l_is_one == chie_is_four);
  }
  // and the petersen graph fails both sides
  auto chi_p = perfect_matching_index(petersen());
  CHECK(chi_p.value == 5);
  CHECK(l_value(petersen()).kind == LValue::Kind::Infinite);
}

TEST_CASE("l_m on the flower snark is one for every matching") {
  auto f = flower_snark(5);
  auto list = enumerate_perfect_matchings(f);
  for (int i = 0; i < list.size(); ++i) {
    auto r = l_m(f, list[i], 1);
    REQUIRE(r.kind == LmValue::Kind::Finite);
    CHECK(r.t == 1);
  }
}

TEST_CASE("tietze dichotomy by spoke intersections") {
  auto t = tietze();
  auto spokes = EdgeBits::of(flower_spokes(t));
  REQUIRE(spokes.count() == 3);
  auto list = enumerate_perfect_matchings(t);
  for (int i = 0; i < list.size(); ++i) {
    int hits = (list[i].edges & spokes).count();
    REQUIRE((hits == 1 || hits == 3));  // spokes form an odd edge cut
    auto r = l_m(t, list[i], 1);
    if (hits == 1) {
      CHECK(r.kind == LmValue::Kind::AtLeast);
      CHECK(r.t == 2);
    } else {
      REQUIRE(r.kind == LmValue::Kind::Finite);
      CHECK(r.t == 1);
    }
  }
}

TEST_CASE("frumious probes") {
  auto k = frumious_bounded(k4(), 2);
  CHECK_FALSE(k.frumious_up_to);
  CHECK(k.witness_matching == 0);
  CHECK(k.witness.t == 0);

  auto p = frumious_bounded(petersen(), 2);
  CHECK(p.frumious_up_to);
  CHECK(p.table.size() == 6);
  for (const auto& e : p.table) CHECK(e.kind == LmValue::Kind::AtLeast);

  // threaded scan agrees with the sequential one
  auto p2 = frumious_bounded(petersen(), 2, 4);
  CHECK(p2.frumious_up_to == p.frumious_up_to);
}

TEST_CASE("lemma on 2-cut composites, sampled") {
  std::uint64_t state = 20240;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  std::vector<CubicMultigraph> pool = {petersen(), k4(), circular_ladder(3), flower_snark(5)};
  std::vector<bool> verdicts;
  for (const auto& g : pool) verdicts.push_back(one_in_lattice(g).in_lattice);
  for (int trial = 0; trial < 3; ++trial) {
    int a = static_cast<int>(next() % pool.size());
    int b = static_cast<int>(next() % pool.size());
    int ea = static_cast<int>(next() % pool[a].m());
    int eb = static_cast<int>(next() % pool[b].m());
    auto composite = two_cut_connection(pool[a], ea, pool[b], eb);
    CHECK(one_in_lattice(composite).in_lattice == (verdicts[a] && verdicts[b]));
  }
}

TEST_CASE("sp membership basics") {
  CHECK(sp_membership(k4(), 1));
  CHECK_FALSE(sp_membership(petersen(), 1));
  CHECK(sp_membership(petersen(), 2));  // the six matchings cover each edge twice
  CHECK_THROWS_AS(sp_membership(k4(), 0), ContractViolation);
}

TEST_CASE("sp2 membership and the shift against sp") {
  CHECK(sp2_membership(k4(), 0));
  CHECK_FALSE(sp2_membership(petersen(), 0));
  CHECK(sp2_membership(petersen(), 1));
  for (const auto& g : {k4(), moebius_ladder(3), circular_ladder(3)})
    for (int t : {0, 1}) CHECK(sp2_membership(g, t) == sp_membership(g, t + 1));
}
