#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "snark/canonical.hpp"
#include "snark/constructions.hpp"

using namespace snark;

namespace {

CubicMultigraph relabel(const CubicMultigraph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.mult, e.label});
  return CubicMultigraph(g.n(), std::move(edges));
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
  std::uint64_t state = 4242;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (const auto& g : {petersen(), flower_snark(5), moebius_ladder(4), circular_ladder(5)}) {
    auto base = canonical_form(g);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm(g.n());
      std::iota(perm.begin(), perm.end(), 0);
      for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[next() % i]);
      CHECK(canonical_form(relabel(g, perm)) == base);
      CHECK(canonical_digest(relabel(g, perm)) == canonical_digest(g));
    }
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  CHECK_FALSE(is_isomorphic(moebius_ladder(3), circular_ladder(3)));
  CHECK_FALSE(is_isomorphic(petersen(), flower_snark(5)));
  CHECK(is_isomorphic(tietze(), flower_snark(3)));
  // multiplicity matters
  GraphBuilder a(2), b(2);
  a.add_edge(0, 1, 3);
  b.add_edge(0, 1, 2);
  CHECK_FALSE(is_isomorphic(a.build(), b.build()));
}

TEST_CASE("canonical form on random cubic graphs vs relabelled twins") {
  std::uint64_t state = 777;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int n : {8, 10, 12}) {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      auto g = oracle::random_cubic(n, seed * 131 + n);
      std::vector<int> perm(g.n());
      std::iota(perm.begin(), perm.end(), 0);
      for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[next() % i]);
      CHECK(is_isomorphic(g, relabel(g, perm)));
    }
  }
}

TEST_CASE("digest is 16 hex chars") {
  auto d = canonical_digest(petersen());
  CHECK(d.size() == 16);
  for (char c : d) CHECK(((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')));
}
