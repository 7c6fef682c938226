#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hgmatch/matching.hpp"
#include "support/testutil.hpp"

using namespace hgmatch;
using namespace testutil;

TEST_CASE("perfect matchings of the fixtures") {
  auto pm1 = enumerate_perfect_matchings(fixture_f1());
  REQUIRE(pm1.size() == 2);
  CHECK(pm1[0] == Matching{{0, 1}});
  CHECK(pm1[1] == Matching{{2, 3}});

  auto pm2 = enumerate_perfect_matchings(fixture_f2());
  REQUIRE(pm2.size() == 2);
  CHECK(pm2[0] == Matching{{0, 2, 4}});
  CHECK(pm2[1] == Matching{{1, 3, 5}});

  auto pm3 = enumerate_perfect_matchings(fixture_f3());
  CHECK(pm3.size() == 7);
  CHECK(pm3 == perfect_matchings_brute(fixture_f3()));

  auto pm4 = enumerate_perfect_matchings(fixture_f4());
  REQUIRE(pm4.size() == 1);
  CHECK(pm4[0] == Matching{{0}});

  // A path of three vertices has no perfect matching.
  Hypergraph p3({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  CHECK(enumerate_perfect_matchings(p3).empty());
}

TEST_CASE("enumeration agrees with subset brute force") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph h = random_covered(rng, 4, 7, 11);
    auto fast = enumerate_perfect_matchings(h);
    CHECK(fast == perfect_matchings_brute(h));
    // Output is sorted and duplicate-free by construction of the comparison.
    for (const Matching& m : fast) {
      std::vector<int> cnt(h.vertex_count(), 0);
      for (int i : m.edge_indices) {
        for (int v : h.edge(i)) ++cnt[v];
      }
      for (int c : cnt) CHECK(c == 1);
    }
  }
}

TEST_CASE("enumeration respects its budget") {
  Budget tiny(2);
  CHECK_THROWS_AS(enumerate_perfect_matchings(fixture_f2(), &tiny),
                  BudgetError);
  CHECK(tiny.used() > tiny.limit());
}

TEST_CASE("matching covered classification") {
  CHECK(is_matching_covered(fixture_f1()).covered);
  CHECK(is_matching_covered(fixture_f2()).covered);
  CHECK(is_matching_covered(fixture_f3()).covered);
  CHECK(is_matching_covered(fixture_f4()).covered);

  // No perfect matching at all: the first edge is reported uncovered.
  Hypergraph p3({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  CoverageResult r = is_matching_covered(p3);
  CHECK(!r.covered);
  CHECK(r.connected);
  CHECK(r.uncovered_edge == 0);

  // An edge outside every perfect matching.
  Hypergraph lopsided({"1", "2", "3", "4"},
                      {{"1", "2"}, {"3", "4"}, {"1", "2", "3"}});
  CoverageResult r2 = is_matching_covered(lopsided);
  CHECK(!r2.covered);
  CHECK(r2.uncovered_edge == 2);

  Hypergraph split_up({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CoverageResult r3 = is_matching_covered(split_up);
  CHECK(!r3.covered);
  CHECK(!r3.connected);

  Hypergraph empty_edges({"a"}, {});
  CHECK(!is_matching_covered(empty_edges).covered);
}

TEST_CASE("matching invariants on the fixtures") {
  MatchingInvariants f1 = matching_invariants(fixture_f1());
  CHECK(f1.max_matching == 2);
  CHECK(f1.min_vertex_cover == 2);
  CHECK(f1.min_edge_cover == 2);

  MatchingInvariants f2 = matching_invariants(fixture_f2());
  CHECK(f2.max_matching == 3);
  CHECK(f2.min_vertex_cover == 3);
  CHECK(f2.min_edge_cover == 3);

  MatchingInvariants f4 = matching_invariants(fixture_f4());
  CHECK(f4.max_matching == 1);
  CHECK(f4.min_vertex_cover == 1);
  CHECK(f4.min_edge_cover == 1);

  // F3: the four singleton edges are pairwise disjoint and each forces its
  // vertex into every cover; two opposite pair edges cover everything.
  MatchingInvariants f3 = matching_invariants(fixture_f3());
  CHECK(f3.max_matching == 4);
  CHECK(f3.min_vertex_cover == 4);
  CHECK(f3.min_edge_cover == 2);

  // An isolated vertex leaves no edge cover.
  Hypergraph isolated({"a", "b", "c"}, {{"a", "b"}});
  MatchingInvariants ri = matching_invariants(isolated);
  CHECK(ri.max_matching == 1);
  CHECK(ri.min_vertex_cover == 1);
  CHECK(!ri.min_edge_cover.has_value());
}

TEST_CASE("invariant inequalities on random instances") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    Hypergraph h = random_covered(rng, 4, 6, 10);
    MatchingInvariants inv = matching_invariants(h);
    // Weak duality: every matching edge needs its own cover vertex, and an
    // edge cover is at least a perfect fractional bound of n / max edge size.
    CHECK(inv.max_matching <= inv.min_vertex_cover);
    REQUIRE(inv.min_edge_cover.has_value());
    CHECK(*inv.min_edge_cover >= 1);
    // Matching covered instances have a perfect matching; its size bounds
    // the others.
    auto pms = enumerate_perfect_matchings(h);
    REQUIRE(!pms.empty());
    for (const auto& m : pms) {
      CHECK(static_cast<int>(m.edge_indices.size()) <= inv.max_matching);
      CHECK(*inv.min_edge_cover <=
            static_cast<int>(m.edge_indices.size()));
    }
  }
}
