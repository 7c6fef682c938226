#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "hgmatch/polytope.hpp"
#include "hgmatch/tightcut.hpp"
#include "hgmatch/uniform.hpp"
#include "support/testutil.hpp"

using namespace hgmatch;
using namespace testutil;

namespace {

RationalVector half_vector(int edges) {
  RationalVector x;
  x.entries.assign(edges, Rational(1, 2));
  return x;
}

// Validates a strong odd cycle witness against the definition.
void check_strong_odd_cycle(const Hypergraph& h, const BalanceResult& r) {
  const auto& vs = r.cycle_vertices;
  const auto& es = r.cycle_edges;
  REQUIRE(vs.size() == es.size());
  const int t = static_cast<int>(vs.size());
  REQUIRE(t >= 3);
  CHECK(t % 2 == 1);
  CHECK(std::set<int>(vs.begin(), vs.end()).size() == vs.size());
  CHECK(std::set<int>(es.begin(), es.end()).size() == es.size());
  for (int i = 0; i < t; ++i) {
    const auto& e = h.edge(es[i]);
    // e_i joins x_i and x_{i+1} and avoids every other cycle vertex.
    CHECK(std::binary_search(e.begin(), e.end(), vs[i]));
    CHECK(std::binary_search(e.begin(), e.end(), vs[(i + 1) % t]));
    for (int j = 0; j < t; ++j) {
      if (j == i || j == (i + 1) % t) continue;
      CHECK(!std::binary_search(e.begin(), e.end(), vs[j]));
    }
  }
}

// Checks a membership certificate: c separates x from every perfect
// matching's lifted incidence vector.
void check_certificate(const Hypergraph& h, const RationalVector& x,
                       const std::vector<Rational>& c) {
  REQUIRE(c.size() == static_cast<std::size_t>(h.edge_count()) + 1);
  for (const Matching& m : perfect_matchings_brute(h)) {
    Rational v = c.back();
    for (int i : m.edge_indices) v += c[i];
    CHECK(v <= 0);
  }
  Rational v = c.back();
  for (int i = 0; i < h.edge_count(); ++i) v += c[i] * x.entries[i];
  CHECK(v > 0);
}

// Two triangles joined by one edge: the textbook non-integral fractional
// polytope (one half on each triangle).
Hypergraph two_triangles() {
  return Hypergraph({"1", "2", "3", "4", "5", "6"},
                    {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"4", "5"},
                     {"4", "6"}, {"5", "6"}, {"3", "4"}});
}

}  // namespace

TEST_CASE("incidence and decomposition vectors") {
  Hypergraph f1 = fixture_f1();
  RationalVector chi = incidence_vector(f1, Matching{{0, 1}});
  CHECK(chi.entries == std::vector<Rational>{1, 1, 0, 0});

  ConvexDecomposition d;
  d.terms.push_back({Matching{{0, 1}}, Rational(1, 3)});
  d.terms.push_back({Matching{{2, 3}}, Rational(2, 3)});
  RationalVector x = decomposition_vector(f1, d);
  CHECK(x.entries == std::vector<Rational>{Rational(1, 3), Rational(1, 3),
                                           Rational(2, 3), Rational(2, 3)});

  // Invariant violations are rejected.
  ConvexDecomposition not_one;
  not_one.terms.push_back({Matching{{0, 1}}, Rational(1, 2)});
  CHECK_THROWS_AS(decomposition_vector(f1, not_one), InputError);
  ConvexDecomposition not_perfect;
  not_perfect.terms.push_back({Matching{{0}}, Rational(1)});
  CHECK_THROWS_AS(decomposition_vector(f1, not_perfect), InputError);
  ConvexDecomposition negative;
  negative.terms.push_back({Matching{{0, 1}}, Rational(3, 2)});
  negative.terms.push_back({Matching{{2, 3}}, Rational(-1, 2)});
  CHECK_THROWS_AS(decomposition_vector(f1, negative), InputError);
}

TEST_CASE("fractional polytope membership") {
  Hypergraph f1 = fixture_f1();
  CHECK(in_fractional_polytope(f1, half_vector(4)).inside);

  RationalVector neg{{Rational(-1, 2), Rational(1, 2), Rational(1, 2),
                      Rational(1, 2)}};
  FractionalMembership fm = in_fractional_polytope(f1, neg);
  CHECK(!fm.inside);
  CHECK(fm.negative_edge == 0);

  RationalVector off{{Rational(1), Rational(1), Rational(1), Rational(1)}};
  FractionalMembership fm2 = in_fractional_polytope(f1, off);
  CHECK(!fm2.inside);
  REQUIRE(fm2.violated_vertex.has_value());
  CHECK(fm2.vertex_sum == 2);

  CHECK_THROWS_AS(in_fractional_polytope(f1, half_vector(3)), InputError);
}

TEST_CASE("matching polytope membership on the fixtures") {
  Hypergraph f1 = fixture_f1();
  MembershipResult r = in_matching_polytope(f1, half_vector(4));
  REQUIRE(r.inside);
  REQUIRE(r.decomposition.terms.size() == 2);
  CHECK(r.decomposition.terms[0].matching == Matching{{0, 1}});
  CHECK(r.decomposition.terms[0].weight == Rational(1, 2));
  CHECK(r.decomposition.terms[1].matching == Matching{{2, 3}});
  CHECK(r.decomposition.terms[1].weight == Rational(1, 2));
  CHECK(decomposition_vector(f1, r.decomposition) == half_vector(4));

  // Half on the pair edges of F3, zero on the singletons.
  Hypergraph f3 = fixture_f3();
  RationalVector x3{{Rational(1, 2), Rational(1, 2), Rational(1, 2),
                     Rational(1, 2), Rational(0), Rational(0), Rational(0),
                     Rational(0)}};
  MembershipResult r3 = in_matching_polytope(f3, x3);
  REQUIRE(r3.inside);
  CHECK(decomposition_vector(f3, r3.decomposition) == x3);

  // A triangle's half-vector lies in the fractional polytope but not in
  // the (empty) matching hull; the certificate must separate it.
  Hypergraph c3 = cycle_graph(3);
  RationalVector xc = half_vector(3);
  CHECK(in_fractional_polytope(c3, xc).inside);
  MembershipResult rc = in_matching_polytope(c3, xc);
  CHECK(!rc.inside);
  check_certificate(c3, xc, rc.certificate);

  // Outside the fractional polytope is outside the hull as well: vertex 2
  // of F1 sits in edges 1 and 4, so this vector gives it degree two.
  RationalVector big{{Rational(1), Rational(0), Rational(0), Rational(1)}};
  MembershipResult rb = in_matching_polytope(f1, big);
  CHECK(!rb.inside);
  check_certificate(f1, big, rb.certificate);
}

TEST_CASE("matching polytope membership on random combinations") {
  std::mt19937_64 rng(13579);
  for (int trial = 0; trial < 25; ++trial) {
    Hypergraph h = trial % 2 == 0 ? random_covered(rng, 4, 6, 10)
                                  : random_uniformable(rng, 4, 6, 10);
    auto pms = enumerate_perfect_matchings(h);
    REQUIRE(!pms.empty());
    ConvexDecomposition d = random_convex(rng, pms);
    RationalVector x = decomposition_vector(h, d);
    MembershipResult r = in_matching_polytope(h, x);
    REQUIRE(r.inside);
    CHECK(decomposition_vector(h, r.decomposition) == x);

    // Nudging one coordinate up by one breaks a degree constraint, so the
    // point leaves the hull; the certificate must confirm it.
    RationalVector y = x;
    y.entries[rng() % y.entries.size()] += 1;
    MembershipResult ry = in_matching_polytope(h, y);
    CHECK(!ry.inside);
    check_certificate(h, y, ry.certificate);
  }
}

TEST_CASE("split and join around a tight cut") {
  Hypergraph f1 = fixture_f1();
  Shore s = shore(f1, {"2", "3"});
  RationalVector x = half_vector(4);
  SplitPair sp = split(f1, s, x);

  ContractionPair cp = contract(f1, s);
  REQUIRE(sp.x_s.entries.size() ==
          static_cast<std::size_t>(cp.h_s.edge_count()));
  REQUIRE(sp.x_s_bar.entries.size() ==
          static_cast<std::size_t>(cp.h_s_bar.edge_count()));
  // Every projected entry keeps its source value.
  for (int i = 0; i < f1.edge_count(); ++i) {
    if (cp.edge_to_s[i] >= 0) {
      CHECK(sp.x_s.entries[cp.edge_to_s[i]] == x.entries[i]);
    }
    if (cp.edge_to_s_bar[i] >= 0) {
      CHECK(sp.x_s_bar.entries[cp.edge_to_s_bar[i]] == x.entries[i]);
    }
  }

  // Projections stay inside their polytopes; join inverts split.
  CHECK(in_matching_polytope(cp.h_s, sp.x_s).inside);
  CHECK(in_matching_polytope(cp.h_s_bar, sp.x_s_bar).inside);
  CHECK(join(f1, s, sp) == x);

  // Mismatched cut values are rejected on join.
  SplitPair bad = sp;
  bad.x_s_bar.entries[0] += Rational(1, 7);
  CHECK_THROWS_AS(join(f1, s, bad), InputError);

  // Non-tight cuts need force.
  CHECK_THROWS_AS(split(f1, shore(f1, {"1", "2"}), x), PreconditionError);
  Hypergraph f3 = fixture_f3();
  RationalVector x3{{Rational(1, 2), Rational(1, 2), Rational(1, 2),
                     Rational(1, 2), Rational(0), Rational(0), Rational(0),
                     Rational(0)}};
  SplitPair sp3 = split(f3, shore(f3, {"a1", "a2"}), x3, true);
  CHECK(join(f3, shore(f3, {"a1", "a2"}), sp3, true) == x3);
}

TEST_CASE("combining convex decompositions across a tight cut") {
  Hypergraph f1 = fixture_f1();
  Shore s = shore(f1, {"2", "3"});
  ContractionPair cp = contract(f1, s);

  SUBCASE("reassembles the half vector") {
    RationalVector x = half_vector(4);
    SplitPair sp = split(f1, s, x);
    ConvexDecomposition d_s = in_matching_polytope(cp.h_s, sp.x_s).decomposition;
    ConvexDecomposition d_sbar =
        in_matching_polytope(cp.h_s_bar, sp.x_s_bar).decomposition;
    ConvexDecomposition joined =
        combine_convex_decompositions(f1, s, d_s, d_sbar);
    CHECK(decomposition_vector(f1, joined) == x);
  }

  SUBCASE("rejects disagreeing marginals") {
    // All mass on one cut image on one side, split across both on the other.
    auto pms_s = enumerate_perfect_matchings(cp.h_s);
    auto pms_sbar = enumerate_perfect_matchings(cp.h_s_bar);
    REQUIRE(pms_sbar.size() == 2);
    ConvexDecomposition d_s;
    d_s.terms.push_back({pms_s[0], Rational(1)});
    ConvexDecomposition d_sbar;
    d_sbar.terms.push_back({pms_sbar[0], Rational(1, 2)});
    d_sbar.terms.push_back({pms_sbar[1], Rational(1, 2)});
    CHECK_THROWS_AS(combine_convex_decompositions(f1, s, d_s, d_sbar),
                    InputError);
  }
}

TEST_CASE("combine across random tight cuts") {
  std::mt19937_64 rng(8642);
  int combined = 0;
  for (int trial = 0; trial < 30 && combined < 20; ++trial) {
    Hypergraph h = random_uniformable(rng, 4, 7, 10);
    TightCutList cuts = list_tight_cuts(h);
    if (cuts.nontrivial.empty()) continue;
    const Shore& s = cuts.nontrivial[rng() % cuts.nontrivial.size()];
    auto pms = enumerate_perfect_matchings(h);
    for (int rep = 0; rep < 4; ++rep) {
      ConvexDecomposition d = random_convex(rng, pms);
      RationalVector x = decomposition_vector(h, d);
      SplitPair sp = split(h, s, x);
      ContractionPair cp = contract(h, s);
      MembershipResult ms = in_matching_polytope(cp.h_s, sp.x_s);
      MembershipResult msbar = in_matching_polytope(cp.h_s_bar, sp.x_s_bar);
      REQUIRE(ms.inside);
      REQUIRE(msbar.inside);
      ConvexDecomposition joined = combine_convex_decompositions(
          h, s, ms.decomposition, msbar.decomposition);
      CHECK(decomposition_vector(h, joined) == x);
      ++combined;
    }
  }
  CHECK(combined >= 8);
}

TEST_CASE("fractional polytope integrality") {
  CHECK(fractional_polytope_integral(fixture_f1()).integral);
  CHECK(fractional_polytope_integral(fixture_f2()).integral);
  CHECK(fractional_polytope_integral(fixture_f3()).integral);
  CHECK(fractional_polytope_integral(fixture_f4()).integral);

  IntegralityResult c3 = fractional_polytope_integral(cycle_graph(3));
  CHECK(!c3.integral);
  REQUIRE(c3.witness.has_value());
  CHECK(c3.witness->entries ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)});

  IntegralityResult tt = fractional_polytope_integral(two_triangles());
  CHECK(!tt.integral);
  REQUIRE(tt.witness.has_value());
  CHECK(in_fractional_polytope(two_triangles(), *tt.witness).inside);
  bool fractional_entry = false;
  for (const Rational& v : tt.witness->entries) {
    if (v != 0 && v != 1) fractional_entry = true;
  }
  CHECK(fractional_entry);
}

TEST_CASE("separating witness error paths") {
  Hypergraph f1 = fixture_f1();
  CHECK_THROWS_AS(separating_witness(f1, shore(f1, {"2", "3"})),
                  PreconditionError);  // tight
  CHECK_THROWS_AS(separating_witness(f1, shore(f1, {"1", "2"})),
                  PreconditionError);  // not separating
  Hypergraph f3 = fixture_f3();
  CHECK_THROWS_AS(separating_witness(f3, shore(f3, {"a1", "a2"})),
                  PreconditionError);  // not uniformable
}

TEST_CASE("separating witness on a non-tight separating cut") {
  // The prism's triangle shore is separating but not tight: the all-rungs
  // matching crosses three times.  The witness construction lands on the
  // half-weight point over the two triangles, which avoids the cut
  // entirely, so x(cut) = 0 < 1 and the polytope cannot be integral.
  Hypergraph p = prism();
  Shore tri = shore(p, {"1", "2", "3"});
  REQUIRE(is_separating(p, tri));
  CHECK(!is_tight(p, tri).tight);

  RationalVector w = separating_witness(p, tri);
  RationalVector expected;
  expected.entries.assign(9, Rational(1, 2));
  for (int e = 6; e < 9; ++e) expected.entries[e] = Rational(0);
  CHECK(w == expected);
  CHECK(in_fractional_polytope(p, w).inside);

  Rational cut_value(0);
  for (int e : cut(p, tri).edge_indices) cut_value += w.entries[e];
  CHECK(cut_value == Rational(0));
  CHECK(!fractional_polytope_integral(p).integral);
}

TEST_CASE("balance recognition") {
  CHECK(is_balanced(fixture_f1()).balanced);
  CHECK(is_balanced(fixture_f2()).balanced);
  CHECK(is_balanced(fixture_f3()).balanced);
  CHECK(is_balanced(fixture_f4()).balanced);
  CHECK(is_balanced(cycle_graph(4)).balanced);
  CHECK(is_balanced(cycle_graph(6)).balanced);

  BalanceResult c3 = is_balanced(cycle_graph(3));
  CHECK(!c3.balanced);
  check_strong_odd_cycle(cycle_graph(3), c3);

  BalanceResult c5 = is_balanced(cycle_graph(5));
  CHECK(!c5.balanced);
  check_strong_odd_cycle(cycle_graph(5), c5);

  // A triangle buried inside a larger host is still found.
  BalanceResult tt = is_balanced(two_triangles());
  CHECK(!tt.balanced);
  check_strong_odd_cycle(two_triangles(), tt);

  // A shared vertex d lying in every edge does not rescue balance: the
  // cycle (a, b, c) avoids d entirely and each edge holds exactly two of
  // its vertices, so it is a strong odd cycle.
  Hypergraph overlap({"a", "b", "c", "d", "e"},
                     {{"a", "b", "d"}, {"b", "c", "d"}, {"c", "a", "d"}});
  BalanceResult ov = is_balanced(overlap);
  CHECK(!ov.balanced);
  check_strong_odd_cycle(overlap, ov);

  // A laminar family (edges pairwise nested or disjoint) can never hold a
  // strong cycle: consecutive cycle edges would have to be incomparable,
  // hence disjoint, yet share a cycle vertex.
  Hypergraph laminar({"a", "b", "c", "d"},
                     {{"a", "b"}, {"c", "d"}, {"a", "b", "c", "d"}});
  CHECK(is_balanced(laminar).balanced);

  // An interval family on the line a < b < c: no edge holds {c, a}
  // without b, so the odd cycle (a, b, c) is never strong.
  Hypergraph intervals({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "b", "c"}});
  CHECK(is_balanced(intervals).balanced);
}

TEST_CASE("balance matches polytope integrality of restrictions") {
  // A host is balanced exactly when every restriction has an integral
  // fractional polytope.
  std::mt19937_64 rng(1122);
  int unbalanced_seen = 0;
  for (int trial = 0; trial < 14; ++trial) {
    Hypergraph h = random_covered(rng, 4, 5, 8);
    bool balanced = is_balanced(h).balanced;
    if (!balanced) ++unbalanced_seen;
    bool all_integral = true;
    const int n = h.vertex_count();
    for (unsigned mask = 1; mask < (1u << n) && all_integral; ++mask) {
      std::vector<int> verts;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) verts.push_back(v);
      }
      Hypergraph res = restricted_subhypergraph(h, Shore(verts));
      if (res.edge_count() == 0) continue;
      if (!fractional_polytope_integral(res).integral) all_integral = false;
    }
    CHECK(balanced == all_integral);
  }
  (void)unbalanced_seen;
}

TEST_CASE("r-partite recognition") {
  Hypergraph f2 = fixture_f2();
  PartitionResult p2 = is_r_partite(f2, 2);
  REQUIRE(p2.partite);
  REQUIRE(p2.classes.size() == 2);
  CHECK(p2.classes[0] == std::vector<int>{0, 2, 4});
  CHECK(p2.classes[1] == std::vector<int>{1, 3, 5});

  Hypergraph f1 = fixture_f1();
  PartitionResult p1 = is_r_partite(f1, 3);
  REQUIRE(p1.partite);
  REQUIRE(p1.classes.size() == 3);
  CHECK(p1.classes[0] == std::vector<int>{0, 5});
  CHECK(p1.classes[1] == std::vector<int>{1, 3});
  CHECK(p1.classes[2] == std::vector<int>{2, 4});
  // Every edge meets every class exactly once.
  for (const auto& e : f1.edges()) {
    for (const auto& cls : p1.classes) {
      int hits = 0;
      for (int v : e) {
        if (std::find(cls.begin(), cls.end(), v) != cls.end()) ++hits;
      }
      CHECK(hits == 1);
    }
  }

  // 3-uniform but not 3-partite: c and d are forced into the same class by
  // the first two edges, yet share the third edge.
  Hypergraph blocked({"a", "b", "c", "d", "x"},
                     {{"a", "b", "c"}, {"a", "b", "d"}, {"c", "d", "x"}});
  CHECK(!is_r_partite(blocked, 3).partite);

  // Odd cycles are not bipartite.
  CHECK(!is_r_partite(cycle_graph(5), 2).partite);

  // Wrong uniformity is a precondition failure.
  CHECK_THROWS_AS(is_r_partite(f2, 3), PreconditionError);
  CHECK_THROWS_AS(is_r_partite(fixture_f3(), 2), PreconditionError);
  CHECK_THROWS_AS(is_r_partite(f2, 0), PreconditionError);

  // Degenerate 1-uniform case.
  Hypergraph singles({"a", "b"}, {{"a"}, {"b"}});
  PartitionResult ps = is_r_partite(singles, 1);
  REQUIRE(ps.partite);
  CHECK(ps.classes == std::vector<std::vector<int>>{{0, 1}});
}
