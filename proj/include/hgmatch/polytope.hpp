#pragma once

#include <optional>
#include <vector>

#include "hgmatch/budget.hpp"
#include "hgmatch/hypergraph.hpp"
#include "hgmatch/matching.hpp"
#include "hgmatch/rational.hpp"

namespace hgmatch {

// Vector over the edge set of a host hypergraph, one exact rational per
// edge index. No floating point anywhere in this module.
struct RationalVector {
  std::vector<Rational> entries;

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
};

// Convex combination of perfect matchings: positive weights summing to 1.
struct ConvexDecomposition {
  struct Term {
    Matching matching;
    Rational weight;
  };
  std::vector<Term> terms;
};

// Projections of a host vector onto the two contractions at δ(S). The pair
// agrees on the cut: x_s(e_s) = x_s_bar(e_s̄) for every cut edge e.
struct SplitPair {
  RationalVector x_s;      // over E(H_S)
  RationalVector x_s_bar;  // over E(H_S̄)
};

// χ^M: 1 on the matching's edges, 0 elsewhere.
RationalVector incidence_vector(const Hypergraph& h, const Matching& m);

// Σ weight·χ^M, validating the ConvexDecomposition invariant.
RationalVector decomposition_vector(const Hypergraph& h,
                                    const ConvexDecomposition& d);

// Membership in {x >= 0, x(δ(v)) = 1 for all v}. When outside, reports the
// first violated constraint.
struct FractionalMembership {
  bool inside = false;
  std::optional<int> negative_edge;    // first edge with x(e) < 0
  std::optional<int> violated_vertex;  // first vertex with x(δ(v)) != 1
  Rational vertex_sum;                 // x(δ(v)) at that vertex
};
FractionalMembership in_fractional_polytope(const Hypergraph& h,
                                            const RationalVector& x);

// Membership in the convex hull of perfect matching incidence vectors,
// decided exactly over the enumerated matching list. Inside yields a convex
// decomposition; outside yields a separating affine certificate c of length
// |E|+1 with c·(χ^M,1) <= 0 for every perfect matching M and c·(x,1) > 0.
struct MembershipResult {
  bool inside = false;
  ConvexDecomposition decomposition;
  std::vector<Rational> certificate;
};
MembershipResult in_matching_polytope(const Hypergraph& h,
                                      const RationalVector& x,
                                      Budget* budget = nullptr);

// x ↦ (x^S, x^S̄): cut edge images inherit x(e), interior edges keep their
// value. Requires a tight cut, or a separating cut under force.
SplitPair split(const Hypergraph& h, const Shore& s, const RationalVector& x,
                bool force = false, Budget* budget = nullptr);

// The ⊕-assembly inverse to split; the pair must agree on every cut edge.
RationalVector join(const Hypergraph& h, const Shore& s, const SplitPair& pair,
                    bool force = false, Budget* budget = nullptr);

// Merges convex decompositions of two contraction vectors agreeing on a
// tight cut δ(S) into one of the joined host vector: terms are grouped by
// their cut edge (largest marginal first, ties by lowest edge index) and
// same-group terms are paired greedily, each pair gluing to a host matching
// with the minimum of the two remaining weights.
ConvexDecomposition combine_convex_decompositions(const Hypergraph& h,
                                                  const Shore& s,
                                                  const ConvexDecomposition& d_s,
                                                  const ConvexDecomposition& d_s_bar,
                                                  Budget* budget = nullptr);

// Exhaustive basis enumeration over the degree system: true iff every
// vertex of {x >= 0, x(δ(v)) = 1} is 0/1 (an incidence vector of a perfect
// matching). The witness is the first fractional vertex found.
struct IntegralityResult {
  bool integral = false;
  std::optional<RationalVector> witness;
};
IntegralityResult fractional_polytope_integral(const Hypergraph& h,
                                               Budget* budget = nullptr);

// For a separating, non-tight cut of a uniformable matching covered host:
// x = (Σ_{e∈M0} χ^{M_e} − χ^{M0}) / (|M0|−1) where M0 meets the cut at
// least twice and each M_e contains e and meets the cut exactly once. The
// result satisfies x(δ(v)) = 1 for all v, x >= 0, and
// x(δ(S)) = (|M0|−|M0∩δ(S)|)/(|M0|−1) < 1, so the fractional polytope of
// the host is not integral.
RationalVector separating_witness(const Hypergraph& h, const Shore& s,
                                  Budget* budget = nullptr);

// Balanced: no strong cycle of odd length (>= 3). A cycle x1 e1 x2 ... xt
// et x1 is strong when a cycle vertex lies only in its two surrounding
// cycle edges. The witness lists the cycle's vertices and edges in order.
struct BalanceResult {
  bool balanced = false;
  std::vector<int> cycle_vertices;
  std::vector<int> cycle_edges;
};
BalanceResult is_balanced(const Hypergraph& h, Budget* budget = nullptr);

// Partition of V into r classes meeting every edge exactly once per class,
// by backtracking. Requires an r-uniform host.
struct PartitionResult {
  bool partite = false;
  std::vector<std::vector<int>> classes;  // size r when partite
};
PartitionResult is_r_partite(const Hypergraph& h, long long r,
                             Budget* budget = nullptr);

}  // namespace hgmatch
