#pragma once

#include <optional>
#include <vector>

#include "hgmatch/budget.hpp"
#include "hgmatch/hypergraph.hpp"
#include "hgmatch/matching.hpp"

namespace hgmatch {

// One perfect matching per edge, containing that edge.
struct CoveringFamily {
  std::vector<Matching> per_edge;  // indexed by edge
};

// Deterministic covering family. On uniform hosts with a cheaply certified
// integral fractional polytope each M_e is read off a basic solution of
// {x >= 0, x(δ(v)) = 1, x(e) = 1}; otherwise M_e is the first enumerated
// perfect matching containing e. Requires a matching covered host.
CoveringFamily covering_matchings(const Hypergraph& h, Budget* budget = nullptr);

// w(f) = number of matchings of the family containing f.
struct CutWeight {
  std::vector<long long> w;  // indexed by edge
};
CutWeight cut_weight(const Hypergraph& h, const CoveringFamily& fam);

// Finds a non-trivial tight cut of an r-uniform, matching covered, balanced
// hypergraph, or certifies that only trivial tight cuts exist. Minimizes
// w(δ(S)) over the lattice families C(A,B) (A inside, B outside, |A|=|B|=2)
// subject to 2 <= |S| <= |V|-2 and |S| not divisible by r; a minimum of
// exactly |E| pins a tight cut. Ties go to the smallest canonical shore.
struct FinderResult {
  bool found = false;
  Shore shore;                            // canonical minimizer when found
  std::optional<long long> best_weight;   // min w(δ(S)) over admissible shores
  long long edge_count = 0;               // the tightness threshold |E(H)|
};
FinderResult find_nontrivial_tight_cut(const Hypergraph& h,
                                       Budget* budget = nullptr);

}  // namespace hgmatch
