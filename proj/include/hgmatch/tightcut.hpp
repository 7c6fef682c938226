#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgmatch/budget.hpp"
#include "hgmatch/hypergraph.hpp"
#include "hgmatch/matching.hpp"

namespace hgmatch {

// δ(S) is tight when every perfect matching meets it exactly once. The
// violating witness is a matching meeting it zero or several times.
struct TightnessResult {
  bool tight = false;
  std::optional<Matching> violating;
};
TightnessResult is_tight(const Hypergraph& h, const Shore& s,
                         Budget* budget = nullptr);

// A cut is trivial when one shore is a single vertex.
bool is_trivial_shore(const Hypergraph& h, const Shore& s);

// The two contractions of H at δ(S). h_s collapses S into the new vertex
// s; h_s_bar collapses the complement into s̄. Cut edge e becomes
// (e ∖ S) ∪ {s} on one side and (e ∩ S) ∪ {s̄} on the other; edges inside
// a shore survive only on their own side. Edge maps translate original
// edge indices to per-side indices (-1 when the edge is absent).
struct ContractionPair {
  Hypergraph h_s;
  Hypergraph h_s_bar;
  int s_vertex = -1;      // index of s in h_s
  int s_bar_vertex = -1;  // index of s̄ in h_s_bar
  std::vector<int> edge_to_s;
  std::vector<int> edge_to_s_bar;
  std::vector<int> cut_edges;  // sorted original indices of δ(S)
};

// Requires a tight cut unless force is set; forcing marks the provenance
// labels of the transformed cut edges with '!'.
ContractionPair contract(const Hypergraph& h, const Shore& s,
                         bool force = false, Budget* budget = nullptr);

// Separating cut: both contractions are matching covered.
bool is_separating(const Hypergraph& h, const Shore& s,
                   Budget* budget = nullptr);

// Two shores either cross (all four corners non-empty) or form a laminar
// pair. Corners are reported in the order S∩T, S∩T̄, S̄∩T, S̄∩T̄.
enum class PairClass { kLaminar, kCrossing };
struct PairClassification {
  PairClass cls = PairClass::kLaminar;
  Shore corners[4];
};
PairClassification classify_pair(const Hypergraph& h, const Shore& s,
                                 const Shore& t);

// Uncrossing of two crossing tight shores of a matching covered
// uniformable hypergraph. Checks tightness of all four corner shores and
// asserts the guaranteed disjunction (one diagonal fully tight) and the
// intersection/union biconditional; failure of either is a bug.
struct UncrossReport {
  Shore intersection;          // S∩T
  Shore union_;                // S∪T
  Shore s_only;                // S∩T̄
  Shore t_only;                // S̄∩T
  bool intersection_tight = false;
  bool union_tight = false;
  bool s_only_tight = false;
  bool t_only_tight = false;
  bool first_diagonal = false;   // S∩T and S∪T both tight
  bool second_diagonal = false;  // S∩T̄ and S̄∩T both tight
};
UncrossReport uncross(const Hypergraph& h, const Shore& s, const Shore& t,
                      Budget* budget = nullptr);

// Every tight cut, one canonical shore per complement pair, sorted by
// (size, vertex names). Trivial and non-trivial cuts are kept apart.
struct TightCutList {
  std::vector<Shore> nontrivial;
  std::vector<Shore> trivial;
};
TightCutList list_tight_cuts(const Hypergraph& h, Budget* budget = nullptr);

// Non-tight separating shores (canonical, non-trivial), sorted as above.
std::vector<Shore> list_separating_nontight(const Hypergraph& h,
                                            Budget* budget = nullptr);

}  // namespace hgmatch
