#pragma once

#include <optional>
#include <vector>

#include "hgmatch/budget.hpp"
#include "hgmatch/hypergraph.hpp"

namespace hgmatch {

// Set of pairwise disjoint edges, stored as sorted edge indices.
struct Matching {
  std::vector<int> edge_indices;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

// All perfect matchings, sorted lexicographically by edge index sets.
// Backtracks over the lowest-index uncovered vertex; every search node
// charges the budget, and exhaustion raises BudgetError rather than
// returning a partial list.
std::vector<Matching> enumerate_perfect_matchings(const Hypergraph& h,
                                                  Budget* budget = nullptr);

struct CoverageResult {
  bool covered = false;
  // Lowest index of an edge lying in no perfect matching, when not covered;
  // disconnectedness or the empty edge set also yield not-covered.
  std::optional<int> uncovered_edge;
  bool connected = false;
};

// Matching covered: connected, at least one edge, and every edge lies in
// some perfect matching.
CoverageResult is_matching_covered(const Hypergraph& h,
                                   Budget* budget = nullptr);

struct MatchingInvariants {
  int max_matching = 0;                  // ν(H)
  int min_vertex_cover = 0;              // τ(H)
  std::optional<int> min_edge_cover;     // ρ(H); empty when some vertex is isolated
};

MatchingInvariants matching_invariants(const Hypergraph& h,
                                       Budget* budget = nullptr);

}  // namespace hgmatch
