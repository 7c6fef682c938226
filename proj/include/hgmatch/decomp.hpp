#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hgmatch/budget.hpp"
#include "hgmatch/hypergraph.hpp"
#include "hgmatch/tightcut.hpp"

namespace hgmatch {

// Node of the binary contraction tree. Internal nodes carry the node-local
// shore that was contracted; child_keep collapses the shore's complement
// (vertices of the shore survive), child_drop collapses the shore itself.
// expansion[v] lists the root vertices vertex v stands for.
struct DecompNode {
  Hypergraph hg;
  std::vector<std::vector<int>> expansion;
  std::optional<Shore> shore;
  std::unique_ptr<DecompNode> child_keep;  // H_S̄ side, replaces the node
  std::unique_ptr<DecompNode> child_drop;  // H_S side, appended by Alg-style runs
};

struct Decomposition {
  std::unique_ptr<DecompNode> root;
  std::vector<Hypergraph> bricks;  // leaves in run order
  std::vector<Shore> family;       // canonical root shores, sorted
};

// Selector for the contraction choice at each step.
struct Strategy {
  enum class Kind { kFirst, kSeededRandom, kScripted };
  Kind kind = Kind::kFirst;
  std::uint64_t seed = 0;
  // Scripted runs name root-level shores to contract, in order.
  std::vector<std::vector<std::string>> script;

  static Strategy first() { return {}; }
  static Strategy seeded_random(std::uint64_t seed) {
    Strategy s;
    s.kind = Kind::kSeededRandom;
    s.seed = seed;
    return s;
  }
  static Strategy scripted(std::vector<std::vector<std::string>> shores) {
    Strategy s;
    s.kind = Kind::kScripted;
    s.script = std::move(shores);
    return s;
  }
};

// Tight cut decomposition: repeatedly contract a non-trivial tight cut of
// some remaining piece until only hyperbricks are left.
Decomposition decompose(const Hypergraph& h, const Strategy& strategy,
                        Budget* budget = nullptr);

// Family members expanded to root shores; re-verifies pairwise laminarity
// and root tightness (failure indicates a bug).
std::vector<Shore> extract_laminar_family(const Decomposition& d,
                                          Budget* budget = nullptr);

// Matches brick multisets via isomorphism up to parallel edges.
struct EquivalenceResult {
  bool equivalent = false;
  std::vector<int> pairing;  // pairing[i] = index in d2 matched to brick i of d1
};
EquivalenceResult decompositions_equivalent(const Decomposition& d1,
                                            const Decomposition& d2,
                                            Budget* budget = nullptr);

// One decomposition per reachable maximal laminar family, found by
// exhaustive branching over every choice the procedure could make;
// results sorted by family.
std::vector<Decomposition> enumerate_all_decompositions(const Hypergraph& h,
                                                        Budget* budget = nullptr);

}  // namespace hgmatch
