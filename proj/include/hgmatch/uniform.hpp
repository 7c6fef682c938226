#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgmatch/budget.hpp"
#include "hgmatch/hypergraph.hpp"
#include "hgmatch/matching.hpp"

namespace hgmatch {

// Uniformizing multiplication: positive vertex weights m with constant
// edge weight r. Indexed by host vertex order.
struct Multiplicity {
  std::vector<long long> m;
  long long r = 0;
};

// Checks the Multiplicity invariant against a host exactly.
void validate_multiplicity(const Hypergraph& h, const Multiplicity& mult);

// Exact rational solve of the uniformization system; integral witness by
// common-denominator scaling. Witness is normalized best effort: smallest
// r first, then lexicographically minimal m in vertex order.
// nullopt = not uniformable. Hypergraphs whose edges are all singletons
// are degenerate (rank 1) and rejected.
std::optional<Multiplicity> check_uniformable(const Hypergraph& h);

// H^(m): vertex v becomes m(v) indistinguishable copies (named va, vb, ...
// when m(v) > 1); every edge through v gains all copies.
Hypergraph multiply(const Hypergraph& h, const std::vector<long long>& m);
Hypergraph multiply(const Hypergraph& h,
                    const std::map<std::string, long long>& m);

// Weight of a shore under mult, reduced mod r into {0,...,r-1}.
long long shore_weight_mod_r(const Hypergraph& h, const Multiplicity& mult,
                             const Shore& s);

// The unique k in {1,...,r-1} with k ≡ m(S) mod r; every edge of the tight
// cut δ(S) satisfies Σ_{v∈e∩S} m(v) = k (verified, violation is a bug).
struct Residue {
  long long k = 0;
};
Residue tight_cut_residue(const Hypergraph& h, const Multiplicity& mult,
                          const Shore& s, Budget* budget = nullptr);

// For m(S) ≡ 0 mod r: no perfect matching meets δ(S) exactly once; for
// proper non-empty S some matching meets it at least twice.
struct ZeroResidueReport {
  int matchings_missing_cut = 0;    // |M ∩ δ(S)| = 0
  int matchings_meeting_many = 0;   // |M ∩ δ(S)| >= 2
  std::optional<Matching> witness;  // some matching with >= 2 cut edges
};
ZeroResidueReport zero_residue_check(const Hypergraph& h,
                                     const Multiplicity& mult, const Shore& s,
                                     Budget* budget = nullptr);

}  // namespace hgmatch
