#include "hgmatch/cutfinder.hpp"

#include <algorithm>

#include "hgmatch/lp.hpp"
#include "hgmatch/polytope.hpp"
#include "hgmatch/tightcut.hpp"

namespace hgmatch {

namespace {

bool all_edges_size(const Hypergraph& h, std::size_t r) {
  for (int i = 0; i < h.edge_count(); ++i) {
    if (h.edge(i).size() != r) return false;
  }
  return true;
}

// Matching containing edge `fixed`, read off a basic feasible solution of
// the degree system with x(fixed) pinned to one. Valid whenever that
// polytope is integral: the pinned set is a face, so basic solutions are
// incidence vectors.
std::optional<Matching> lp_matching(const Hypergraph& h, int fixed) {
  const int n = h.vertex_count();
  const int m = h.edge_count();
  lp::Matrix a(n + 1, lp::Row(m, Rational(0)));
  std::vector<Rational> b(n + 1, Rational(1));
  for (int i = 0; i < m; ++i) {
    for (int v : h.edge(i)) a[v][i] = 1;
  }
  a[n][fixed] = 1;
  auto feas = lp::feasible_point(a, b);
  if (!feas.feasible) return std::nullopt;
  std::vector<int> support;
  for (int i = 0; i < m; ++i) {
    if (feas.x[i] == 1) {
      support.push_back(i);
    } else if (feas.x[i] != 0) {
      throw TheoremViolation(
          "covering_matchings: fractional basic solution on an integral "
          "polytope");
    }
  }
  return Matching{support};
}

}  // namespace

CoveringFamily covering_matchings(const Hypergraph& h, Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  auto coverage = is_matching_covered(h, &b);
  if (!coverage.covered) {
    std::string detail =
        coverage.uncovered_edge
            ? " (edge '" + h.label(*coverage.uncovered_edge) +
                  "' lies in no perfect matching)"
            : "";
    throw PreconditionError("covering_matchings: not matching covered" +
                            detail);
  }

  CoveringFamily fam;
  fam.per_edge.reserve(h.edge_count());

  bool lp_route = h.edge_count() > 0 && h.edge_count() <= 14 &&
                  all_edges_size(h, h.edge(0).size()) &&
                  fractional_polytope_integral(h, &b).integral;
  if (lp_route) {
    for (int e = 0; e < h.edge_count(); ++e) {
      b.charge();
      auto m = lp_matching(h, e);
      if (!m) {
        throw TheoremViolation(
            "covering_matchings: matching covered host with an uncoverable "
            "edge");
      }
      fam.per_edge.push_back(std::move(*m));
    }
    return fam;
  }

  auto matchings = enumerate_perfect_matchings(h, &b);
  for (int e = 0; e < h.edge_count(); ++e) {
    const Matching* first = nullptr;
    for (const Matching& m : matchings) {
      if (std::binary_search(m.edge_indices.begin(), m.edge_indices.end(),
                             e)) {
        first = &m;
        break;
      }
    }
    if (!first) {
      throw TheoremViolation(
          "covering_matchings: matching covered host with an uncoverable "
          "edge");
    }
    fam.per_edge.push_back(*first);
  }
  return fam;
}

CutWeight cut_weight(const Hypergraph& h, const CoveringFamily& fam) {
  if (fam.per_edge.size() != static_cast<std::size_t>(h.edge_count())) {
    throw InputError("cut_weight: family size does not match edge count");
  }
  CutWeight cw;
  cw.w.assign(h.edge_count(), 0);
  long long total_family = 0;
  for (int e = 0; e < h.edge_count(); ++e) {
    const Matching& m = fam.per_edge[e];
    if (!std::binary_search(m.edge_indices.begin(), m.edge_indices.end(), e)) {
      throw InputError("cut_weight: family matching for edge '" + h.label(e) +
                       "' does not contain it");
    }
    total_family += static_cast<long long>(m.edge_indices.size());
    for (int f : m.edge_indices) {
      if (f < 0 || f >= h.edge_count()) {
        throw InputError("cut_weight: family edge index out of range");
      }
      ++cw.w[f];
    }
  }
  long long total_weight = 0;
  for (long long v : cw.w) total_weight += v;
  if (total_weight != total_family) {
    throw TheoremViolation("cut_weight: weight total mismatch");
  }
  return cw;
}

FinderResult find_nontrivial_tight_cut(const Hypergraph& h, Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  const int n = h.vertex_count();
  if (h.edge_count() == 0) {
    throw PreconditionError("find_nontrivial_tight_cut: no edges");
  }
  const std::size_t r = h.edge(0).size();
  if (!all_edges_size(h, r)) {
    throw PreconditionError("find_nontrivial_tight_cut: not uniform");
  }
  auto coverage = is_matching_covered(h, &b);
  if (!coverage.covered) {
    throw PreconditionError("find_nontrivial_tight_cut: not matching covered");
  }
  auto balance = is_balanced(h, &b);
  if (!balance.balanced) {
    throw PreconditionError("find_nontrivial_tight_cut: not balanced");
  }
  if (n > 62) {
    throw BudgetError("find_nontrivial_tight_cut: vertex count exceeds the "
                      "subset sweep limit");
  }

  CoveringFamily fam = covering_matchings(h, &b);
  CutWeight cw = cut_weight(h, fam);
  FinderResult result;
  result.edge_count = h.edge_count();

  auto weight_of = [&](std::uint64_t bits) {
    long long total = 0;
    for (int e = 0; e < h.edge_count(); ++e) {
      bool any_in = false, any_out = false;
      for (int v : h.edge(e)) {
        if ((bits >> v) & 1) {
          any_in = true;
        } else {
          any_out = true;
        }
      }
      if (any_in && any_out) total += cw.w[e];
    }
    return total;
  };

  std::optional<long long> best;
  std::optional<Shore> best_shore;
  auto consider = [&](std::uint64_t bits, int size) {
    if (size % static_cast<int>(r) == 0) return;
    b.charge();
    long long w = weight_of(bits);
    std::vector<int> verts;
    for (int v = 0; v < n; ++v) {
      if ((bits >> v) & 1) verts.push_back(v);
    }
    Shore s = canonical_shore(h, Shore(verts));
    if (!best || w < *best || (w == *best && shore_less(h, s, *best_shore))) {
      best = w;
      best_shore = s;
    }
  };

  // Lattice families C(A,B): shores containing A and avoiding B, |A|=|B|=2.
  // Every admissible shore lies in one, so the global minimum is exact; the
  // family loop is the slot where a polynomial minimizer would go.
  for (int a1 = 0; a1 < n; ++a1) {
    for (int a2 = a1 + 1; a2 < n; ++a2) {
      for (int b1 = 0; b1 < n; ++b1) {
        if (b1 == a1 || b1 == a2) continue;
        for (int b2 = b1 + 1; b2 < n; ++b2) {
          if (b2 == a1 || b2 == a2) continue;
          std::vector<int> free;
          for (int v = 0; v < n; ++v) {
            if (v != a1 && v != a2 && v != b1 && v != b2) free.push_back(v);
          }
          const std::uint64_t base =
              (std::uint64_t{1} << a1) | (std::uint64_t{1} << a2);
          const int f = static_cast<int>(free.size());
          for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << f); ++sub) {
            std::uint64_t bits = base;
            int size = 2;
            for (int k = 0; k < f; ++k) {
              if ((sub >> k) & 1) {
                bits |= std::uint64_t{1} << free[k];
                ++size;
              }
            }
            if (size >= 2 && size <= n - 2) consider(bits, size);
          }
        }
      }
    }
  }

  result.best_weight = best;
  if (best && *best == result.edge_count) {
    // The achieved minimum certifies tightness; re-verify independently.
    auto tight = is_tight(h, *best_shore, &b);
    if (!tight.tight || is_trivial_shore(h, *best_shore)) {
      throw TheoremViolation(
          "find_nontrivial_tight_cut: minimizer failed verification");
    }
    result.found = true;
    result.shore = *best_shore;
  }
  return result;
}

}  // namespace hgmatch
