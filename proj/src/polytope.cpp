#include "hgmatch/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hgmatch/lp.hpp"
#include "hgmatch/tightcut.hpp"
#include "hgmatch/uniform.hpp"

namespace hgmatch {

namespace {

void check_matching(const Hypergraph& h, const Matching& m) {
  std::vector<char> covered(h.vertex_count(), 0);
  int prev = -1;
  for (int i : m.edge_indices) {
    if (i < 0 || i >= h.edge_count()) {
      throw InputError("matching: edge index " + std::to_string(i) +
                       " out of range");
    }
    if (i <= prev) throw InputError("matching: edge indices not increasing");
    prev = i;
    for (int v : h.edge(i)) {
      if (covered[v]) {
        throw InputError("matching: edges overlap at vertex '" +
                         h.vertex_name(v) + "'");
      }
      covered[v] = 1;
    }
  }
}

bool is_perfect(const Hypergraph& h, const Matching& m) {
  std::size_t covered = 0;
  for (int i : m.edge_indices) covered += h.edge(i).size();
  return covered == static_cast<std::size_t>(h.vertex_count());
}

void check_vector(const Hypergraph& h, const RationalVector& x,
                  const char* where) {
  if (x.entries.size() != static_cast<std::size_t>(h.edge_count())) {
    throw InputError(std::string(where) + ": vector has " +
                     std::to_string(x.entries.size()) + " entries, host has " +
                     std::to_string(h.edge_count()) + " edges");
  }
}

// Validates a convex decomposition of perfect matchings of h and returns
// the represented vector.
RationalVector convex_vector(const Hypergraph& h, const ConvexDecomposition& d,
                             const char* where) {
  RationalVector x;
  x.entries.assign(h.edge_count(), Rational(0));
  Rational total(0);
  for (const auto& term : d.terms) {
    check_matching(h, term.matching);
    if (!is_perfect(h, term.matching)) {
      throw InputError(std::string(where) + ": term matching is not perfect");
    }
    if (term.weight <= 0) {
      throw InputError(std::string(where) + ": non-positive weight");
    }
    total += term.weight;
    for (int i : term.matching.edge_indices) x.entries[i] += term.weight;
  }
  if (total != 1) {
    throw InputError(std::string(where) + ": weights sum to " +
                     rational_to_string(total) + ", expected 1");
  }
  return x;
}

void check_proper_shore(const Hypergraph& h, const Shore& s,
                        const char* where) {
  if (!s.verts().empty() &&
      (s.verts().front() < 0 || s.verts().back() >= h.vertex_count())) {
    throw InputError(std::string(where) + ": shore vertex index out of range");
  }
  if (s.empty() || s.size() == h.vertex_count()) {
    throw PreconditionError(std::string(where) +
                            ": shore must be a non-empty proper subset");
  }
}

// Checks the split/join precondition and produces the contraction pair.
// Tight cuts contract cleanly; separating cuts require force.
ContractionPair checked_contraction(const Hypergraph& h, const Shore& s,
                                    bool force, Budget* budget,
                                    const char* where) {
  check_proper_shore(h, s, where);
  if (!force) return contract(h, s, false, budget);
  if (!is_separating(h, s, budget)) {
    throw PreconditionError(std::string(where) + ": cut is not separating");
  }
  return contract(h, s, true, budget);
}

// The host matching corresponding to a pair of contraction matchings that
// agree on the cut: both interiors plus the shared cut edge.
Matching glue(const ContractionPair& cp, const Matching& m_s,
              const Matching& m_s_bar) {
  std::set<int> in_s(m_s.edge_indices.begin(), m_s.edge_indices.end());
  std::set<int> in_s_bar(m_s_bar.edge_indices.begin(),
                         m_s_bar.edge_indices.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < cp.edge_to_s.size(); ++i) {
    bool cut_edge = cp.edge_to_s[i] >= 0 && cp.edge_to_s_bar[i] >= 0;
    bool member_s = cp.edge_to_s[i] >= 0 && in_s.count(cp.edge_to_s[i]);
    bool member_s_bar =
        cp.edge_to_s_bar[i] >= 0 && in_s_bar.count(cp.edge_to_s_bar[i]);
    if (cut_edge) {
      if (member_s != member_s_bar) {
        throw TheoremViolation("glue: matchings disagree on the cut");
      }
      if (member_s) out.push_back(static_cast<int>(i));
    } else if (member_s || member_s_bar) {
      out.push_back(static_cast<int>(i));
    }
  }
  return Matching{out};
}

// The unique cut-image edge of a perfect matching of a contraction (the
// edge covering the contraction vertex).
int cut_edge_of(const ContractionPair& cp, const std::vector<int>& edge_map,
                const Matching& m, const char* where) {
  int found = -1;
  for (int orig : cp.cut_edges) {
    int img = edge_map[orig];
    if (std::binary_search(m.edge_indices.begin(), m.edge_indices.end(),
                           img)) {
      if (found >= 0) {
        throw InputError(std::string(where) +
                         ": matching uses two cut images");
      }
      found = orig;
    }
  }
  if (found < 0) {
    throw InputError(std::string(where) + ": matching misses the cut");
  }
  return found;
}

}  // namespace

RationalVector incidence_vector(const Hypergraph& h, const Matching& m) {
  check_matching(h, m);
  RationalVector x;
  x.entries.assign(h.edge_count(), Rational(0));
  for (int i : m.edge_indices) x.entries[i] = 1;
  return x;
}

RationalVector decomposition_vector(const Hypergraph& h,
                                    const ConvexDecomposition& d) {
  return convex_vector(h, d, "decomposition_vector");
}

FractionalMembership in_fractional_polytope(const Hypergraph& h,
                                            const RationalVector& x) {
  check_vector(h, x, "in_fractional_polytope");
  FractionalMembership result;
  for (int i = 0; i < h.edge_count(); ++i) {
    if (x.entries[i] < 0) {
      result.negative_edge = i;
      return result;
    }
  }
  for (int v = 0; v < h.vertex_count(); ++v) {
    Rational sum(0);
    for (int i = 0; i < h.edge_count(); ++i) {
      if (std::binary_search(h.edge(i).begin(), h.edge(i).end(), v)) {
        sum += x.entries[i];
      }
    }
    if (sum != 1) {
      result.violated_vertex = v;
      result.vertex_sum = sum;
      return result;
    }
  }
  result.inside = true;
  return result;
}

MembershipResult in_matching_polytope(const Hypergraph& h,
                                      const RationalVector& x, Budget* budget) {
  check_vector(h, x, "in_matching_polytope");
  auto matchings = enumerate_perfect_matchings(h, budget);

  // Rows: one marginal equation per edge plus the convexity row; columns:
  // one weight per perfect matching.
  const int m = h.edge_count();
  lp::Matrix a(m + 1, lp::Row(matchings.size(), Rational(0)));
  std::vector<Rational> b(m + 1);
  for (std::size_t col = 0; col < matchings.size(); ++col) {
    for (int i : matchings[col].edge_indices) a[i][col] = 1;
    a[m][col] = 1;
  }
  for (int i = 0; i < m; ++i) b[i] = x.entries[i];
  b[m] = 1;

  auto feas = lp::feasible_point(a, b);
  MembershipResult result;
  if (!feas.feasible) {
    result.certificate = feas.farkas;
    return result;
  }
  result.inside = true;
  for (std::size_t col = 0; col < matchings.size(); ++col) {
    if (feas.x[col] != 0) {
      result.decomposition.terms.push_back({matchings[col], feas.x[col]});
    }
  }
  return result;
}

SplitPair split(const Hypergraph& h, const Shore& s, const RationalVector& x,
                bool force, Budget* budget) {
  check_vector(h, x, "split");
  ContractionPair cp = checked_contraction(h, s, force, budget, "split");
  SplitPair pair;
  pair.x_s.entries.assign(cp.h_s.edge_count(), Rational(0));
  pair.x_s_bar.entries.assign(cp.h_s_bar.edge_count(), Rational(0));
  for (int i = 0; i < h.edge_count(); ++i) {
    if (cp.edge_to_s[i] >= 0) pair.x_s.entries[cp.edge_to_s[i]] = x.entries[i];
    if (cp.edge_to_s_bar[i] >= 0) {
      pair.x_s_bar.entries[cp.edge_to_s_bar[i]] = x.entries[i];
    }
  }
  return pair;
}

RationalVector join(const Hypergraph& h, const Shore& s, const SplitPair& pair,
                    bool force, Budget* budget) {
  ContractionPair cp = checked_contraction(h, s, force, budget, "join");
  check_vector(cp.h_s, pair.x_s, "join (shore side)");
  check_vector(cp.h_s_bar, pair.x_s_bar, "join (complement side)");
  RationalVector x;
  x.entries.assign(h.edge_count(), Rational(0));
  for (int i = 0; i < h.edge_count(); ++i) {
    bool cut_edge = cp.edge_to_s[i] >= 0 && cp.edge_to_s_bar[i] >= 0;
    if (cut_edge) {
      const Rational& a = pair.x_s.entries[cp.edge_to_s[i]];
      const Rational& b = pair.x_s_bar.entries[cp.edge_to_s_bar[i]];
      if (a != b) {
        throw InputError("join: pair disagrees on cut edge '" + h.label(i) +
                         "' (" + rational_to_string(a) + " vs " +
                         rational_to_string(b) + ")");
      }
      x.entries[i] = a;
    } else if (cp.edge_to_s[i] >= 0) {
      x.entries[i] = pair.x_s.entries[cp.edge_to_s[i]];
    } else {
      x.entries[i] = pair.x_s_bar.entries[cp.edge_to_s_bar[i]];
    }
  }
  return x;
}

ConvexDecomposition combine_convex_decompositions(
    const Hypergraph& h, const Shore& s, const ConvexDecomposition& d_s,
    const ConvexDecomposition& d_s_bar, Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  check_proper_shore(h, s, "combine_convex_decompositions");
  ContractionPair cp = contract(h, s, false, &b);  // requires a tight cut

  RationalVector x_s = convex_vector(cp.h_s, d_s, "combine (shore side)");
  RationalVector x_s_bar =
      convex_vector(cp.h_s_bar, d_s_bar, "combine (complement side)");
  for (int orig : cp.cut_edges) {
    const Rational& va = x_s.entries[cp.edge_to_s[orig]];
    const Rational& vb = x_s_bar.entries[cp.edge_to_s_bar[orig]];
    if (va != vb) {
      throw InputError("combine: decompositions disagree on cut edge '" +
                       h.label(orig) + "' (" + rational_to_string(va) +
                       " vs " + rational_to_string(vb) + ")");
    }
  }

  // Every perfect matching of a contraction covers the contraction vertex
  // with exactly one cut image, so terms group by original cut edge.
  std::map<int, std::vector<std::pair<std::size_t, Rational>>> group_s,
      group_s_bar;
  for (std::size_t i = 0; i < d_s.terms.size(); ++i) {
    int e = cut_edge_of(cp, cp.edge_to_s, d_s.terms[i].matching,
                        "combine (shore side)");
    group_s[e].emplace_back(i, d_s.terms[i].weight);
  }
  for (std::size_t j = 0; j < d_s_bar.terms.size(); ++j) {
    int e = cut_edge_of(cp, cp.edge_to_s_bar, d_s_bar.terms[j].matching,
                        "combine (complement side)");
    group_s_bar[e].emplace_back(j, d_s_bar.terms[j].weight);
  }

  // Recursion order of the proof: split off the largest cut-edge marginal
  // first, lowest index breaking ties.
  std::vector<int> order;
  for (const auto& [e, terms] : group_s) order.push_back(e);
  std::stable_sort(order.begin(), order.end(), [&](int e1, int e2) {
    return x_s.entries[cp.edge_to_s[e1]] > x_s.entries[cp.edge_to_s[e2]];
  });

  std::map<Matching, Rational> merged;
  for (int e : order) {
    auto side_s = group_s[e];
    auto side_s_bar = group_s_bar[e];  // non-empty: marginals agree
    std::size_t i = 0, j = 0;
    while (i < side_s.size() && j < side_s_bar.size()) {
      b.charge();
      Rational mu = std::min(side_s[i].second, side_s_bar[j].second);
      Matching glued = glue(cp, d_s.terms[side_s[i].first].matching,
                            d_s_bar.terms[side_s_bar[j].first].matching);
      merged[glued] += mu;
      side_s[i].second -= mu;
      side_s_bar[j].second -= mu;
      if (side_s[i].second == 0) ++i;
      if (side_s_bar[j].second == 0) ++j;
    }
    if (i < side_s.size() || j < side_s_bar.size()) {
      throw TheoremViolation("combine: cut-edge class weights do not match");
    }
  }

  ConvexDecomposition out;
  for (auto& [matching, weight] : merged) out.terms.push_back({matching, weight});

  // The result must reproduce the joined vector exactly.
  SplitPair pair{x_s, x_s_bar};
  RationalVector joined = join(h, s, pair, false, &b);
  if (convex_vector(h, out, "combine (result)") != joined) {
    throw TheoremViolation("combine: result does not reproduce the join");
  }
  return out;
}

IntegralityResult fractional_polytope_integral(const Hypergraph& h,
                                               Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  const int n = h.vertex_count();
  const int m = h.edge_count();
  IntegralityResult result;
  if (m == 0) {
    // No edges: the polytope is empty (or a single empty point), vacuously
    // integral.
    result.integral = true;
    return result;
  }

  lp::Matrix a(n, lp::Row(m, Rational(0)));
  for (int i = 0; i < m; ++i) {
    for (int v : h.edge(i)) a[v][i] = 1;
  }
  std::vector<Rational> ones(n, Rational(1));
  const int r0 = lp::rank(a);
  if (r0 == 0) {
    result.integral = true;  // n == 0 is unreachable here (edges non-empty)
    return result;
  }

  // Every vertex of the polytope is the unique solution of some full-rank
  // column subset of size rank(A); sweep them all in lexicographic order.
  std::vector<int> comb(r0);
  std::iota(comb.begin(), comb.end(), 0);
  std::set<std::vector<Rational>> seen;
  for (;;) {
    b.charge();
    lp::Matrix sub(n, lp::Row(r0));
    for (int row = 0; row < n; ++row) {
      for (int k = 0; k < r0; ++k) sub[row][k] = a[row][comb[k]];
    }
    if (auto sol = lp::solve_unique(sub, ones)) {
      bool nonneg = std::all_of(sol->begin(), sol->end(),
                                [](const Rational& v) { return v >= 0; });
      if (nonneg) {
        std::vector<Rational> full(m, Rational(0));
        for (int k = 0; k < r0; ++k) full[comb[k]] = (*sol)[k];
        if (seen.insert(full).second) {
          bool zero_one = std::all_of(full.begin(), full.end(),
                                      [](const Rational& v) {
                                        return v == 0 || v == 1;
                                      });
          if (!zero_one) {
            result.witness = RationalVector{std::move(full)};
            return result;
          }
        }
      }
    }
    // next lexicographic combination
    int k = r0 - 1;
    while (k >= 0 && comb[k] == m - r0 + k) --k;
    if (k < 0) break;
    ++comb[k];
    for (int t = k + 1; t < r0; ++t) comb[t] = comb[t - 1] + 1;
  }
  result.integral = true;
  return result;
}

RationalVector separating_witness(const Hypergraph& h, const Shore& s,
                                  Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  check_proper_shore(h, s, "separating_witness");
  if (!check_uniformable(h)) {
    throw PreconditionError("separating_witness: not uniformable");
  }
  if (!is_matching_covered(h, &b).covered) {
    throw PreconditionError("separating_witness: not matching covered");
  }

  auto matchings = enumerate_perfect_matchings(h, &b);
  const Cut c = cut(h, s);
  auto meets = [&](const Matching& m) {
    int count = 0;
    for (int i : m.edge_indices) {
      if (std::binary_search(c.edge_indices.begin(), c.edge_indices.end(), i)) {
        ++count;
      }
    }
    return count;
  };

  const Matching* m0 = nullptr;
  bool any_zero = false;
  for (const Matching& m : matchings) {
    int k = meets(m);
    if (k >= 2) {
      m0 = &m;
      break;
    }
    if (k == 0) any_zero = true;
  }
  if (!m0) {
    if (!any_zero) {
      throw PreconditionError("separating_witness: cut is tight");
    }
    // A matching avoiding the cut forces every single-crossing matching's
    // cut edge to have shore weight ≡ 0 mod r, impossible for a cut edge.
    throw TheoremViolation(
        "separating_witness: uniformable host has a cut-avoiding matching "
        "but none meeting the cut twice");
  }

  const int m0_size = static_cast<int>(m0->edge_indices.size());
  const int m0_cut = meets(*m0);
  RationalVector x;
  x.entries.assign(h.edge_count(), Rational(0));
  for (int e : m0->edge_indices) {
    const Matching* m_e = nullptr;
    for (const Matching& m : matchings) {
      if (std::binary_search(m.edge_indices.begin(), m.edge_indices.end(),
                             e) &&
          meets(m) == 1) {
        m_e = &m;
        break;
      }
    }
    if (!m_e) {
      throw PreconditionError(
          "separating_witness: cut is not separating (no single-crossing "
          "matching contains edge '" +
          h.label(e) + "')");
    }
    for (int i : m_e->edge_indices) x.entries[i] += 1;
  }
  for (int i : m0->edge_indices) x.entries[i] -= 1;
  for (Rational& v : x.entries) v /= m0_size - 1;

  if (!in_fractional_polytope(h, x).inside) {
    throw TheoremViolation(
        "separating_witness: vector left the fractional polytope");
  }
  Rational on_cut(0);
  for (int i : c.edge_indices) on_cut += x.entries[i];
  if (on_cut != Rational(m0_size - m0_cut, m0_size - 1) || on_cut >= 1) {
    throw TheoremViolation("separating_witness: cut mass formula failed");
  }
  return x;
}

BalanceResult is_balanced(const Hypergraph& h, Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  const int n = h.vertex_count();
  const int m = h.edge_count();
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < m; ++i) {
    for (int v : h.edge(i)) incident[v].push_back(i);
  }

  std::vector<int> vs, es;
  std::vector<char> v_used(n, 0), e_used(m, 0);
  auto edge_has = [&](int e, int v) {
    return std::binary_search(h.edge(e).begin(), h.edge(e).end(), v);
  };

  int t = 0;
  // Chooses es[i] connecting vs[i] to vs[i+1] (vs[0] when closing). A strong
  // cycle admits no other incidences between its vertices and edges.
  auto search = [&](auto&& self, int i) -> bool {
    b.charge();
    if (i == t - 1) {
      for (int e : incident[vs[t - 1]]) {
        if (e_used[e] || !edge_has(e, vs[0])) continue;
        bool clean = true;
        for (int j = 1; j + 1 < t && clean; ++j) clean = !edge_has(e, vs[j]);
        if (!clean) continue;
        es[t - 1] = e;
        return true;
      }
      return false;
    }
    for (int e : incident[vs[i]]) {
      if (e_used[e]) continue;
      bool clean = true;
      for (int j = 0; j < i && clean; ++j) clean = !edge_has(e, vs[j]);
      if (!clean) continue;
      e_used[e] = 1;
      es[i] = e;
      for (int v : h.edge(e)) {
        if (v <= vs[0] || v_used[v]) continue;  // vs[0] is the cycle minimum
        bool fresh = true;
        for (int j = 0; j < i && fresh; ++j) fresh = !edge_has(es[j], v);
        if (!fresh) continue;
        v_used[v] = 1;
        vs[i + 1] = v;
        if (self(self, i + 1)) return true;
        v_used[v] = 0;
      }
      e_used[e] = 0;
    }
    return false;
  };

  for (t = 3; t <= std::min(n, m); t += 2) {
    vs.assign(t, -1);
    es.assign(t, -1);
    for (int v0 = 0; v0 < n; ++v0) {
      vs[0] = v0;
      v_used[v0] = 1;
      if (search(search, 0)) {
        return BalanceResult{false, vs, es};
      }
      v_used[v0] = 0;
    }
  }
  BalanceResult result;
  result.balanced = true;
  return result;
}

PartitionResult is_r_partite(const Hypergraph& h, long long r,
                             Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  if (r < 1) throw PreconditionError("is_r_partite: r must be positive");
  for (int i = 0; i < h.edge_count(); ++i) {
    if (static_cast<long long>(h.edge(i).size()) != r) {
      throw PreconditionError("is_r_partite: edge '" + h.label(i) +
                              "' has size " + std::to_string(h.edge(i).size()) +
                              ", not " + std::to_string(r));
    }
  }
  const int n = h.vertex_count();
  const int classes = static_cast<int>(r);
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < h.edge_count(); ++i) {
    for (int v : h.edge(i)) incident[v].push_back(i);
  }
  std::vector<int> cls(n, -1);

  // Classes are introduced in first-use order, which canonicalizes the
  // witness and prunes permuted duplicates.
  auto assign = [&](auto&& self, int v, int used) -> bool {
    b.charge();
    if (v == n) return true;
    int limit = std::min(classes - 1, used);
    for (int c = 0; c <= limit; ++c) {
      bool ok = true;
      for (int e : incident[v]) {
        for (int u : h.edge(e)) {
          if (u != v && cls[u] == c) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) continue;
      cls[v] = c;
      if (self(self, v + 1, std::max(used, c + 1))) return true;
      cls[v] = -1;
    }
    return false;
  };

  PartitionResult result;
  if (!assign(assign, 0, 0)) return result;
  result.partite = true;
  result.classes.assign(classes, {});
  for (int v = 0; v < n; ++v) result.classes[cls[v]].push_back(v);
  return result;
}

}  // namespace hgmatch
