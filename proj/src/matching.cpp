#include "hgmatch/matching.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

namespace hgmatch {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Bits> edge_masks(const Hypergraph& h) {
  std::vector<Bits> masks(h.edge_count(), Bits(h.vertex_count()));
  for (int i = 0; i < h.edge_count(); ++i) {
    for (int v : h.edge(i)) masks[i].set(v);
  }
  return masks;
}

std::vector<std::vector<int>> incidence(const Hypergraph& h) {
  std::vector<std::vector<int>> inc(h.vertex_count());
  for (int i = 0; i < h.edge_count(); ++i) {
    for (int v : h.edge(i)) inc[v].push_back(i);
  }
  return inc;
}

struct PerfectEnum {
  const std::vector<Bits>& masks;
  const std::vector<std::vector<int>>& inc;
  int n;
  Budget& budget;
  Bits covered;
  std::vector<int> chosen;
  std::vector<Matching> out;

  void run(int from) {
    budget.charge();
    int v = from;
    while (v < n && covered.test(v)) ++v;
    if (v == n) {
      out.push_back(Matching{chosen});
      return;
    }
    for (int i : inc[v]) {
      if ((masks[i] & covered).any()) continue;
      covered |= masks[i];
      chosen.push_back(i);
      run(v + 1);
      chosen.pop_back();
      covered &= ~masks[i];
    }
  }
};

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const Hypergraph& h,
                                                  Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  auto masks = edge_masks(h);
  auto inc = incidence(h);
  PerfectEnum search{masks, inc, h.vertex_count(), b,
                     Bits(h.vertex_count()), {}, {}};
  search.run(0);
  for (auto& m : search.out) {
    std::sort(m.edge_indices.begin(), m.edge_indices.end());
  }
  std::sort(search.out.begin(), search.out.end());
  return search.out;
}

CoverageResult is_matching_covered(const Hypergraph& h, Budget* budget) {
  CoverageResult result;
  result.connected = is_connected(h);
  if (h.edge_count() == 0) return result;
  std::vector<bool> used(h.edge_count(), false);
  for (const Matching& m : enumerate_perfect_matchings(h, budget)) {
    for (int i : m.edge_indices) used[i] = true;
  }
  for (int i = 0; i < h.edge_count(); ++i) {
    if (!used[i]) {
      result.uncovered_edge = i;
      break;
    }
  }
  result.covered = result.connected && !result.uncovered_edge;
  return result;
}

namespace {

// Maximum matching size: branch on the lowest uncovered vertex, either
// matching it by one of its edges or leaving it exposed.
struct MaxMatching {
  const std::vector<Bits>& masks;
  const std::vector<std::vector<int>>& inc;
  int n;
  Budget& budget;
  Bits covered;
  int best = 0;

  void run(int from, int size) {
    budget.charge();
    best = std::max(best, size);
    int v = from;
    while (v < n && covered.test(v)) ++v;
    if (v == n) return;
    for (int i : inc[v]) {
      if ((masks[i] & covered).any()) continue;
      covered |= masks[i];
      run(v + 1, size + 1);
      covered &= ~masks[i];
    }
    run(v + 1, size);  // leave v exposed
  }
};

// Minimum vertex cover: branch on the lowest uncovered edge's vertices.
struct MinCover {
  const Hypergraph& h;
  Budget& budget;
  std::vector<bool> picked;
  int best;

  bool edge_covered(int i) const {
    for (int v : h.edge(i)) {
      if (picked[v]) return true;
    }
    return false;
  }

  void run(int size) {
    budget.charge();
    if (size >= best) return;
    int open = -1;
    for (int i = 0; i < h.edge_count(); ++i) {
      if (!edge_covered(i)) {
        open = i;
        break;
      }
    }
    if (open == -1) {
      best = size;
      return;
    }
    for (int v : h.edge(open)) {
      picked[v] = true;
      run(size + 1);
      picked[v] = false;
    }
  }
};

// Minimum edge cover: branch on the lowest uncovered vertex; edges may
// overlap. Only defined when no vertex is isolated.
struct MinEdgeCover {
  const std::vector<Bits>& masks;
  const std::vector<std::vector<int>>& inc;
  int n;
  Budget& budget;
  Bits covered;
  int best;

  void run(int from, int size) {
    budget.charge();
    if (size >= best) return;
    int v = from;
    while (v < n && covered.test(v)) ++v;
    if (v == n) {
      best = size;
      return;
    }
    for (int i : inc[v]) {
      Bits saved = covered;
      covered |= masks[i];
      run(v + 1, size + 1);
      covered = saved;
    }
  }
};

}  // namespace

MatchingInvariants matching_invariants(const Hypergraph& h, Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  auto masks = edge_masks(h);
  auto inc = incidence(h);

  MatchingInvariants inv;

  MaxMatching nu{masks, inc, h.vertex_count(), b, Bits(h.vertex_count())};
  nu.run(0, 0);
  inv.max_matching = nu.best;

  MinCover tau{h, b, std::vector<bool>(h.vertex_count(), false),
               h.vertex_count() + 1};
  tau.run(0);
  // A cover of all vertices always works, so the search found some cover
  // unless there are no edges at all.
  inv.min_vertex_cover = (h.edge_count() == 0) ? 0 : tau.best;

  bool isolated = false;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (inc[v].empty()) isolated = true;
  }
  if (!isolated) {
    MinEdgeCover rho{masks, inc, h.vertex_count(), b, Bits(h.vertex_count()),
                     h.vertex_count() + 1};
    rho.run(0, 0);
    inv.min_edge_cover = rho.best;
  }
  return inv;
}

}  // namespace hgmatch
