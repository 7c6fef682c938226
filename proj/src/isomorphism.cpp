#include <algorithm>
#include <set>
#include <vector>

#include "hgmatch/hypergraph.hpp"

namespace hgmatch {

namespace {

std::vector<int> degrees(const Hypergraph& h) {
  std::vector<int> d(h.vertex_count(), 0);
  for (int i = 0; i < h.edge_count(); ++i) {
    for (int v : h.edge(i)) ++d[v];
  }
  return d;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct Search {
  const Hypergraph& a;
  const Hypergraph& b;
  const std::vector<int>& deg_a;
  const std::vector<int>& deg_b;
  std::set<std::vector<int>> b_edges;
  std::vector<int> order;       // a-vertices in assignment order
  std::vector<int> map_a_to_b;  // -1 while unassigned
  std::vector<bool> used_b;
  Budget& budget;

  bool partial_ok(int just_assigned) {
    // Every a-edge that became fully mapped must land on a b-edge.
    for (int i = 0; i < a.edge_count(); ++i) {
      const auto& e = a.edge(i);
      if (!std::binary_search(e.begin(), e.end(), just_assigned)) continue;
      std::vector<int> image;
      image.reserve(e.size());
      bool complete = true;
      for (int v : e) {
        if (map_a_to_b[v] == -1) {
          complete = false;
          break;
        }
        image.push_back(map_a_to_b[v]);
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (!b_edges.count(image)) return false;
    }
    return true;
  }

  bool extend(std::size_t pos) {
    budget.charge();
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < b.vertex_count(); ++w) {
      if (used_b[w] || deg_a[v] != deg_b[w]) continue;
      map_a_to_b[v] = w;
      used_b[w] = true;
      if (partial_ok(v) && extend(pos + 1)) return true;
      map_a_to_b[v] = -1;
      used_b[w] = false;
    }
    return false;
  }
};

}  // namespace

IsomorphismResult isomorphic_up_to_parallel(const Hypergraph& h1,
                                            const Hypergraph& h2,
                                            Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;

  Hypergraph a = collapse_parallel(h1);
  Hypergraph c = collapse_parallel(h2);
  if (a.vertex_count() != c.vertex_count() ||
      a.edge_count() != c.edge_count()) {
    return {};
  }
  std::vector<int> deg_a = degrees(a), deg_c = degrees(c);
  if (sorted(deg_a) != sorted(deg_c)) return {};
  std::vector<int> sizes_a, sizes_c;
  for (int i = 0; i < a.edge_count(); ++i) {
    sizes_a.push_back(static_cast<int>(a.edge(i).size()));
    sizes_c.push_back(static_cast<int>(c.edge(i).size()));
  }
  if (sorted(sizes_a) != sorted(sizes_c)) return {};

  Search search{a, c, deg_a, deg_c, {}, {}, {}, {}, b};
  for (int i = 0; i < c.edge_count(); ++i) search.b_edges.insert(c.edge(i));
  search.order.resize(a.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v) search.order[v] = v;
  // Assign high-degree vertices first; their edges constrain the search most.
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int x, int y) { return deg_a[x] > deg_a[y]; });
  search.map_a_to_b.assign(a.vertex_count(), -1);
  search.used_b.assign(c.vertex_count(), false);

  if (!search.extend(0)) return {};
  IsomorphismResult result;
  result.isomorphic = true;
  result.witness = search.map_a_to_b;
  return result;
}

}  // namespace hgmatch
