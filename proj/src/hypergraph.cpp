#include "hgmatch/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hgmatch {

Shore::Shore(std::vector<int> verts) : verts_(std::move(verts)) {
  std::sort(verts_.begin(), verts_.end());
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end()) {
    throw InputError("duplicate vertex in shore");
  }
}

bool Shore::contains(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i + 1);
  return labels;
}

void validate(const std::vector<std::string>& vertices,
              const std::vector<std::vector<int>>& edges,
              const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) {
      throw InputError("vertices[" + std::to_string(i) + "]: empty identifier");
    }
    if (!seen.insert(vertices[i]).second) {
      throw InputError("vertices[" + std::to_string(i) + "]: duplicate '" +
                       vertices[i] + "'");
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].empty()) {
      throw InputError("edges[" + std::to_string(i) + "]: empty edge");
    }
    for (int v : edges[i]) {
      if (v < 0 || v >= static_cast<int>(vertices.size())) {
        throw InputError("edges[" + std::to_string(i) +
                         "]: vertex index out of range");
      }
    }
    for (std::size_t k = 1; k < edges[i].size(); ++k) {
      if (edges[i][k] == edges[i][k - 1]) {
        throw InputError("edges[" + std::to_string(i) + "]: duplicate vertex '" +
                         vertices[edges[i][k]] + "'");
      }
    }
  }
  if (labels.size() != edges.size()) {
    throw InputError("labels: expected " + std::to_string(edges.size()) +
                     " entries, got " + std::to_string(labels.size()));
  }
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> vertices,
                       const std::vector<std::vector<std::string>>& edges,
                       std::vector<std::string> labels) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index.emplace(vertices[i], static_cast<int>(i));
  }
  std::vector<std::vector<int>> edge_indices;
  edge_indices.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<int> e;
    e.reserve(edges[i].size());
    for (const std::string& name : edges[i]) {
      auto it = index.find(name);
      if (it == index.end()) {
        throw InputError("edges[" + std::to_string(i) + "]: unknown vertex '" +
                         name + "'");
      }
      e.push_back(it->second);
    }
    std::sort(e.begin(), e.end());
    edge_indices.push_back(std::move(e));
  }
  if (labels.empty()) labels = default_labels(edges.size());
  validate(vertices, edge_indices, labels);
  vertices_ = std::move(vertices);
  edges_ = std::move(edge_indices);
  labels_ = std::move(labels);
}

Hypergraph Hypergraph::from_indices(std::vector<std::string> vertices,
                                    std::vector<std::vector<int>> edges,
                                    std::vector<std::string> labels) {
  for (auto& e : edges) std::sort(e.begin(), e.end());
  if (labels.empty()) labels = default_labels(edges.size());
  validate(vertices, edges, labels);
  Hypergraph h;
  h.vertices_ = std::move(vertices);
  h.edges_ = std::move(edges);
  h.labels_ = std::move(labels);
  return h;
}

std::optional<int> Hypergraph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::vector<std::string> Hypergraph::edge_names(int i) const {
  std::vector<std::string> names;
  names.reserve(edges_.at(i).size());
  for (int v : edges_.at(i)) names.push_back(vertices_[v]);
  return names;
}

bool Hypergraph::has_default_labels() const {
  return labels_ == default_labels(edges_.size());
}

Shore shore_from_names(const Hypergraph& h,
                       const std::vector<std::string>& names) {
  std::vector<int> verts;
  verts.reserve(names.size());
  for (const std::string& name : names) {
    auto idx = h.vertex_index(name);
    if (!idx) throw InputError("shore: unknown vertex '" + name + "'");
    verts.push_back(*idx);
  }
  return Shore(std::move(verts));
}

std::vector<std::string> shore_names(const Hypergraph& h, const Shore& s) {
  std::vector<std::string> names;
  names.reserve(s.verts().size());
  for (int v : s.verts()) names.push_back(h.vertex_name(v));
  return names;
}

Shore shore_complement(const Hypergraph& h, const Shore& s) {
  std::vector<int> rest;
  rest.reserve(h.vertex_count() - s.size());
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (!s.contains(v)) rest.push_back(v);
  }
  return Shore(std::move(rest));
}

bool shore_less(const Hypergraph& h, const Shore& a, const Shore& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::vector<std::string> na = shore_names(h, a), nb = shore_names(h, b);
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  return na < nb;
}

Shore canonical_shore(const Hypergraph& h, const Shore& s) {
  Shore comp = shore_complement(h, s);
  return shore_less(h, comp, s) ? comp : s;
}

namespace {

void check_within(const Hypergraph& h, const Shore& s) {
  if (!s.verts().empty() &&
      (s.verts().front() < 0 || s.verts().back() >= h.vertex_count())) {
    throw InputError("shore: vertex index out of range");
  }
}

}  // namespace

Hypergraph induced_subhypergraph(const Hypergraph& h, const Shore& s) {
  check_within(h, s);
  std::vector<std::string> vertices = shore_names(h, s);
  std::map<int, int> remap;
  for (std::size_t i = 0; i < s.verts().size(); ++i) {
    remap[s.verts()[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    if (std::all_of(e.begin(), e.end(),
                    [&](int v) { return s.contains(v); })) {
      std::vector<int> mapped;
      mapped.reserve(e.size());
      for (int v : e) mapped.push_back(remap[v]);
      edges.push_back(std::move(mapped));
      labels.push_back(h.label(i));
    }
  }
  return Hypergraph::from_indices(std::move(vertices), std::move(edges),
                                  std::move(labels));
}

Hypergraph restricted_subhypergraph(const Hypergraph& h, const Shore& s) {
  check_within(h, s);
  std::vector<std::string> vertices = shore_names(h, s);
  std::map<int, int> remap;
  for (std::size_t i = 0; i < s.verts().size(); ++i) {
    remap[s.verts()[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < h.edge_count(); ++i) {
    std::vector<int> mapped;
    for (int v : h.edge(i)) {
      if (s.contains(v)) mapped.push_back(remap[v]);
    }
    if (!mapped.empty()) {
      edges.push_back(std::move(mapped));
      labels.push_back(h.label(i));
    }
  }
  return Hypergraph::from_indices(std::move(vertices), std::move(edges),
                                  std::move(labels));
}

Hypergraph partial_hypergraph(const Hypergraph& h,
                              const std::vector<int>& edge_indices) {
  std::set<int> covered;
  for (int i : edge_indices) {
    if (i < 0 || i >= h.edge_count()) {
      throw InputError("partial_hypergraph: edge index " + std::to_string(i) +
                       " out of range");
    }
    covered.insert(h.edge(i).begin(), h.edge(i).end());
  }
  std::vector<std::string> vertices;
  std::map<int, int> remap;
  for (int v : covered) {
    remap[v] = static_cast<int>(vertices.size());
    vertices.push_back(h.vertex_name(v));
  }
  std::vector<std::vector<int>> edges;
  std::vector<std::string> labels;
  for (int i : edge_indices) {
    std::vector<int> mapped;
    mapped.reserve(h.edge(i).size());
    for (int v : h.edge(i)) mapped.push_back(remap[v]);
    edges.push_back(std::move(mapped));
    labels.push_back(h.label(i));
  }
  return Hypergraph::from_indices(std::move(vertices), std::move(edges),
                                  std::move(labels));
}

Cut cut(const Hypergraph& h, const Shore& s) {
  check_within(h, s);
  Cut c;
  c.shore = s;
  for (int i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    bool in = false, out = false;
    for (int v : e) (s.contains(v) ? in : out) = true;
    if (in && out) c.edge_indices.push_back(i);
  }
  return c;
}

int degree(const Hypergraph& h, const std::string& vertex) {
  auto idx = h.vertex_index(vertex);
  if (!idx) throw InputError("degree: unknown vertex '" + vertex + "'");
  int d = 0;
  for (int i = 0; i < h.edge_count(); ++i) {
    if (std::binary_search(h.edge(i).begin(), h.edge(i).end(), *idx)) ++d;
  }
  return d;
}

bool is_connected(const Hypergraph& h) {
  int n = h.vertex_count();
  if (n <= 1) return true;
  std::vector<int> component(n, -1);
  std::vector<int> stack{0};
  component[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int i = 0; i < h.edge_count(); ++i) {
      const auto& e = h.edge(i);
      if (!std::binary_search(e.begin(), e.end(), v)) continue;
      for (int u : e) {
        if (component[u] == -1) {
          component[u] = 0;
          stack.push_back(u);
        }
      }
    }
  }
  return std::all_of(component.begin(), component.end(),
                     [](int c) { return c == 0; });
}

Hypergraph collapse_parallel(const Hypergraph& h) {
  std::set<std::vector<int>> seen;
  std::vector<int> keep;
  for (int i = 0; i < h.edge_count(); ++i) {
    if (seen.insert(h.edge(i)).second) keep.push_back(i);
  }
  std::vector<std::vector<int>> edges;
  std::vector<std::string> labels;
  for (int i : keep) {
    edges.push_back(h.edge(i));
    labels.push_back(h.label(i));
  }
  return Hypergraph::from_indices(h.vertex_names(), std::move(edges),
                                  std::move(labels));
}

}  // namespace hgmatch
