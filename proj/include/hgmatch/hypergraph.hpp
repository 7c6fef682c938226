#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgmatch/budget.hpp"
#include "hgmatch/errors.hpp"

namespace hgmatch {

// Vertex subset of a fixed host hypergraph, stored as sorted vertex indices.
class Shore {
 public:
  Shore() = default;
  explicit Shore(std::vector<int> verts);

  const std::vector<int>& verts() const { return verts_; }
  int size() const { return static_cast<int>(verts_.size()); }
  bool empty() const { return verts_.empty(); }
  bool contains(int v) const;

  friend bool operator==(const Shore&, const Shore&) = default;

 private:
  std::vector<int> verts_;  // sorted, duplicate-free
};

struct Cut {
  Shore shore;
  std::vector<int> edge_indices;  // sorted indices of edges meeting both sides
};

// Finite hypergraph. Vertices are opaque string identifiers kept in input
// order; edges are non-empty vertex sets with positional identity, so
// parallel edges stay distinguishable. Labels record edge provenance.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Edges given by vertex name. Labels default to "e1", "e2", ...
  Hypergraph(std::vector<std::string> vertices,
             const std::vector<std::vector<std::string>>& edges,
             std::vector<std::string> labels = {});

  // Edges given by vertex index into `vertices`.
  static Hypergraph from_indices(std::vector<std::string> vertices,
                                 std::vector<std::vector<int>> edges,
                                 std::vector<std::string> labels = {});

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::string& vertex_name(int v) const { return vertices_.at(v); }
  std::optional<int> vertex_index(const std::string& name) const;

  // Sorted vertex indices of edge i.
  const std::vector<int>& edge(int i) const { return edges_.at(i); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  std::vector<std::string> edge_names(int i) const;

  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_default_labels() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::string> labels_;
};

// --- Shore helpers -------------------------------------------------------

// Builds a shore from vertex names; rejects unknown names and duplicates.
Shore shore_from_names(const Hypergraph& h,
                       const std::vector<std::string>& names);

std::vector<std::string> shore_names(const Hypergraph& h, const Shore& s);

Shore shore_complement(const Hypergraph& h, const Shore& s);

// Orders shores by (size, vertex names lexicographically); total order used
// everywhere a "smallest shore" is called for.
bool shore_less(const Hypergraph& h, const Shore& a, const Shore& b);

// Of S and its complement, the one that comes first under shore_less.
Shore canonical_shore(const Hypergraph& h, const Shore& s);

// --- Subhypergraph operations --------------------------------------------

// Vertex set S, edges exactly those contained in S.
Hypergraph induced_subhypergraph(const Hypergraph& h, const Shore& s);

// Vertex set S, an edge e∩S for every edge meeting S.
Hypergraph restricted_subhypergraph(const Hypergraph& h, const Shore& s);

// Edge multiset F, vertex set the union of F.
Hypergraph partial_hypergraph(const Hypergraph& h,
                              const std::vector<int>& edge_indices);

// Edges meeting both S and its complement.
Cut cut(const Hypergraph& h, const Shore& s);

int degree(const Hypergraph& h, const std::string& vertex);

bool is_connected(const Hypergraph& h);

// One representative per distinct vertex set; first occurrence kept.
Hypergraph collapse_parallel(const Hypergraph& h);

// Isomorphism of the parallel-collapsed hypergraphs. The witness maps
// vertex i of h1 to witness[i] of h2 and carries edges onto edges.
struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<int> witness;
};
IsomorphismResult isomorphic_up_to_parallel(const Hypergraph& h1,
                                            const Hypergraph& h2,
                                            Budget* budget = nullptr);

}  // namespace hgmatch
