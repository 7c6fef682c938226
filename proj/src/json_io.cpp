#include "hgmatch/json_io.hpp"

#include <algorithm>

namespace hgmatch {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

std::vector<std::string> string_array(const Json& j, const std::string& path) {
  require(j.is_array(), path + ": expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    require(j[i].is_string(),
            path + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  require(j.is_string(), path + ": expected \"p/q\" or an integer");
  try {
    return rational_from_string(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("json: ") + e.what());
  }
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json j;
  j["vertices"] = h.vertex_names();
  Json edges = Json::array();
  for (int i = 0; i < h.edge_count(); ++i) edges.push_back(h.edge_names(i));
  j["edges"] = std::move(edges);
  if (!h.has_default_labels()) j["labels"] = h.labels();
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  require(j.is_object(), "hypergraph: expected an object");
  for (const auto& [key, value] : j.items()) {
    require(key == "vertices" || key == "edges" || key == "labels",
            "hypergraph: unknown key '" + key + "'");
  }
  require(j.contains("vertices"), "hypergraph: missing 'vertices'");
  require(j.contains("edges"), "hypergraph: missing 'edges'");
  std::vector<std::string> vertices = string_array(j["vertices"], "vertices");
  require(j["edges"].is_array(), "edges: expected an array");
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    edges.push_back(
        string_array(j["edges"][i], "edges[" + std::to_string(i) + "]"));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = string_array(j["labels"], "labels");
  return Hypergraph(std::move(vertices), edges, std::move(labels));
}

Json shore_to_json(const Hypergraph& h, const Shore& s) {
  return Json(shore_names(h, s));
}

Shore shore_from_json(const Hypergraph& h, const Json& j) {
  return shore_from_names(h, string_array(j, "shore"));
}

Json matching_to_json(const Matching& m) { return Json(m.edge_indices); }

Matching matching_from_json(const Hypergraph& h, const Json& j) {
  require(j.is_array(), "matching: expected an array of edge indices");
  std::vector<int> indices;
  for (std::size_t i = 0; i < j.size(); ++i) {
    require(j[i].is_number_integer(),
            "matching[" + std::to_string(i) + "]: expected an edge index");
    int e = j[i].get<int>();
    require(e >= 0 && e < h.edge_count(),
            "matching[" + std::to_string(i) + "]: edge index " +
                std::to_string(e) + " out of range");
    indices.push_back(e);
  }
  std::sort(indices.begin(), indices.end());
  require(std::adjacent_find(indices.begin(), indices.end()) == indices.end(),
          "matching: duplicate edge index");
  return Matching{indices};
}

Json multiplicity_to_json(const Hypergraph& h, const Multiplicity& mult) {
  Json j;
  j["r"] = mult.r;
  Json m = Json::object();
  for (int v = 0; v < h.vertex_count(); ++v) m[h.vertex_name(v)] = mult.m[v];
  j["m"] = std::move(m);
  return j;
}

Multiplicity multiplicity_from_json(const Hypergraph& h, const Json& j) {
  require(j.is_object() && j.contains("r") && j.contains("m"),
          "multiplicity: expected {\"r\": ..., \"m\": {...}}");
  require(j["r"].is_number_integer(), "multiplicity: r must be an integer");
  require(j["m"].is_object(), "multiplicity: m must be an object");
  Multiplicity mult;
  mult.r = j["r"].get<long long>();
  mult.m.assign(h.vertex_count(), 1);
  for (const auto& [name, value] : j["m"].items()) {
    auto v = h.vertex_index(name);
    require(v.has_value(), "multiplicity: unknown vertex '" + name + "'");
    require(value.is_number_integer(),
            "multiplicity: m['" + name + "'] must be an integer");
    mult.m[*v] = value.get<long long>();
  }
  return mult;
}

Json rational_vector_to_json(const RationalVector& x) {
  Json j = Json::object();
  for (std::size_t i = 0; i < x.entries.size(); ++i) {
    j[std::to_string(i)] = rational_to_string(x.entries[i]);
  }
  return j;
}

RationalVector rational_vector_from_json(const Hypergraph& h, const Json& j) {
  require(j.is_object(), "vector: expected {\"edge_index\": \"p/q\", ...}");
  RationalVector x;
  x.entries.assign(h.edge_count(), Rational(0));
  for (const auto& [key, value] : j.items()) {
    int index = -1;
    try {
      std::size_t used = 0;
      index = std::stoi(key, &used);
      require(used == key.size(), "");
    } catch (...) {
      throw InputError("vector: key '" + key + "' is not an edge index");
    }
    require(index >= 0 && index < h.edge_count(),
            "vector: edge index " + key + " out of range");
    x.entries[index] = rational_from_json(value, "vector['" + key + "']");
  }
  return x;
}

Json convex_decomposition_to_json(const ConvexDecomposition& d) {
  Json terms = Json::array();
  for (const auto& term : d.terms) {
    Json t;
    t["matching"] = matching_to_json(term.matching);
    t["weight"] = rational_to_string(term.weight);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

ConvexDecomposition convex_decomposition_from_json(const Hypergraph& h,
                                                   const Json& j) {
  require(j.is_object() && j.contains("terms") && j["terms"].is_array(),
          "decomposition: expected {\"terms\": [...]}");
  ConvexDecomposition d;
  for (std::size_t i = 0; i < j["terms"].size(); ++i) {
    const Json& t = j["terms"][i];
    std::string path = "terms[" + std::to_string(i) + "]";
    require(t.is_object() && t.contains("matching") && t.contains("weight"),
            path + ": expected {\"matching\": [...], \"weight\": ...}");
    d.terms.push_back({matching_from_json(h, t["matching"]),
                       rational_from_json(t["weight"], path + ".weight")});
  }
  return d;
}

Json split_pair_to_json(const SplitPair& pair) {
  Json j;
  j["x_s"] = rational_vector_to_json(pair.x_s);
  j["x_s_bar"] = rational_vector_to_json(pair.x_s_bar);
  return j;
}

SplitPair split_pair_from_json(const ContractionPair& cp, const Json& j) {
  require(j.is_object() && j.contains("x_s") && j.contains("x_s_bar"),
          "pair: expected {\"x_s\": {...}, \"x_s_bar\": {...}}");
  SplitPair pair;
  pair.x_s = rational_vector_from_json(cp.h_s, j["x_s"]);
  pair.x_s_bar = rational_vector_from_json(cp.h_s_bar, j["x_s_bar"]);
  return pair;
}

namespace {

Json decomp_node_to_json(const DecompNode& node) {
  Json j;
  j["hypergraph"] = hypergraph_to_json(node.hg);
  if (node.shore) {
    j["shore"] = shore_to_json(node.hg, *node.shore);
    j["children"] =
        Json::array({decomp_node_to_json(*node.child_keep),
                     decomp_node_to_json(*node.child_drop)});
  } else {
    j["shore"] = nullptr;
    j["children"] = Json::array();
  }
  return j;
}

}  // namespace

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  Json bricks = Json::array();
  for (const Hypergraph& brick : d.bricks) {
    bricks.push_back(hypergraph_to_json(brick));
  }
  j["bricks"] = std::move(bricks);
  j["tree"] = decomp_node_to_json(*d.root);
  Json family = Json::array();
  for (const Shore& s : d.family) {
    family.push_back(shore_to_json(d.root->hg, s));
  }
  j["family"] = std::move(family);
  return j;
}

}  // namespace hgmatch
