#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "hgmatch/cutfinder.hpp"
#include "hgmatch/decomp.hpp"
#include "hgmatch/hypergraph.hpp"
#include "hgmatch/matching.hpp"
#include "hgmatch/polytope.hpp"
#include "hgmatch/tightcut.hpp"
#include "hgmatch/uniform.hpp"

namespace hgmatch {

// Insertion-ordered documents keep serialization byte-stable.
using Json = nlohmann::ordered_json;

// Canonical text form: two-space indent plus trailing newline. Fixtures are
// stored in exactly this form, so parse ∘ serialize is the identity on them.
std::string serialize(const Json& j);

// Wraps JSON syntax errors into InputError with the parser's location info.
Json parse_json(const std::string& text);

// {"vertices": [...], "edges": [[...], ...], "labels": [...]?}; labels are
// omitted while they match the "e1", "e2", ... defaults.
Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

// Shores print as vertex-name arrays in index order.
Json shore_to_json(const Hypergraph& h, const Shore& s);
Shore shore_from_json(const Hypergraph& h, const Json& j);

// Matchings print as arrays of edge indices.
Json matching_to_json(const Matching& m);
Matching matching_from_json(const Hypergraph& h, const Json& j);

// {"r": ..., "m": {"vertex": multiplicity, ...}} in vertex order.
Json multiplicity_to_json(const Hypergraph& h, const Multiplicity& mult);
Multiplicity multiplicity_from_json(const Hypergraph& h, const Json& j);

// {"edge_index": "p/q", ...} with every index present, ascending.
Json rational_vector_to_json(const RationalVector& x);
RationalVector rational_vector_from_json(const Hypergraph& h, const Json& j);

// {"terms": [{"matching": [...], "weight": "p/q"}, ...]}
Json convex_decomposition_to_json(const ConvexDecomposition& d);
ConvexDecomposition convex_decomposition_from_json(const Hypergraph& h,
                                                   const Json& j);

// {"x_s": {...}, "x_s_bar": {...}} over the two contractions' edge sets.
Json split_pair_to_json(const SplitPair& pair);
SplitPair split_pair_from_json(const ContractionPair& cp, const Json& j);

// {"bricks": [...], "tree": {...}, "family": [[names], ...]}. Tree nodes
// carry their node-local hypergraph, the contracted node-local shore (null
// at leaves) and children [keep, drop].
Json decomposition_to_json(const Decomposition& d);

}  // namespace hgmatch
