// Python extension exposing the main tight-cut decomposition operations.
// Scalars and name lists cross the boundary as native Python types;
// deeply nested structures (decompositions, convex combinations) cross as
// canonical JSON strings that the `hgmatch` package parses on arrival.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hgmatch/cutfinder.hpp"
#include "hgmatch/decomp.hpp"
#include "hgmatch/errors.hpp"
#include "hgmatch/json_io.hpp"
#include "hgmatch/matching.hpp"
#include "hgmatch/polytope.hpp"
#include "hgmatch/tightcut.hpp"
#include "hgmatch/uniform.hpp"

namespace py = pybind11;
using namespace hgmatch;

namespace {

std::vector<std::vector<std::string>> shores_names(
    const Hypergraph& h, const std::vector<Shore>& shores) {
  std::vector<std::vector<std::string>> out;
  out.reserve(shores.size());
  for (const Shore& s : shores) out.push_back(shore_names(h, s));
  return out;
}

RationalVector vector_from_dict(const Hypergraph& h, const py::dict& entries) {
  Json j = Json::object();
  for (auto item : entries) {
    j[py::str(item.first).cast<std::string>()] =
        py::str(item.second).cast<std::string>();
  }
  return rational_vector_from_json(h, j);
}

py::dict vector_to_dict(const RationalVector& x) {
  py::dict out;
  for (std::size_t e = 0; e < x.entries.size(); ++e) {
    out[py::int_(e)] = x.entries[e].str();
  }
  return out;
}

Strategy strategy_from_args(const std::string& kind, std::uint64_t seed,
                            const std::vector<std::vector<std::string>>& script) {
  if (kind == "first") return Strategy::first();
  if (kind == "random") return Strategy::seeded_random(seed);
  if (kind == "scripted") return Strategy::scripted(script);
  throw InputError("unknown strategy: " + kind +
                   " (expected first, random, or scripted)");
}

}  // namespace

PYBIND11_MODULE(_hgmatch, m) {
  m.doc() =
      "Exact tight cut decompositions of hypergraphs with perfect matchings";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<std::vector<std::string>,
                    std::vector<std::vector<std::string>>,
                    std::vector<std::string>>(),
           py::arg("vertices"), py::arg("edges"),
           py::arg("labels") = std::vector<std::string>{})
      .def_static(
          "from_json",
          [](const std::string& text) {
            return hypergraph_from_json(parse_json(text));
          },
          py::arg("text"))
      .def("to_json",
           [](const Hypergraph& h) { return serialize(hypergraph_to_json(h)); })
      .def_property_readonly(
          "vertices",
          [](const Hypergraph& h) { return h.vertex_names(); })
      .def_property_readonly(
          "edges",
          [](const Hypergraph& h) {
            std::vector<std::vector<std::string>> out;
            for (int e = 0; e < h.edge_count(); ++e) {
              std::vector<std::string> edge;
              for (int v : h.edge(e)) edge.push_back(h.vertex_name(v));
              out.push_back(std::move(edge));
            }
            return out;
          })
      .def_property_readonly(
          "labels", [](const Hypergraph& h) { return h.labels(); })
      .def("vertex_count", &Hypergraph::vertex_count)
      .def("edge_count", &Hypergraph::edge_count)
      .def("__repr__", [](const Hypergraph& h) {
        return "Hypergraph(" + std::to_string(h.vertex_count()) +
               " vertices, " + std::to_string(h.edge_count()) + " edges)";
      });

  m.def(
      "perfect_matchings",
      [](const Hypergraph& h) {
        std::vector<std::vector<int>> out;
        for (const Matching& pm : enumerate_perfect_matchings(h)) {
          out.push_back(pm.edge_indices);
        }
        return out;
      },
      py::arg("h"), "All perfect matchings as sorted edge index lists.");

  m.def(
      "is_matching_covered",
      [](const Hypergraph& h) { return is_matching_covered(h).covered; },
      py::arg("h"));

  m.def(
      "check_uniformable",
      [](const Hypergraph& h) -> py::object {
        auto mult = check_uniformable(h);
        if (!mult) return py::none();
        py::dict weights;
        for (int v = 0; v < h.vertex_count(); ++v) {
          weights[py::str(h.vertex_name(v))] = mult->m[v];
        }
        return py::dict(py::arg("r") = mult->r, py::arg("m") = weights);
      },
      py::arg("h"),
      "Uniformizing multiplicity {'r': ..., 'm': {...}} or None.");

  m.def(
      "multiply",
      [](const Hypergraph& h, const std::map<std::string, long long>& weights) {
        return multiply(h, weights);
      },
      py::arg("h"), py::arg("m"));

  m.def(
      "tight_cuts",
      [](const Hypergraph& h) {
        TightCutList cuts = list_tight_cuts(h);
        return py::dict(
            py::arg("nontrivial") = shores_names(h, cuts.nontrivial),
            py::arg("trivial") = shores_names(h, cuts.trivial));
      },
      py::arg("h"));

  m.def(
      "separating_nontight",
      [](const Hypergraph& h) {
        return shores_names(h, list_separating_nontight(h));
      },
      py::arg("h"));

  m.def(
      "is_tight",
      [](const Hypergraph& h, const std::vector<std::string>& shore) {
        return is_tight(h, shore_from_names(h, shore)).tight;
      },
      py::arg("h"), py::arg("shore"));

  m.def(
      "contract",
      [](const Hypergraph& h, const std::vector<std::string>& shore,
         bool force) {
        ContractionPair cp = contract(h, shore_from_names(h, shore), force);
        return py::make_tuple(cp.h_s, cp.h_s_bar);
      },
      py::arg("h"), py::arg("shore"), py::arg("force") = false,
      "The two contractions (H_S, H_S-bar) at the cut of the given shore.");

  m.def(
      "decompose_json",
      [](const Hypergraph& h, const std::string& strategy, std::uint64_t seed,
         const std::vector<std::vector<std::string>>& script) {
        return serialize(decomposition_to_json(
            decompose(h, strategy_from_args(strategy, seed, script))));
      },
      py::arg("h"), py::arg("strategy") = "first", py::arg("seed") = 0,
      py::arg("script") = std::vector<std::vector<std::string>>{});

  m.def(
      "all_decompositions_json",
      [](const Hypergraph& h) {
        Json out = Json::array();
        for (const Decomposition& d : enumerate_all_decompositions(h)) {
          out.push_back(decomposition_to_json(d));
        }
        return serialize(out);
      },
      py::arg("h"));

  m.def(
      "decompositions_pairwise_equivalent",
      [](const Hypergraph& h) {
        std::vector<Decomposition> all = enumerate_all_decompositions(h);
        for (std::size_t i = 0; i < all.size(); ++i) {
          for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (!decompositions_equivalent(all[i], all[j]).equivalent) {
              return false;
            }
          }
        }
        return true;
      },
      py::arg("h"));

  m.def(
      "is_balanced",
      [](const Hypergraph& h) -> py::object {
        BalanceResult r = is_balanced(h);
        if (r.balanced) return py::none();
        std::vector<std::string> cycle;
        for (int v : r.cycle_vertices) cycle.push_back(h.vertex_name(v));
        return py::cast(cycle);
      },
      py::arg("h"),
      "None when balanced, else the vertices of a strong odd cycle.");

  m.def(
      "is_r_partite",
      [](const Hypergraph& h, long long r) -> py::object {
        PartitionResult res = is_r_partite(h, r);
        if (!res.partite) return py::none();
        std::vector<std::vector<std::string>> classes;
        for (const auto& cls : res.classes) {
          std::vector<std::string> names;
          for (int v : cls) names.push_back(h.vertex_name(v));
          classes.push_back(std::move(names));
        }
        return py::cast(classes);
      },
      py::arg("h"), py::arg("r"),
      "The r vertex classes when r-partite, else None.");

  m.def(
      "polytope_integral",
      [](const Hypergraph& h) { return fractional_polytope_integral(h).integral; },
      py::arg("h"));

  m.def(
      "in_matching_polytope",
      [](const Hypergraph& h, const py::dict& entries) {
        return in_matching_polytope(h, vector_from_dict(h, entries)).inside;
      },
      py::arg("h"), py::arg("x"),
      "Exact membership of {edge index: 'p/q'} in the matching polytope.");

  m.def(
      "separating_witness",
      [](const Hypergraph& h, const std::vector<std::string>& shore) {
        return vector_to_dict(separating_witness(h, shore_from_names(h, shore)));
      },
      py::arg("h"), py::arg("shore"),
      "Fractional point crossing the given separating cut less than once.");

  m.def(
      "find_tight_cut",
      [](const Hypergraph& h) -> py::object {
        FinderResult r = find_nontrivial_tight_cut(h);
        if (!r.found) return py::none();
        return py::cast(shore_names(h, r.shore));
      },
      py::arg("h"),
      "A nontrivial tight shore of a balanced uniform host, or None.");
}
