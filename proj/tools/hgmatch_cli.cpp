// hgmatch: command-line front end over the exact tight-cut decomposition
// library. Reads a hypergraph JSON document from a file or stdin, runs one
// subcommand, and writes a report JSON document to stdout:
//
//   {"command": ..., "input_digest": ..., "result": ..., "certificates": ...}
//
// Every boolean answer ships a certificate or witness. Output is
// byte-identical for identical (input, seed, budget) triples; timing goes
// to stderr only. Exit codes: 0 = computed (property true for predicate
// subcommands), 1 = property false (with witness), 2 = malformed input or
// precondition failure, 3 = budget exceeded, 4 = internal invariant
// violation (always a bug, never a property of the input).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgmatch/cutfinder.hpp"
#include "hgmatch/decomp.hpp"
#include "hgmatch/errors.hpp"
#include "hgmatch/json_io.hpp"
#include "hgmatch/lp.hpp"
#include "hgmatch/matching.hpp"
#include "hgmatch/polytope.hpp"
#include "hgmatch/tightcut.hpp"
#include "hgmatch/uniform.hpp"

namespace {

using namespace hgmatch;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

std::string fnv1a_digest(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw InputError("cannot open input file: " + path);
  return read_stream(in);
}

// Flag values that hold JSON documents accept either inline JSON (first
// non-space character '{' or '[') or a path to a file holding it.
std::string read_json_flag(const std::string& value, const std::string& flag) {
  std::size_t first = value.find_first_not_of(" \t\r\n");
  if (first != std::string::npos &&
      (value[first] == '{' || value[first] == '[')) {
    return value;
  }
  std::ifstream in(value, std::ios::binary);
  if (!in.good()) {
    throw InputError("cannot open file for " + flag + ": " + value);
  }
  return read_stream(in);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Shore parse_shore(const Hypergraph& h, const std::string& flag) {
  if (flag.empty()) throw InputError("--shore is required for this subcommand");
  return shore_from_names(h, split_list(flag, ','));
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(q.str());
  return out;
}

// Everything one subcommand handler needs.
struct Invocation {
  Hypergraph h;
  Budget* budget = nullptr;
  // Raw flag values; empty when not given.
  std::string shore, vector_doc, pair_doc, script, strategy;
  std::uint64_t seed = 0;
  long long r = 0;
  bool force = false;
  // Outputs.
  Json result;
  Json certificates = Json::object();
};

RationalVector parse_vector_flag(const Invocation& inv) {
  if (inv.vector_doc.empty()) {
    throw InputError("--vector is required for this subcommand");
  }
  return rational_vector_from_json(
      inv.h, parse_json(read_json_flag(inv.vector_doc, "--vector")));
}

Json contraction_to_json(const Hypergraph& h, const ContractionPair& cp) {
  Json j = Json::object();
  j["h_s"] = hypergraph_to_json(cp.h_s);
  j["h_s_bar"] = hypergraph_to_json(cp.h_s_bar);
  j["s_vertex"] = cp.h_s.vertex_name(cp.s_vertex);
  j["s_bar_vertex"] = cp.h_s_bar.vertex_name(cp.s_bar_vertex);
  j["cut_edges"] = cp.cut_edges;
  j["cut_edge_labels"] = Json::array();
  for (int e : cp.cut_edges) j["cut_edge_labels"].push_back(h.label(e));
  j["edge_to_s"] = cp.edge_to_s;
  j["edge_to_s_bar"] = cp.edge_to_s_bar;
  return j;
}

// --- subcommand handlers ---------------------------------------------------

int run_info(Invocation& inv) {
  const Hypergraph& h = inv.h;
  Json r = Json::object();
  r["vertices"] = h.vertex_count();
  r["edges"] = h.edge_count();
  r["connected"] = is_connected(h);
  std::size_t min_size = 0, max_size = 0;
  for (int e = 0; e < h.edge_count(); ++e) {
    std::size_t s = h.edge(e).size();
    if (e == 0) min_size = max_size = s;
    min_size = std::min(min_size, s);
    max_size = std::max(max_size, s);
  }
  r["min_edge_size"] = min_size;
  r["max_edge_size"] = max_size;
  if (h.edge_count() > 0 && min_size == max_size) {
    r["uniform_edge_size"] = max_size;
  } else {
    r["uniform_edge_size"] = nullptr;
  }
  r["parallel_free_edges"] = collapse_parallel(h).edge_count();
  inv.result = std::move(r);
  return kExitOk;
}

int run_matchings(Invocation& inv) {
  auto pms = enumerate_perfect_matchings(inv.h, inv.budget);
  Json list = Json::array();
  for (const Matching& m : pms) list.push_back(matching_to_json(m));
  inv.result = Json{{"count", pms.size()}, {"matchings", std::move(list)}};
  return kExitOk;
}

int run_covered(Invocation& inv) {
  CoverageResult cov = is_matching_covered(inv.h, inv.budget);
  inv.result = Json{{"covered", cov.covered}, {"connected", cov.connected}};
  if (!cov.covered) {
    Json cert = Json::object();
    if (cov.uncovered_edge) {
      cert["uncovered_edge"] = *cov.uncovered_edge;
      cert["uncovered_edge_label"] = inv.h.label(*cov.uncovered_edge);
    } else {
      cert["reason"] = cov.connected ? "no edges" : "not connected";
    }
    inv.certificates = std::move(cert);
    return kExitFalse;
  }
  CoveringFamily fam = covering_matchings(inv.h, inv.budget);
  Json per_edge = Json::array();
  for (const Matching& m : fam.per_edge) per_edge.push_back(matching_to_json(m));
  inv.certificates = Json{{"covering_matchings", std::move(per_edge)}};
  return kExitOk;
}

int run_uniformable(Invocation& inv) {
  auto mult = check_uniformable(inv.h);
  inv.result = Json{{"uniformable", mult.has_value()}};
  if (mult) {
    inv.certificates = Json{{"multiplicity", multiplicity_to_json(inv.h, *mult)}};
    return kExitOk;
  }
  // Farkas witness for infeasibility of the multiplicity system. With
  // m(v) = 1 + p(v), r = 2 + q and x = (p, q) >= 0 the system reads one
  // row per edge e: sum_{v in e} p(v) - q = 2 - |e|. A certificate y has
  // yT A <= 0 componentwise and yT b > 0.
  const int n = inv.h.vertex_count();
  lp::Matrix a(inv.h.edge_count(), lp::Row(n + 1, Rational(0)));
  std::vector<Rational> b(inv.h.edge_count());
  for (int e = 0; e < inv.h.edge_count(); ++e) {
    for (int v : inv.h.edge(e)) a[e][v] = Rational(1);
    a[e][n] = Rational(-1);
    b[e] = Rational(2) - Rational(inv.h.edge(e).size());
  }
  lp::FeasibilityResult lp = lp::feasible_point(a, b);
  Json cert = Json::object();
  cert["encoding"] =
      "rows: one per edge over x=(p_1..p_n,q)>=0 with m(v)=1+p(v), r=2+q; "
      "sum_{v in e} p(v) - q = 2-|e|; farkas y satisfies yTA<=0, yTb>0";
  cert["farkas"] = rationals_to_json(lp.farkas);
  inv.certificates = std::move(cert);
  return kExitFalse;
}

int run_tight_cuts(Invocation& inv) {
  TightCutList cuts = list_tight_cuts(inv.h, inv.budget);
  std::vector<Shore> separating = list_separating_nontight(inv.h, inv.budget);
  auto pms = enumerate_perfect_matchings(inv.h, inv.budget);

  auto crossings_of = [&](const Shore& s) {
    const Cut c = cut(inv.h, s);
    Json arr = Json::array();
    for (const Matching& m : pms) {
      int count = 0;
      for (int e : m.edge_indices) {
        if (std::binary_search(c.edge_indices.begin(), c.edge_indices.end(),
                               e)) {
          ++count;
        }
      }
      arr.push_back(count);
    }
    return arr;
  };
  auto shores_json = [&](const std::vector<Shore>& list) {
    Json arr = Json::array();
    for (const Shore& s : list) arr.push_back(shore_to_json(inv.h, s));
    return arr;
  };

  inv.result = Json{{"nontrivial_tight", shores_json(cuts.nontrivial)},
                    {"trivial_tight", shores_json(cuts.trivial)},
                    {"separating_nontight", shores_json(separating)}};

  Json cert = Json::object();
  cert["matching_count"] = pms.size();
  Json tight_cert = Json::array();
  for (const std::vector<Shore>* list : {&cuts.nontrivial, &cuts.trivial}) {
    for (const Shore& s : *list) {
      tight_cert.push_back(Json{{"shore", shore_to_json(inv.h, s)},
                                {"crossings", crossings_of(s)}});
    }
  }
  cert["tight_crossings"] = std::move(tight_cert);
  Json sep_cert = Json::array();
  for (const Shore& s : separating) {
    ContractionPair cp = contract(inv.h, s, /*force=*/true, inv.budget);
    sep_cert.push_back(
        Json{{"shore", shore_to_json(inv.h, s)},
             {"h_s_covered", is_matching_covered(cp.h_s, inv.budget).covered},
             {"h_s_bar_covered",
              is_matching_covered(cp.h_s_bar, inv.budget).covered},
             {"crossings", crossings_of(s)}});
  }
  cert["separating_contractions"] = std::move(sep_cert);
  inv.certificates = std::move(cert);
  return kExitOk;
}

int run_contract(Invocation& inv) {
  Shore s = parse_shore(inv.h, inv.shore);
  ContractionPair cp = contract(inv.h, s, inv.force, inv.budget);
  inv.result = contraction_to_json(inv.h, cp);
  return kExitOk;
}

Strategy parse_strategy(const Invocation& inv) {
  const std::string& kind = inv.strategy.empty() ? "first" : inv.strategy;
  if (kind == "first") return Strategy::first();
  if (kind == "random") return Strategy::seeded_random(inv.seed);
  if (kind == "scripted") {
    if (inv.script.empty()) {
      throw InputError("--script is required with --strategy scripted");
    }
    std::vector<std::vector<std::string>> shores;
    for (const std::string& part : split_list(inv.script, ';')) {
      shores.push_back(split_list(part, ','));
    }
    return Strategy::scripted(std::move(shores));
  }
  throw InputError("unknown strategy: " + kind +
                   " (expected first, random, or scripted)");
}

int run_decompose(Invocation& inv) {
  Decomposition d = decompose(inv.h, parse_strategy(inv), inv.budget);
  inv.result = decomposition_to_json(d);
  return kExitOk;
}

int run_all_decompositions(Invocation& inv) {
  std::vector<Decomposition> all = enumerate_all_decompositions(inv.h, inv.budget);
  Json list = Json::array();
  for (const Decomposition& d : all) list.push_back(decomposition_to_json(d));
  inv.result = Json{{"count", all.size()}, {"decompositions", std::move(list)}};
  return kExitOk;
}

int run_verify_uniqueness(Invocation& inv) {
  std::vector<Decomposition> all = enumerate_all_decompositions(inv.h, inv.budget);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!decompositions_equivalent(all[i], all[j]).equivalent) {
        inv.result = Json{{"equivalent", false}, {"count", all.size()}};
        inv.certificates =
            Json{{"first", decomposition_to_json(all[i])},
                 {"second", decomposition_to_json(all[j])}};
        return kExitFalse;
      }
    }
  }
  inv.result = Json{{"equivalent", true}, {"count", all.size()}};
  inv.certificates = Json{{"pairs_checked", all.size() * (all.size() - 1) / 2}};
  return kExitOk;
}

int run_polytope_member(Invocation& inv) {
  RationalVector x = parse_vector_flag(inv);
  MembershipResult r = in_matching_polytope(inv.h, x, inv.budget);
  inv.result = Json{{"inside", r.inside}};
  if (r.inside) {
    inv.certificates =
        Json{{"convex_decomposition", convex_decomposition_to_json(r.decomposition)}};
    return kExitOk;
  }
  inv.certificates = Json{
      {"encoding",
       "affine separator c over (x,1): c.(chi_M,1) <= 0 for every perfect "
       "matching M and c.(x,1) > 0"},
      {"certificate", rationals_to_json(r.certificate)}};
  return kExitFalse;
}

int run_polytope_integral(Invocation& inv) {
  IntegralityResult r = fractional_polytope_integral(inv.h, inv.budget);
  inv.result = Json{{"integral", r.integral}};
  if (!r.integral) {
    inv.certificates =
        Json{{"fractional_vertex", rational_vector_to_json(*r.witness)}};
    return kExitFalse;
  }
  return kExitOk;
}

int run_split(Invocation& inv) {
  Shore s = parse_shore(inv.h, inv.shore);
  RationalVector x = parse_vector_flag(inv);
  ContractionPair cp = contract(inv.h, s, inv.force, inv.budget);
  SplitPair sp = split(inv.h, s, x, inv.force, inv.budget);
  inv.result =
      Json{{"split", split_pair_to_json(sp)},
           {"contraction", contraction_to_json(inv.h, cp)}};
  return kExitOk;
}

int run_join(Invocation& inv) {
  Shore s = parse_shore(inv.h, inv.shore);
  if (inv.pair_doc.empty()) {
    throw InputError("--pair is required for this subcommand");
  }
  ContractionPair cp = contract(inv.h, s, inv.force, inv.budget);
  SplitPair sp =
      split_pair_from_json(cp, parse_json(read_json_flag(inv.pair_doc, "--pair")));
  RationalVector x = join(inv.h, s, sp, inv.force, inv.budget);
  inv.result = Json{{"vector", rational_vector_to_json(x)}};
  inv.certificates =
      Json{{"in_fractional_polytope", in_fractional_polytope(inv.h, x).inside}};
  return kExitOk;
}

int run_witness(Invocation& inv) {
  Shore s = parse_shore(inv.h, inv.shore);
  RationalVector x = separating_witness(inv.h, s, inv.budget);
  Rational cut_value(0);
  for (int e : cut(inv.h, s).edge_indices) cut_value += x.entries[e];
  inv.result = Json{{"vector", rational_vector_to_json(x)},
                    {"cut_value", cut_value.str()}};
  inv.certificates =
      Json{{"in_fractional_polytope", in_fractional_polytope(inv.h, x).inside},
           {"cut_value_below_one", cut_value < Rational(1)}};
  return kExitOk;
}

int run_balanced(Invocation& inv) {
  BalanceResult r = is_balanced(inv.h, inv.budget);
  inv.result = Json{{"balanced", r.balanced}};
  if (!r.balanced) {
    Json verts = Json::array(), edges = Json::array();
    for (int v : r.cycle_vertices) verts.push_back(inv.h.vertex_name(v));
    for (int e : r.cycle_edges) edges.push_back(inv.h.label(e));
    inv.certificates = Json{{"strong_odd_cycle",
                             Json{{"vertices", std::move(verts)},
                                  {"edges", std::move(edges)}}}};
    return kExitFalse;
  }
  return kExitOk;
}

int run_r_partite(Invocation& inv) {
  if (inv.r <= 0) throw InputError("--r (a positive integer) is required");
  PartitionResult r = is_r_partite(inv.h, inv.r, inv.budget);
  inv.result = Json{{"partite", r.partite}, {"r", inv.r}};
  if (r.partite) {
    Json classes = Json::array();
    for (const auto& cls : r.classes) {
      Json names = Json::array();
      for (int v : cls) names.push_back(inv.h.vertex_name(v));
      classes.push_back(std::move(names));
    }
    inv.certificates = Json{{"classes", std::move(classes)}};
    return kExitOk;
  }
  inv.certificates =
      Json{{"note", "exhaustive backtracking found no class partition"}};
  return kExitFalse;
}

int run_find_tight_cut(Invocation& inv) {
  FinderResult r = find_nontrivial_tight_cut(inv.h, inv.budget);
  Json res = Json::object();
  res["found"] = r.found;
  res["edge_count"] = r.edge_count;
  res["best_weight"] = r.best_weight ? Json(*r.best_weight) : Json(nullptr);
  res["shore"] = r.found ? shore_to_json(inv.h, r.shore) : Json(nullptr);
  inv.result = std::move(res);
  if (r.found) {
    inv.certificates =
        Json{{"weight_equals_edge_count", *r.best_weight == r.edge_count},
             {"verified_tight", is_tight(inv.h, r.shore, inv.budget).tight}};
    return kExitOk;
  }
  inv.certificates = Json{
      {"note", r.best_weight
                   ? "minimum admissible cut weight exceeds the edge count, "
                     "so only trivial tight cuts exist"
                   : "no admissible shore sizes, so only trivial tight cuts "
                     "exist"}};
  return kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hgmatch: exact tight cut decomposition toolkit for hypergraphs with "
      "perfect matchings"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;
  long long budget_nodes = Budget::kDefaultNodes;
  Invocation inv;

  struct SubSpec {
    const char* name;
    const char* help;
    int (*handler)(Invocation&);
  };
  const std::vector<SubSpec> specs = {
      {"info", "vertex/edge counts, connectivity, uniformity", run_info},
      {"matchings", "enumerate all perfect matchings", run_matchings},
      {"covered", "is every edge in some perfect matching?", run_covered},
      {"uniformable", "does an integral multiplicity uniformize the host?",
       run_uniformable},
      {"tight-cuts", "list tight and separating non-tight cuts",
       run_tight_cuts},
      {"contract", "contract both sides of a cut (--shore, --force)",
       run_contract},
      {"decompose", "run the tight cut decomposition (--strategy)",
       run_decompose},
      {"all-decompositions", "enumerate decompositions over maximal families",
       run_all_decompositions},
      {"verify-uniqueness", "are all decompositions pairwise equivalent?",
       run_verify_uniqueness},
      {"polytope-member", "is --vector in the perfect matching polytope?",
       run_polytope_member},
      {"polytope-integral", "is the fractional matching polytope integral?",
       run_polytope_integral},
      {"split", "project --vector onto the two contractions at --shore",
       run_split},
      {"join", "reassemble a host vector from --pair at --shore", run_join},
      {"witness", "fractional point proving a separating cut non-tight",
       run_witness},
      {"balanced", "does the host avoid strong odd cycles?", run_balanced},
      {"r-partite", "partition vertices into r classes (--r)", run_r_partite},
      {"find-tight-cut", "cut-weight minimizer for balanced uniform hosts",
       run_find_tight_cut},
  };

  for (const SubSpec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("input", input, "hypergraph JSON file ('-' for stdin)");
    sub->add_option("--budget", budget_nodes, "search node budget");
    sub->add_option("--out", out_path, "also write the report to this file");
    sub->add_option("--shore", inv.shore, "comma-separated vertex names");
    sub->add_option("--vector", inv.vector_doc,
                    "rational vector (inline JSON or a file path)");
    sub->add_option("--pair", inv.pair_doc,
                    "split pair (inline JSON or a file path)");
    sub->add_option("--strategy", inv.strategy,
                    "first (default), random, or scripted");
    sub->add_option("--script", inv.script,
                    "semicolon-separated shores for --strategy scripted");
    sub->add_option("--seed", inv.seed, "seed for --strategy random");
    sub->add_option("--r", inv.r, "number of classes for r-partite");
    sub->add_flag("--force", inv.force,
                  "allow non-tight separating cuts in contract/split/join");
  }

  CLI11_PARSE(app, argc, argv);

  const SubSpec* chosen = nullptr;
  for (const SubSpec& spec : specs) {
    if (app.got_subcommand(spec.name)) chosen = &spec;
  }
  if (!chosen) {
    std::fprintf(stderr, "hgmatch: no subcommand selected\n");
    return kExitInput;
  }

  Json report = Json::object();
  report["command"] = chosen->name;

  auto emit = [&](int code) {
    std::string text = serialize(report);
    std::fputs(text.c_str(), stdout);
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out.good()) {
        std::fprintf(stderr, "hgmatch: cannot write %s\n", out_path.c_str());
        return kExitInput;
      }
      out << text;
    }
    return code;
  };
  auto emit_error = [&](const char* type, const std::string& message,
                        int code) {
    report["error"] = Json{{"type", type}, {"message", message}};
    std::fprintf(stderr, "hgmatch: %s: %s\n", type, message.c_str());
    return emit(code);
  };

  auto start = std::chrono::steady_clock::now();
  int code;
  try {
    std::string text = read_input(input);
    report["input_digest"] = fnv1a_digest(text);
    inv.h = hypergraph_from_json(parse_json(text));
    Budget budget(budget_nodes);
    inv.budget = &budget;
    code = chosen->handler(inv);
    report["result"] = std::move(inv.result);
    report["certificates"] = std::move(inv.certificates);
    code = emit(code);
  } catch (const InputError& e) {
    code = emit_error("input_error", e.what(), kExitInput);
  } catch (const PreconditionError& e) {
    code = emit_error("precondition_error", e.what(), kExitInput);
  } catch (const BudgetError& e) {
    code = emit_error("budget_error", e.what(), kExitBudget);
  } catch (const TheoremViolation& e) {
    code = emit_error("theorem_violation", e.what(), kExitInternal);
  } catch (const std::exception& e) {
    code = emit_error("internal_error", e.what(), kExitInternal);
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::fprintf(stderr, "hgmatch %s: %lld ms\n", chosen->name,
               static_cast<long long>(ms));
  return code;
}
