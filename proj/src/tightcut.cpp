#include "hgmatch/tightcut.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace hgmatch {

namespace {

constexpr const char* kSBarPrefix = "s\xCC\x84:";  // "s̄:"
constexpr const char* kSBarSuffix = "_s\xCC\x84";  // "_s̄"

std::string fnv1a_hex(const std::vector<std::string>& parts) {
  std::uint64_t hash = 1469598103934665603ull;
  for (const std::string& p : parts) {
    for (unsigned char c : p) {
      hash ^= c;
      hash *= 1099511628211ull;
    }
    hash ^= 0x1f;
    hash *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (int i = 0; i < 8; ++i) {
    out += digits[(hash >> (60 - 8 * i)) & 0xf];
  }
  return out;
}

std::string fresh_vertex_name(const std::string& prefix,
                              const std::vector<std::string>& shore_names_sorted,
                              const std::vector<std::string>& taken) {
  std::string name = prefix + fnv1a_hex(shore_names_sorted);
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) {
    name += "+";
  }
  return name;
}

int count_cut_edges(const Matching& m, const std::vector<int>& cut_edges) {
  int meets = 0;
  for (int i : m.edge_indices) {
    if (std::binary_search(cut_edges.begin(), cut_edges.end(), i)) ++meets;
  }
  return meets;
}

void check_shore(const Hypergraph& h, const Shore& s) {
  if (!s.verts().empty() &&
      (s.verts().front() < 0 || s.verts().back() >= h.vertex_count())) {
    throw InputError("shore: vertex index out of range");
  }
}

}  // namespace

TightnessResult is_tight(const Hypergraph& h, const Shore& s, Budget* budget) {
  check_shore(h, s);
  auto matchings = enumerate_perfect_matchings(h, budget);
  if (matchings.empty()) {
    throw PreconditionError("is_tight: hypergraph has no perfect matching");
  }
  const Cut c = cut(h, s);
  TightnessResult result;
  result.tight = true;
  for (const Matching& m : matchings) {
    if (count_cut_edges(m, c.edge_indices) != 1) {
      result.tight = false;
      result.violating = m;
      break;
    }
  }
  return result;
}

bool is_trivial_shore(const Hypergraph& h, const Shore& s) {
  return s.size() == 1 || s.size() == h.vertex_count() - 1;
}

ContractionPair contract(const Hypergraph& h, const Shore& s, bool force,
                         Budget* budget) {
  check_shore(h, s);
  if (s.size() == 0 || s.size() == h.vertex_count()) {
    throw PreconditionError("contract: shore must be a non-empty proper subset");
  }
  if (!force) {
    auto tight = is_tight(h, s, budget);
    if (!tight.tight) {
      throw PreconditionError(
          "contract: cut is not tight (use force for separating-cut "
          "experiments)");
    }
  }
  const Shore comp = shore_complement(h, s);
  const Cut c = cut(h, s);
  const std::string mark = force ? "!" : "";

  ContractionPair pair;
  pair.cut_edges = c.edge_indices;
  pair.edge_to_s.assign(h.edge_count(), -1);
  pair.edge_to_s_bar.assign(h.edge_count(), -1);

  auto shore_sorted_names = [&](const Shore& side) {
    std::vector<std::string> names = shore_names(h, side);
    std::sort(names.begin(), names.end());
    return names;
  };

  // Side H_S: complement vertices survive, S collapses to s.
  {
    std::vector<std::string> vertices = shore_names(h, comp);
    std::string s_name = fresh_vertex_name("s:", shore_sorted_names(s), vertices);
    vertices.push_back(s_name);
    int s_index = static_cast<int>(vertices.size()) - 1;
    std::vector<int> remap(h.vertex_count(), -1);
    for (std::size_t i = 0; i < comp.verts().size(); ++i) {
      remap[comp.verts()[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < h.edge_count(); ++i) {  // edges inside the complement
      const auto& e = h.edge(i);
      if (std::any_of(e.begin(), e.end(),
                      [&](int v) { return s.contains(v); })) {
        continue;
      }
      std::vector<int> mapped;
      for (int v : e) mapped.push_back(remap[v]);
      pair.edge_to_s[i] = static_cast<int>(edges.size());
      edges.push_back(std::move(mapped));
      labels.push_back(h.label(i));
    }
    for (int i : c.edge_indices) {  // cut edges become (e ∖ S) ∪ {s}
      std::vector<int> mapped{s_index};
      for (int v : h.edge(i)) {
        if (!s.contains(v)) mapped.push_back(remap[v]);
      }
      pair.edge_to_s[i] = static_cast<int>(edges.size());
      edges.push_back(std::move(mapped));
      labels.push_back(h.label(i) + "_s" + mark);
    }
    pair.h_s = Hypergraph::from_indices(std::move(vertices), std::move(edges),
                                        std::move(labels));
    pair.s_vertex = s_index;
  }

  // Side H_S̄: shore vertices survive, the complement collapses to s̄.
  {
    std::vector<std::string> vertices = shore_names(h, s);
    std::string sbar_name =
        fresh_vertex_name(kSBarPrefix, shore_sorted_names(comp), vertices);
    vertices.push_back(sbar_name);
    int sbar_index = static_cast<int>(vertices.size()) - 1;
    std::vector<int> remap(h.vertex_count(), -1);
    for (std::size_t i = 0; i < s.verts().size(); ++i) {
      remap[s.verts()[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < h.edge_count(); ++i) {  // edges inside the shore
      const auto& e = h.edge(i);
      if (std::any_of(e.begin(), e.end(),
                      [&](int v) { return !s.contains(v); })) {
        continue;
      }
      std::vector<int> mapped;
      for (int v : e) mapped.push_back(remap[v]);
      pair.edge_to_s_bar[i] = static_cast<int>(edges.size());
      edges.push_back(std::move(mapped));
      labels.push_back(h.label(i));
    }
    for (int i : c.edge_indices) {  // cut edges become (e ∩ S) ∪ {s̄}
      std::vector<int> mapped{sbar_index};
      for (int v : h.edge(i)) {
        if (s.contains(v)) mapped.push_back(remap[v]);
      }
      pair.edge_to_s_bar[i] = static_cast<int>(edges.size());
      edges.push_back(std::move(mapped));
      labels.push_back(h.label(i) + kSBarSuffix + mark);
    }
    pair.h_s_bar = Hypergraph::from_indices(std::move(vertices),
                                            std::move(edges), std::move(labels));
    pair.s_bar_vertex = sbar_index;
  }
  return pair;
}

bool is_separating(const Hypergraph& h, const Shore& s, Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  if (!is_matching_covered(h, &b).covered) {
    throw PreconditionError("is_separating: hypergraph not matching covered");
  }
  ContractionPair pair = contract(h, s, /*force=*/true, &b);
  return is_matching_covered(pair.h_s, &b).covered &&
         is_matching_covered(pair.h_s_bar, &b).covered;
}

PairClassification classify_pair(const Hypergraph& h, const Shore& s,
                                 const Shore& t) {
  check_shore(h, s);
  check_shore(h, t);
  std::vector<int> corners[4];
  for (int v = 0; v < h.vertex_count(); ++v) {
    bool in_s = s.contains(v), in_t = t.contains(v);
    int which = in_s ? (in_t ? 0 : 1) : (in_t ? 2 : 3);
    corners[which].push_back(v);
  }
  PairClassification result;
  bool crossing = true;
  for (int i = 0; i < 4; ++i) {
    if (corners[i].empty()) crossing = false;
    result.corners[i] = Shore(corners[i]);
  }
  result.cls = crossing ? PairClass::kCrossing : PairClass::kLaminar;
  return result;
}

UncrossReport uncross(const Hypergraph& h, const Shore& s, const Shore& t,
                      Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  auto classification = classify_pair(h, s, t);
  if (classification.cls != PairClass::kCrossing) {
    throw PreconditionError("uncross: shores do not cross");
  }
  if (!is_tight(h, s, &b).tight || !is_tight(h, t, &b).tight) {
    throw PreconditionError("uncross: both cuts must be tight");
  }

  UncrossReport report;
  report.s_only = classification.corners[1];
  report.t_only = classification.corners[2];
  {
    std::vector<int> both = classification.corners[0].verts();
    report.intersection = Shore(both);
    std::vector<int> un;
    for (int v = 0; v < h.vertex_count(); ++v) {
      if (s.contains(v) || t.contains(v)) un.push_back(v);
    }
    report.union_ = Shore(un);
  }
  report.intersection_tight = is_tight(h, report.intersection, &b).tight;
  report.union_tight = is_tight(h, report.union_, &b).tight;
  report.s_only_tight = is_tight(h, report.s_only, &b).tight;
  report.t_only_tight = is_tight(h, report.t_only, &b).tight;
  report.first_diagonal = report.intersection_tight && report.union_tight;
  report.second_diagonal = report.s_only_tight && report.t_only_tight;

  if (report.intersection_tight != report.union_tight) {
    throw TheoremViolation(
        "uncross: intersection/union tightness biconditional failed");
  }
  if (!report.first_diagonal && !report.second_diagonal) {
    throw TheoremViolation("uncross: no tight diagonal pair");
  }
  return report;
}

TightCutList list_tight_cuts(const Hypergraph& h, Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  auto matchings = enumerate_perfect_matchings(h, &b);
  if (matchings.empty()) {
    throw PreconditionError("list_tight_cuts: hypergraph has no perfect matching");
  }
  int n = h.vertex_count();
  if (n > 62) throw BudgetError("list_tight_cuts: too many vertices to sweep");
  TightCutList out;
  // One side per complement pair: subsets avoiding vertex 0.
  std::uint64_t limit = n > 0 ? (1ull << (n - 1)) : 0;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    b.charge();
    std::vector<int> verts;
    for (int v = 1; v < n; ++v) {
      if (bits & (1ull << (v - 1))) verts.push_back(v);
    }
    Shore shore(verts);
    const Cut c = cut(h, shore);
    bool tight = true;
    for (const Matching& m : matchings) {
      if (count_cut_edges(m, c.edge_indices) != 1) {
        tight = false;
        break;
      }
    }
    if (!tight) continue;
    Shore canon = canonical_shore(h, shore);
    (is_trivial_shore(h, shore) ? out.trivial : out.nontrivial).push_back(canon);
  }
  auto by_key = [&](const Shore& x, const Shore& y) {
    return shore_less(h, x, y);
  };
  std::sort(out.trivial.begin(), out.trivial.end(), by_key);
  std::sort(out.nontrivial.begin(), out.nontrivial.end(), by_key);
  return out;
}

std::vector<Shore> list_separating_nontight(const Hypergraph& h,
                                            Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  if (!is_matching_covered(h, &b).covered) {
    throw PreconditionError(
        "list_separating_nontight: hypergraph not matching covered");
  }
  auto matchings = enumerate_perfect_matchings(h, &b);
  int n = h.vertex_count();
  if (n > 62) {
    throw BudgetError("list_separating_nontight: too many vertices to sweep");
  }
  std::vector<Shore> out;
  std::uint64_t limit = n > 0 ? (1ull << (n - 1)) : 0;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    b.charge();
    std::vector<int> verts;
    for (int v = 1; v < n; ++v) {
      if (bits & (1ull << (v - 1))) verts.push_back(v);
    }
    Shore shore(verts);
    if (is_trivial_shore(h, shore)) continue;
    const Cut c = cut(h, shore);
    bool tight = true;
    for (const Matching& m : matchings) {
      if (count_cut_edges(m, c.edge_indices) != 1) {
        tight = false;
        break;
      }
    }
    if (tight) continue;
    ContractionPair pair = contract(h, shore, /*force=*/true, &b);
    if (is_matching_covered(pair.h_s, &b).covered &&
        is_matching_covered(pair.h_s_bar, &b).covered) {
      out.push_back(canonical_shore(h, shore));
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Shore& x, const Shore& y) { return shore_less(h, x, y); });
  return out;
}

}  // namespace hgmatch
