#include "hgmatch/uniform.hpp"

#include <algorithm>

#include "hgmatch/lp.hpp"
#include "hgmatch/tightcut.hpp"

namespace hgmatch {

void validate_multiplicity(const Hypergraph& h, const Multiplicity& mult) {
  if (static_cast<int>(mult.m.size()) != h.vertex_count()) {
    throw InputError("multiplicity: expected " +
                     std::to_string(h.vertex_count()) + " vertex weights");
  }
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (mult.m[v] < 1) {
      throw InputError("multiplicity: m(" + h.vertex_name(v) +
                       ") must be positive");
    }
  }
  if (mult.r < 2) throw InputError("multiplicity: r must be at least 2");
  for (int i = 0; i < h.edge_count(); ++i) {
    long long sum = 0;
    for (int v : h.edge(i)) sum += mult.m[v];
    if (sum != mult.r) {
      throw InputError("multiplicity: edge " + h.label(i) + " has weight " +
                       std::to_string(sum) + ", expected r = " +
                       std::to_string(mult.r));
    }
  }
}

namespace {

long long to_longlong(const Integer& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw BudgetError("uniformization witness exceeds 64-bit range");
  }
  return static_cast<long long>(v);
}

}  // namespace

std::optional<Multiplicity> check_uniformable(const Hypergraph& h) {
  if (h.edge_count() == 0) {
    throw PreconditionError("check_uniformable: hypergraph has no edges");
  }
  bool all_singletons = true;
  for (int i = 0; i < h.edge_count(); ++i) {
    if (h.edge(i).size() > 1) all_singletons = false;
  }
  if (all_singletons) {
    throw PreconditionError(
        "check_uniformable: every edge is a singleton; only the degenerate "
        "rank-1 multiplication exists");
  }

  // Substitute m(v) = 1 + p(v), r = 2 + q with p, q >= 0:
  // for every edge e, sum_{v in e} p(v) - q = 2 - |e|.
  int n = h.vertex_count();
  lp::Matrix a;
  std::vector<Rational> b;
  for (int i = 0; i < h.edge_count(); ++i) {
    lp::Row row(n + 1, Rational(0));
    for (int v : h.edge(i)) row[v] = 1;
    row[n] = -1;
    a.push_back(std::move(row));
    b.push_back(Rational(2 - static_cast<long long>(h.edge(i).size())));
  }

  // Sequential lexicographic minimization: first r (via q), then each m(v)
  // in vertex order, pinning every solved coordinate with a new equality.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  auto step = lp::minimize(a, b, c);
  if (!step.feasible) return std::nullopt;
  if (!step.bounded) throw TheoremViolation("uniformable: unbounded objective");
  for (int target = -1; target + 1 < n; /* advance below */) {
    lp::Row pin(n + 1, Rational(0));
    int coord = (target == -1) ? n : target;
    pin[coord] = 1;
    a.push_back(pin);
    b.push_back(step.value);
    ++target;
    std::fill(c.begin(), c.end(), Rational(0));
    c[target] = 1;
    step = lp::minimize(a, b, c);
    if (!step.feasible || !step.bounded) {
      throw TheoremViolation("uniformable: lexmin pass lost feasibility");
    }
  }

  // Scale by the common denominator; scaled solutions stay feasible since
  // the system is homogeneous in (m, r) and d >= 1 preserves m >= 1, r >= 2.
  std::vector<Rational> m_rat(n);
  for (int v = 0; v < n; ++v) m_rat[v] = step.x[v] + 1;
  Rational r_rat = step.x[n] + 2;
  Integer d = denominator(r_rat);
  for (int v = 0; v < n; ++v) {
    d = boost::multiprecision::lcm(d, denominator(m_rat[v]));
  }
  Multiplicity mult;
  mult.m.resize(n);
  for (int v = 0; v < n; ++v) {
    mult.m[v] = to_longlong(numerator(m_rat[v]) * (d / denominator(m_rat[v])));
  }
  mult.r = to_longlong(numerator(r_rat) * (d / denominator(r_rat)));
  validate_multiplicity(h, mult);
  return mult;
}

namespace {

std::string copy_suffix(long long i) {
  // Spreadsheet-style: a..z, aa, ab, ...
  std::string s;
  long long k = i;
  for (;;) {
    s.insert(s.begin(), static_cast<char>('a' + k % 26));
    k = k / 26 - 1;
    if (k < 0) break;
  }
  return s;
}

}  // namespace

Hypergraph multiply(const Hypergraph& h, const std::vector<long long>& m) {
  if (static_cast<int>(m.size()) != h.vertex_count()) {
    throw InputError("multiply: expected " + std::to_string(h.vertex_count()) +
                     " multiplicities");
  }
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> copies(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (m[v] < 1) {
      throw InputError("multiply: m(" + h.vertex_name(v) +
                       ") must be positive");
    }
    for (long long i = 0; i < m[v]; ++i) {
      copies[v].push_back(static_cast<int>(vertices.size()));
      vertices.push_back(m[v] == 1 ? h.vertex_name(v)
                                   : h.vertex_name(v) + copy_suffix(i));
    }
  }
  std::vector<std::vector<int>> edges;
  edges.reserve(h.edge_count());
  for (int i = 0; i < h.edge_count(); ++i) {
    std::vector<int> e;
    for (int v : h.edge(i)) e.insert(e.end(), copies[v].begin(), copies[v].end());
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_indices(std::move(vertices), std::move(edges),
                                  h.labels());
}

Hypergraph multiply(const Hypergraph& h,
                    const std::map<std::string, long long>& m) {
  std::vector<long long> vec(h.vertex_count(), 1);
  for (const auto& [name, value] : m) {
    auto idx = h.vertex_index(name);
    if (!idx) throw InputError("multiply: unknown vertex '" + name + "'");
    vec[*idx] = value;
  }
  return multiply(h, vec);
}

long long shore_weight_mod_r(const Hypergraph& h, const Multiplicity& mult,
                             const Shore& s) {
  validate_multiplicity(h, mult);
  long long sum = 0;
  for (int v : s.verts()) sum = (sum + mult.m[v]) % mult.r;
  return sum;
}

Residue tight_cut_residue(const Hypergraph& h, const Multiplicity& mult,
                          const Shore& s, Budget* budget) {
  validate_multiplicity(h, mult);
  auto tight = is_tight(h, s, budget);
  if (!tight.tight) {
    throw PreconditionError("tight_cut_residue: cut is not tight");
  }
  long long k = shore_weight_mod_r(h, mult, s);
  if (k == 0) {
    throw TheoremViolation(
        "tight_cut_residue: tight cut with zero residue shore weight");
  }
  for (int i : cut(h, s).edge_indices) {
    long long part = 0;
    for (int v : h.edge(i)) {
      if (s.contains(v)) part += mult.m[v];
    }
    if (part != k) {
      throw TheoremViolation("tight_cut_residue: cut edge " + h.label(i) +
                             " meets the shore with weight " +
                             std::to_string(part) + ", expected " +
                             std::to_string(k));
    }
  }
  return Residue{k};
}

ZeroResidueReport zero_residue_check(const Hypergraph& h,
                                     const Multiplicity& mult, const Shore& s,
                                     Budget* budget) {
  validate_multiplicity(h, mult);
  if (shore_weight_mod_r(h, mult, s) != 0) {
    throw PreconditionError("zero_residue_check: shore weight is nonzero mod r");
  }
  Budget local;
  Budget& b = budget ? *budget : local;
  auto coverage = is_matching_covered(h, &b);
  if (!coverage.covered) {
    throw PreconditionError("zero_residue_check: hypergraph not matching covered");
  }
  const Cut c = cut(h, s);
  ZeroResidueReport report;
  for (const Matching& m : enumerate_perfect_matchings(h, &b)) {
    int meets = 0;
    for (int i : m.edge_indices) {
      if (std::binary_search(c.edge_indices.begin(), c.edge_indices.end(), i)) {
        ++meets;
      }
    }
    if (meets == 1) {
      throw TheoremViolation(
          "zero_residue_check: matching meets a zero-residue cut exactly once");
    }
    if (meets == 0) ++report.matchings_missing_cut;
    if (meets >= 2) {
      ++report.matchings_meeting_many;
      if (!report.witness) report.witness = m;
    }
  }
  bool proper = s.size() > 0 && s.size() < h.vertex_count();
  if (proper && !report.witness) {
    throw TheoremViolation(
        "zero_residue_check: no matching meets the cut at least twice");
  }
  return report;
}

}  // namespace hgmatch
