#include "hgmatch/decomp.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hgmatch/matching.hpp"

namespace hgmatch {

namespace {

std::vector<int> expand(const DecompNode& node, const Shore& local) {
  std::set<int> verts;
  for (int v : local.verts()) {
    verts.insert(node.expansion[v].begin(), node.expansion[v].end());
  }
  return {verts.begin(), verts.end()};
}

// Translates a root-level shore to a node-local one: the local vertices
// whose expansions lie inside the target must expand to exactly the target.
std::optional<Shore> localize(const DecompNode& node,
                              const std::vector<int>& target_sorted) {
  std::vector<int> local;
  std::set<int> covered;
  for (int v = 0; v < node.hg.vertex_count(); ++v) {
    const auto& exp = node.expansion[v];
    if (std::includes(target_sorted.begin(), target_sorted.end(), exp.begin(),
                      exp.end())) {
      local.push_back(v);
      covered.insert(exp.begin(), exp.end());
    }
  }
  if (std::vector<int>(covered.begin(), covered.end()) != target_sorted) {
    return std::nullopt;
  }
  return Shore(local);
}

struct Run {
  const Hypergraph& root;
  Budget& budget;
  std::unique_ptr<DecompNode> tree;
  std::vector<DecompNode*> leaves;  // Alg-style list H_1..H_i
  std::vector<Shore> family;        // canonical root shores, in choice order

  explicit Run(const Hypergraph& h, Budget& b) : root(h), budget(b) {
    tree = std::make_unique<DecompNode>();
    tree->hg = h;
    tree->expansion.resize(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) tree->expansion[v] = {v};
    leaves.push_back(tree.get());
  }

  // Non-trivial tight canonical shores per leaf, in leaf order.
  std::vector<std::vector<Shore>> options() const {
    std::vector<std::vector<Shore>> all;
    all.reserve(leaves.size());
    for (const DecompNode* leaf : leaves) {
      all.push_back(list_tight_cuts(leaf->hg, &budget).nontrivial);
    }
    return all;
  }

  void apply(std::size_t leaf_pos, const Shore& local_shore) {
    DecompNode* node = leaves.at(leaf_pos);
    if (local_shore.empty() || is_trivial_shore(node->hg, local_shore)) {
      throw PreconditionError("decompose: proposed shore is trivial");
    }
    ContractionPair pair = contract(node->hg, local_shore, false, &budget);

    auto keep = std::make_unique<DecompNode>();  // shore vertices + s̄
    keep->hg = pair.h_s_bar;
    keep->expansion.resize(keep->hg.vertex_count());
    for (std::size_t i = 0; i < local_shore.verts().size(); ++i) {
      keep->expansion[i] = node->expansion[local_shore.verts()[i]];
    }
    keep->expansion[pair.s_bar_vertex] =
        expand(*node, shore_complement(node->hg, local_shore));

    auto drop = std::make_unique<DecompNode>();  // complement vertices + s
    drop->hg = pair.h_s;
    const Shore comp = shore_complement(node->hg, local_shore);
    drop->expansion.resize(drop->hg.vertex_count());
    for (std::size_t i = 0; i < comp.verts().size(); ++i) {
      drop->expansion[i] = node->expansion[comp.verts()[i]];
    }
    drop->expansion[pair.s_vertex] = expand(*node, local_shore);

    family.push_back(
        canonical_shore(root, Shore(expand(*node, local_shore))));
    node->shore = local_shore;
    node->child_keep = std::move(keep);
    node->child_drop = std::move(drop);
    leaves[leaf_pos] = node->child_keep.get();
    leaves.push_back(node->child_drop.get());
  }

  Decomposition finish() {
    Decomposition d;
    d.bricks.reserve(leaves.size());
    for (const DecompNode* leaf : leaves) d.bricks.push_back(leaf->hg);
    d.family = family;
    std::sort(d.family.begin(), d.family.end(),
              [&](const Shore& a, const Shore& b) {
                return shore_less(root, a, b);
              });
    d.root = std::move(tree);
    return d;
  }
};

}  // namespace

Decomposition decompose(const Hypergraph& h, const Strategy& strategy,
                        Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  if (!is_matching_covered(h, &b).covered) {
    throw PreconditionError("decompose: hypergraph not matching covered");
  }
  Run run(h, b);
  std::mt19937_64 rng(strategy.seed);
  std::size_t script_pos = 0;

  for (;;) {
    b.charge();
    if (strategy.kind == Strategy::Kind::kScripted) {
      if (script_pos == strategy.script.size()) break;
      std::vector<int> target =
          shore_from_names(h, strategy.script[script_pos]).verts();
      ++script_pos;
      bool applied = false;
      for (std::size_t pos = 0; pos < run.leaves.size() && !applied; ++pos) {
        auto local_shore = localize(*run.leaves[pos], target);
        if (!local_shore || local_shore->empty() ||
            local_shore->size() == run.leaves[pos]->hg.vertex_count()) {
          continue;
        }
        if (is_trivial_shore(run.leaves[pos]->hg, *local_shore) ||
            !is_tight(run.leaves[pos]->hg, *local_shore, &b).tight) {
          throw PreconditionError(
              "decompose: scripted shore is not a non-trivial tight cut");
        }
        run.apply(pos, *local_shore);
        applied = true;
      }
      if (!applied) {
        throw PreconditionError(
            "decompose: scripted shore matches no remaining piece");
      }
      continue;
    }

    auto options = run.options();
    std::size_t total = 0;
    for (const auto& per_leaf : options) total += per_leaf.size();
    if (total == 0) break;

    if (strategy.kind == Strategy::Kind::kFirst) {
      for (std::size_t pos = 0; pos < options.size(); ++pos) {
        if (!options[pos].empty()) {
          run.apply(pos, options[pos].front());
          break;
        }
      }
    } else {  // seeded random over all (leaf, shore) pairs
      std::uint64_t pick = rng() % total;
      for (std::size_t pos = 0; pos < options.size(); ++pos) {
        if (pick < options[pos].size()) {
          run.apply(pos, options[pos][pick]);
          break;
        }
        pick -= options[pos].size();
      }
    }
  }

  // A scripted run must leave no piece decomposable.
  if (strategy.kind == Strategy::Kind::kScripted) {
    for (const DecompNode* leaf : run.leaves) {
      if (!list_tight_cuts(leaf->hg, &b).nontrivial.empty()) {
        throw PreconditionError(
            "decompose: script ended before the decomposition was maximal");
      }
    }
  }
  return run.finish();
}

std::vector<Shore> extract_laminar_family(const Decomposition& d,
                                          Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  if (!d.root) throw InputError("extract_laminar_family: empty decomposition");
  const Hypergraph& root = d.root->hg;

  std::vector<Shore> family;
  std::vector<const DecompNode*> stack{d.root.get()};
  while (!stack.empty()) {
    const DecompNode* node = stack.back();
    stack.pop_back();
    if (!node->shore) continue;
    family.push_back(canonical_shore(root, Shore(expand(*node, *node->shore))));
    stack.push_back(node->child_keep.get());
    stack.push_back(node->child_drop.get());
  }
  std::sort(family.begin(), family.end(), [&](const Shore& a, const Shore& b2) {
    return shore_less(root, a, b2);
  });

  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!is_tight(root, family[i], &b).tight) {
      throw TheoremViolation(
          "extract_laminar_family: family member not tight in the root");
    }
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (classify_pair(root, family[i], family[j]).cls ==
          PairClass::kCrossing) {
        throw TheoremViolation("extract_laminar_family: family members cross");
      }
    }
  }
  return family;
}

EquivalenceResult decompositions_equivalent(const Decomposition& d1,
                                            const Decomposition& d2,
                                            Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  EquivalenceResult result;
  if (d1.bricks.size() != d2.bricks.size()) return result;
  std::size_t n = d1.bricks.size();

  std::map<std::pair<std::size_t, std::size_t>, bool> iso;
  auto matches = [&](std::size_t i, std::size_t j) {
    auto key = std::make_pair(i, j);
    auto it = iso.find(key);
    if (it == iso.end()) {
      it = iso.emplace(key, isomorphic_up_to_parallel(d1.bricks[i],
                                                      d2.bricks[j], &b)
                                .isomorphic)
               .first;
    }
    return it->second;
  };

  std::vector<int> pairing(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    b.charge();
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !matches(i, j)) continue;
      used[j] = true;
      pairing[i] = static_cast<int>(j);
      if (self(self, i + 1)) return true;
      used[j] = false;
      pairing[i] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return result;
  result.equivalent = true;
  result.pairing = pairing;
  return result;
}

std::vector<Decomposition> enumerate_all_decompositions(const Hypergraph& h,
                                                        Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  if (!is_matching_covered(h, &b).covered) {
    throw PreconditionError(
        "enumerate_all_decompositions: hypergraph not matching covered");
  }

  auto family_key = [&](std::vector<Shore> shores) {
    std::sort(shores.begin(), shores.end(),
              [&](const Shore& a, const Shore& c) { return shore_less(h, a, c); });
    std::string key;
    for (const Shore& s : shores) {
      for (const std::string& name : shore_names(h, s)) {
        key += name;
        key += ',';
      }
      key += ';';
    }
    return key;
  };

  // States reached by the same shore set coincide, so branching memoizes on
  // the set and keeps one discovery order per state for replay.
  std::set<std::string> visited;
  std::map<std::string, std::vector<std::vector<std::string>>> complete;
  std::vector<std::vector<std::vector<std::string>>> frontier{{}};
  visited.insert(family_key({}));

  while (!frontier.empty()) {
    b.charge();
    std::vector<std::vector<std::string>> order = std::move(frontier.back());
    frontier.pop_back();

    Run run(h, b);
    std::vector<Shore> so_far;
    for (const auto& names : order) {
      std::vector<int> target = shore_from_names(h, names).verts();
      bool applied = false;
      for (std::size_t pos = 0; pos < run.leaves.size() && !applied; ++pos) {
        auto local_shore = localize(*run.leaves[pos], target);
        if (!local_shore || local_shore->empty() ||
            local_shore->size() == run.leaves[pos]->hg.vertex_count()) {
          continue;
        }
        run.apply(pos, *local_shore);
        applied = true;
      }
      if (!applied) {
        throw TheoremViolation(
            "enumerate_all_decompositions: replay lost a shore");
      }
      so_far.push_back(canonical_shore(h, shore_from_names(h, names)));
    }

    auto options = run.options();
    bool terminal = true;
    for (std::size_t pos = 0; pos < options.size(); ++pos) {
      for (const Shore& local_shore : options[pos]) {
        terminal = false;
        Shore root_shore = canonical_shore(
            h, Shore(expand(*run.leaves[pos], local_shore)));
        auto next = so_far;
        next.push_back(root_shore);
        std::string key = family_key(next);
        if (visited.insert(key).second) {
          auto next_order = order;
          next_order.push_back(shore_names(h, root_shore));
          frontier.push_back(std::move(next_order));
        }
      }
    }
    if (terminal) complete.emplace(family_key(so_far), order);
  }

  std::vector<Decomposition> out;
  out.reserve(complete.size());
  for (const auto& [key, order] : complete) {
    out.push_back(decompose(h, Strategy::scripted(order), &b));
  }
  return out;
}

}  // namespace hgmatch
