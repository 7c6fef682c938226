#!/usr/bin/env python3
"""Smoke tests for the Python package over the compiled extension.

Usage: python_smoke_test.py <fixtures-dir>
(with PYTHONPATH covering both the package source and the built module).
"""

import os
import sys

import hgmatch as hg

FIXTURES = sys.argv[1]

failures = []
checks = 0


def check(ok, what):
    global checks
    checks += 1
    if not ok:
        failures.append(what)
        print(f"FAIL: {what}")


# Construction three ways: kwargs, JSON text, file path.
h1 = hg.Hypergraph(
    vertices=["1", "2", "3", "4", "5", "6"],
    edges=[["1", "2", "3"], ["4", "5", "6"], ["1", "4", "5"], ["2", "3", "6"]],
)
h1_file = hg.load(os.path.join(FIXTURES, "F1.json"))
h1_dict = hg.load({"vertices": h1.vertices, "edges": h1.edges})
check(h1.to_json() == h1_file.to_json() == h1_dict.to_json(),
      "three construction routes agree")
check(h1.vertex_count() == 6 and h1.edge_count() == 4, "counts")
check(h1.labels == ["e1", "e2", "e3", "e4"], "default labels")

# Matching layer.
check(hg.perfect_matchings(h1) == [[0, 1], [2, 3]], "perfect matchings")
check(hg.is_matching_covered(h1), "matching covered")

# Uniformization.
mult = hg.check_uniformable(h1)
check(mult == {"r": 3, "m": {v: 1 for v in h1.vertices}}, "uniformable witness")
f3 = hg.load(os.path.join(FIXTURES, "F3.json"))
check(hg.check_uniformable(f3) is None, "mixed host not uniformable")
blown_up = hg.multiply(h1, {v: 2 for v in h1.vertices})
check(blown_up.vertex_count() == 12, "multiplication doubles vertices")

# Tight cut layer.
cuts = hg.tight_cuts(h1)
check(cuts["nontrivial"] == [["2", "3"], ["4", "5"]], "nontrivial tight cuts")
check(len(cuts["trivial"]) == 6, "trivial tight cuts")
check(hg.is_tight(h1, ["2", "3"]), "is_tight true")
check(not hg.is_tight(f3, ["a1", "a2"]), "is_tight false on separating cut")
check(hg.separating_nontight(f3) == [["a1", "a2"]], "separating non-tight list")
h_s, h_s_bar = hg.contract(h1, ["2", "3"])
check(h_s.vertex_count() == 5 and h_s_bar.vertex_count() == 3, "contract sizes")
try:
    hg.contract(f3, ["a1", "a2"])
    check(False, "contract on a non-tight cut must raise")
except ValueError:
    check(True, "contract on a non-tight cut raises ValueError")
forced_s, forced_s_bar = hg.contract(f3, ["a1", "a2"], force=True)
check(hg.is_matching_covered(forced_s) and hg.is_matching_covered(forced_s_bar),
      "forced contractions are matching covered")

# Decomposition layer.
d = hg.decompose(h1)
check(len(d["bricks"]) == 3, "brick count")
check(d["family"] == [["2", "3"], ["4", "5"]], "decomposition family")
check(hg.decompose(h1, strategy="random", seed=11)["family"] == d["family"],
      "random strategy reaches the same family here")
check(hg.decompose(h1, strategy="scripted",
                   script=[["4", "5"], ["2", "3"]])["family"] == d["family"],
      "scripted strategy")
check(hg.decompositions_pairwise_equivalent(h1), "uniqueness on a nice host")
f5 = hg.load(os.path.join(FIXTURES, "F5.json"))
all_d = hg.all_decompositions(f5)
check(len(all_d) == 3, "three decompositions on the non-unique host")
check(not hg.decompositions_pairwise_equivalent(f5), "non-uniqueness detected")

# Polytope layer.
check(hg.polytope_integral(h1), "integral polytope")
check(hg.in_matching_polytope(h1, {0: "1/2", 1: "1/2", 2: "1/2", 3: "1/2"}),
      "membership inside")
check(not hg.in_matching_polytope(h1, {0: "1"}), "membership outside")
check(hg.is_balanced(h1) is None, "balanced host")
triangle = hg.Hypergraph(["a", "b", "c"], [["a", "b"], ["b", "c"], ["a", "c"]])
cycle = hg.is_balanced(triangle)
check(cycle is not None and len(cycle) == 3, "strong odd cycle witness")
check(hg.is_r_partite(h1, 3) is not None, "3-partite")
check(hg.is_r_partite(triangle, 2) is None, "odd cycle is not 2-partite")

prism = hg.Hypergraph(
    ["1", "2", "3", "4", "5", "6"],
    [["1", "2"], ["2", "3"], ["1", "3"], ["4", "5"], ["5", "6"], ["4", "6"],
     ["1", "4"], ["2", "5"], ["3", "6"]],
)
w = hg.separating_witness(prism, ["1", "2", "3"])
check(w == {e: "1/2" for e in range(6)} | {e: "0" for e in range(6, 9)},
      "separating witness frozen values")

# Cut finder.
check(hg.find_tight_cut(h1) == ["2", "3"], "finder on the nice host")
c4 = hg.Hypergraph(["1", "2", "3", "4"],
                   [["1", "2"], ["2", "3"], ["3", "4"], ["1", "4"]])
check(hg.find_tight_cut(c4) is None, "finder none on the 4-cycle")

# Error types.
try:
    hg.load('{"vertices": ["a"], "edges": [["zz"]]}')
    check(False, "bad edge vertex must raise")
except ValueError:
    check(True, "bad edge vertex raises ValueError")

print(f"{checks - len(failures)}/{checks} python checks passed")
sys.exit(1 if failures else 0)
