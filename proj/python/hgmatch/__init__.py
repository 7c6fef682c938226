"""Exact tight cut decompositions of hypergraphs with perfect matchings.

Thin wrapper over the compiled extension: scalars and vertex-name lists pass
through unchanged, and the deeply nested results (decomposition trees) arrive
as canonical JSON that this layer parses into plain dicts.
"""

import json as _json

try:
    from ._hgmatch import (
        BudgetError,
        Hypergraph,
        InputError,
        PreconditionError,
        all_decompositions_json as _all_decompositions_json,
        check_uniformable,
        contract,
        decompose_json as _decompose_json,
        decompositions_pairwise_equivalent,
        find_tight_cut,
        in_matching_polytope,
        is_balanced,
        is_matching_covered,
        is_r_partite,
        is_tight,
        multiply,
        perfect_matchings,
        polytope_integral,
        separating_nontight,
        separating_witness,
        tight_cuts,
    )
except ImportError:  # running against a build tree, not an installed wheel
    from _hgmatch import (
        BudgetError,
        Hypergraph,
        InputError,
        PreconditionError,
        all_decompositions_json as _all_decompositions_json,
        check_uniformable,
        contract,
        decompose_json as _decompose_json,
        decompositions_pairwise_equivalent,
        find_tight_cut,
        in_matching_polytope,
        is_balanced,
        is_matching_covered,
        is_r_partite,
        is_tight,
        multiply,
        perfect_matchings,
        polytope_integral,
        separating_nontight,
        separating_witness,
        tight_cuts,
    )

__all__ = [
    "BudgetError",
    "Hypergraph",
    "InputError",
    "PreconditionError",
    "all_decompositions",
    "check_uniformable",
    "contract",
    "decompose",
    "decompositions_pairwise_equivalent",
    "find_tight_cut",
    "in_matching_polytope",
    "is_balanced",
    "is_matching_covered",
    "is_r_partite",
    "is_tight",
    "load",
    "multiply",
    "perfect_matchings",
    "polytope_integral",
    "separating_nontight",
    "separating_witness",
    "tight_cuts",
]


def load(source):
    """Hypergraph from a JSON text, a parsed dict, or a file path."""
    if isinstance(source, dict):
        return Hypergraph.from_json(_json.dumps(source))
    text = str(source)
    if not text.lstrip().startswith("{"):
        with open(text, encoding="utf-8") as f:
            text = f.read()
    return Hypergraph.from_json(text)


def decompose(h, strategy="first", seed=0, script=()):
    """One tight cut decomposition as a dict with 'bricks' and 'family'.

    strategy: 'first' (deterministic), 'random' (uses seed), or 'scripted'
    (follows script, a sequence of shores given as vertex-name sequences).
    """
    doc = _decompose_json(h, strategy, seed, [list(s) for s in script])
    return _json.loads(doc)


def all_decompositions(h):
    """Every decomposition reachable over maximal families, as dicts."""
    return _json.loads(_all_decompositions_json(h))
