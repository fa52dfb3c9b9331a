"""Balanced bipartite digraphs: degree conditions, exact cycle search, matchings
and population-level theorem checks.

Reports and verdicts come back as plain dicts decoded from the same JSON the
``bbd`` command-line tool writes.
"""

import json

from ._bbd import (
    ContractViolation,
    Graph,
    ParseError,
    ResourceLimit,
    canonical_form,
    dominating_pairs,
    even_spectrum,
    export_dot,
    generate,
    hall_violator,
    hamiltonian_cycle,
    is_isomorphic,
    is_strong,
    max_bk,
    parse_graph,
)
from . import _bbd

__all__ = [
    "ContractViolation",
    "Graph",
    "ParseError",
    "ResourceLimit",
    "canonical_form",
    "check",
    "dominating_pairs",
    "even_spectrum",
    "export_dot",
    "generate",
    "hall_violator",
    "hamiltonian_cycle",
    "is_isomorphic",
    "is_strong",
    "max_bk",
    "parse_graph",
    "verify",
]


def check(graph, budget=None):
    """Full property report of one graph, as a dict."""
    args = {} if budget is None else {"budget": budget}
    return json.loads(_bbd.check_json(graph, **args))


def verify(theorem, *, sample=None, exhaustive_a=None, workers=1, min_order=None, budget=None):
    """Check a theorem over a population.

    ``sample`` is a dict with keys ``a``, ``p``, ``seed`` and ``count``; the
    theorem's hypotheses are applied as sampling constraints. Alternatively
    pass ``exhaustive_a`` (at most 3) to enumerate every arc set.
    """
    if (sample is None) == (exhaustive_a is None):
        raise ValueError("pass exactly one of sample= or exhaustive_a=")
    extra = {} if budget is None else {"budget": budget}
    if sample is not None:
        text = _bbd.verify_sample_json(
            theorem, sample["a"], sample["p"], sample["seed"], sample["count"],
            workers=workers, min_order=min_order, **extra)
    else:
        text = _bbd.verify_exhaustive_json(
            theorem, exhaustive_a, workers=workers, min_order=min_order, **extra)
    return json.loads(text)
