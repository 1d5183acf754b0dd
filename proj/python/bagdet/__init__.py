"""Bag-semantics view determinacy toolkit.

Thin wrapper over the native module: decide determinacy of boolean
conjunctive queries, synthesize verified counterexample database pairs,
decide path-query determinacy, and encode polynomial equations as
determinacy instances.
"""

from ._bagdet import (
    decide,
    decide_path,
    eval_queries,
    h10_encode,
    h10_witness,
    hom_count,
    path_witness,
)

__all__ = [
    "decide",
    "decide_path",
    "eval_queries",
    "h10_encode",
    "h10_witness",
    "hom_count",
    "path_witness",
]
