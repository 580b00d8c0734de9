"""Which fundamental representations see a Hodge coweight with two weights."""
from __future__ import annotations

from itertools import combinations
from typing import Dict, FrozenSet, Tuple

from .isogeny import rep_kernel
from .rootsys import (RootDatum, node_pairings,
                      supported_highest_weights)


class NonEndpointNode(ValueError):
    pass


def distinct_values(rd: RootDatum, s: int, node: int) -> list:
    vals = node_pairings(rd, s, node)
    return sorted(vals, reverse=True)


def two_weight_fundamentals(rd: RootDatum, mu_node: int) -> FrozenSet[int]:
    rd.check_node(mu_node)
    if rd.family != "A" and mu_node not in rd.endpoints:
        raise NonEndpointNode(f"node {mu_node} is not an endpoint of {rd}")
    return frozenset(
        s for s in supported_highest_weights(rd)
        if len(distinct_values(rd, s, mu_node)) == 2
    )


TableKey = Tuple[str, int, int]


def table_rows(max_rank: int):
    """``(family, rank, node)`` in emission order: every node for A, endpoints otherwise."""
    if not 2 <= max_rank <= 9:
        raise ValueError("max_rank must lie in 2..9")
    for family, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        for k in range(lo, max_rank + 1):
            rd = RootDatum(family, k)
            nodes = rd.nodes if family == "A" else rd.endpoints
            for node in nodes:
                yield family, k, node


def two_weight_table(max_rank: int) -> Dict[TableKey, FrozenSet[int]]:
    return {(f, k, n): two_weight_fundamentals(RootDatum(f, k), n)
            for f, k, n in table_rows(max_rank)}


def spin_three_weight_obstruction(k: int) -> dict:
    """Distinct weight counts of the node-``k`` coweight on both half-spin representations."""
    if k < 4:
        raise ValueError("k must be at least 4")
    rd = RootDatum("D", k)
    counts = {s: len(distinct_values(rd, s, k)) for s in (k - 1, k)}
    return {"node": k, "reps": (k - 1, k), "min_distinct_values": counts}


def faithful_fundamental_requires_spin(k: int) -> bool:
    """Every set of fundamentals that is faithful on Spin(2k) contains a half-spin weight."""
    if k < 5:
        raise ValueError("k must be at least 5")
    rd = RootDatum("D", k)
    nodes = list(rd.nodes)
    for r in range(1, k + 1):
        for S in combinations(nodes, r):
            if len(rep_kernel(rd, S)) == 1 and not {k - 1, k} & set(S):
                return False
    return True
