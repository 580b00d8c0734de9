import pytest

import oracles
from mtlift.rootsys import RootDatum
from mtlift.twoweight import (NonEndpointNode, faithful_fundamental_requires_spin,
                              spin_three_weight_obstruction, table_rows, two_weight_fundamentals,
                              two_weight_table)


def brute(family, k, node):
    return {s for s in oracles.supported(family, k)
            if len(oracles.distinct_pairings(family, k, s, node)) == 2}


@pytest.mark.parametrize("family,k,node,want", [
    ("B", 3, 1, {3}), ("C", 3, 3, {1}), ("A", 4, 1, {1, 2, 3, 4}), ("A", 4, 2, {1, 4}),
    ("D", 6, 1, {5, 6}), ("D", 4, 4, {1, 3}), ("A", 1, 1, {1}),
])
def test_named_rows(family, k, node, want):
    assert two_weight_fundamentals(RootDatum(family, k), node) == want


@pytest.mark.parametrize("family,k", [("A", 5), ("B", 4), ("C", 4), ("D", 5), ("D", 4)])
def test_rows_match_brute_force(family, k):
    rd = RootDatum(family, k)
    nodes = rd.nodes if family == "A" else rd.endpoints
    for node in nodes:
        assert two_weight_fundamentals(rd, node) == brute(family, k, node)


def test_interior_nodes_rejected_outside_type_a():
    with pytest.raises(NonEndpointNode):
        two_weight_fundamentals(RootDatum("D", 6), 3)
    with pytest.raises(NonEndpointNode):
        two_weight_fundamentals(RootDatum("B", 4), 2)


def test_table_shape():
    rows = list(table_rows(4))
    assert rows[0] == ("A", 1, 1)
    assert ("D", 4, 4) in rows and ("D", 5, 1) not in rows
    assert sum(1 for r in rows if r[0] == "A") == 1 + 2 + 3 + 4
    t = two_weight_table(4)
    assert t["D", 4, 4] == {1, 3}
    assert all(t["B", k, 1] == {k} for k in (2, 3, 4))
    with pytest.raises(ValueError):
        list(table_rows(1))


def test_obstruction_counts():
    assert spin_three_weight_obstruction(5)["min_distinct_values"] == {4: 3, 5: 3}
    assert spin_three_weight_obstruction(6)["min_distinct_values"] == {5: 3, 6: 4}
    r = spin_three_weight_obstruction(4)
    assert r["min_distinct_values"] == {3: 2, 4: 3}
    assert r["node"] == 4 and r["reps"] == (3, 4)


@pytest.mark.parametrize("k", [5, 6, 7])
def test_faithful_needs_spin(k):
    assert faithful_fundamental_requires_spin(k)


def test_faithful_needs_spin_domain():
    with pytest.raises(ValueError):
        faithful_fundamental_requires_spin(4)
