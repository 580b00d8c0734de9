"""Seeded random factor data for the property suites."""
from __future__ import annotations

import random

from mtlift.datum import classify_D, diagram_automorphisms, make_datum, relabel, validate
from mtlift.rootsys import RootDatum

LABELS = "abcd"


def _hodge_choices(family, k):
    return {"A": list(range(1, k + 1)), "B": [1], "C": [k], "D": [1, k - 1, k]}[family]


def random_factor(rng: random.Random, family: str, k: int, n: int, fork_bias: float = 0.0):
    """One random factor, possibly invalid.  ``fork_bias`` is the probability
    that every Hodge node of a type D factor is drawn from the fork."""
    rd = RootDatum(family, k)
    auts = diagram_automorphisms(rd)
    labels = LABELS[:n]
    order = list(labels)
    rng.shuffle(order)
    cycle = {order[j]: order[(j + 1) % n] for j in range(n)}
    gens = [(cycle, {i: rng.choice(auts) for i in labels})]
    for _ in range(rng.randint(0, 2)):
        p = list(labels)
        rng.shuffle(p)
        gens.append((dict(zip(labels, p)), {i: rng.choice(auts) for i in labels}))
    compact = {i for i in labels if rng.random() < 0.3}
    if compact == set(labels):
        compact.discard(rng.choice(labels))
    nodes = _hodge_choices(family, k)
    if family == "D" and rng.random() < fork_bias:
        nodes = [k - 1, k] if k >= 5 else [3, 4]
    hodge = {i: rng.choice(nodes) for i in labels if i not in compact}
    f = make_datum(family, k, labels, gens, compact, hodge, name=f"{family}{k}-{n}")
    hidden = {i: rng.choice(auts) for i in labels}
    return relabel(f, hidden)


def normalized_dh_candidate(rng: random.Random, k: int, n: int):
    """Random datum with Hodge nodes at ``k`` and node maps fixing node 1,
    hidden behind a random per-component relabeling."""
    rd = RootDatum("D", k)
    auts = diagram_automorphisms(rd)
    keep = [a for a in auts if a[1] == 1]
    labels = LABELS[:n]
    order = list(labels)
    rng.shuffle(order)
    cycle = {order[j]: order[(j + 1) % n] for j in range(n)}
    gens = [(cycle, {i: rng.choice(keep) for i in labels})]
    for _ in range(rng.randint(0, 2)):
        p = list(labels)
        rng.shuffle(p)
        gens.append((dict(zip(labels, p)), {i: rng.choice(keep) for i in labels}))
    compact = {i for i in labels if rng.random() < 0.3}
    if compact == set(labels):
        compact.discard(rng.choice(labels))
    hodge = {i: k for i in labels if i not in compact}
    f = make_datum("D", k, labels, gens, compact, hodge, name=f"D{k}-{n}")
    return relabel(f, {i: rng.choice(auts) for i in labels})


def dh_corpus(per_rank: int = 40, seed: int = 20240601):
    """Valid D_k^H factors, ``per_rank`` for each k in 4..9."""
    rng = random.Random(seed)
    out = []
    for k in range(4, 10):
        got = 0
        while got < per_rank:
            n = rng.randint(1, 4)
            if rng.random() < 0.5:
                f = normalized_dh_candidate(rng, k, n)
            else:
                f = random_factor(rng, "D", k, n, fork_bias=0.9)
            if validate(f) or classify_D(f).subtype != "D_H":
                continue
            out.append(f)
            got += 1
    return out


GENERAL_SHAPES = ([("A", k) for k in range(1, 7)] + [("B", k) for k in range(2, 7)]
                  + [("C", k) for k in range(2, 7)] + [("D", k) for k in range(4, 9)])


def general_corpus(per_shape: int = 6, seed: int = 7):
    """Valid factors for every family; type D includes both subtypes."""
    rng = random.Random(seed)
    out = []
    for family, k in GENERAL_SHAPES:
        want = {"D_R": per_shape, "D_H": per_shape} if family == "D" else {"not_D": per_shape}
        tries = 0
        while any(want.values()) and tries < 5000:
            tries += 1
            f = random_factor(rng, family, k, rng.randint(1, 3),
                              fork_bias=0.5 if family == "D" else 0.0)
            if validate(f):
                continue
            sub = classify_D(f).subtype
            if want.get(sub, 0) > 0:
                want[sub] -= 1
                out.append(f)
    return out
