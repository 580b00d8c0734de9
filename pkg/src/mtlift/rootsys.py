"""Exact root data for the classical types A, B, C and D.

Everything lives in the standard epsilon coordinates with Bourbaki node
numbering.  Coordinates are tuples of :class:`fractions.Fraction`; no
floating point is used anywhere in this module.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction as Q
from typing import Iterable, Tuple

Weight = Tuple[Q, ...]
WeightMultiset = Counter  # Weight -> multiplicity

FAMILIES = ("A", "B", "C", "D")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class UnsupportedRepresentation(ValueError):
    """The requested highest weight is outside the supported list."""


@dataclass(frozen=True, order=True)
class RootDatum:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.family]:
            raise ValueError(f"invalid rank {self.rank!r} for type {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def ambient_dim(self) -> int:
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def check_node(self, s: int) -> None:
        if not isinstance(s, int) or not 1 <= s <= self.rank:
            raise IndexError(f"node {s!r} out of range for {self}")

    @property
    def endpoints(self) -> Tuple[int, ...]:
        """Nodes of valency at most one in the Dynkin diagram."""
        C = cartan_matrix(self)
        n = self.rank
        return tuple(
            i + 1 for i in range(n)
            if sum(1 for j in range(n) if j != i and C[i][j] != 0) <= 1
        )

    @property
    def fork(self) -> Tuple[int, int]:
        if self.family != "D":
            raise ValueError("only type D has a fork")
        return (self.rank - 1, self.rank)


def unit(n: int, i: int) -> Weight:
    return tuple(Q(1) if j == i else Q(0) for j in range(n))


def dot(x: Iterable[Q], y: Iterable[Q]) -> Q:
    x, y = tuple(x), tuple(y)
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(x, y)), Q(0))


def add(x: Weight, y: Weight) -> Weight:
    return tuple(a + b for a, b in zip(x, y))


def scale(c: Q, x: Weight) -> Weight:
    return tuple(c * a for a in x)


def neg(x: Weight) -> Weight:
    return tuple(-a for a in x)


def simple_roots(rd: RootDatum) -> list[Weight]:
    n, k = rd.ambient_dim, rd.rank
    e = lambda i: unit(n, i - 1)  # noqa: E731
    roots = [add(e(i), neg(e(i + 1))) for i in range(1, k)]
    if rd.family == "A":
        roots.append(add(e(k), neg(e(k + 1))))
    elif rd.family == "B":
        roots.append(e(k))
    elif rd.family == "C":
        roots.append(scale(Q(2), e(k)))
    else:
        roots.append(add(e(k - 1), e(k)))
    return roots


def coroot(alpha: Weight) -> Weight:
    return scale(Q(2) / dot(alpha, alpha), alpha)


def cartan_matrix(rd: RootDatum) -> list[list[int]]:
    """``C[i][j] = <alpha_i, alpha_j^vee>`` (Bourbaki convention)."""
    return [list(row) for row in _cartan(rd)]


@lru_cache(maxsize=None)
def _cartan(rd: RootDatum) -> Tuple[Tuple[int, ...], ...]:
    roots = simple_roots(rd)
    out = []
    for a in roots:
        row = []
        for b in roots:
            v = dot(a, coroot(b))
            assert v.denominator == 1
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


def _prefix(n: int, s: int, value: Q = Q(1)) -> list[Q]:
    return [value if i < s else Q(0) for i in range(n)]


def _centre_a(v: list[Q]) -> Weight:
    # project onto the trace-zero hyperplane
    m = sum(v, Q(0)) / len(v)
    return tuple(a - m for a in v)


def fundamental_weight(rd: RootDatum, s: int) -> Weight:
    """The weight with ``<w, alpha_j^vee> = delta_{sj}``."""
    rd.check_node(s)
    n, k, f = rd.ambient_dim, rd.rank, rd.family
    if f == "A":
        return _centre_a(_prefix(n, s))
    half = Q(1, 2)
    if f == "B" and s == k:
        return tuple([half] * k)
    if f == "D" and s == k:
        return tuple([half] * k)
    if f == "D" and s == k - 1:
        return tuple([half] * (k - 1) + [-half])
    return tuple(_prefix(n, s))


@dataclass(frozen=True)
class QuasiCocharacter:
    """A coweight together with a formal root order.

    ``denominator == d`` means the object is a formal ``d``-th root of the
    cocharacter with the given coweight; ``d == 1`` is an honest (possibly
    fractional, for a simply connected group) coweight.
    """

    coweight: Weight
    denominator: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.denominator, int) or self.denominator < 1:
            raise ValueError("denominator must be a positive integer")
        object.__setattr__(self, "coweight", tuple(Q(c) for c in self.coweight))

    def pair(self, w: Weight) -> Q:
        return dot(w, self.coweight) / self.denominator

    @property
    def is_cocharacter(self) -> bool:
        return self.denominator == 1


def fundamental_coweight(rd: RootDatum, i: int) -> QuasiCocharacter:
    """The coweight with ``<alpha_j, c> = delta_{ij}``."""
    rd.check_node(i)
    n, k, f = rd.ambient_dim, rd.rank, rd.family
    if f == "A":
        return QuasiCocharacter(_centre_a(_prefix(n, i)))
    if f == "B":
        return QuasiCocharacter(tuple(_prefix(n, i)))
    if f == "C" and i == k:
        return QuasiCocharacter(tuple([Q(1, 2)] * k))
    # C with i < k and all of D share their shape with the weights
    return QuasiCocharacter(fundamental_weight(rd, i))


def reflect(w: Weight, alpha: Weight) -> Weight:
    c = dot(w, coroot(alpha))
    return tuple(a - c * b for a, b in zip(w, alpha))


def weyl_orbit(rd: RootDatum, w: Weight) -> frozenset:
    w = tuple(Q(a) for a in w)
    if len(w) != rd.ambient_dim:
        raise ValueError("dimension mismatch")
    # walk in integer coordinates: scale by a common denominator; simple roots
    # are integral in epsilon coordinates, so <v, a^vee> stays an integer
    den = math.lcm(*(a.denominator for a in w))
    start = tuple(int(a * den) for a in w)
    roots = []
    for a in simple_roots(rd):
        ai = tuple(int(x) for x in a)
        roots.append((ai, sum(x * x for x in ai)))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for a, aa in roots:
                c2 = 2 * sum(x * y for x, y in zip(v, a))
                if not c2:
                    continue
                c = c2 // aa
                u = tuple(x - c * y for x, y in zip(v, a))
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(tuple(Q(x, den) for x in v) for v in seen)


def supported_highest_weights(rd: RootDatum) -> Tuple[int, ...]:
    k = rd.rank
    if rd.family == "A":
        return tuple(rd.nodes)
    if rd.family == "B":
        return (1, k)
    if rd.family == "C":
        return (1,)
    return tuple(sorted({1, k - 1, k}))


def irrep_weights(rd: RootDatum, s: int) -> WeightMultiset:
    """Weights of the irreducible representation with highest weight ``w_s``.

    Only the minuscule cases and the vector representation of ``B_k`` are
    available; those are all the representations the lift constructions use.
    """
    rd.check_node(s)
    if s not in supported_highest_weights(rd):
        raise UnsupportedRepresentation(
            f"highest weight w_{s} of {rd} is not minuscule or quasi-minuscule in the supported list")
    return Counter(dict(_irrep_weights(rd, s)))


@lru_cache(maxsize=None)
def _irrep_weights(rd: RootDatum, s: int) -> Tuple[Tuple[Weight, int], ...]:
    out: WeightMultiset = Counter(weyl_orbit(rd, fundamental_weight(rd, s)))
    if rd.family == "B" and s == 1:
        out[tuple([Q(0)] * rd.ambient_dim)] += 1
    return tuple(sorted(out.items()))


def pairing_values(weights: WeightMultiset, c: QuasiCocharacter) -> Counter:
    """Multiset of ``<w, c>`` over the weights, with multiplicities."""
    out: Counter = Counter()
    for w, m in weights.items():
        if len(w) != len(c.coweight):
            raise ValueError("dimension mismatch between weights and coweight")
        out[c.pair(w)] += m
    return out


def node_pairings(rd: RootDatum, s: int, node: int) -> Counter:
    """Pairing values of the node-``node`` coweight on the weights of ``w_s``."""
    return Counter(dict(_node_pairings(rd, s, node)))


@lru_cache(maxsize=None)
def _node_pairings(rd: RootDatum, s: int, node: int) -> Tuple[Tuple[Q, int], ...]:
    return tuple(sorted(pairing_values(irrep_weights(rd, s), fundamental_coweight(rd, node)).items()))


def is_self_dual(weights: WeightMultiset) -> bool:
    return all(weights[neg(w)] == m for w, m in weights.items())


def fmt_q(q: Q) -> str:
    """Canonical text form of a rational: ``-3/4``, ``0``, ``5``."""
    q = Q(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_q(text: str) -> Q:
    return Q(text)
