"""Weak Mumford-Tate lifts as weight bookkeeping.

Two constructions are provided:

* :func:`general_weak_lift` -- the essentially unliftable lift: simply
  connected (or, for ``D_k^H``, h-maximal) derived group, a central torus
  recentring every two-weight block to ``+-1/2`` and a CM torus ``L^x``
  shifting the result to weights ``{0, 1}``.
* :func:`dkh_lift` -- the simply connected lift of a ``D_k^H`` factor using
  both half-spin representations and a norm-one CM torus whose quarter- or
  half-integral exponents make every total weight integral.

Fields and tori are modelled by their embedding combinatorics only.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, Sequence, Tuple

from .datum import (MTFactorDatum, classify_D, fork_field_degree, normalizing_relabeling,
                    relabel, validate, vector_endpoints)
from .isogeny import CoverDescriptor, h_maximal_cover, simply_connected_cover
from .rootsys import fundamental_coweight, irrep_weights, node_pairings

HALF = Q(1, 2)
QUARTER = Q(1, 4)

GENERAL = "general_ABCD"
DKH_CASES = ("k_even_K_eq_K0", "k_even_K_quadratic", "k_odd")

Multiset = Tuple[Tuple[Q, int], ...]


class InvalidDatum(ValueError):
    pass


class TwoWeightViolation(ValueError):
    pass


class UnsupportedType(ValueError):
    pass


class NormalizationRequired(ValueError):
    pass


class IntegralityFailure(AssertionError):
    pass


def _ms(c: Counter) -> Multiset:
    return tuple(sorted(((Q(v), m) for v, m in c.items() if m), reverse=True))


def _shift(ms: Multiset, by: Q) -> Multiset:
    return tuple((v + by, m) for v, m in ms)


@dataclass(frozen=True)
class TorusDescriptor:
    kind: str                      # "norm_one_CM" or "full_CM"
    base: Tuple[str, ...]          # I, or the lifted index set
    coordinates: Tuple[str, ...]   # one per complex G_m factor
    real_compact: bool
    factor: int = 0
    label: str = ""


@dataclass(frozen=True)
class RepBlock:
    factor: int
    index: str
    lifted_index: str
    highest_weights: Tuple[int, ...]
    node: int                      # Hodge node, 0 on compact labels
    cochar_weights: Multiset
    central_exponent: Q
    torus_line: str
    torus_exponent: Q

    @property
    def corrected_weights(self) -> Multiset:
        return _shift(self.cochar_weights, self.central_exponent)

    @property
    def total_weights(self) -> Multiset:
        return _shift(self.cochar_weights, self.central_exponent + self.torus_exponent)

    @property
    def compact(self) -> bool:
        return self.node == 0


@dataclass(frozen=True)
class Certificate:
    factor: int
    kind: str                      # "hodge_01" or "integral"
    holds: bool
    blocks_checked: int
    totals: Tuple[Q, ...]


@dataclass(frozen=True)
class LiftDescriptor:
    factors: Tuple[Tuple[MTFactorDatum, CoverDescriptor], ...] = ()
    tori: Tuple[TorusDescriptor, ...] = ()
    blocks: Tuple[RepBlock, ...] = ()
    case_tags: Tuple[str, ...] = ()
    certificates: Tuple[Certificate, ...] = ()
    conjugate_lines: Tuple[Tuple[str, str], ...] = ()
    hodge_coweights: Tuple[Tuple[int, str, int, Tuple[Q, ...]], ...] = ()
    relabelings: Tuple[Tuple[int, str, Tuple[Tuple[int, int], ...]], ...] = ()
    flags: Tuple[Tuple[int, str], ...] = ()

    @property
    def case_tag(self) -> str:
        if len(self.case_tags) != 1:
            raise ValueError("case_tag is only defined for a single-factor descriptor")
        return self.case_tags[0]

    @property
    def torus(self) -> Tuple[TorusDescriptor, ...]:
        return self.tori

    @property
    def covers(self) -> Tuple[CoverDescriptor, ...]:
        return tuple(c for _, c in self.factors)

    @property
    def derived_simply_connected(self) -> bool:
        return all(c.label == "simply_connected" for c in self.covers)

    def blocks_of(self, factor: int) -> Tuple[RepBlock, ...]:
        return tuple(b for b in self.blocks if b.factor == factor)

    def total_weights(self) -> Tuple[Multiset, ...]:
        return tuple(b.total_weights for b in self.blocks)

    def has_flag(self, factor: int, flag: str) -> bool:
        return (factor, flag) in self.flags

    @property
    def integral(self) -> bool:
        return all(c.holds for c in self.certificates)


def concat(parts: Sequence[LiftDescriptor]) -> LiftDescriptor:
    """Product of per-factor descriptors, in input order."""
    def cat(name):
        return tuple(x for p in parts for x in getattr(p, name))
    return LiftDescriptor(*(cat(n) for n in LiftDescriptor.__dataclass_fields__))


def _check_valid(f: MTFactorDatum) -> None:
    errs = validate(f)
    if errs:
        raise InvalidDatum("; ".join(map(str, errs)))


def _certify(factor: int, blocks: Sequence[RepBlock], kind: str) -> Certificate:
    totals = sorted({v for b in blocks for v, _ in b.total_weights}, reverse=True)
    if kind == "integral":
        holds = all(v.denominator == 1 for v in totals)
    else:
        holds = set(totals) <= {Q(0), Q(1)}
    return Certificate(factor, kind, holds, len(blocks), tuple(totals))


def block_highest_weights(f: MTFactorDatum) -> Dict[str, Tuple[int, ...]]:
    """Highest weights of the faithful two-weight representation on each component."""
    rd = f.root_datum
    k = rd.rank
    fam = rd.family
    if fam == "A":
        hw = (1, k) if k >= 2 else (1,)
        return {i: hw for i in f.I}
    if fam == "B":
        return {i: (k,) for i in f.I}
    if fam == "C":
        return {i: (1,) for i in f.I}
    if k < 4:
        raise UnsupportedType("D3 factors must be given as type A3")
    verdict = classify_D(f)
    if verdict.subtype == "D_H":
        vec = vector_endpoints(f)
        return {i: (vec[i],) for i in f.I}
    if k >= 5:
        return {i: (k - 1, k) for i in f.I}
    return {i: tuple(sorted(n for j, n in verdict.witness if j == i)) for i in f.I}


def general_weak_lift(f: MTFactorDatum, factor: int = 0) -> LiftDescriptor:
    _check_valid(f)
    rd = f.root_datum
    hws = block_highest_weights(f)
    is_dh = rd.family == "D" and classify_D(f).subtype == "D_H"
    if is_dh:
        vec = vector_endpoints(f)
        cover = h_maximal_cover(rd, [vec[i] for i in f.I], len(f.I))
    else:
        cover = simply_connected_cover(rd, len(f.I))

    raw = []   # (index, s, node, weights, central)
    for i in f.I:
        node = f.hodge_node.get(i, 0)
        for s in hws[i]:
            W = irrep_weights(rd, s)
            if node:
                vals = node_pairings(rd, s, node)
                lo, hi = min(vals), max(vals)
                if len(vals) != 2 or hi - lo != 1:
                    raise TwoWeightViolation(
                        f"{rd} node {node}: w_{s} has weights {sorted(vals)}, not r and r+1")
                central = -(lo + HALF)
            else:
                vals = Counter({Q(0): sum(W.values())})
                central = Q(0)
            raw.append((i, s, node, _ms(vals), central))

    flags = [(factor, "centre_shrunk")]
    if all(c == 0 for *_, c in raw):
        flags.append((factor, "intermediate_group_skipped"))

    lines = []
    blocks = []
    for i, s, node, ms, central in raw:
        exps = (HALF, HALF) if node else (Q(1), Q(0))
        for j, e in enumerate(exps):
            line = f"L:{i}:{j}"
            blocks.append(RepBlock(factor, i, "", (s,), node, ms, central, line, e))
    for i in f.I:
        lines += [f"L:{i}:0", f"L:{i}:1"]
    torus = TorusDescriptor("full_CM", f.I, tuple(lines), False, factor, "L^x")
    cert = _certify(factor, blocks, "hodge_01")
    if not cert.holds:
        raise IntegralityFailure(f"general lift of {rd} has totals {cert.totals}")
    coweights = tuple((factor, i, n, fundamental_coweight(rd, n).coweight)
                      for i, n in sorted(f.hodge_node.items()))
    return LiftDescriptor(((f, cover),), (torus,), tuple(blocks), (GENERAL,), (cert,), (),
                          coweights, (), tuple(flags))


def _is_normalized(f: MTFactorDatum) -> bool:
    k = f.root_datum.rank
    if any(n != k for n in f.hodge_node.values()):
        return False
    return k >= 5 or all(v == 1 for v in vector_endpoints(f).values())


def dkh_lift(f: MTFactorDatum, factor: int = 0) -> LiftDescriptor:
    _check_valid(f)
    rd = f.root_datum
    k = rd.rank
    if rd.family != "D" or classify_D(f).subtype != "D_H":
        raise UnsupportedType(f"{f.name or rd} is not of type D_k^H")
    if not _is_normalized(f):
        raise NormalizationRequired("normalize the Hodge nodes to the fork endpoint k first")
    degree = fork_field_degree(f)
    if k % 2:
        assert degree == 2, "complex conjugation swaps the fork for odd k"
        case = "k_odd"
    else:
        case = "k_even_K_eq_K0" if degree == 1 else "k_even_K_quadratic"

    nu = fundamental_coweight(rd, k)
    weights = {}
    for i in f.I:
        for s in (k - 1, k):
            W = irrep_weights(rd, s)
            if i in f.compact:
                weights[i, s] = _ms(Counter({Q(0): sum(W.values())}))
            else:
                weights[i, s] = _ms(node_pairings(rd, s, k))

    blocks = []
    tori = []
    conj_lines = []
    node = lambda i: 0 if i in f.compact else k  # noqa: E731

    if case == "k_even_K_eq_K0":
        # first norm-one factor on the w_{k-1} part, second on the w_k part
        tilted = (k - 1) if k % 4 == 0 else k
        for j, s in ((1, k - 1), (2, k)):
            coords = []
            for i in f.I:
                e = HALF if (node(i) and s == tilted) else Q(0)
                plus, minus = f"T{j}:{i}:+", f"T{j}:{i}:-"
                coords.append(f"T{j}:{i}")
                conj_lines.append((plus, minus))
                for line, ee in ((plus, e), (minus, -e)):
                    blocks.append(RepBlock(factor, i, "", (s,), node(i), weights[i, s],
                                           Q(0), line, ee))
            tori.append(TorusDescriptor("norm_one_CM", f.I, tuple(coords), True, factor, f"T_L[{j}]"))
    elif case == "k_even_K_quadratic":
        lifted = []
        for i in f.I:
            for s in (k - 1, k):
                lt = f"{i}/{s}"
                lifted.append(lt)
                ms = weights[i, s]
                half_int = node(i) and ms[0][0].denominator == 2
                e = HALF if half_int else Q(0)
                plus, minus = f"{lt}:+", f"{lt}:-"
                conj_lines.append((plus, minus))
                for line, ee in ((plus, e), (minus, -e)):
                    blocks.append(RepBlock(factor, i, lt, (s,), node(i), ms, Q(0), line, ee))
        tori.append(TorusDescriptor("norm_one_CM", tuple(lifted), tuple(lifted), True, factor, "T_L"))
    else:
        lifted, first = [], []
        for i in f.I:
            if node(i):
                quarter = [s for s in (k - 1, k) if (weights[i, s][0][0] - QUARTER).denominator == 1]
                assert len(quarter) == 1
                s1 = quarter[0]
            else:
                s1 = k - 1  # least section over the compact labels
            s2 = (2 * k - 1) - s1
            first.append(f"{i}/{s1}")
            conj_lines.append((f"{i}/{s1}", f"{i}/{s2}"))
            for s in (k - 1, k):
                lt = f"{i}/{s}"
                lifted.append(lt)
                e = Q(0) if not node(i) else (-QUARTER if s == s1 else QUARTER)
                blocks.append(RepBlock(factor, i, lt, (s,), node(i), weights[i, s], Q(0), lt, e))
        tori.append(TorusDescriptor("norm_one_CM", tuple(lifted), tuple(first), True, factor, "T_L"))

    cert = _certify(factor, blocks, "integral")
    if not cert.holds:
        raise IntegralityFailure(f"{case}: non-integral totals {cert.totals}")
    for i in f.I_nc:
        for s in (k - 1, k):
            again = _ms(node_pairings(rd, s, f.hodge_node[i]))
            if again != weights[i, s]:
                raise IntegralityFailure("nu does not lift the Hodge coweight")
    coweights = tuple((factor, i, k, nu.coweight) for i in f.I_nc)
    cover = simply_connected_cover(rd, len(f.I))
    return LiftDescriptor(((f, cover),), tuple(tori), tuple(blocks), (case,), (cert,),
                          tuple(conj_lines), coweights, (), ((factor, "centre_shrunk"),))


def abelianized_hodge(ld: LiftDescriptor) -> Tuple[Tuple[str, Q, str, Q], ...]:
    """Exponents of ``mu^ab`` on each conjugate pair of torus lines.

    Raises if a pair does not sum to zero (the weight of ``h^ab`` must be trivial).
    """
    exps: Dict[str, Q] = {}
    for b in ld.blocks:
        if exps.setdefault(b.torus_line, b.torus_exponent) != b.torus_exponent:
            raise ValueError(f"line {b.torus_line} carries two exponents")
    rows = []
    for a, b in ld.conjugate_lines:
        row = (a, exps[a], b, exps[b])
        if exps[a] + exps[b] != 0:
            raise ValueError(f"conjugate pair {a}, {b} has nonzero weight")
        rows.append(row)
    return tuple(rows)


def simply_connected_lift(f: MTFactorDatum, factor: int = 0) -> LiftDescriptor:
    """Normalize and run :func:`dkh_lift` on a ``D_k^H`` factor, else the general lift."""
    _check_valid(f)
    rd = f.root_datum
    if rd.family == "D" and classify_D(f).subtype == "D_H":
        sigma = normalizing_relabeling(f)
        ld = dkh_lift(relabel(f, sigma), factor)
        rel = tuple((factor, i, tuple(sorted(sigma[i].items()))) for i in f.I)
        return LiftDescriptor(ld.factors, ld.tori, ld.blocks, ld.case_tags, ld.certificates,
                              ld.conjugate_lines, ld.hodge_coweights, rel, ld.flags)
    return general_weak_lift(f, factor)


def assemble(factors: Sequence[MTFactorDatum]) -> LiftDescriptor:
    """Product lift with simply connected derived group."""
    ld = concat([simply_connected_lift(f, idx) for idx, f in enumerate(factors)])
    assert ld.derived_simply_connected
    return ld


def unliftable_lift(factors: Sequence[MTFactorDatum]) -> LiftDescriptor:
    """Product of the essentially unliftable lifts of each factor."""
    return concat([general_weak_lift(f, idx) for idx, f in enumerate(factors)])
