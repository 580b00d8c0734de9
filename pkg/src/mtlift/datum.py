"""Combinatorial model of one Q-simple adjoint factor of a Mumford-Tate group.

A factor is a root datum, a finite set ``I`` of embedding labels with a
Galois action (permutations of ``I`` together with diagram automorphisms
between the components), a compact subset ``I_c`` and, on the non-compact
labels, the node of the Dynkin diagram dual to the Hodge cocharacter.
Number fields are never constructed; only this combinatorial shadow is used.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from .isogeny import CoverDescriptor, centre
from .rootsys import RootDatum

NodeMap = Dict[int, int]
Point = Tuple[str, int]   # (embedding label, node)


class MixedNodes(ValueError):
    """A D_k factor (k >= 5) with Hodge nodes both at the tail and at the fork."""


class InconsistentNormalization(ValueError):
    pass


def identity_nodes(rd: RootDatum) -> NodeMap:
    return {n: n for n in rd.nodes}


def main_involution(rd: RootDatum) -> NodeMap:
    """Opposition involution ``-w_0`` on the nodes."""
    k = rd.rank
    if rd.family == "A":
        return {n: k + 1 - n for n in rd.nodes}
    out = identity_nodes(rd)
    if rd.family == "D" and k % 2 == 1:
        out[k - 1], out[k] = k, k - 1
    return out


def diagram_automorphisms(rd: RootDatum) -> list[NodeMap]:
    k = rd.rank
    ident = identity_nodes(rd)
    if rd.family == "A" and k >= 2:
        return [ident, main_involution(rd)]
    if rd.family == "D" and k == 4:
        out = []
        for p in itertools.permutations((1, 3, 4)):
            m = dict(ident)
            m.update(zip((1, 3, 4), p))
            out.append(m)
        return out
    if rd.family == "D":
        swap = dict(ident)
        swap[k - 1], swap[k] = k, k - 1
        return [ident, swap]
    return [ident]


def _freeze(m: Mapping[int, int]) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted(m.items()))


@dataclass(frozen=True)
class GaloisElement:
    """A permutation of ``I`` with, for each ``i``, a node map from component ``i``
    to component ``perm[i]``."""

    perm: Dict[str, str]
    nodes: Dict[str, NodeMap]

    def __call__(self, point: Point) -> Point:
        i, n = point
        return self.perm[i], self.nodes[i][n]

    def compose(self, other: "GaloisElement") -> "GaloisElement":
        """``self`` after ``other``."""
        perm = {i: self.perm[other.perm[i]] for i in other.perm}
        nodes = {i: {n: self.nodes[other.perm[i]][m] for n, m in other.nodes[i].items()}
                 for i in other.perm}
        return GaloisElement(perm, nodes)

    def inverse(self) -> "GaloisElement":
        perm = {j: i for i, j in self.perm.items()}
        nodes = {self.perm[i]: {m: n for n, m in self.nodes[i].items()} for i in self.perm}
        return GaloisElement(perm, nodes)

    @classmethod
    def identity(cls, labels: Iterable[str], rd: RootDatum) -> "GaloisElement":
        labels = list(labels)
        return cls({i: i for i in labels}, {i: identity_nodes(rd) for i in labels})

    def key(self):
        return tuple((i, self.perm[i], _freeze(self.nodes[i])) for i in sorted(self.perm))


@dataclass(frozen=True)
class EmbeddingSet:
    elements: Tuple[str, ...]
    galois_generators: Tuple[GaloisElement, ...]
    conjugation: GaloisElement

    @property
    def all_generators(self) -> Tuple[GaloisElement, ...]:
        return self.galois_generators + (self.conjugation,)


@dataclass(frozen=True)
class MTFactorDatum:
    root_datum: RootDatum
    embeddings: EmbeddingSet
    compact: FrozenSet[str]
    hodge_node: Dict[str, int]
    name: str = ""
    decomposed_flags: Optional[Dict[str, bool]] = None

    @property
    def I(self) -> Tuple[str, ...]:  # noqa: E743
        return tuple(sorted(self.embeddings.elements))

    @property
    def I_c(self) -> Tuple[str, ...]:
        return tuple(sorted(self.compact))

    @property
    def I_nc(self) -> Tuple[str, ...]:
        return tuple(i for i in self.I if i not in self.compact)


def make_datum(family: str, rank: int, labels: Sequence[str],
               generators: Sequence[Tuple[Mapping[str, str], Mapping[str, Mapping[int, int]]]] = (),
               compact: Iterable[str] = (), hodge_nodes: Mapping[str, int] | None = None,
               conjugation_nodes: Mapping[str, Mapping[int, int]] | None = None,
               name: str = "", decomposed_flags=None) -> MTFactorDatum:
    """Build a datum.  Node maps may be partial and are extended by the
    identity; the conjugation defaults to the opposition involution."""
    rd = RootDatum(family, rank)
    labels = tuple(labels)
    def full(m: Mapping[int, int]) -> NodeMap:
        out = identity_nodes(rd)
        out.update(m)
        return out

    gens = []
    for perm, nodes in generators:
        gens.append(GaloisElement(dict(perm), {i: full(nodes.get(i, {})) for i in labels}))
    cn = conjugation_nodes or {}
    conj = GaloisElement({i: i for i in labels},
                         {i: full(cn[i]) if i in cn else main_involution(rd) for i in labels})
    return MTFactorDatum(rd, EmbeddingSet(labels, tuple(gens), conj), frozenset(compact),
                         dict(hodge_nodes or {}), name,
                         dict(decomposed_flags) if decomposed_flags is not None else None)


# -- orbit machinery -------------------------------------------------------

def component_orbit(f: MTFactorDatum, start: str | None = None) -> set:
    start = f.I[0] if start is None else start
    seen, todo = {start}, [start]
    while todo:
        i = todo.pop()
        for g in f.embeddings.all_generators:
            j = g.perm[i]
            if j not in seen:
                seen.add(j)
                todo.append(j)
    return seen


def point_orbits(f: MTFactorDatum, nodes: Iterable[int]) -> list[FrozenSet[Point]]:
    """Orbits of ``(label, node)`` pairs, nodes restricted to ``nodes``."""
    nodes = set(nodes)
    pts = sorted((i, n) for i in f.I for n in nodes)
    seen: set = set()
    out = []
    for p in pts:
        if p in seen:
            continue
        orb, todo = {p}, [p]
        while todo:
            q = todo.pop()
            for g in f.embeddings.all_generators:
                r = g(q)
                if r not in orb:
                    orb.add(r)
                    todo.append(r)
        seen |= orb
        out.append(frozenset(orb))
    return out


def stabilizer_image(f: MTFactorDatum, base: str | None = None) -> list[NodeMap]:
    """Image in ``Aut(diagram)`` of the stabilizer of component ``base``.

    Uses Schreier generators, so only the orbit of ``base`` is walked.
    """
    base = f.I[0] if base is None else base
    rd = f.root_datum
    gens = f.embeddings.all_generators
    trans = {base: GaloisElement.identity(f.I, rd)}
    todo = [base]
    while todo:
        i = todo.pop()
        for g in gens:
            j = g.perm[i]
            if j not in trans:
                trans[j] = g.compose(trans[i])
                todo.append(j)
    schreier = []
    for i, t in trans.items():
        for g in gens:
            s = trans[g.perm[i]].inverse().compose(g).compose(t)
            schreier.append(s.nodes[base])
    # close the finite group of node maps
    elems = {_freeze(identity_nodes(rd)): identity_nodes(rd)}
    todo2 = list(elems.values())
    while todo2:
        a = todo2.pop()
        for b in schreier:
            c = {n: b[a[n]] for n in a}
            if _freeze(c) not in elems:
                elems[_freeze(c)] = c
                todo2.append(c)
    return [elems[k] for k in sorted(elems)]


# -- validation ------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


def allowed_hodge_nodes(rd: RootDatum) -> Tuple[int, ...]:
    """Nodes dual to a minuscule coweight, i.e. possible Hodge nodes."""
    k = rd.rank
    if rd.family == "A":
        return tuple(rd.nodes)
    if rd.family == "B":
        return (1,)
    if rd.family == "C":
        return (k,)
    return tuple(sorted({1, k - 1, k}))


def _is_automorphism(rd: RootDatum, m: Mapping[int, int]) -> bool:
    return any(dict(m) == a for a in diagram_automorphisms(rd))


def validate(f: MTFactorDatum) -> list[Violation]:
    rd = f.root_datum
    out: list[Violation] = []
    labels = f.embeddings.elements
    I = set(labels)
    if not labels:
        return [Violation("labels", "embedding set is empty")]
    if len(I) != len(labels):
        out.append(Violation("labels", "embedding labels are not unique"))
    if rd.family == "D" and rd.rank == 3:
        out.append(Violation("type", "D3 is A3; give the factor as type A"))

    structural = False
    for idx, g in enumerate(f.embeddings.galois_generators):
        if set(g.perm) != I or set(g.perm.values()) != I:
            out.append(Violation("permutation", f"generator {idx} is not a permutation of I"))
            structural = True
            continue
        for i in labels:
            if not _is_automorphism(rd, g.nodes.get(i, {})):
                out.append(Violation("node_action",
                                     f"generator {idx} at {i}: {g.nodes.get(i)} is not a diagram automorphism"))
                structural = True
    conj = f.embeddings.conjugation
    if any(conj.perm.get(i) != i for i in labels):
        out.append(Violation("conjugation", "complex conjugation must act trivially on I"))
        structural = True
    inv = main_involution(rd)
    for i in labels:
        if conj.nodes.get(i) != inv:
            out.append(Violation("opposition_involution",
                                 f"conjugation acts on component {i} by {conj.nodes.get(i)}, "
                                 f"expected the opposition involution {inv}"))
    if structural:
        return out

    if component_orbit(f) != I:
        out.append(Violation("transitivity", "Galois action on I is not transitive"))
    if not f.compact <= I:
        out.append(Violation("compact", f"compact labels {sorted(f.compact - I)} not in I"))
    if not f.I_nc:
        out.append(Violation("orbit", "no non-compact place in orbit"))
    if set(f.hodge_node) != set(f.I_nc):
        out.append(Violation("hodge_nodes",
                             f"Hodge nodes given for {sorted(f.hodge_node)}, non-compact labels are {list(f.I_nc)}"))
    ok_nodes = allowed_hodge_nodes(rd)
    for i, n in sorted(f.hodge_node.items()):
        if n not in ok_nodes:
            out.append(Violation("hodge_node", f"node {n} at {i} is not a Hodge node of {rd}"))
    if out:
        return out

    if rd.family == "D" and rd.rank >= 4:
        vals = set(f.hodge_node.values())
        if rd.rank >= 5 and 1 in vals and vals - {1}:
            out.append(Violation("mixed_nodes", "Hodge nodes both at the tail and at the fork"))
        elif not _stable_sets_disjoint_from_hodge(f):
            out.append(Violation("stable_endpoints",
                                 "no Galois-stable endpoint set avoids the Hodge nodes in every component"))
    flags = f.decomposed_flags
    if flags:
        unknown = set(flags) - {"decomposed", "restriction_form", "isotypic"}
        if unknown:
            out.append(Violation("decomposed_flags", f"unknown flags {sorted(unknown)}"))
        elif flags.get("decomposed") and not (flags.get("restriction_form") and flags.get("isotypic")):
            out.append(Violation("decomposed_flags",
                                 "decomposed requires restriction_form and isotypic"))
    return out


def _hodge_points(f: MTFactorDatum) -> set:
    return {(i, n) for i, n in f.hodge_node.items()}


def _disjoint_endpoint_orbits(f: MTFactorDatum) -> list[FrozenSet[Point]]:
    delta = _hodge_points(f)
    return [o for o in point_orbits(f, f.root_datum.endpoints) if not o & delta]


def _stable_sets_disjoint_from_hodge(f: MTFactorDatum) -> bool:
    covered = {i for o in _disjoint_endpoint_orbits(f) for i, _ in o}
    return covered == set(f.I)


# -- type D subtypes -------------------------------------------------------

@dataclass(frozen=True)
class SubtypeVerdict:
    subtype: str                         # "D_R", "D_H" or "not_D"
    witness: Tuple[Point, ...] = ()
    note: str = ""

    def revalidate(self, f: MTFactorDatum) -> bool:
        """Recheck the witness against ``f``."""
        rd = f.root_datum
        if self.subtype == "not_D":
            return rd.family != "D"
        k = rd.rank
        if k >= 5:
            nodes = set(f.hodge_node.values())
            return nodes == {1} if self.subtype == "D_R" else 1 not in nodes
        wit = set(self.witness)
        if self.subtype == "D_R":
            per = {i: sum(1 for j, _ in wit if j == i) for i in f.I}
            stable = all(g(p) in wit for p in wit for g in f.embeddings.all_generators)
            return stable and not wit & _hodge_points(f) and set(per.values()) == {2}
        return _search_delta_max(f)[0] is None


def _search_delta_max(f: MTFactorDatum):
    orbits = sorted(_disjoint_endpoint_orbits(f), key=lambda o: sorted(o))
    best = None
    tried = 0
    for r in range(len(orbits) + 1):
        for combo in itertools.combinations(orbits, r):
            tried += 1
            pts = frozenset().union(*combo)
            counts = {i: 0 for i in f.I}
            for i, _ in pts:
                counts[i] += 1
            if set(counts.values()) == {2}:
                cand = tuple(sorted(pts))
                if best is None or cand < best:
                    best = cand
    return best, tried


def classify_D(f: MTFactorDatum) -> SubtypeVerdict:
    rd = f.root_datum
    if rd.family != "D":
        return SubtypeVerdict("not_D")
    k = rd.rank
    if k < 4:
        raise ValueError("subtype classification needs k >= 4")
    nodes = set(f.hodge_node.values())
    if k >= 5:
        if nodes == {1}:
            return SubtypeVerdict("D_R", tuple(sorted(f.hodge_node.items())),
                                  "all Hodge nodes are 1")
        if 1 in nodes:
            raise MixedNodes(f"{f.name or rd}: Hodge nodes {sorted(f.hodge_node.items())} mix tail and fork")
        return SubtypeVerdict("D_H", tuple(sorted(f.hodge_node.items())),
                              "no Hodge node is 1")
    best, tried = _search_delta_max(f)
    if best is not None:
        return SubtypeVerdict("D_R", best, "Galois-stable two-endpoint set avoiding the Hodge nodes")
    return SubtypeVerdict("D_H", (), f"exhausted {tried} unions of endpoint orbits")


def vector_endpoints(f: MTFactorDatum) -> Dict[str, int]:
    """For a D_H factor, the endpoint carrying the vector representation per component."""
    rd = f.root_datum
    if rd.family != "D" or rd.rank < 4:
        raise ValueError("vector endpoints are defined for type D_k, k >= 4")
    if rd.rank >= 5:
        return {i: 1 for i in f.I}
    pts = {p for o in _disjoint_endpoint_orbits(f) for p in o}
    out: Dict[str, int] = {}
    for i, n in sorted(pts):
        if i in out:
            raise InconsistentNormalization(f"component {i} has several candidate vector endpoints")
        out[i] = n
    if set(out) != set(f.I):
        raise InconsistentNormalization("no Galois-stable endpoint orbit avoids the Hodge nodes")
    return out


def relabel(f: MTFactorDatum, sigma: Mapping[str, Mapping[int, int]]) -> MTFactorDatum:
    """Apply per-component diagram automorphisms ``sigma`` to the node labels."""
    def conj(g: GaloisElement) -> GaloisElement:
        nodes = {i: {sigma[i][n]: sigma[g.perm[i]][m] for n, m in g.nodes[i].items()}
                 for i in g.perm}
        return GaloisElement(dict(g.perm), nodes)

    E = f.embeddings
    emb = EmbeddingSet(E.elements, tuple(conj(g) for g in E.galois_generators), conj(E.conjugation))
    hodge = {i: sigma[i][n] for i, n in f.hodge_node.items()}
    return replace(f, embeddings=emb, hodge_node=hodge)


def normalizing_relabeling(f: MTFactorDatum) -> Dict[str, NodeMap]:
    """Per-component relabeling sending every Hodge node to ``k`` (and, for
    ``D_4``, the vector endpoint to ``1``)."""
    rd = f.root_datum
    k = rd.rank
    if rd.family != "D" or k < 4:
        raise InconsistentNormalization("normalization applies to type D_k, k >= 4")
    if k >= 5 and 1 in f.hodge_node.values():
        raise InconsistentNormalization("a Hodge node sits at the tail; the factor is not of type D_H")
    vec = vector_endpoints(f)
    sigma = {}
    for i in f.I:
        if k >= 5:
            m = identity_nodes(rd)
            if f.hodge_node.get(i) == k - 1:
                m[k - 1], m[k] = k, k - 1
            sigma[i] = m
            continue
        v = vec[i]
        rest = sorted({1, 3, 4} - {v})
        h = f.hodge_node.get(i)
        if h is not None:
            if h == v:
                raise InconsistentNormalization(f"Hodge node of {i} is its vector endpoint")
            other = [n for n in rest if n != h][0]
            target = {v: 1, other: 3, h: 4}
        else:
            target = {v: 1, rest[0]: 3, rest[1]: 4}
        m = identity_nodes(rd)
        m.update(target)
        sigma[i] = m
    return sigma


def normalize_hodge_nodes(f: MTFactorDatum) -> MTFactorDatum:
    return relabel(f, normalizing_relabeling(f))


def fork_field_degree(f: MTFactorDatum) -> int:
    """``[K:K_0]``: whether the stabilizer of a component moves its fork."""
    rd = f.root_datum
    img = stabilizer_image(f)
    if len(img) == 1:
        return 1
    vec = vector_endpoints(f)[f.I[0]]
    if len(img) == 2 and all(m[vec] == vec for m in img):
        return 2
    raise InconsistentNormalization(
        f"stabilizer of a component acts on {rd} through a group of order {len(img)}")


# -- essential unliftability ----------------------------------------------

def expected_cover_kernel(f: MTFactorDatum):
    rd = f.root_datum
    Z = centre(rd)
    n = len(f.I)
    if classify_D(f).subtype == "D_H":
        vec = vector_endpoints(f)
        kers = [Z.kernel_of(vec[i]) for i in f.I]
    else:
        kers = [frozenset([Z.identity])] * n
    return frozenset(itertools.product(*kers))


def is_essentially_unliftable(factors: Sequence[MTFactorDatum],
                              covers: Sequence[CoverDescriptor]) -> Tuple[bool, list[str]]:
    if len(factors) != len(covers):
        raise ValueError("factors and covers are misaligned")
    report = []
    for idx, (f, c) in enumerate(zip(factors, covers)):
        tag = f.name or f"factor {idx}"
        if (c.family, c.rank) != (f.root_datum.family, f.root_datum.rank) or c.components != len(f.I):
            report.append(f"{tag}: cover is for {c.family}{c.rank}^{c.components}")
            continue
        want = expected_cover_kernel(f)
        if c.kernel != want:
            kind = "h-maximal" if len(want) > 1 else "simply connected"
            report.append(f"{tag}: cover kernel of order {c.kernel_order} is not the {kind} one")
    return not report, report
