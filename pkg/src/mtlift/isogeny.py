"""Centres of simply connected classical groups and their quotients.

The centre of the simply connected group with root datum ``rd`` is the
Cartier dual of ``P/Q`` (weight lattice modulo root lattice).  We write
``P/Q`` as ``Z/d_1 x ... x Z/d_r`` and identify the centre with the same
product, an element ``z`` acting on the representation of highest weight
``w_s`` through ``exp(2 pi i sum_j z_j c_j / d_j)``, where ``c`` is the class
of ``w_s``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, FrozenSet, Iterable, Sequence, Tuple

from .rootsys import RootDatum, cartan_matrix

Element = Tuple[int, ...]


def smith_normal_form(M: Sequence[Sequence[int]]):
    """Return ``(D, U, V)`` with ``U @ M @ V == D`` diagonal and ``d_i | d_{i+1}``.

    ``U`` and ``V`` are unimodular.  Plain lists of ints; sizes here are tiny.
    """
    A = [list(r) for r in M]
    m, n = len(A), len(A[0])
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(X, i, j):
        X[i], X[j] = X[j], X[i]

    def swap_cols(X, i, j):
        for r in X:
            r[i], r[j] = r[j], r[i]

    def add_row(X, src, dst, c):
        X[dst] = [a + c * b for a, b in zip(X[dst], X[src])]

    def add_col(X, src, dst, c):
        for r in X:
            r[dst] += c * r[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(A, t, i); swap_rows(U, t, i)
        swap_cols(A, t, j); swap_cols(V, t, j)
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // A[t][t]
                if q:
                    add_row(A, t, i, -q); add_row(U, t, i, -q)
                if A[i][t]:
                    swap_rows(A, t, i); swap_rows(U, t, i)
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // A[t][t]
                if q:
                    add_col(A, t, j, -q); add_col(V, t, j, -q)
                if A[t][j]:
                    swap_cols(A, t, j); swap_cols(V, t, j)
                    done = False
            if done:
                # enforce divisibility against the rest of the block
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % A[t][t]:
                            add_row(A, i, t, 1); add_row(U, i, t, 1)
                            done = False
                            break
                    if not done:
                        break
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return A, U, V


@dataclass(frozen=True)
class CentreDescriptor:
    family: str
    rank: int
    group: Tuple[int, ...]                    # invariant factors, all > 1
    char_of_fundamental: Dict[int, Element]   # class of w_s in P/Q

    @property
    def order(self) -> int:
        out = 1
        for d in self.group:
            out *= d
        return out

    def elements(self) -> list[Element]:
        return [tuple(x) for x in itertools.product(*(range(d) for d in self.group))]

    @property
    def identity(self) -> Element:
        return tuple(0 for _ in self.group)

    def character(self, z: Element, s: int) -> Q:
        """Value of the central character of ``w_s`` at ``z``, in ``Q/Z``."""
        c = self.char_of_fundamental[s]
        return sum((Q(a * b, d) for a, b, d in zip(z, c, self.group)), Q(0)) % 1

    def kernel_of(self, s: int) -> FrozenSet[Element]:
        return frozenset(z for z in self.elements() if self.character(z, s) == 0)

    def __str__(self) -> str:
        return " x ".join(f"Z/{d}" for d in self.group) or "1"


def centre(rd: RootDatum) -> CentreDescriptor:
    C = cartan_matrix(rd)
    # rows of C are the simple roots in the basis of fundamental weights
    D, _U, V = smith_normal_form(C)
    diag = [D[i][i] for i in range(rd.rank)]
    keep = [i for i, d in enumerate(diag) if d != 1]
    group = tuple(diag[i] for i in keep)
    chars = {}
    for s in rd.nodes:
        row = V[s - 1]
        chars[s] = tuple(row[i] % diag[i] for i in keep)
    return CentreDescriptor(rd.family, rd.rank, group, chars)


def rep_kernel(rd: RootDatum, S: Iterable[int]) -> FrozenSet[Element]:
    """Central elements acting trivially on the sum of the ``w_s``, ``s`` in ``S``."""
    S = sorted(set(S))
    if not S:
        raise ValueError("S must be nonempty")
    for s in S:
        rd.check_node(s)
    Z = centre(rd)
    return frozenset(z for z in Z.elements() if all(Z.character(z, s) == 0 for s in S))


LABELS = ("simply_connected", "h_maximal", "adjoint", "other")


@dataclass(frozen=True)
class CoverDescriptor:
    """A central quotient of a product of ``components`` simply connected groups.

    ``kernel`` is a subgroup of the product of the component centres, stored
    as tuples of per-component elements.
    """

    family: str
    rank: int
    kernel: FrozenSet[Tuple[Element, ...]]
    label: str
    components: int = 1

    def __post_init__(self) -> None:
        if self.label not in LABELS:
            raise ValueError(f"unknown cover label {self.label!r}")

    @property
    def root_datum(self) -> RootDatum:
        return RootDatum(self.family, self.rank)

    @property
    def kernel_order(self) -> int:
        return len(self.kernel)


def _product(kernels: Sequence[FrozenSet[Element]]) -> FrozenSet[Tuple[Element, ...]]:
    return frozenset(itertools.product(*kernels))


def _label(rd, kernels, endpoints) -> str:
    Z = centre(rd)
    full = frozenset(Z.elements())
    if all(len(K) == 1 for K in kernels):
        return "simply_connected"
    if all(K == full for K in kernels):
        return "adjoint"
    if (rd.family == "D" and rd.rank >= 4 and endpoints is not None
            and all(K == Z.kernel_of(e) for K, e in zip(kernels, endpoints))):
        return "h_maximal"
    return "other"


def simply_connected_cover(rd: RootDatum, components: int = 1) -> CoverDescriptor:
    triv = frozenset([centre(rd).identity])
    return CoverDescriptor(rd.family, rd.rank, _product([triv] * components),
                           "simply_connected", components)


def h_maximal_cover(rd: RootDatum, endpoint: int | Sequence[int] = 1,
                    components: int = 1) -> CoverDescriptor:
    """The quotient acting faithfully on the vector-type representation.

    ``endpoint`` is the node of that representation: ``1`` for ``k >= 5``;
    for ``D_4`` it is the endpoint selected by the Galois-stable set, and may
    be given per component.
    """
    if rd.family != "D" or rd.rank < 4:
        raise ValueError(f"h-maximal covers are defined for D_k with k >= 4, not {rd}")
    eps = [endpoint] * components if isinstance(endpoint, int) else list(endpoint)
    if len(eps) != components:
        raise ValueError("one endpoint per component required")
    for e in eps:
        if e not in rd.endpoints or (rd.rank >= 5 and e != 1):
            raise ValueError(f"node {e} cannot carry the vector representation of {rd}")
    Z = centre(rd)
    kernels = [Z.kernel_of(e) for e in eps]
    assert all(len(K) == 2 for K in kernels)
    return CoverDescriptor(rd.family, rd.rank, _product(kernels), "h_maximal", components)


def cover_from_kernel(rd: RootDatum, kernel: Iterable[Tuple[Element, ...]],
                      components: int = 1,
                      endpoints: Sequence[int] | None = None) -> CoverDescriptor:
    """Wrap an arbitrary kernel, labelling it when it is one of the named covers."""
    kernel = frozenset(tuple(tuple(z) for z in x) for x in kernel)
    Z = centre(rd)
    if any(len(x) != components for x in kernel):
        raise ValueError("kernel elements must have one entry per component")
    per = [frozenset(x[i] for x in kernel) for i in range(components)]
    if _product(per) == kernel:
        label = _label(rd, per, endpoints)
    elif len(kernel) == 1:
        label = "simply_connected"
    elif len(kernel) == Z.order ** components:
        label = "adjoint"
    else:
        label = "other"
    return CoverDescriptor(rd.family, rd.rank, kernel, label, components)
