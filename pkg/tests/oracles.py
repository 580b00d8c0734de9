"""Independent oracles.  Nothing here imports from mtlift."""
from __future__ import annotations

import itertools
import math
from functools import lru_cache
from collections import Counter
from fractions import Fraction as F


def dim(family, k):
    return k + 1 if family == "A" else k


def e(n, *pairs):
    v = [F(0)] * n
    for i, c in pairs:
        v[i] += c
    return tuple(v)


@lru_cache(maxsize=None)
def all_roots(family, k):
    """Every root, written down from the textbook lists."""
    n = dim(family, k)
    out = set()
    for i, j in itertools.permutations(range(n), 2):
        out.add(e(n, (i, 1), (j, -1)))
    if family != "A":
        for i, j in itertools.combinations(range(n), 2):
            out.add(e(n, (i, 1), (j, 1)))
            out.add(e(n, (i, -1), (j, -1)))
    for i in range(n):
        if family == "B":
            out |= {e(n, (i, 1)), e(n, (i, -1))}
        if family == "C":
            out |= {e(n, (i, 2)), e(n, (i, -2))}
    return frozenset(out)


@lru_cache(maxsize=None)
def positive_roots(family, k):
    return tuple(r for r in all_roots(family, k) if next(x for x in r if x) > 0)


def ip(x, y):
    return sum((a * b for a, b in zip(x, y)), F(0))


def co(a):
    return tuple(F(2) * x / ip(a, a) for x in a)


@lru_cache(maxsize=None)
def simple(family, k):
    """Simple roots = positive roots that are not sums of two positive roots."""
    pos = positive_roots(family, k)
    sums = {tuple(a + b for a, b in zip(x, y)) for x in pos for y in pos}
    s = [r for r in pos if r not in sums]
    # order along the Bourbaki chain: by position of the leading +1, then by last entry
    def key(r):
        i = next(idx for idx, x in enumerate(r) if x)
        return (i, [x for x in r if x][-1] > 0)
    return tuple(sorted(s, key=key))


def solve(A, b):
    """Solve A x = b over Q by Gauss-Jordan; A square, nonsingular."""
    n = len(A)
    M = [list(map(F, row)) + [F(v)] for row, v in zip(A, b)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[r][n] for r in range(n)]


def dual_basis_vector(family, k, i, use_coroots):
    """Vector v in the span of the roots with <v, beta_j> = delta_ij, where
    beta_j are simple coroots (weights) or simple roots (coweights)."""
    n = dim(family, k)
    S = simple(family, k)
    B = [co(a) if use_coroots else a for a in S]
    rows = [list(b) for b in B]
    rhs = [F(int(j == i - 1)) for j in range(k)]
    if family == "A":
        rows.append([F(1)] * n)
        rhs.append(F(0))
    return tuple(solve(rows, rhs))


@lru_cache(maxsize=None)
def fweight(family, k, s):
    return dual_basis_vector(family, k, s, True)


@lru_cache(maxsize=None)
def fcoweight(family, k, i):
    return dual_basis_vector(family, k, i, False)


def closure(family, k, w):
    """Orbit under reflections in *all* roots (integer-scaled walk)."""
    return set(_closure(family, k, tuple(F(x) for x in w)))


@lru_cache(maxsize=None)
def _closure(family, k, w):
    den = 1
    for x in w:
        den = den * x.denominator // math.gcd(den, x.denominator)
    roots = [(tuple(int(x) for x in a), int(ip(a, a))) for a in all_roots(family, k)]
    start = tuple(int(x * den) for x in w)
    seen, todo = {start}, [start]
    while todo:
        v = todo.pop()
        for a, aa in roots:
            num = 2 * sum(x * y for x, y in zip(v, a))
            if num % aa:
                raise ArithmeticError("not a weight")
            c = num // aa
            if not c:
                continue
            u = tuple(x - c * y for x, y in zip(v, a))
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return frozenset(tuple(F(x, den) for x in v) for v in seen)


def explicit_weights(family, k, s):
    """Weights of the supported fundamental representations from closed forms."""
    n = dim(family, k)
    h = F(1, 2)
    if family == "A":
        out = Counter()
        for S in itertools.combinations(range(n), s):
            out[tuple(F(int(i in S)) - F(s, n) for i in range(n))] += 1
        return out
    if (family, s) in {("B", 1), ("C", 1), ("D", 1)}:
        out = Counter()
        for i in range(n):
            out[e(n, (i, 1))] += 1
            out[e(n, (i, -1))] += 1
        if family == "B":
            out[tuple([F(0)] * n)] += 1
        return out
    signs = list(itertools.product((h, -h), repeat=n))
    if family == "B":
        return Counter(signs)
    parity = 0 if s == k else 1
    return Counter(v for v in signs if sum(1 for x in v if x < 0) % 2 == parity)


def weyl_dimension(family, k, s):
    lam = fweight(family, k, s)
    pos = positive_roots(family, k)
    rho = tuple(sum(c) / 2 for c in zip(*pos))
    num = den = F(1)
    for a in pos:
        num *= ip(tuple(x + y for x, y in zip(lam, rho)), co(a))
        den *= ip(rho, co(a))
    return num / den


def in_root_lattice(family, k, v):
    S = simple(family, k)
    n = dim(family, k)
    if family == "A":
        cols = [list(r) for r in S]
        # solve using the first k coordinates (last is determined by trace zero)
        A = [[cols[j][i] for j in range(k)] for i in range(k)]
        coeffs = solve(A, v[:k])
    else:
        A = [[S[j][i] for j in range(k)] for i in range(n)]
        coeffs = solve(A, v)
    return all(c.denominator == 1 for c in coeffs)


def class_order(family, k, s):
    return weight_class_order(family, k, fweight(family, k, s))


def weight_class_order(family, k, w):
    """Order of the class of ``w`` in P/Q, by testing m*w against the root lattice."""
    m = 1
    while not in_root_lattice(family, k, tuple(m * x for x in w)):
        m += 1
    return m


@lru_cache(maxsize=None)
def distinct_pairings(family, k, s, node):
    c = fcoweight(family, k, node)
    return {ip(w, c) for w in closure(family, k, fweight(family, k, s))} | (
        {F(0)} if (family, s) == ("B", 1) else set())


def supported(family, k):
    if family == "A":
        return range(1, k + 1)
    return {"B": (1, k), "C": (1,), "D": (1, k - 1, k)}[family]
