"""Invariant suite run by ``mtlift check`` over the bundled fixtures."""
from __future__ import annotations

from fractions import Fraction as Q
from pathlib import Path
from typing import Callable, Iterator, Tuple

from .datum import classify_D, normalize_hodge_nodes, validate
from .formats import emit_descriptor, load_datum, parse_descriptor
from .isogeny import centre, rep_kernel
from .liftbuilder import abelianized_hodge, assemble, unliftable_lift
from .rootsys import RootDatum, fundamental_coweight, irrep_weights, pairing_values
from .twoweight import (faithful_fundamental_requires_spin, spin_three_weight_obstruction,
                        two_weight_fundamentals)

FIXTURES = Path(__file__).with_name("fixtures")

Check = Tuple[str, bool, str]


def halfspin_nu_ranges(k: int) -> Tuple[set, set]:
    """Expected node-``k`` values on w_{k-1} and w_k."""
    if k % 2:
        m1 = m2 = range(0, (k - 1) // 2 + 1)
    else:
        m1, m2 = range(0, (k - 2) // 2 + 1), range(0, k // 2 + 1)
    return {Q(k - 2, 4) - m for m in m1}, {Q(k, 4) - m for m in m2}


def _halfspin_nu() -> Check:
    bad = []
    for k in range(4, 10):
        rd = RootDatum("D", k)
        c = fundamental_coweight(rd, k)
        got = tuple(set(pairing_values(irrep_weights(rd, s), c)) for s in (k - 1, k))
        if got != halfspin_nu_ranges(k):
            bad.append(k)
    return "half-spin nu values k=4..9", not bad, f"mismatch at {bad}" if bad else ""


def _table_claims() -> Check:
    bad = []
    for k in range(2, 9):
        if two_weight_fundamentals(RootDatum("B", k), 1) != {k}:
            bad.append(f"B{k}")
        if two_weight_fundamentals(RootDatum("C", k), k) != {1}:
            bad.append(f"C{k}")
    for k in range(1, 9):
        rd = RootDatum("A", k)
        if two_weight_fundamentals(rd, 1) != set(rd.nodes):
            bad.append(f"A{k}/1")
        for j in range(2, k):
            if two_weight_fundamentals(rd, j) != {1, k}:
                bad.append(f"A{k}/{j}")
    for k in range(4, 9):
        rd = RootDatum("D", k)
        if two_weight_fundamentals(rd, 1) != {k - 1, k}:
            bad.append(f"D{k}/1")
        if not all(1 in two_weight_fundamentals(rd, n) for n in (k - 1, k)):
            bad.append(f"D{k}/fork")
    return "two-weight table claims", not bad, ", ".join(bad)


def _obstruction() -> Check:
    ok = all(min(spin_three_weight_obstruction(k)["min_distinct_values"].values()) >= 3
             for k in range(5, 10))
    c4 = spin_three_weight_obstruction(4)["min_distinct_values"]
    ok = ok and sorted(c4.values()) == [2, 3]
    return "three-weight obstruction", ok, f"D4 counts {c4}"


def _centres() -> Check:
    ok = True
    for k in range(4, 10):
        rd = RootDatum("D", k)
        ok &= centre(rd).group == ((2, 2) if k % 2 == 0 else (4,))
        ok &= len(rep_kernel(rd, {1})) == 2
    ok &= all(faithful_fundamental_requires_spin(k) for k in range(5, 10))
    return "centre arithmetic", ok, ""


def _fixture_checks(path: Path) -> Iterator[Check]:
    name = path.name
    try:
        factors = load_datum(path)
    except Exception as e:  # a fixture that fails to load is itself a failure
        yield f"{name}: parse", False, str(e)
        return
    errs = [v for f in factors for v in validate(f)]
    yield f"{name}: validate", not errs, "; ".join(map(str, errs))
    if errs:
        return
    for f in factors:
        v = classify_D(f)
        yield f"{name}: {f.name or f.root_datum} witness", v.revalidate(f), v.subtype
        if v.subtype == "D_H":
            g = normalize_hodge_nodes(f)
            yield f"{name}: {f.name} normalization idempotent", normalize_hodge_nodes(g) == g, ""
    for mode, build in (("unliftable", unliftable_lift), ("simply_connected", assemble)):
        ld = build(factors)
        yield f"{name}: {mode} certificates", ld.integral, ""
        yield f"{name}: {mode} round trip", parse_descriptor(emit_descriptor(ld)) == ld, ""
        if mode == "unliftable":
            ok = all(set(v for v, _ in b.total_weights) <= {0, 1} for b in ld.blocks)
            ok &= all({v for v, _ in b.corrected_weights} == {Q(1, 2), Q(-1, 2)}
                      for b in ld.blocks if not b.compact)
            yield f"{name}: hodge type (1,0),(0,1)", ok, ""
        else:
            try:
                abelianized_hodge(ld)
                yield f"{name}: abelianized weight trivial", True, ""
            except ValueError as e:
                yield f"{name}: abelianized weight trivial", False, str(e)


def run_checks(fixtures_dir: Path | None = None) -> list[Check]:
    fixtures_dir = Path(fixtures_dir) if fixtures_dir else FIXTURES
    suite: list[Callable[[], Check]] = [_halfspin_nu, _table_claims, _obstruction, _centres]
    out = [c() for c in suite]
    for p in sorted(fixtures_dir.glob("*.datum")):
        out.extend(_fixture_checks(p))
    return out
