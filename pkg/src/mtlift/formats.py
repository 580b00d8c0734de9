"""Datum files and the machine-readable lift report.

A datum file is JSON::

    {"version": 1,
     "factors": [{"name": "...", "family": "D", "rank": 5,
                  "embeddings": ["a", "b"],
                  "galois": [{"perm": {"a": "b", "b": "a"},
                              "nodes": {"a": {"4": 5, "5": 4}}}],
                  "conjugation": {"nodes": {...}},
                  "compact": ["b"],
                  "hodge_nodes": {"a": 5},
                  "decomposed_flags": {"decomposed": true, ...}}]}

Node maps may be partial: missing labels act by the identity, missing
conjugation data means the opposition involution.  Rationals in reports are
strings in lowest terms (``"-3/4"``).
"""
from __future__ import annotations

import json
from fractions import Fraction as Q
from typing import Any, List

from .datum import EmbeddingSet, GaloisElement, MTFactorDatum, main_involution, make_datum
from .isogeny import CoverDescriptor
from .liftbuilder import Certificate, LiftDescriptor, RepBlock, TorusDescriptor
from .rootsys import RootDatum, fmt_q

VERSION = 1
_TOP = {"version", "factors"}
_FACTOR = {"name", "family", "rank", "embeddings", "galois", "conjugation", "compact",
           "hodge_nodes", "decomposed_flags"}
_REQUIRED = {"family", "rank", "embeddings", "hodge_nodes"}


class DatumParseError(ValueError):
    def __init__(self, message: str, where: str = "", line: int | None = None):
        self.where, self.line = where, line
        loc = f"line {line}: " if line is not None else ""
        loc += f"{where}: " if where else ""
        super().__init__(loc + message)


def _expect(cond: bool, msg: str, where: str) -> None:
    if not cond:
        raise DatumParseError(msg, where)


def _node_maps(obj: Any, where: str, labels) -> dict:
    _expect(isinstance(obj, dict), "expected an object of per-label node maps", where)
    out = {}
    for lab, m in obj.items():
        _expect(lab in labels, f"unknown label {lab!r}", where)
        _expect(isinstance(m, dict), "node map must be an object", f"{where}.{lab}")
        try:
            nm = {int(a): int(b) for a, b in m.items()}
        except (TypeError, ValueError):
            raise DatumParseError("node map entries must be integers", f"{where}.{lab}") from None
        out[lab] = nm
    return out


def _parse_factor(obj: Any, where: str) -> MTFactorDatum:
    _expect(isinstance(obj, dict), "factor must be an object", where)
    unknown = set(obj) - _FACTOR
    _expect(not unknown, f"unknown fields {sorted(unknown)}", where)
    missing = _REQUIRED - set(obj)
    _expect(not missing, f"missing fields {sorted(missing)}", where)
    try:
        rd = RootDatum(obj["family"], obj["rank"])
    except ValueError as e:
        raise DatumParseError(str(e), where) from None
    labels = obj["embeddings"]
    _expect(isinstance(labels, list) and labels and all(isinstance(x, str) for x in labels),
            "embeddings must be a nonempty list of strings", f"{where}.embeddings")
    _expect(len(set(labels)) == len(labels), "labels must be unique", f"{where}.embeddings")
    # fill node maps over the full node set so partial maps extend by the identity
    ident = {n: n for n in rd.nodes}

    def full(m):
        out = dict(ident)
        out.update(m)
        return out

    gens = []
    for gi, g in enumerate(obj.get("galois", [])):
        gw = f"{where}.galois[{gi}]"
        _expect(isinstance(g, dict) and set(g) <= {"perm", "nodes"} and "perm" in g,
                "generator needs 'perm' and optional 'nodes'", gw)
        perm = g["perm"]
        _expect(isinstance(perm, dict), "perm must be an object", f"{gw}.perm")
        for a, b in perm.items():
            _expect(a in labels and b in labels, f"unknown label in {a!r}: {b!r}", f"{gw}.perm")
        perm = {i: perm.get(i, i) for i in labels}
        nodes = {i: full(m) for i, m in _node_maps(g.get("nodes", {}), f"{gw}.nodes", labels).items()}
        gens.append((perm, nodes))
    conj = None
    if "conjugation" in obj:
        c = obj["conjugation"]
        _expect(isinstance(c, dict) and set(c) <= {"nodes"}, "conjugation takes only 'nodes'",
                f"{where}.conjugation")
        given = _node_maps(c.get("nodes", {}), f"{where}.conjugation.nodes", labels)
        if given:
            conj = {i: full(given[i]) if i in given else main_involution(rd) for i in labels}
    compact = obj.get("compact", [])
    _expect(isinstance(compact, list) and all(c in labels for c in compact),
            "compact must list known labels", f"{where}.compact")
    hodge = obj["hodge_nodes"]
    _expect(isinstance(hodge, dict) and all(isinstance(v, int) and not isinstance(v, bool)
                                            for v in hodge.values()),
            "hodge_nodes must map labels to node indices", f"{where}.hodge_nodes")
    for lab in hodge:
        _expect(lab in labels, f"unknown label {lab!r}", f"{where}.hodge_nodes")
    flags = obj.get("decomposed_flags")
    if flags is not None:
        _expect(isinstance(flags, dict) and all(isinstance(v, bool) for v in flags.values()),
                "decomposed_flags must map names to booleans", f"{where}.decomposed_flags")
    name = obj.get("name", "")
    _expect(isinstance(name, str), "name must be a string", f"{where}.name")
    return make_datum(rd.family, rd.rank, labels, gens, compact, hodge, conj, name, flags)


def parse_datum_text(text: str) -> List[MTFactorDatum]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DatumParseError(e.msg, line=e.lineno) from None
    _expect(isinstance(obj, dict), "top level must be an object", "")
    unknown = set(obj) - _TOP
    _expect(not unknown, f"unknown fields {sorted(unknown)}", "")
    _expect(obj.get("version") == VERSION, f"unsupported version {obj.get('version')!r}", "version")
    factors = obj.get("factors")
    _expect(isinstance(factors, list), "factors must be a list", "factors")
    return [_parse_factor(f, f"factors[{n}]") for n, f in enumerate(factors)]


def load_datum(path) -> List[MTFactorDatum]:
    with open(path, encoding="utf-8") as fh:
        return parse_datum_text(fh.read())


# -- descriptor <-> plain data ---------------------------------------------

def _q(x) -> str:
    return fmt_q(x)


def _nm(m) -> dict:
    return {str(a): b for a, b in sorted(m.items())}


def _unnm(m) -> dict:
    return {int(a): int(b) for a, b in m.items()}


def _g_to(g: GaloisElement) -> dict:
    return {"perm": dict(sorted(g.perm.items())),
            "nodes": {i: _nm(g.nodes[i]) for i in sorted(g.nodes)}}


def _g_from(d) -> GaloisElement:
    return GaloisElement(dict(d["perm"]), {i: _unnm(m) for i, m in d["nodes"].items()})


def datum_to_dict(f: MTFactorDatum) -> dict:
    return {
        "name": f.name,
        "family": f.root_datum.family,
        "rank": f.root_datum.rank,
        "embeddings": list(f.embeddings.elements),
        "galois": [_g_to(g) for g in f.embeddings.galois_generators],
        "conjugation": _g_to(f.embeddings.conjugation),
        "compact": sorted(f.compact),
        "hodge_nodes": dict(sorted(f.hodge_node.items())),
        "decomposed_flags": f.decomposed_flags,
    }


def datum_from_dict(d) -> MTFactorDatum:
    emb = EmbeddingSet(tuple(d["embeddings"]), tuple(_g_from(g) for g in d["galois"]),
                       _g_from(d["conjugation"]))
    return MTFactorDatum(RootDatum(d["family"], d["rank"]), emb, frozenset(d["compact"]),
                         dict(d["hodge_nodes"]), d["name"], d["decomposed_flags"])


def _cover_to(c: CoverDescriptor) -> dict:
    return {"family": c.family, "rank": c.rank, "label": c.label, "components": c.components,
            "kernel": sorted([list(map(list, x)) for x in c.kernel])}


def _cover_from(d) -> CoverDescriptor:
    kernel = frozenset(tuple(tuple(z) for z in x) for x in d["kernel"])
    return CoverDescriptor(d["family"], d["rank"], kernel, d["label"], d["components"])


def _ms_to(ms):
    return [[_q(v), m] for v, m in ms]


def _ms_from(xs):
    return tuple((Q(v), m) for v, m in xs)


def descriptor_to_dict(ld: LiftDescriptor) -> dict:
    return {
        "factors": [{"datum": datum_to_dict(f), "cover": _cover_to(c)} for f, c in ld.factors],
        "tori": [{"kind": t.kind, "base": list(t.base), "coordinates": list(t.coordinates),
                  "real_compact": t.real_compact, "factor": t.factor, "label": t.label}
                 for t in ld.tori],
        "blocks": [{"factor": b.factor, "index": b.index, "lifted_index": b.lifted_index,
                    "highest_weights": list(b.highest_weights), "node": b.node,
                    "cochar_weights": _ms_to(b.cochar_weights),
                    "central_exponent": _q(b.central_exponent),
                    "torus_line": b.torus_line, "torus_exponent": _q(b.torus_exponent),
                    "total_weights": _ms_to(b.total_weights)}
                   for b in ld.blocks],
        "case_tags": list(ld.case_tags),
        "certificates": [{"factor": c.factor, "kind": c.kind, "holds": c.holds,
                          "blocks_checked": c.blocks_checked,
                          "totals": [_q(v) for v in c.totals]} for c in ld.certificates],
        "conjugate_lines": [list(p) for p in ld.conjugate_lines],
        "hodge_coweights": [[f, i, n, [_q(x) for x in cw]] for f, i, n, cw in ld.hodge_coweights],
        "relabelings": [[f, i, [list(p) for p in m]] for f, i, m in ld.relabelings],
        "flags": [list(x) for x in ld.flags],
    }


def descriptor_from_dict(d) -> LiftDescriptor:
    return LiftDescriptor(
        factors=tuple((datum_from_dict(x["datum"]), _cover_from(x["cover"])) for x in d["factors"]),
        tori=tuple(TorusDescriptor(t["kind"], tuple(t["base"]), tuple(t["coordinates"]),
                                   t["real_compact"], t["factor"], t["label"]) for t in d["tori"]),
        blocks=tuple(RepBlock(b["factor"], b["index"], b["lifted_index"],
                              tuple(b["highest_weights"]), b["node"],
                              _ms_from(b["cochar_weights"]), Q(b["central_exponent"]),
                              b["torus_line"], Q(b["torus_exponent"])) for b in d["blocks"]),
        case_tags=tuple(d["case_tags"]),
        certificates=tuple(Certificate(c["factor"], c["kind"], c["holds"], c["blocks_checked"],
                                       tuple(Q(v) for v in c["totals"])) for c in d["certificates"]),
        conjugate_lines=tuple(tuple(p) for p in d["conjugate_lines"]),
        hodge_coweights=tuple((f, i, n, tuple(Q(x) for x in cw)) for f, i, n, cw in d["hodge_coweights"]),
        relabelings=tuple((f, i, tuple(tuple(p) for p in m)) for f, i, m in d["relabelings"]),
        flags=tuple(tuple(x) for x in d["flags"]),
    )


MACHINE_MARK = "--- machine ---"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def emit_descriptor(ld: LiftDescriptor) -> str:
    return dumps(descriptor_to_dict(ld))


def parse_descriptor(text: str) -> LiftDescriptor:
    """Read a descriptor from a full report or from a bare machine block."""
    if MACHINE_MARK in text:
        text = text.split(MACHINE_MARK, 1)[1]
    obj = json.loads(text)
    if "lift" in obj:
        obj = obj["lift"]
    return descriptor_from_dict(obj)
