"""Independent checkers for every certificate kind.

Nothing here reuses search code.  Adjacency is read straight from the graph
and only the path sequences are taken from the web, so a tampered web cannot
vouch for a bad certificate.  Every checker is total: malformed input yields
a violation message, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .certificates import (
    INTERIORS,
    STABLE,
    TRIPLES,
    Certificate,
    CleanSet,
    Inconclusive,
    InducedBiclique,
    InducedClique,
    PinnedPair,
    TouchingFamilies,
)
from .graph_core import Graph
from .web_model import Web


@dataclass(frozen=True)
class Verdict:
    ok: bool
    clause: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _is_vertex(g: Graph, v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < g.n


def _members(g: Graph, xs, size: int, label: str) -> Optional[str]:
    xs = list(xs)
    if len(xs) != size:
        return f"{label} has {len(xs)} members, expected {size}"
    if any(not _is_vertex(g, v) for v in xs):
        return f"{label} contains an id that is not a vertex"
    if len(set(xs)) != len(xs):
        return f"{label} repeats a vertex"
    return None


def _anticomplete(g: Graph, xs, ys) -> bool:
    return not any(g.adjacent(u, v) for u in xs for v in ys)


def _web_path(web: Web, y, z) -> Optional[tuple]:
    seq = web.paths.get(frozenset((y, z)))
    if seq is None or len(seq) < 2 or {seq[0], seq[-1]} != {y, z}:
        return None
    return seq


def clique_violation(g: Graph, cert: InducedClique) -> Optional[str]:
    bad = _members(g, cert.vertices, cert.t, "clique")
    if bad:
        return bad
    for u, v in combinations(cert.vertices, 2):
        if not g.adjacent(u, v):
            return f"clique vertices {u} and {v} are not adjacent"
    return None


def biclique_violation(g: Graph, cert: InducedBiclique) -> Optional[str]:
    for side, label in ((cert.left, "left half"), (cert.right, "right half")):
        bad = _members(g, side, cert.t, label)
        if bad:
            return bad
    if set(cert.left) & set(cert.right):
        return "biclique halves overlap"
    for side, label in ((cert.left, "left half"), (cert.right, "right half")):
        for u, v in combinations(side, 2):
            if g.adjacent(u, v):
                return f"{label} is not stable: {u}-{v} is an edge"
    for u in cert.left:
        for v in cert.right:
            if not g.adjacent(u, v):
                return f"cross pair {u}, {v} is not an edge"
    return None


def clean_set_violation(g: Graph, web: Web, cert: CleanSet, s: Optional[int] = None) -> Optional[str]:
    s = cert.s if s is None else s
    if cert.s != s:
        return f"certificate claims size {cert.s}, expected {s}"
    bad = _members(g, cert.members, s, "S")
    if bad:
        return bad
    branch = set(web.branch)
    if not set(cert.members) <= branch:
        return f"S contains non-branch vertices {sorted(set(cert.members) - branch)}"
    unknown = set(cert.clauses) - {STABLE, TRIPLES, INTERIORS}
    if unknown:
        return f"unknown clauses {sorted(unknown)}"
    S = sorted(cert.members)
    paths = {}
    for y, z in combinations(S, 2):
        seq = _web_path(web, y, z)
        if seq is None:
            return f"web has no usable path for pair ({y}, {z})"
        paths[(y, z)] = seq
    if STABLE in cert.clauses:
        for u, v in combinations(S, 2):
            if g.adjacent(u, v):
                return f"S is not stable: {u}-{v} is an edge"
    if TRIPLES in cert.clauses:
        for x in S:
            for (y, z), seq in paths.items():
                if x in (y, z):
                    continue
                for m in seq[1:-1]:
                    if g.adjacent(x, m):
                        return f"{x} has neighbor {m} in the interior of path ({y}, {z})"
    if INTERIORS in cert.clauses:
        for (p, sp), (q, sq) in combinations(paths.items(), 2):
            if not _anticomplete(g, sp[1:-1], sq[1:-1]):
                return f"interiors of paths {p} and {q} are not anticomplete"
    return None


def _pair_ok(g: Graph, p) -> bool:
    return (
        isinstance(p, (tuple, list))
        and len(p) == 2
        and all(_is_vertex(g, v) for v in p)
        and p[0] != p[1]
    )


def pinned_pair_violation(
    g: Graph, web: Web, cert: PinnedPair, a: Optional[int] = None, b: Optional[int] = None
) -> Optional[str]:
    a = cert.a if a is None else a
    b = cert.b if b is None else b
    if (cert.a, cert.b) != (a, b):
        return f"certificate claims sizes ({cert.a}, {cert.b}), expected ({a}, {b})"
    bad = _members(g, cert.A, a, "A")
    if bad:
        return bad
    branch = set(web.branch)
    if not set(cert.A) <= branch:
        return "A contains non-branch vertices"
    if len(cert.B) != b:
        return f"B has {len(cert.B)} pairs, expected {b}"
    used: set = set()
    for p in cert.B:
        if not _pair_ok(g, p):
            return f"B entry {p} is not a pair of distinct vertices"
        if not set(p) <= branch:
            return f"B pair {p} is not a pair of branch vertices"
        if set(p) & set(cert.A):
            return f"B pair {p} meets A"
        if set(p) & used:
            return f"B pair {p} meets another B pair"
        used |= set(p)
    for p in cert.B:
        seq = _web_path(web, *p)
        if seq is None:
            return f"web has no usable path for pair {tuple(p)}"
        for x in cert.A:
            if not any(g.adjacent(x, v) for v in seq):
                return f"{x} has no neighbor in the path for {tuple(p)}"
    return None


def touching_families_violation(
    g: Graph, web: Web, cert: TouchingFamilies, c: Optional[int] = None
) -> Optional[str]:
    c = cert.c if c is None else c
    if cert.c != c:
        return f"certificate claims size {cert.c}, expected {c}"
    branch = set(web.branch)
    fams = []
    for fam, label in ((cert.C, "C"), (cert.C_prime, "C'")):
        if len(fam) != c:
            return f"{label} has {len(fam)} pairs, expected {c}"
        keys = []
        for p in fam:
            if not _pair_ok(g, p) or not set(p) <= branch:
                return f"{label} entry {p} is not a pair of branch vertices"
            keys.append(frozenset(p))
        if len(set(keys)) != len(keys):
            return f"{label} repeats a pair"
        fams.append(keys)
    if set(fams[0]) & set(fams[1]):
        return "C and C' share a pair"
    for p in fams[0]:
        sp = _web_path(web, *p)
        if sp is None:
            return f"web has no usable path for pair {sorted(p)}"
        for q in fams[1]:
            sq = _web_path(web, *q)
            if sq is None:
                return f"web has no usable path for pair {sorted(q)}"
            if _anticomplete(g, sp[1:-1], sq[1:-1]):
                return f"interiors of {sorted(p)} and {sorted(q)} are anticomplete"
    return None


def verify_clique(g: Graph, cert) -> bool:
    return isinstance(cert, InducedClique) and _safe(clique_violation, g, cert) is None


def verify_biclique(g: Graph, cert) -> bool:
    return isinstance(cert, InducedBiclique) and _safe(biclique_violation, g, cert) is None


def verify_clean_set(g: Graph, web: Web, cert, s: int) -> bool:
    return isinstance(cert, CleanSet) and _safe(clean_set_violation, g, web, cert, s) is None


def verify_pinned_pair(g: Graph, web: Web, cert, a: int, b: int) -> bool:
    return isinstance(cert, PinnedPair) and _safe(pinned_pair_violation, g, web, cert, a, b) is None


def verify_touching_families(g: Graph, web: Web, cert, c: int) -> bool:
    return isinstance(cert, TouchingFamilies) and _safe(touching_families_violation, g, web, cert, c) is None


def _safe(fn, *args) -> Optional[str]:
    try:
        return fn(*args)
    except (TypeError, ValueError, KeyError, IndexError) as exc:
        return f"malformed certificate: {exc}"


def verify_certificate(g: Graph, web: Optional[Web], cert: Certificate) -> Verdict:
    """Check a certificate against the sizes it records."""
    if isinstance(cert, Inconclusive):
        return Verdict(False, "inconclusive certificates assert nothing")
    if isinstance(cert, InducedClique):
        why = _safe(clique_violation, g, cert)
    elif isinstance(cert, InducedBiclique):
        why = _safe(biclique_violation, g, cert)
    elif web is None:
        why = f"a web is required to check a {cert.kind} certificate"
    elif isinstance(cert, CleanSet):
        why = _safe(clean_set_violation, g, web, cert)
    elif isinstance(cert, PinnedPair):
        why = _safe(pinned_pair_violation, g, web, cert)
    elif isinstance(cert, TouchingFamilies):
        why = _safe(touching_families_violation, g, web, cert)
    else:
        why = f"unknown certificate type {type(cert).__name__}"
    return Verdict(why is None, why)
