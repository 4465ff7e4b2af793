"""Brute-force ground truth for small instances.

Plain enumeration with ``itertools`` and direct adjacency lookups; the only
cleverness is colex-ordered backtracking in ``brute_ramsey_min``.  Every
search has a hard size guard and refuses (raises ``OracleRefusal``) rather
than truncating, so a ``None`` result is always a proof of absence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .graph_core import Graph
from .web_model import Web

WEB_GUARD = 20
GRAPH_GUARD = 16
RAMSEY_GUARD = 64  # max number of g-subsets of the largest ground set


class OracleRefusal(RuntimeError):
    pass


def _interior(web: Web, y: int, z: int) -> tuple:
    return web.paths[frozenset((y, z))][1:-1]


def _full(web: Web, y: int, z: int) -> tuple:
    return web.paths[frozenset((y, z))]


def _touch(g: Graph, xs, ys) -> bool:
    return any(g.adjacent(u, v) for u in xs for v in ys)


def is_clean(g: Graph, web: Web, S, clauses=("stable", "triples", "interiors")) -> bool:
    S = list(S)
    if "stable" in clauses and any(g.adjacent(u, v) for u, v in combinations(S, 2)):
        return False
    if "triples" in clauses:
        for x in S:
            others = [v for v in S if v != x]
            for y, z in combinations(others, 2):
                if _touch(g, [x], _interior(web, y, z)):
                    return False
    if "interiors" in clauses:
        for p, q in combinations(list(combinations(S, 2)), 2):
            if _touch(g, _interior(web, *p), _interior(web, *q)):
                return False
    return True


def brute_clean_set(g: Graph, web: Web, s: int, clauses=("stable", "triples", "interiors")) -> Optional[tuple]:
    """Lexicographically least ``s``-subset of the branch set meeting ``clauses``."""
    if web.w > WEB_GUARD:
        raise OracleRefusal(f"branch set of size {web.w} exceeds guard {WEB_GUARD}")
    if s > web.w:
        return None
    for S in combinations(sorted(web.branch), s):
        if is_clean(g, web, S, clauses):
            return S
    return None


def brute_pinned_pair(g: Graph, web: Web, a: int, b: int) -> Optional[tuple]:
    """Some ``(A, B)`` with every x in A adjacent to every path of B, or None."""
    if web.w > 10:
        raise OracleRefusal("pinned-pair enumeration is limited to 10 branch vertices")
    W = sorted(web.branch)
    for A in combinations(W, a):
        rest = [v for v in W if v not in A]
        good = [
            p for p in combinations(rest, 2)
            if all(_touch(g, [x], _full(web, *p)) for x in A)
        ]
        for B in combinations(good, b):
            flat = [v for p in B for v in p]
            if len(set(flat)) == len(flat):
                return A, B
    return None


def brute_touching_families(g: Graph, web: Web, c: int) -> Optional[tuple]:
    """Some disjoint ``(C, C')`` of ``c`` pairs each, all cross interiors touching, or None."""
    if web.w > 10:
        raise OracleRefusal("touching-family enumeration is limited to 10 branch vertices")
    pairs = list(combinations(sorted(web.branch), 2))
    if comb(len(pairs), c) > 200_000:
        raise OracleRefusal("too many candidate families")
    for C in combinations(pairs, c):
        partners = [
            q for q in pairs
            if q not in C and all(_touch(g, _interior(web, *p), _interior(web, *q)) for p in C)
        ]
        if len(partners) >= c:
            return C, tuple(partners[:c])
    return None


def brute_ramsey_min(f: int, g: int, n: int, max_ground: int) -> Optional[int]:
    """Least N <= max_ground such that every f-coloring of the g-subsets of an
    N-set has a monochromatic n-subset; None if no N in range works.

    For each N, searches for a coloring with no monochromatic n-subset.
    Colors are assigned to g-subsets in colex order; a color may be used only
    after all smaller colors have appeared (colors are interchangeable).
    """
    if comb(max_ground, g) > RAMSEY_GUARD:
        raise OracleRefusal(f"{comb(max_ground, g)} {g}-subsets exceed guard {RAMSEY_GUARD}")
    for N in range(0, max_ground + 1):
        if not _bad_coloring_exists(f, g, n, N):
            return N
    return None


def _colex(N: int, k: int) -> list[tuple]:
    return sorted(combinations(range(N), k), key=lambda x: x[::-1])


def _bad_coloring_exists(f: int, g: int, n: int, N: int) -> bool:
    if n > N:
        return True
    if n < g:
        return False
    subsets = _colex(N, g)
    index = {x: i for i, x in enumerate(subsets)}
    # each n-set is complete once its colex-last g-subset (its top g elements) is colored
    closing: list[list[list[int]]] = [[] for _ in subsets]
    for Z in combinations(range(N), n):
        ids = [index[x] for x in combinations(Z, g)]
        closing[index[Z[-g:]]].append(ids)
    colors = [0] * len(subsets)

    def rec(i: int, used: int) -> bool:
        if i == len(subsets):
            return True
        for c in range(min(f, used + 1)):
            colors[i] = c
            if any(all(colors[j] == c for j in ids) for ids in closing[i]):
                continue
            if rec(i + 1, max(used, c + 1)):
                return True
        return False

    return rec(0, 0)


@dataclass(frozen=True)
class InducedReport:
    clique: Optional[tuple]
    biclique: Optional[tuple]

    @property
    def any(self) -> bool:
        return self.clique is not None or self.biclique is not None


def brute_induced(g: Graph, t: int) -> InducedReport:
    if g.n > GRAPH_GUARD:
        raise OracleRefusal(f"{g.n} vertices exceed guard {GRAPH_GUARD}")
    V = range(g.n)
    clique = next(
        (X for X in combinations(V, t) if all(g.adjacent(u, v) for u, v in combinations(X, 2))),
        None,
    )
    stable = [X for X in combinations(V, t) if not any(g.adjacent(u, v) for u, v in combinations(X, 2))]
    biclique = None
    for X in stable:
        for Y in stable:
            if Y[0] <= X[0] or set(X) & set(Y):
                continue
            if all(g.adjacent(u, v) for u in X for v in Y):
                biclique = (X, Y)
                break
        if biclique:
            break
    return InducedReport(clique, biclique)


def has_monochromatic(coloring: dict, ground, g: int, n: int) -> bool:
    """Direct check over all n-subsets; ``coloring`` maps sorted g-tuples to colors."""
    for Z in combinations(sorted(ground), n):
        cols = {coloring[x] for x in combinations(Z, g)}
        if len(cols) <= 1:
            return True
    return False
