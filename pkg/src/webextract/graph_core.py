"""Immutable simple graphs over dense integer ids, plus the induced-subgraph
vocabulary used throughout the package (stable sets, anticompleteness,
induced paths, induced K_t and K_{t,t} search).

Vertex sets are handled internally as Python ``int`` bitmasks.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional, Sequence

from .budget import ABSENT, FOUND, INCONCLUSIVE, Budget, BudgetExhausted, SearchResult, as_budget


class GraphInputError(ValueError):
    """Malformed graph data or a reference to a vertex the graph lacks."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Members of a bitmask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable once built; adjacency is stored as one bitmask
    per vertex.
    """

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphInputError("vertex count must be non-negative")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        self._n = n
        self._adj = tuple(adj)
        self._m = m

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def has_vertex(self, v: int) -> bool:
        return isinstance(v, int) and 0 <= v < self._n

    def check_vertices(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            if not self.has_vertex(v):
                raise GraphInputError(f"unknown vertex id {v!r}")

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def nbr_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return bits(self._adj[v])

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def neighborhood_mask(self, vertices: Iterable[int]) -> int:
        """Union of the neighborhoods of ``vertices``."""
        m = 0
        for v in vertices:
            m |= self._adj[v]
        return m

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self._n, list(self.edges()) + list(extra))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


# predicates


def is_stable_set(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    g.check_vertices(s)
    m = mask_of(s)
    return all(not (g.nbr_mask(v) & m) for v in s)


def are_anticomplete(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    x, y = list(x), list(y)
    g.check_vertices(x)
    g.check_vertices(y)
    return not (g.neighborhood_mask(x) & mask_of(y))


def is_induced_path(g: Graph, p: Sequence[int]) -> bool:
    p = list(p)
    g.check_vertices(p)
    if len(set(p)) != len(p):
        raise GraphInputError(f"path sequence repeats a vertex: {p}")
    for i, u in enumerate(p):
        for j in range(i + 1, len(p)):
            if g.adjacent(u, p[j]) != (j == i + 1):
                return False
    return True


# searches


def find_induced_clique(
    g: Graph, t: int, budget: "Budget | int | None" = None, within: Optional[Iterable[int]] = None
) -> SearchResult[tuple[int, ...]]:
    """Lexicographically first ``t``-clique (optionally inside ``within``)."""
    if t < 1:
        raise ValueError("t must be positive")
    budget = as_budget(budget)
    start = budget.steps
    pool = (1 << g.n) - 1 if within is None else mask_of(within)
    if within is not None:
        g.check_vertices(bits(pool))

    def rec(chosen: list[int], cand: int) -> Optional[list[int]]:
        if len(chosen) == t:
            return chosen
        while cand:
            if popcount(cand) < t - len(chosen):
                return None
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            budget.tick()
            hit = rec(chosen + [v], cand & g.nbr_mask(v))
            if hit is not None:
                return hit
        return None

    try:
        hit = rec([], pool)
    except BudgetExhausted:
        return SearchResult(INCONCLUSIVE, None, budget.steps - start)
    if hit is None:
        return SearchResult(ABSENT, None, budget.steps - start)
    return SearchResult(FOUND, tuple(hit), budget.steps - start)


def _first_stable(g: Graph, k: int, cand: int, budget: Budget) -> Optional[list[int]]:
    def rec(chosen: list[int], cand: int) -> Optional[list[int]]:
        if len(chosen) == k:
            return chosen
        while cand:
            if popcount(cand) < k - len(chosen):
                return None
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            budget.tick()
            hit = rec(chosen + [v], cand & ~g.nbr_mask(v))
            if hit is not None:
                return hit
        return None

    return rec([], cand)


def find_induced_biclique(
    g: Graph, t: int, budget: "Budget | int | None" = None, within: Optional[Iterable[int]] = None
) -> SearchResult[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Lexicographically first induced K_{t,t} as a pair ``(A, B)``.

    Both halves are stable and fully joined; ``min(A) < min(B)`` fixes the
    orientation.
    """
    if t < 1:
        raise ValueError("t must be positive")
    budget = as_budget(budget)
    start = budget.steps
    pool = (1 << g.n) - 1 if within is None else mask_of(within)
    if within is not None:
        g.check_vertices(bits(pool))

    def rec(a: list[int], cand: int, common: int) -> Optional[tuple[list[int], list[int]]]:
        if len(a) == t:
            side = _first_stable(g, t, common & ~((1 << (a[0] + 1)) - 1), budget)
            return (a, side) if side is not None else None
        while cand:
            if popcount(cand) < t - len(a):
                return None
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            budget.tick()
            nxt = common & g.nbr_mask(v)
            floor_a = a[0] if a else v
            if popcount(nxt & ~((1 << (floor_a + 1)) - 1)) < t:
                continue
            hit = rec(a + [v], cand & ~g.nbr_mask(v), nxt)
            if hit is not None:
                return hit
        return None

    try:
        hit = rec([], pool, pool)
    except BudgetExhausted:
        return SearchResult(INCONCLUSIVE, None, budget.steps - start)
    if hit is None:
        return SearchResult(ABSENT, None, budget.steps - start)
    return SearchResult(FOUND, (tuple(hit[0]), tuple(hit[1])), budget.steps - start)


# formats


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphInputError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError as exc:
        raise GraphInputError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise GraphInputError("edge list header must be 'n m'")
    n, m = header
    if len(body) != m:
        raise GraphInputError(f"header announces {m} edges, found {len(body)}")
    seen = set()
    for row in body:
        if len(row) != 2:
            raise GraphInputError(f"bad edge line {row}")
        key = frozenset(row)
        if key in seen:
            raise GraphInputError(f"parallel edge {row}")
        seen.add(key)
    return Graph(n, body)


def _g6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph, header: bool = False) -> str:
    bitstream = [
        1 if g.adjacent(i, j) else 0 for j in range(1, g.n) for i in range(j)
    ]
    bitstream += [0] * (-len(bitstream) % 6)
    body = "".join(
        chr(int("".join(map(str, bitstream[k : k + 6])), 2) + 63) for k in range(0, len(bitstream), 6)
    )
    return (">>graph6<<" if header else "") + _g6_size(g.n) + body + "\n"


def from_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<") :]
    if not data or any(not (63 <= ord(c) <= 126) for c in data):
        raise GraphInputError("not a graph6 string")
    vals = [ord(c) - 63 for c in data]
    if vals[0] != 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphInputError("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        rest = vals[8:]
    else:
        if len(vals) < 4:
            raise GraphInputError("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise GraphInputError(f"graph6 body has {len(rest)} bytes, expected {(need + 5) // 6}")
    stream = [(v >> (5 - k)) & 1 for v in rest for k in range(6)]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Sniff the encoding: edge list if the first line is two integers, else graph6."""
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    toks = first.split()
    if len(toks) == 2 and all(tok.lstrip("-").isdigit() for tok in toks):
        return from_edge_list(text)
    return from_graph6(first)
