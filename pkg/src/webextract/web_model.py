"""Webs: a branch set W plus one induced path per pair of branch vertices,
the paths meeting only at shared ends.  A web whose paths have length at
most r+1 is the same thing as a (<= r)-subdivision of K_|W| living inside
the host graph as a subgraph.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Optional, Union

from .budget import ABSENT, FOUND, INCONCLUSIVE, Budget, BudgetExhausted, SearchResult, as_budget
from .graph_core import Graph, GraphInputError, bits, mask_of, popcount

Pair = frozenset


class WebInputError(ValueError):
    pass


def pair(x: int, y: int) -> frozenset:
    if x == y:
        raise WebInputError(f"degenerate pair ({x}, {x})")
    return frozenset((x, y))


def pair_key(p: Iterable[int]) -> tuple[int, int]:
    a, b = sorted(p)
    return (a, b)


@dataclass(frozen=True)
class Web:
    """Branch set plus path map.  Path sequences are stored oriented from the
    smaller end to the larger one."""

    branch: tuple[int, ...]
    paths: Mapping[frozenset, tuple[int, ...]] = field(hash=False)

    @classmethod
    def build(cls, branch: Iterable[int], paths: Mapping) -> "Web":
        canon = {}
        for key, seq in paths.items():
            seq = tuple(seq)
            p = frozenset(key)
            if len(p) != 2:
                raise WebInputError(f"path key {sorted(key)} is not a 2-subset")
            lo = min(p)
            if seq and seq[0] != lo and seq[-1] == lo:
                seq = seq[::-1]
            if p in canon:
                raise WebInputError(f"two paths for pair {sorted(p)}")
            canon[p] = seq
        return cls(tuple(sorted(branch)), canon)

    @property
    def w(self) -> int:
        return len(self.branch)

    def pairs(self) -> list[frozenset]:
        """All 2-subsets of the branch set in lexicographic order."""
        return [frozenset(p) for p in combinations(self.branch, 2)]

    def path(self, x: int, y: int) -> tuple[int, ...]:
        try:
            return self.paths[frozenset((x, y))]
        except KeyError:
            raise WebInputError(f"no path for pair ({x}, {y})") from None

    def interior(self, p: Iterable[int]) -> frozenset:
        return interior(self, p)

    def to_json(self) -> dict:
        return {
            "branch": list(self.branch),
            "paths": [
                {"ends": list(pair_key(p)), "seq": list(self.paths[p])}
                for p in sorted(self.paths, key=pair_key)
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1) + "\n"

    @classmethod
    def from_json(cls, obj: dict) -> "Web":
        try:
            branch = [int(v) for v in obj["branch"]]
            paths = {}
            for rec in obj["paths"]:
                ends = [int(v) for v in rec["ends"]]
                if len(ends) != 2 or ends[0] == ends[1]:
                    raise WebInputError(f"bad ends {ends}")
                key = frozenset(ends)
                if key in paths:
                    raise WebInputError(f"two paths for pair {sorted(key)}")
                paths[key] = [int(v) for v in rec["seq"]]
        except (KeyError, TypeError) as exc:
            raise WebInputError(f"malformed web JSON: {exc}") from None
        return cls.build(branch, paths)

    @classmethod
    def loads(cls, text: str) -> "Web":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise WebInputError(f"web file is not JSON: {exc}") from None
        return cls.from_json(obj)


@dataclass(frozen=True)
class Violation:
    axiom: str
    pairs: tuple
    message: str

    def __str__(self) -> str:
        return f"({self.axiom}) {self.message}"


@dataclass(frozen=True)
class WebProfile:
    r_value: int
    w_value: int
    total_vertices: int


def profile(web: Web) -> WebProfile:
    lengths = [len(seq) - 1 for seq in web.paths.values()]
    r_value = max(0, max(lengths, default=1) - 1)
    union = set(web.branch)
    for seq in web.paths.values():
        union.update(seq)
    return WebProfile(r_value, web.w, len(union))


def validate_web(g: Graph, web: Web) -> list[Violation]:
    """Every (W1)-(W3) violation; an empty list means ``web`` is a valid web in ``g``."""
    report: list[Violation] = []
    branch = web.branch
    if len(branch) < 1:
        report.append(Violation("W1", (), "branch set is empty"))
    if len(set(branch)) != len(branch):
        report.append(Violation("W1", (), "branch set repeats a vertex"))
    bad = [v for v in branch if not g.has_vertex(v)]
    if bad:
        report.append(Violation("W1", (), f"branch vertices {bad} are not in the graph"))
        return report

    bset = set(branch)
    expected = set(web.pairs())
    for p in sorted(set(web.paths) - expected, key=pair_key):
        report.append(Violation("W2", (pair_key(p),), f"path for {pair_key(p)} whose ends are not both branch vertices"))
    usable: dict[frozenset, tuple[int, ...]] = {}
    for p in sorted(expected, key=pair_key):
        key = pair_key(p)
        seq = web.paths.get(p)
        if seq is None:
            report.append(Violation("W2", (key,), f"missing path for {key}"))
            continue
        if any(not g.has_vertex(v) for v in seq):
            report.append(Violation("W2", (key,), f"path {key} uses vertices outside the graph"))
            continue
        if len(set(seq)) != len(seq):
            report.append(Violation("W2", (key,), f"path {key} repeats a vertex"))
            continue
        if len(seq) < 2 or {seq[0], seq[-1]} != set(p):
            report.append(Violation("W2", (key,), f"path {key} does not run between its ends"))
            continue
        induced = all(
            g.adjacent(seq[i], seq[j]) == (j == i + 1)
            for i in range(len(seq))
            for j in range(i + 1, len(seq))
        )
        if not induced:
            report.append(Violation("W2", (key,), f"path {key} is not an induced path"))
            continue
        usable[p] = seq

    owners: dict[int, list[frozenset]] = {}
    for p, seq in usable.items():
        for v in seq:
            owners.setdefault(v, []).append(p)
    clashes = set()
    for v, ps in owners.items():
        for p, q in combinations(ps, 2):
            if v not in (p & q):
                clashes.add(tuple(sorted((pair_key(p), pair_key(q)))))
    for p_key, q_key in sorted(clashes):
        report.append(Violation("W3", (p_key, q_key), f"paths {p_key} and {q_key} share a vertex outside their common ends"))
    for p, seq in sorted(usable.items(), key=lambda kv: pair_key(kv[0])):
        inner = set(seq[1:-1]) & bset
        if inner:
            report.append(Violation("W3", (pair_key(p),), f"interior of {pair_key(p)} contains branch vertices {sorted(inner)}"))
    return report


def is_valid_web(g: Graph, web: Web) -> bool:
    return not validate_web(g, web)


def interior(web: Web, p: Iterable[int]) -> frozenset:
    p = frozenset(p)
    seq = web.paths.get(p)
    if seq is None or not p <= set(web.branch):
        raise WebInputError(f"pair {sorted(p)} is not a pair of this web")
    return frozenset(seq[1:-1])


def restrict(web: Web, s: Iterable[int]) -> Web:
    s = set(s)
    if not s:
        raise WebInputError("restriction to an empty set")
    if not s <= set(web.branch):
        raise WebInputError(f"{sorted(s - set(web.branch))} are not branch vertices")
    return Web(tuple(sorted(s)), {p: seq for p, seq in web.paths.items() if p <= s})


def induced_union_is_proper_subdivision(g: Graph, web: Web) -> bool:
    """Whether the union of the web's paths induces exactly a proper
    subdivision of K_w: no path of length below two and no edge of ``g``
    inside the union besides the path edges."""
    if validate_web(g, web):
        raise WebInputError("web is not valid in this graph")
    if any(len(seq) < 3 for seq in web.paths.values()):
        return False
    path_edges = set()
    union = set(web.branch)
    for seq in web.paths.values():
        union.update(seq)
        path_edges.update(frozenset(e) for e in zip(seq, seq[1:]))
    um = mask_of(union)
    induced = sum(popcount(g.nbr_mask(v) & um) for v in union) // 2
    return induced == len(path_edges)


LengthSpec = Union[int, Mapping]


def plant_subdivision(
    k: int,
    lengths: LengthSpec = 1,
    noise: float = 0.0,
    seed: Optional[int] = None,
) -> tuple[Graph, Web]:
    """Host graph containing a subdivision of K_k, plus its web.

    ``lengths`` is one length for every pair, a ``(lo, hi)`` range sampled
    per pair, or a map from pairs to lengths.  Each other vertex pair becomes
    an edge with probability ``noise`` unless both ends lie on a common
    planted path (that would be a chord).
    """
    if k < 1:
        raise WebInputError("k must be positive")
    if not 0.0 <= noise <= 1.0:
        raise WebInputError("noise must lie in [0, 1]")
    rng = random.Random(seed)
    branch = list(range(k))
    plist = [frozenset(p) for p in combinations(branch, 2)]
    if isinstance(lengths, int):
        lens = {p: lengths for p in plist}
    elif isinstance(lengths, tuple):
        lo, hi = lengths
        lens = {p: rng.randint(lo, hi) for p in plist}
    else:
        lens = {p: lengths.get(p, lengths.get(pair_key(p))) for p in plist}
    if any(v is None or v < 1 for v in lens.values()):
        raise WebInputError("every path length must be at least 1")

    nxt = k
    paths = {}
    edges = []
    for p in plist:
        x, y = pair_key(p)
        inner = list(range(nxt, nxt + lens[p] - 1))
        nxt += lens[p] - 1
        seq = [x] + inner + [y]
        paths[p] = tuple(seq)
        edges.extend(zip(seq, seq[1:]))
    n = nxt

    if noise > 0:
        shared = [0] * n
        for seq in paths.values():
            m = mask_of(seq)
            for v in seq:
                shared[v] |= m
        present = set(frozenset(e) for e in edges)
        for u in range(n):
            for v in range(u + 1, n):
                if frozenset((u, v)) in present:
                    continue
                roll = rng.random()
                if roll < noise and not (shared[u] >> v & 1):
                    edges.append((u, v))
    return Graph(n, edges), Web(tuple(branch), paths)


def find_web(
    g: Graph, r: int, w: int, budget: "Budget | int | None" = None
) -> SearchResult[Web]:
    """Backtracking search for an (r, w)-web.

    Branch sets are tried in lexicographic order (vertices of degree below
    w-1 are skipped), then paths pair by pair, each pair's candidates in
    lexicographic order, so the witness is the least one in that order.
    """
    if r < 0 or w < 1:
        raise ValueError("need r >= 0 and w >= 1")
    budget = as_budget(budget)
    start = budget.steps
    maxlen = r + 1
    cands = [v for v in g.vertices if g.degree(v) >= w - 1]

    def routes(x: int, y: int, blocked: int):
        """Induced x-y paths of length <= maxlen avoiding ``blocked``, lex order."""
        def rec(seq: list[int], seen: int):
            budget.tick()
            last = seq[-1]
            if g.adjacent(last, y):
                if len(seq) == 1 or not (g.nbr_mask(y) & mask_of(seq[:-1])):
                    yield seq + [y]
                # any longer continuation would have a chord to y
                return
            if len(seq) >= maxlen:
                return
            prev = mask_of(seq[:-1])
            for v in bits(g.nbr_mask(last) & ~seen & ~blocked):
                if g.nbr_mask(v) & prev:
                    continue
                yield from rec(seq + [v], seen | (1 << v))

        yield from rec([x], (1 << x) | (1 << y))

    def assign(plist: list, i: int, used: int, branch_mask: int, acc: dict):
        if i == len(plist):
            return dict(acc)
        x, y = plist[i]
        blocked = used | (branch_mask & ~((1 << x) | (1 << y)))
        for seq in routes(x, y, blocked):
            inner = mask_of(seq[1:-1])
            acc[frozenset((x, y))] = tuple(seq)
            hit = assign(plist, i + 1, used | inner, branch_mask, acc)
            if hit is not None:
                return hit
            del acc[frozenset((x, y))]
        return None

    def pick(chosen: list[int], idx: int):
        if len(chosen) == w:
            budget.tick()
            plist = list(combinations(chosen, 2))
            hit = assign(plist, 0, 0, mask_of(chosen), {})
            return None if hit is None else Web(tuple(chosen), hit)
        for j in range(idx, len(cands)):
            if len(cands) - j < w - len(chosen):
                return None
            hit = pick(chosen + [cands[j]], j + 1)
            if hit is not None:
                return hit
        return None

    try:
        hit = pick([], 0)
    except BudgetExhausted:
        return SearchResult(INCONCLUSIVE, None, budget.steps - start)
    if hit is None:
        return SearchResult(ABSENT, None, budget.steps - start)
    return SearchResult(FOUND, hit, budget.steps - start)
