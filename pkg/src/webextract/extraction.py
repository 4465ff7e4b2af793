"""The extraction pipeline.

Each lemma builds its coloring over index sets of the branch set, asks the
Ramsey engine for a monochromatic set of the size the argument needs, and
turns the common color into an outcome by the block-splitting case
analysis.  The proof's thresholds are astronomically large, so whenever the
monochromatic step cannot run (web too small) exact mode falls back to a
direct search for the outcomes themselves at the requested sizes.  The
certificate's ``route`` says which path produced it.

Branch vertices are enumerated in increasing id order.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import bounds
from .budget import Budget, BudgetExhausted, as_budget
from .certificates import (
    ALL_CLAUSES,
    DIRECT_SEARCH,
    INTERIORS,
    PAPER_BOUND,
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
from .certify import verify_certificate
from .graph_core import Graph, bits, find_induced_biclique, find_induced_clique, mask_of, popcount
from .ramsey import CONSTRUCTIVE, EXACT, MODES, ColoringTable, find_monochromatic
from .web_model import Web, profile, restrict

PINNED_CLAUSES = (STABLE, TRIPLES)
INTERIOR_CLAUSES = (INTERIORS,)

# positions 1..4 of a 4-subset, their six pairs, and the fifteen pairs of pairs
QUAD_PAIRS = tuple(combinations(range(1, 5), 2))
PAIRS_OF_PAIRS = tuple(combinations(QUAD_PAIRS, 2))


class ContractViolation(ValueError):
    """A caller broke a lemma's hypothesis."""


class InternalError(RuntimeError):
    """The pipeline produced a certificate its own checker rejects."""


@dataclass(frozen=True)
class ExtractionParams:
    r: int = 0
    s: int = 1
    t: int = 1
    a: int = 1
    b: int = 1
    c: int = 1
    search_mode: str = EXACT
    budget: Optional[int] = None

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("r must be non-negative")
        for name in ("s", "t", "a", "b", "c"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.search_mode not in MODES:
            raise ValueError(f"unknown search mode {self.search_mode!r}")


class _Index:
    """Bitmask views of a web in a graph, keyed by positions in the enumeration."""

    def __init__(self, g: Graph, web: Web, order: Optional[Sequence[int]] = None):
        self.g = g
        self.web = web
        self.order = tuple(sorted(web.branch) if order is None else order)
        self.w = len(self.order)
        self.path_mask = {}
        self.inner_mask = {}
        self.inner_nbrs = {}
        for i, j in combinations(range(self.w), 2):
            seq = web.path(self.order[i], self.order[j])
            inner = mask_of(seq[1:-1])
            self.path_mask[i, j] = mask_of(seq)
            self.inner_mask[i, j] = inner
            self.inner_nbrs[i, j] = g.neighborhood_mask(bits(inner))

    def key(self, i: int, j: int) -> tuple[int, int]:
        return (i, j) if i < j else (j, i)

    def sees_path(self, x: int, i: int, j: int) -> bool:
        """Branch position ``x`` has a neighbor on the whole path of (i, j)."""
        return bool(self.g.nbr_mask(self.order[x]) & self.path_mask[self.key(i, j)])

    def sees_inner(self, x: int, i: int, j: int) -> bool:
        return bool(self.g.nbr_mask(self.order[x]) & self.inner_mask[self.key(i, j)])

    def touch(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        """Interiors of the two pairs are not anticomplete."""
        return bool(self.inner_nbrs[self.key(*p)] & self.inner_mask[self.key(*q)])

    def adjacent(self, x: int, y: int) -> bool:
        return self.g.adjacent(self.order[x], self.order[y])

    def vertex_pair(self, i: int, j: int) -> tuple[int, int]:
        return tuple(sorted((self.order[i], self.order[j])))


# colorings


def phi_pinned(g: Graph, web: Web, enumeration: Sequence[int], T: Iterable[int]) -> frozenset:
    """Positions i in {1, 2, 3} such that the i-th smallest index's branch
    vertex has a neighbor on the path joining the other two."""
    return _decode_pinned(_pinned_mask(_Index(g, web, enumeration), tuple(sorted(T))))


def _pinned_mask(idx: _Index, T: tuple) -> int:
    t1, t2, t3 = T
    mask = 0
    for pos, (x, y, z) in enumerate(((t1, t2, t3), (t2, t1, t3), (t3, t1, t2))):
        if idx.sees_path(x, y, z):
            mask |= 1 << pos
    return mask


def _decode_pinned(mask: int) -> frozenset:
    return frozenset(i + 1 for i in range(3) if mask >> i & 1)


def pinned_table(idx: _Index) -> ColoringTable:
    return ColoringTable(range(idx.w), 3, 8, lambda T: _pinned_mask(idx, T), _decode_pinned)


def phi_interior(g: Graph, web: Web, enumeration: Sequence[int], T: Iterable[int]) -> frozenset:
    """The pairs {P, P'} of position pairs of T whose path interiors touch."""
    return _decode_interior(_interior_mask(_Index(g, web, enumeration), tuple(sorted(T))))


def _interior_mask(idx: _Index, T: tuple) -> int:
    mask = 0
    for bit, (p, q) in enumerate(PAIRS_OF_PAIRS):
        if idx.touch((T[p[0] - 1], T[p[1] - 1]), (T[q[0] - 1], T[q[1] - 1])):
            mask |= 1 << bit
    return mask


def _decode_interior(mask: int) -> frozenset:
    return frozenset(frozenset(PAIRS_OF_PAIRS[b]) for b in range(15) if mask >> b & 1)


def interior_table(idx: _Index) -> ColoringTable:
    return ColoringTable(range(idx.w), 4, 1 << 15, lambda T: _interior_mask(idx, T), _decode_interior)


# direct searches (fallback route)


def _search_clean(idx: _Index, s: int, clauses: Sequence[str], budget: Budget) -> Optional[list[int]]:
    """Lexicographically first s positions meeting ``clauses``."""
    stable = STABLE in clauses
    triples = TRIPLES in clauses
    inner = INTERIORS in clauses

    def fits(chosen: list[int], v: int) -> bool:
        if stable and any(idx.adjacent(v, x) for x in chosen):
            return False
        if triples:
            for y, z in combinations(chosen, 2):
                if idx.sees_inner(v, y, z):
                    return False
            for x in chosen:
                for y in chosen:
                    if y != x and idx.sees_inner(x, v, y):
                        return False
        if inner:
            new = [(y, v) for y in chosen]
            old = list(combinations(chosen, 2))
            for p in new:
                if any(idx.touch(p, q) for q in old):
                    return False
            for p, q in combinations(new, 2):
                if idx.touch(p, q):
                    return False
        return True

    def rec(chosen: list[int], start: int) -> Optional[list[int]]:
        if len(chosen) == s:
            return chosen
        for v in range(start, idx.w - (s - len(chosen)) + 1):
            budget.tick()
            if fits(chosen, v):
                hit = rec(chosen + [v], v + 1)
                if hit is not None:
                    return hit
        return None

    if s > idx.w:
        return None
    return rec([], 0)


def _search_pinned(idx: _Index, a: int, b: int, budget: Budget) -> Optional[tuple[list[int], list[tuple]]]:
    allpairs = list(combinations(range(idx.w), 2))

    def matching(cands: list[tuple], k: int, used: int) -> Optional[list[tuple]]:
        if k == 0:
            return []
        for n, (y, z) in enumerate(cands):
            if len(cands) - n < k:
                return None
            budget.tick()
            if used >> y & 1 or used >> z & 1:
                continue
            rest = matching(cands[n + 1 :], k - 1, used | (1 << y) | (1 << z))
            if rest is not None:
                return [(y, z)] + rest
        return None

    def rec(A: list[int], start: int, cands: list[tuple]) -> Optional[tuple]:
        if len(cands) < b:
            return None
        if len(A) == a:
            B = matching(cands, b, 0)
            return None if B is None else (A, B)
        for x in range(start, idx.w - (a - len(A)) + 1):
            budget.tick()
            nxt = [p for p in cands if x not in p and idx.sees_path(x, *p)]
            hit = rec(A + [x], x + 1, nxt)
            if hit is not None:
                return hit
        return None

    if a + 2 * b > idx.w:
        return None
    return rec([], 0, allpairs)


def _search_touching(idx: _Index, c: int, budget: Budget) -> Optional[tuple[list[tuple], list[tuple]]]:
    pairs = [p for p in combinations(range(idx.w), 2) if idx.inner_mask[p]]
    nbr = []
    for i, p in enumerate(pairs):
        m = 0
        for j, q in enumerate(pairs):
            if i != j and idx.touch(p, q):
                m |= 1 << j
        nbr.append(m)

    def rec(C: list[int], start: int, common: int) -> Optional[tuple]:
        if len(C) == c:
            side = bits(common & ~mask_of(C))[:c]
            return (C, side) if len(side) == c else None
        for i in range(start, len(pairs) - (c - len(C)) + 1):
            budget.tick()
            nxt = common & nbr[i]
            if popcount(nxt & ~mask_of(C + [i])) < c:
                continue
            hit = rec(C + [i], i + 1, nxt)
            if hit is not None:
                return hit
        return None

    hit = rec([], 0, (1 << len(pairs)) - 1)
    if hit is None:
        return None
    C, Cp = hit
    return [pairs[i] for i in C], [pairs[i] for i in Cp]


# certificate builders


def _clean(idx: _Index, pos: Sequence[int], s: int, clauses, route: str, params: dict, notes: dict) -> CleanSet:
    return CleanSet(
        members=tuple(sorted(idx.order[p] for p in pos)), s=s, clauses=tuple(clauses),
        route=route, params=params, notes=notes,
    )


def _pinned(idx: _Index, A, B, a: int, b: int, route: str, params: dict, notes: dict) -> PinnedPair:
    return PinnedPair(
        A=tuple(idx.order[x] for x in A), B=tuple(idx.vertex_pair(*p) for p in B), a=a, b=b,
        route=route, params=params, notes=notes,
    )


def _touching(idx: _Index, C, Cp, c: int, route: str, params: dict, notes: dict) -> TouchingFamilies:
    return TouchingFamilies(
        C=tuple(idx.vertex_pair(*p) for p in C), C_prime=tuple(idx.vertex_pair(*p) for p in Cp), c=c,
        route=route, params=params, notes=notes,
    )


def _inconclusive(reason: str, budget: Budget, params: dict, notes: dict, proven: bool = False) -> Inconclusive:
    return Inconclusive(reason=reason, steps=budget.steps, proven_absent=proven, params=params, notes=notes)


def _exhausted(budget: Budget) -> bool:
    return budget.limit is not None and budget.steps > budget.limit


def _miss_reason(mode: str, budget: Budget, need: int, w: int) -> str:
    if _exhausted(budget):
        return f"step budget exhausted after {budget.steps} steps"
    if w < need:
        return f"web has {w} branch vertices, the monochromatic step needs {need}"
    return f"{mode} monochromatic search found no set of size {need}"


# Lemma: pinned pair or clean set


def split_five(Z: Sequence[int], a: int, b: int) -> tuple[list, list, list, list, list]:
    """Blocks I1 < J < I2 < K < I3 of sizes a, b, a, b, a from the sorted set Z."""
    Z = sorted(Z)
    if len(Z) < 3 * a + 2 * b:
        raise AssertionError(f"|Z| = {len(Z)} cannot hold the five blocks for a={a}, b={b}")
    I1, J = Z[:a], Z[a : a + b]
    I2, K = Z[a + b : 2 * a + b], Z[2 * a + b : 2 * a + 2 * b]
    I3 = Z[2 * a + 2 * b : 3 * a + 2 * b]
    assert max(I1) < min(J) <= max(J) < min(I2) <= max(I2) < min(K) <= max(K) < min(I3)
    return I1, J, I2, K, I3


def lemma_pinned(
    g: Graph, web: Web, a: int, b: int, s: int, mode: str = EXACT, budget: "Budget | int | None" = None
) -> Certificate:
    """Either a set A of a branch vertices each seeing every path of b disjoint
    pairs, or s branch vertices forming a stable set whose members miss the
    interiors of all paths among the others."""
    budget = as_budget(budget)
    params = {"a": a, "b": b, "s": s, "mode": mode}
    idx = _Index(g, web)
    need = max(3 * a + 2 * b, s)
    _, tau_b = bounds.tau(a, b, s)
    notes = {"target": need, "tau": tau_b.expr, "bound_met": tau_b.value is not None and idx.w >= tau_b.value}
    res = find_monochromatic(pinned_table(idx), need, mode, budget)
    if res.found:
        Z = list(res.witness.subset)
        F = sorted(_decode_pinned(res.witness.color))
        notes = dict(notes, color=F, monochromatic=Z)
        if F:
            f = F[0]
            I1, J, I2, K, I3 = split_five(Z, a, b)
            A = (I1, I2, I3)[f - 1]
            return _pinned(idx, A, list(zip(J, K)), a, b, PAPER_BOUND, params, notes)
        return _clean(idx, Z[:s], s, PINNED_CLAUSES, PAPER_BOUND, params, notes)
    if res.inconclusive or mode == CONSTRUCTIVE:
        return _inconclusive(_miss_reason(mode, budget, need, idx.w), budget, params, notes)
    try:
        hit = _search_pinned(idx, a, b, budget)
        if hit is not None:
            return _pinned(idx, hit[0], hit[1], a, b, DIRECT_SEARCH, params, notes)
        S = _search_clean(idx, s, PINNED_CLAUSES, budget)
        if S is not None:
            return _clean(idx, S, s, PINNED_CLAUSES, DIRECT_SEARCH, params, notes)
    except BudgetExhausted:
        return _inconclusive(_miss_reason(mode, budget, need, idx.w), budget, params, notes)
    return _inconclusive("neither outcome exists at the requested sizes", budget, params, notes, proven=True)


# Lemma: touching interior families or interior-clean set


def split_four(Z: Sequence[int], c: int) -> tuple[list, list, list, list]:
    Z = sorted(Z)
    if len(Z) < 4 * c:
        raise AssertionError(f"|Z| = {len(Z)} cannot hold four blocks of size {c}")
    blocks = [Z[k * c : (k + 1) * c] for k in range(4)]
    assert all(max(blocks[k]) < min(blocks[k + 1]) for k in range(3))
    return tuple(blocks)


def orient(P: tuple[int, int], Q: tuple[int, int]) -> tuple[int, int, int, int]:
    """Write P = {i, j}, Q = {i', j'} with j not in Q and j' not in P."""
    shared = set(P) & set(Q)
    if shared:
        (u,) = shared
        return u, next(x for x in P if x != u), u, next(x for x in Q if x != u)
    return P[0], P[1], Q[0], Q[1]


def lemma_clean_interior(
    g: Graph, web: Web, c: int, s: int, mode: str = EXACT, budget: "Budget | int | None" = None
) -> Certificate:
    """Either disjoint families C, C' of c pairs whose path interiors touch
    across, or s branch vertices whose pairs have pairwise anticomplete
    interiors."""
    budget = as_budget(budget)
    params = {"c": c, "s": s, "mode": mode}
    idx = _Index(g, web)
    need = max(4 * c, s)
    _, sig_b = bounds.sigma(c, s)
    notes = {"target": need, "sigma": sig_b.expr, "bound_met": sig_b.value is not None and idx.w >= sig_b.value}
    res = find_monochromatic(interior_table(idx), need, mode, budget)
    if res.found:
        Z = list(res.witness.subset)
        F = res.witness.color
        notes = dict(notes, color=sorted(sorted(map(list, pp)) for pp in _decode_interior(F)), monochromatic=Z)
        if F:
            # colex-least {P, P'}: bits follow lexicographic order of pairs of pairs,
            # so compare by (larger pair, smaller pair) instead
            P, Q = min((PAIRS_OF_PAIRS[bt] for bt in range(15) if F >> bt & 1), key=lambda pq: (pq[1], pq[0]))
            i, j, ip, jp = orient(P, Q)
            blocks = split_four(Z, c)
            pick = {k: blocks[k - 1][0] for k in range(1, 5)}
            ti, tip = pick[i], pick[ip]
            C = [(ti, t) for t in blocks[j - 1]]
            Cp = [(tip, t) for t in blocks[jp - 1]]
            notes["orientation"] = [i, j, ip, jp]
            return _touching(idx, C, Cp, c, PAPER_BOUND, params, notes)
        return _clean(idx, Z[:s], s, INTERIOR_CLAUSES, PAPER_BOUND, params, notes)
    if res.inconclusive or mode == CONSTRUCTIVE:
        return _inconclusive(_miss_reason(mode, budget, need, idx.w), budget, params, notes)
    try:
        hit = _search_touching(idx, c, budget)
        if hit is not None:
            return _touching(idx, hit[0], hit[1], c, DIRECT_SEARCH, params, notes)
        S = _search_clean(idx, s, INTERIOR_CLAUSES, budget)
        if S is not None:
            return _clean(idx, S, s, INTERIOR_CLAUSES, DIRECT_SEARCH, params, notes)
    except BudgetExhausted:
        return _inconclusive(_miss_reason(mode, budget, need, idx.w), budget, params, notes)
    return _inconclusive("neither outcome exists at the requested sizes", budget, params, notes, proven=True)


# combined theorem


def _largest_stage_one(idx: _Index, s: int, budget: Budget) -> int:
    for k in range(idx.w, s - 1, -1):
        if _search_clean(idx, k, PINNED_CLAUSES, budget) is not None:
            return k
    return s


def _stage_json(cert: Certificate) -> dict:
    out = cert.to_json()
    out.pop("params", None)
    return out


def theorem_combined(
    g: Graph, web: Web, a: int, b: int, c: int, s: int, mode: str = EXACT, budget: "Budget | int | None" = None
) -> Certificate:
    """Pinned pair, touching families, or a fully clean set of size s.

    Stage one runs the pinned-pair lemma asking for a clean set Sigma;
    stage two runs the clean-interior lemma on the web restricted to Sigma.
    """
    budget = as_budget(budget)
    params = {"a": a, "b": b, "c": c, "s": s, "mode": mode}
    idx = _Index(g, web)
    _, sig_b = bounds.sigma(c, s)
    try:
        if sig_b.value is not None and sig_b.value <= idx.w:
            s1 = sig_b.value
        elif mode == EXACT:
            s1 = _largest_stage_one(idx, s, budget)
        else:
            s1 = max(4 * c, s)
    except BudgetExhausted:
        return _inconclusive(f"step budget exhausted after {budget.steps} steps", budget, params, {})
    notes: dict = {"sigma": sig_b.expr, "stage_one_size": s1}

    first = lemma_pinned(g, web, a, b, s1, mode, budget)
    notes["stage_one"] = _stage_json(first)
    if isinstance(first, PinnedPair):
        return PinnedPair(A=first.A, B=first.B, a=a, b=b, route=first.route, params=params, notes=notes)
    second = None
    if isinstance(first, CleanSet):
        sub = restrict(web, first.members)
        second = lemma_clean_interior(g, sub, c, s, mode, budget)
        notes["stage_two"] = _stage_json(second)
        if isinstance(second, TouchingFamilies):
            return TouchingFamilies(
                C=second.C, C_prime=second.C_prime, c=c, route=second.route, params=params, notes=notes
            )
        if isinstance(second, CleanSet):
            route = PAPER_BOUND if first.route == second.route == PAPER_BOUND else DIRECT_SEARCH
            return CleanSet(members=second.members, s=s, clauses=ALL_CLAUSES, route=route, params=params, notes=notes)

    if mode == CONSTRUCTIVE or _exhausted(budget):
        last = second if second is not None else first
        return _inconclusive(last.reason, budget, params, notes)
    # exact mode: the staged argument came up short on this web; search the whole web
    try:
        notes["fallback"] = "whole-web direct search"
        hit = _search_touching(idx, c, budget)
        if hit is not None:
            return _touching(idx, hit[0], hit[1], c, DIRECT_SEARCH, params, notes)
        S = _search_clean(idx, s, ALL_CLAUSES, budget)
        if S is not None:
            return _clean(idx, S, s, ALL_CLAUSES, DIRECT_SEARCH, params, notes)
        hit = _search_pinned(idx, a, b, budget)
        if hit is not None:
            return _pinned(idx, hit[0], hit[1], a, b, DIRECT_SEARCH, params, notes)
    except BudgetExhausted:
        return _inconclusive(f"step budget exhausted after {budget.steps} steps", budget, params, notes)
    return _inconclusive("no outcome exists at the requested sizes", budget, params, notes, proven=True)


# touching small sets -> induced K_t or K_{t,t}


def _check_touching_sets(g: Graph, sets: Sequence[Sequence[int]]) -> None:
    seen: set = set()
    for X in sets:
        if not X:
            raise ContractViolation("every set must be non-empty")
        g.check_vertices(X)
        if seen & set(X):
            raise ContractViolation("sets must be pairwise disjoint")
        seen |= set(X)
    masks = [mask_of(X) for X in sets]
    nbrs = [g.neighborhood_mask(X) for X in sets]
    for i, j in combinations(range(len(sets)), 2):
        if not nbrs[i] & masks[j]:
            raise ContractViolation(f"sets {i} and {j} are anticomplete")


def lemma_touching_sets(
    g: Graph, sets: Sequence[Iterable[int]], t: int, mode: str = EXACT, budget: "Budget | int | None" = None
) -> Certificate:
    """Induced K_t or K_{t,t} from pairwise touching, pairwise disjoint small sets."""
    budget = as_budget(budget)
    sets = [sorted(X) for X in sets]
    _check_touching_sets(g, sets)
    params = {"t": t, "mode": mode, "sets": len(sets)}
    width = max(len(X) for X in sets)

    def rule(T: tuple) -> int:
        i, j = T
        mask = 0
        for f, u in enumerate(sets[i]):
            nb = g.nbr_mask(u)
            for fp, v in enumerate(sets[j]):
                if nb >> v & 1:
                    mask |= 1 << (f * width + fp)
        return mask

    def decode(mask: int) -> frozenset:
        return frozenset((k // width + 1, k % width + 1) for k in range(width * width) if mask >> k & 1)

    table = ColoringTable(range(len(sets)), 2, 1 << (width * width), rule, decode)
    need = 2 * t
    _, xi_b = bounds.xi(width, t)
    notes: dict = {"target": need, "width": width, "xi": xi_b.expr}
    res = find_monochromatic(table, need, mode, budget)
    if res.found:
        Z = sorted(res.witness.subset)
        low, high = Z[:t], Z[t:]
        F = sorted(decode(res.witness.color))
        notes = dict(notes, color=[list(p) for p in F], monochromatic=Z)
        diag = [f for f, fp in F if f == fp]
        if diag:
            f = diag[0]
            verts = tuple(sets[i][f - 1] for i in low)
            return InducedClique(vertices=verts, t=t, route=PAPER_BOUND, params=params, notes=notes)
        f, fp = F[0]
        left = tuple(sets[i][f - 1] for i in low)
        right = tuple(sets[i][fp - 1] for i in high)
        return InducedBiclique(left=left, right=right, t=t, route=PAPER_BOUND, params=params, notes=notes)
    if res.inconclusive or mode == CONSTRUCTIVE:
        return _inconclusive(_miss_reason(mode, budget, need, len(sets)), budget, params, notes)
    union = sorted(v for X in sets for v in X)
    cl = find_induced_clique(g, t, budget, within=union)
    if cl.found:
        return InducedClique(vertices=cl.witness, t=t, route=DIRECT_SEARCH, params=params, notes=notes)
    if not cl.inconclusive:
        bc = find_induced_biclique(g, t, budget, within=union)
        if bc.found:
            left, right = bc.witness
            return InducedBiclique(left=left, right=right, t=t, route=DIRECT_SEARCH, params=params, notes=notes)
        if not bc.inconclusive:
            return _inconclusive(
                "no induced K_t or K_{t,t} inside the union of the sets", budget, params, notes, proven=True
            )
    return _inconclusive(f"step budget exhausted after {budget.steps} steps", budget, params, notes)


# main theorem


def touching_sets_from(web: Web, cert: Certificate) -> list[list[int]]:
    """The sets X_i built from a pinned pair or from touching families."""
    if isinstance(cert, PinnedPair):
        return [sorted({x} | set(web.path(*p))) for x, p in zip(cert.A, cert.B)]
    if isinstance(cert, TouchingFamilies):
        return [
            sorted(set(web.path(*p)[1:-1]) | set(web.path(*q)[1:-1])) for p, q in zip(cert.C, cert.C_prime)
        ]
    raise TypeError(f"no touching sets in a {cert.kind} certificate")


def _checked(g: Graph, web: Web, cert: Certificate) -> Certificate:
    if cert.conclusive:
        verdict = verify_certificate(g, web, cert)
        if not verdict.ok:
            raise InternalError(f"pipeline emitted an invalid {cert.kind} certificate: {verdict.clause}")
    return cert


def _xi_candidates(xi_b: bounds.BigBound, w: int) -> list[int]:
    if xi_b.value is not None and 3 * xi_b.value <= w:
        return [xi_b.value]
    return list(range(max(1, w // 3), 0, -1))


def main_extract(g: Graph, web: Web, params: ExtractionParams) -> Certificate:
    """Induced K_t, induced K_{t,t}, or s branch vertices whose restricted web
    is an induced proper subdivision of K_s.

    The touching-set count xi' is the bound xi when the web can host it, and
    otherwise the largest counts the web can host, tried in decreasing
    order; the certificate records the one used.
    """
    r, s, t, mode = params.r, params.s, params.t, params.search_mode
    prof = profile(web)
    if prof.r_value > r:
        raise ContractViolation(f"web has paths of length {prof.r_value + 1}, more than r + 1 = {r + 1}")
    budget = Budget(params.budget)
    echo = asdict(params)
    chain = bounds.bound_chain(r, s, t)
    xi_b = chain["xi"]["bound"]
    width = chain["xi"]["width"]
    base_notes = {"xi": xi_b.expr, "xi_width": width, "omega": chain["omega"]["bound"].expr}
    last: Optional[Certificate] = None
    for k in _xi_candidates(xi_b, web.w):
        notes = dict(base_notes, xi_used=k)
        combined = theorem_combined(g, web, k, k, k, s, mode, budget)
        notes["combined"] = _stage_json(combined)
        if isinstance(combined, CleanSet):
            return _checked(g, web, CleanSet(
                members=combined.members, s=s, clauses=ALL_CLAUSES, route=combined.route, params=echo, notes=notes
            ))
        if isinstance(combined, Inconclusive):
            last = combined
            if _exhausted(budget):
                break
            continue
        sets = touching_sets_from(web, combined)
        if any(len(X) > width for X in sets):
            raise InternalError(f"a touching set exceeds the size bound {width}")
        final = lemma_touching_sets(g, sets, t, mode, budget)
        notes["touching"] = _stage_json(final)
        if final.conclusive:
            route = PAPER_BOUND if final.route == combined.route == PAPER_BOUND else DIRECT_SEARCH
            cls = type(final)
            fields = (
                {"vertices": final.vertices} if isinstance(final, InducedClique) else {"left": final.left, "right": final.right}
            )
            return _checked(g, web, cls(t=t, route=route, params=echo, notes=notes, **fields))
        last = final
        if _exhausted(budget):
            break
    reason = last.reason if isinstance(last, Inconclusive) else "no candidate size for the touching-set step"
    if mode == CONSTRUCTIVE or _exhausted(budget):
        return Inconclusive(reason=reason, steps=budget.steps, params=echo, notes=base_notes)
    # every staged attempt stalled; look for the three outcomes directly
    notes = dict(base_notes, fallback="whole-web direct search", staged=reason)
    try:
        S = _search_clean(_Index(g, web), s, ALL_CLAUSES, budget)
        if S is not None:
            members = tuple(sorted(sorted(web.branch)[p] for p in S))
            return _checked(g, web, CleanSet(
                members=members, s=s, clauses=ALL_CLAUSES, route=DIRECT_SEARCH, params=echo, notes=notes
            ))
        cl = find_induced_clique(g, t, budget)
        if cl.found:
            return _checked(g, web, InducedClique(
                vertices=tuple(cl.witness), t=t, route=DIRECT_SEARCH, params=echo, notes=notes
            ))
        bc = find_induced_biclique(g, t, budget)
        if bc.found:
            left, right = bc.witness
            return _checked(g, web, InducedBiclique(
                left=tuple(left), right=tuple(right), t=t, route=DIRECT_SEARCH, params=echo, notes=notes
            ))
        if cl.inconclusive or bc.inconclusive:
            raise BudgetExhausted(budget.steps)
    except BudgetExhausted:
        return Inconclusive(reason=f"step budget exhausted after {budget.steps} steps", steps=budget.steps,
                            params=echo, notes=notes)
    return Inconclusive(reason="no outcome exists at the requested sizes", steps=budget.steps,
                        proven_absent=True, params=echo, notes=notes)
