"""Colorings of g-subsets and monochromatic subset search.

Two search modes:

* ``exact`` -- depth-first over candidate n-subsets in colex order with
  incremental pruning; complete, so absence is a proof.
* ``constructive`` -- the pivot argument from the classical proof of the
  hypergraph Ramsey theorem: repeatedly take the least remaining element as
  a pivot, restrict to a large subset on which the pivot's induced
  (g-1)-coloring is constant, then pigeonhole the pivot colors.  Sound, but
  it can miss witnesses on small ground sets; a miss is inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Iterable, Mapping, Optional, Sequence

from .budget import ABSENT, FOUND, INCONCLUSIVE, Budget, BudgetExhausted, SearchResult, as_budget

EXACT = "exact"
CONSTRUCTIVE = "constructive"
MODES = (EXACT, CONSTRUCTIVE)


class ColoringTable:
    """A map from the ``arity``-subsets of ``ground`` to colors ``0..num_colors-1``.

    The assignment is a rule evaluated on demand (on sorted tuples) and
    memoized.  ``decode`` turns a color back into its semantic meaning.
    """

    def __init__(
        self,
        ground: Iterable[int],
        arity: int,
        num_colors: int,
        rule: Callable[[tuple], int],
        decode: Optional[Callable[[int], Hashable]] = None,
    ):
        if arity < 1:
            raise ValueError("arity must be positive")
        if num_colors < 1:
            raise ValueError("palette must be non-empty")
        self.ground = tuple(sorted(set(ground)))
        self.arity = arity
        self.num_colors = num_colors
        self._rule = rule
        self._decode = decode
        self._cache: dict[tuple, int] = {}

    @classmethod
    def from_mapping(cls, ground: Iterable[int], arity: int, mapping: Mapping, num_colors: Optional[int] = None):
        table = {tuple(sorted(k)): int(c) for k, c in mapping.items()}
        if num_colors is None:
            num_colors = max(table.values(), default=0) + 1
        return cls(ground, arity, num_colors, table.__getitem__)

    def color(self, subset: Iterable[int]) -> int:
        key = tuple(sorted(subset))
        c = self._cache.get(key)
        if c is None:
            if len(key) != self.arity:
                raise ValueError(f"{key} is not a {self.arity}-subset")
            c = self._rule(key)
            if not (isinstance(c, int) and 0 <= c < self.num_colors):
                raise ValueError(f"rule produced color {c!r} outside the palette")
            self._cache[key] = c
        return c

    def decode(self, color: int) -> Hashable:
        return color if self._decode is None else self._decode(color)


@dataclass(frozen=True)
class MonochromaticWitness:
    color: int
    subset: tuple[int, ...]


def check_witness(table: ColoringTable, witness: MonochromaticWitness, n: Optional[int] = None) -> bool:
    """Re-evaluate every ``arity``-subset of the witness against the table."""
    z = witness.subset
    if n is not None and len(z) != n:
        return False
    if len(set(z)) != len(z) or not set(z) <= set(table.ground):
        return False
    if not 0 <= witness.color < table.num_colors:
        return False
    return all(table.color(x) == witness.color for x in combinations(sorted(z), table.arity))


def _exact(table: ColoringTable, n: int, budget: Budget) -> Optional[MonochromaticWitness]:
    u = table.ground
    g = table.arity

    def rec(chosen: list[int], limit: int, color: Optional[int]):
        if len(chosen) == n:
            return chosen, color
        need = n - len(chosen)
        for idx in range(need - 1, limit):
            budget.tick()
            v = u[idx]
            col = color
            ok = True
            if len(chosen) >= g - 1:
                for rest in combinations(chosen, g - 1):
                    c = table.color((v,) + rest)
                    if col is None:
                        col = c
                    elif c != col:
                        ok = False
                        break
            if ok:
                hit = rec(chosen + [v], idx, col)
                if hit is not None:
                    return hit
        return None

    hit = rec([], len(u), None)
    if hit is None:
        return None
    chosen, color = hit
    return MonochromaticWitness(0 if color is None else color, tuple(sorted(chosen)))


def _pivot_mono(rule: Callable[[tuple], int], elems: Sequence[int], g: int, budget: Budget):
    """A monochromatic subset of ``elems`` for a g-uniform ``rule``.

    Returns ``(color, members)``; ``color`` is None when ``members`` has
    fewer than ``g`` elements (vacuously monochromatic).
    """
    if len(elems) < g:
        return None, list(elems)
    if g == 1:
        classes: dict[int, list[int]] = {}
        for v in elems:
            budget.tick()
            classes.setdefault(rule((v,)), []).append(v)
        best = min(classes, key=lambda c: (-len(classes[c]), c))
        return best, classes[best]

    pivots: list[int] = []
    colors: list[Optional[int]] = []
    rest = list(elems)
    while rest:
        budget.tick()
        v, rest = rest[0], rest[1:]
        c, rest = _pivot_mono(lambda y, v=v: rule((v,) + y), rest, g - 1, budget)
        pivots.append(v)
        colors.append(c)
    eligible = len(pivots) - (g - 1)
    if eligible <= 0:
        return None, pivots
    tally: dict[int, int] = {}
    for c in colors[:eligible]:
        tally[c] = tally.get(c, 0) + 1
    best = min(tally, key=lambda c: (-tally[c], c))
    members = [pivots[i] for i in range(eligible) if colors[i] == best] + pivots[eligible:]
    return best, members


def _constructive(table: ColoringTable, n: int, budget: Budget) -> Optional[MonochromaticWitness]:
    color, members = _pivot_mono(table.color, table.ground, table.arity, budget)
    if len(members) < n:
        return None
    z = tuple(sorted(members)[:n])
    if color is None:
        color = table.color(z) if n == table.arity else 0
    return MonochromaticWitness(color, z)


def find_monochromatic(
    table: ColoringTable, n: int, mode: str = EXACT, budget: "Budget | int | None" = None
) -> SearchResult[MonochromaticWitness]:
    """Search for an n-subset of the ground set whose ``arity``-subsets all
    share one color.

    Exact mode returns the colex-least witness, or ``absent`` when none
    exists.  Constructive mode never reports ``absent``: a miss is
    ``inconclusive``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    budget = as_budget(budget)
    start = budget.steps
    u = table.ground
    if n > len(u):
        status = ABSENT if mode == EXACT else INCONCLUSIVE
        return SearchResult(status, None, 0)
    try:
        if n < table.arity:
            wit = MonochromaticWitness(0, u[:n])
        elif mode == EXACT:
            wit = _exact(table, n, budget)
        else:
            wit = _constructive(table, n, budget)
    except BudgetExhausted:
        return SearchResult(INCONCLUSIVE, None, budget.steps - start)
    steps = budget.steps - start
    if wit is None:
        return SearchResult(ABSENT if mode == EXACT else INCONCLUSIVE, None, steps)
    if not check_witness(table, wit, n):
        raise AssertionError(f"monochromatic search produced an invalid witness {wit}")
    return SearchResult(FOUND, wit, steps)
