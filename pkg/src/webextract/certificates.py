"""Certificate variants emitted by the extraction pipeline and their JSON form.

JSON layout::

    {"kind": ..., "evidence": {...}, "route": "paper_bound" | "direct_search",
     "params": {...}, "notes": {...}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PAPER_BOUND = "paper_bound"
DIRECT_SEARCH = "direct_search"

STABLE = "stable"
TRIPLES = "triples"
INTERIORS = "interiors"
ALL_CLAUSES = (STABLE, TRIPLES, INTERIORS)


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True, kw_only=True)
class Certificate:
    route: str = DIRECT_SEARCH
    params: dict = field(default_factory=dict, compare=False)
    notes: dict = field(default_factory=dict, compare=False)

    kind = "certificate"

    def evidence(self) -> dict:
        raise NotImplementedError

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "evidence": self.evidence(),
            "route": self.route,
            "params": dict(self.params),
            "notes": dict(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=False) + "\n"

    @property
    def conclusive(self) -> bool:
        return True


@dataclass(frozen=True, kw_only=True)
class InducedClique(Certificate):
    vertices: tuple
    t: int
    kind = "clique"

    def evidence(self) -> dict:
        return {"vertices": list(self.vertices), "t": self.t}


@dataclass(frozen=True, kw_only=True)
class InducedBiclique(Certificate):
    left: tuple
    right: tuple
    t: int
    kind = "biclique"

    def evidence(self) -> dict:
        return {"left": list(self.left), "right": list(self.right), "t": self.t}


@dataclass(frozen=True, kw_only=True)
class CleanSet(Certificate):
    """Branch subset S.  ``clauses`` names which outcome conditions it claims:
    stability, x anticomplete to the interior of every other pair's path,
    and pairwise anticomplete interiors."""

    members: tuple
    s: int
    clauses: tuple = ALL_CLAUSES
    kind = "clean_set"

    def evidence(self) -> dict:
        return {"S": list(self.members), "s": self.s, "clauses": list(self.clauses)}


@dataclass(frozen=True, kw_only=True)
class PinnedPair(Certificate):
    A: tuple
    B: tuple  # tuple of (y, z) pairs
    a: int
    b: int
    kind = "pinned_pair"

    def evidence(self) -> dict:
        return {"A": list(self.A), "B": [list(p) for p in self.B], "a": self.a, "b": self.b}


@dataclass(frozen=True, kw_only=True)
class TouchingFamilies(Certificate):
    C: tuple
    C_prime: tuple
    c: int
    kind = "touching_families"

    def evidence(self) -> dict:
        return {"C": [list(p) for p in self.C], "C_prime": [list(p) for p in self.C_prime], "c": self.c}


@dataclass(frozen=True, kw_only=True)
class Inconclusive(Certificate):
    reason: str
    steps: int = 0
    proven_absent: bool = False
    kind = "inconclusive"

    def evidence(self) -> dict:
        return {"reason": self.reason, "steps": self.steps, "proven_absent": self.proven_absent}

    @property
    def conclusive(self) -> bool:
        return False


KINDS = {cls.kind: cls for cls in (InducedClique, InducedBiclique, CleanSet, PinnedPair, TouchingFamilies, Inconclusive)}


def _pairs(raw: Any) -> tuple:
    return tuple(tuple(p) for p in raw)


def from_json(obj: dict) -> Certificate:
    try:
        kind = obj["kind"]
        ev = obj["evidence"]
        common = {
            "route": obj.get("route", DIRECT_SEARCH),
            "params": obj.get("params", {}),
            "notes": obj.get("notes", {}),
        }
        if kind == "clique":
            return InducedClique(vertices=tuple(ev["vertices"]), t=ev["t"], **common)
        if kind == "biclique":
            return InducedBiclique(left=tuple(ev["left"]), right=tuple(ev["right"]), t=ev["t"], **common)
        if kind == "clean_set":
            return CleanSet(
                members=tuple(ev["S"]), s=ev["s"], clauses=tuple(ev.get("clauses", ALL_CLAUSES)), **common
            )
        if kind == "pinned_pair":
            return PinnedPair(A=tuple(ev["A"]), B=_pairs(ev["B"]), a=ev["a"], b=ev["b"], **common)
        if kind == "touching_families":
            return TouchingFamilies(C=_pairs(ev["C"]), C_prime=_pairs(ev["C_prime"]), c=ev["c"], **common)
        if kind == "inconclusive":
            return Inconclusive(
                reason=ev.get("reason", ""), steps=ev.get("steps", 0),
                proven_absent=ev.get("proven_absent", False), **common,
            )
    except (KeyError, TypeError) as exc:
        raise CertificateFormatError(f"malformed certificate: {exc}") from None
    raise CertificateFormatError(f"unknown certificate kind {obj.get('kind')!r}")


def loads(text: str) -> Certificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"certificate is not JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise CertificateFormatError("certificate JSON must be an object")
    return from_json(obj)
