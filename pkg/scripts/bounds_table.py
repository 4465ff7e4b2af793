"""Table of the bound chain over a grid of (r, s, t): the formula for each
named bound and how many digits it has when it can be written out."""

import argparse
from dataclasses import dataclass, field
from itertools import product

from webextract.bounds import bound_chain, decimal


@dataclass
class Grid:
    r: list = field(default_factory=lambda: [0, 1, 2, 3])
    s: list = field(default_factory=lambda: [1, 3, 5])
    t: list = field(default_factory=lambda: [1, 2, 3])


def size(b):
    return "overflow" if b.value is None else f"{len(decimal(b.value))} digits" if b.value > 10**12 else str(b.value)


def rows(grid: Grid):
    for r, s, t in product(grid.r, grid.s, grid.t):
        ch = bound_chain(r, s, t)
        yield (r, s, t, ch["xi"]["width"], ch["xi"]["bound"].expr, size(ch["xi"]["bound"]),
               size(ch["sigma"]["bound"]), size(ch["omega"]["bound"]))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-r", type=int, default=3)
    args = ap.parse_args()
    grid = Grid(r=list(range(args.max_r + 1)))
    head = ("r", "s", "t", "width", "xi", "xi value", "sigma", "Omega")
    print(" | ".join(head))
    for row in rows(grid):
        print(" | ".join(map(str, row)))


if __name__ == "__main__":
    main()
