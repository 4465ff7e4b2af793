"""Upper bounds for multicolor hypergraph Ramsey numbers and the parameter
chain of the extraction pipeline.

``rho_upper(f, g, n)`` bounds the least N such that every f-coloring of the
g-subsets of an N-set has an n-subset whose g-subsets share a color.  The
recursion is the vector form of the pivot argument:

    R_g(n_1..n_f) <= R_{g-1}(R_g(n - e_1), ..., R_g(n - e_f)) + 1

with R_g(n) = min{n_i : n_i < g} when some target is below g (such a set is
vacuously monochromatic), pigeonhole for g = 1, and the multinomial
closed form for g = 2.

Most values the pipeline needs are far too large to write down.  A
``BigBound`` therefore carries an exact formula always and an exact integer
value only when it fits under ``DIGIT_CAP`` decimal digits.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

DIGIT_CAP = 20000
STATE_CAP = 200_000


class _TooBig(Exception):
    pass


@dataclass(frozen=True)
class BigBound:
    """Exact formula plus, when computable, its exact integer value.

    ``value is None`` marks overflow: the number is defined exactly by
    ``expr`` but has too many digits to materialize.
    """

    expr: str
    value: Optional[int] = None
    name: Optional[str] = None

    @property
    def overflow(self) -> bool:
        return self.value is None

    @property
    def ref(self) -> str:
        return self.name if self.name else self.expr

    def named(self, name: str) -> "BigBound":
        return BigBound(self.expr, self.value, name)

    def to_json(self) -> dict:
        out = {"name": self.name} if self.name else {}
        out.update({
            "expr": self.expr,
            "value": None if self.value is None else decimal(self.value),
            "digits": None if self.value is None else len(decimal(self.value)),
            "overflow": self.value is None,
        })
        return out

    def __int__(self) -> int:
        if self.value is None:
            raise OverflowError(f"{self.ref} has no materialized value")
        return self.value


Num = Union[int, BigBound]


def _digits(v: int) -> int:
    return int(v.bit_length() * 0.30103) + 1


def decimal(v: int) -> str:
    """Decimal string of ``v`` regardless of the interpreter's conversion limit."""
    get = getattr(sys, "get_int_max_str_digits", None)
    if get is None:
        return str(v)
    old = get()
    sys.set_int_max_str_digits(0)
    try:
        return str(v)
    finally:
        sys.set_int_max_str_digits(old)


def big(x: Num) -> BigBound:
    if isinstance(x, BigBound):
        return x
    return BigBound(str(int(x)), int(x))


def _paren(b: BigBound) -> str:
    r = b.ref
    return f"({r})" if ("+" in r and not r.startswith(("max{", "rho("))) else r


def big_scale(k: int, x: Num) -> BigBound:
    x = big(x)
    return BigBound(f"{k}*{_paren(x)}", None if x.value is None else k * x.value)


def big_add(x: Num, y: Num) -> BigBound:
    x, y = big(x), big(y)
    v = None if x.value is None or y.value is None else x.value + y.value
    return BigBound(f"{x.ref} + {y.ref}", v)


def big_max(x: Num, y: Num) -> BigBound:
    x, y = big(x), big(y)
    v = None if x.value is None or y.value is None else max(x.value, y.value)
    return BigBound(f"max{{{x.ref}, {y.ref}}}", v)


# exact recursion


def _multinomial_capped(parts: tuple[int, ...]) -> int:
    """Multinomial coefficient, or ``_TooBig`` past ``DIGIT_CAP`` digits.

    Parts can themselves be huge, so the size test uses the lower bound
    C(total, rest) >= (total / rest)^rest with rest = total - max part.
    """
    total = sum(parts)
    rest = total - max(parts)
    if rest == 0:
        return 1
    # in log space: rest itself may not fit in a float.  The max part is at
    # least rest / (f - 1), which keeps the gap away from zero.
    gap = max(math.log10(total) - math.log10(rest), math.log10(1 + 1 / (len(parts) - 1)))
    if math.log10(rest) + math.log10(gap) > math.log10(DIGIT_CAP):
        raise _TooBig
    out = 1
    acc = 0
    for p in sorted(parts):
        acc += p
        out *= math.comb(acc, p)
        if _digits(out) > DIGIT_CAP:
            raise _TooBig
    return out


class _Solver:
    def __init__(self):
        self.memo: dict[tuple, int] = {}
        self.states = 0

    def vec(self, g: int, targets: tuple[int, ...]) -> int:
        targets = tuple(sorted(targets))
        small = [n for n in targets if n < g]
        if small:
            return min(small)
        if g == 1:
            return sum(n - 1 for n in targets) + 1
        if g == 2:
            return _multinomial_capped(tuple(n - 1 for n in targets))
        key = (g, targets)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.states += 1
        if self.states > STATE_CAP:
            raise _TooBig
        inner = []
        for i in range(len(targets)):
            if i and targets[i] == targets[i - 1]:
                inner.append(inner[-1])
                continue
            dec = targets[:i] + (targets[i] - 1,) + targets[i + 1 :]
            inner.append(self.vec(g, dec))
        val = self.vec(g - 1, tuple(inner)) + 1
        if _digits(val) > DIGIT_CAP:
            raise _TooBig
        self.memo[key] = val
        return val


@lru_cache(maxsize=4096)
def _rho_exact(f: int, g: int, n: int) -> Optional[int]:
    if n <= g:
        return n
    if f == 1:
        return n
    if g == 1:
        return f * (n - 1) + 1
    # a coloring with f >= 2^40 colors cannot yield a printable bound once n > g
    if f.bit_length() > 40:
        return None
    if g == 2:
        k = n - 1
        digits = (math.lgamma(f * k + 1) - f * math.lgamma(k + 1)) / math.log(10)
        if digits > DIGIT_CAP:
            return None
        return math.factorial(f * k) // math.factorial(k) ** f
    if g >= 3 and f > 64:
        return None
    try:
        return _Solver().vec(g, (n,) * f)
    except (_TooBig, RecursionError):
        return None


def rho_upper(f: Num, g: int, n: Num) -> BigBound:
    """Sound upper bound for the symmetric multicolor Ramsey number rho(f, g, n).

    Exact when small enough; otherwise an overflow-marked ``BigBound`` whose
    formula names its (possibly symbolic) arguments.
    """
    fb, nb = big(f), big(n)
    if g < 1:
        raise ValueError("g must be positive")
    expr = f"rho({fb.ref}, {g}, {nb.ref})"
    if nb.value is not None and nb.value < 1:
        raise ValueError("n must be positive")
    if fb.value is not None and fb.value < 1:
        raise ValueError("f must be positive")
    if nb.value is not None and nb.value <= g:
        return BigBound(expr, nb.value)
    if fb.value is None or nb.value is None:
        return BigBound(expr, None)
    return BigBound(expr, _rho_exact(fb.value, g, nb.value))


def rho_upper_vector(g: int, targets: tuple[int, ...]) -> Optional[int]:
    """Asymmetric bound R_g(n_1, ..., n_f); None when beyond the caps."""
    try:
        return _Solver().vec(g, tuple(targets))
    except (_TooBig, RecursionError):
        return None


# pipeline parameter chain


def tau(a: Num, b: Num, s: Num) -> tuple[BigBound, BigBound]:
    """(third rho argument, bound) for the pinned-pair lemma: rho(8, 3, max{3a + 2b, s})."""
    arg = big_max(big_add(big_scale(3, a), big_scale(2, b)), s)
    return arg, rho_upper(8, 3, arg)


def sigma(c: Num, s: Num) -> tuple[BigBound, BigBound]:
    """(third rho argument, bound) for the clean-interior lemma: rho(2^15, 4, max{4c, s})."""
    arg = big_max(big_scale(4, c), s)
    return arg, rho_upper(2**15, 4, arg)


def xi_width(r: int) -> int:
    return max(r + 3, 2 * r)


def xi(width: int, t: int) -> tuple[BigBound, BigBound]:
    """(color count, bound) for the touching-sets lemma: rho(2^(width^2), 2, 2t)."""
    colors = BigBound(f"2^{width * width}", 2 ** (width * width)) if width * width <= 4096 else BigBound(f"2^{width * width}", None)
    return colors, rho_upper(colors, 2, 2 * t)


def bound_chain(r: int, s: int, t: int) -> dict:
    """Every named bound of the main theorem's proof for (r, s, t).

    theta(a, b, c, s) = tau(a, b, sigma(c, s)) and Omega = theta(xi, xi, xi, s)
    with xi = xi(max{r + 3, 2r}, t).
    """
    if r < 0 or s < 1 or t < 1:
        raise ValueError("need r >= 0 and s, t >= 1")
    width = xi_width(r)
    colors, xi_b = xi(width, t)
    xi_b = xi_b.named("xi")
    sig_arg, sig_b = sigma(xi_b, s)
    sig_b = sig_b.named("sigma")
    tau_arg, tau_b = tau(xi_b, xi_b, sig_b)
    theta_b = tau_b.named("theta")
    omega_b = BigBound(theta_b.expr, theta_b.value, "Omega")
    return {
        "params": {"r": r, "s": s, "t": t},
        "xi": {"width": width, "f": colors, "g": 2, "n": big(2 * t), "bound": xi_b},
        "sigma": {"c": xi_b, "s": big(s), "f": big(2**15), "g": 4, "n": sig_arg, "bound": sig_b},
        "tau": {"a": xi_b, "b": xi_b, "s": sig_b, "f": big(8), "g": 3, "n": tau_arg, "bound": tau_b},
        "theta": {"a": xi_b, "b": xi_b, "c": xi_b, "s": big(s), "bound": theta_b},
        "omega": {"r": r, "s": s, "t": t, "bound": omega_b},
    }


def chain_to_json(chain: dict) -> dict:
    def conv(x):
        if isinstance(x, BigBound):
            return x.to_json()
        if isinstance(x, dict):
            return {k: conv(v) for k, v in x.items()}
        return x

    return conv(chain)
