"""Descent statistics of permutations and r-colored permutations.

Colored letters are ordered ``1_0 < ... < n_0 < 1_1 < ... < n_{r-1}``: colors
are compared first, values only on a color tie.  Position ``n`` is compared
against a virtual letter ``(n+1)_0``, so a nonzero last color is a descent.
All generating polynomials here come from brute-force enumeration.
"""
from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .polycore import Poly, QPoly

PLAIN_MAX_N = 9
DEFAULT_MAX_STATES = 10**7
MAX_STATES_ENV = "VERONESE_LAB_MAX_STATES"


class EnumerationTooLarge(RuntimeError):
    pass


def max_states() -> int:
    raw = os.environ.get(MAX_STATES_ENV)
    return int(raw) if raw else DEFAULT_MAX_STATES


@dataclass(frozen=True)
class ColoredPermutation:
    values: tuple[int, ...]
    colors: tuple[int, ...]
    r: int

    def __post_init__(self):
        n = len(self.values)
        if sorted(self.values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {self.values}")
        if len(self.colors) != n:
            raise ValueError("values and colors differ in length")
        if self.r < 1 or any(not 0 <= c < self.r for c in self.colors):
            raise ValueError(f"colors must lie in 0..{self.r - 1}: {self.colors}")

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class StatRecord:
    des: int
    maj: int
    fmaj: int | None = None


def _check_permutation(p: Sequence[int]):
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of [{len(p)}]: {tuple(p)}")


def descent_stats_plain(p: Sequence[int]) -> StatRecord:
    _check_permutation(p)
    positions = [i for i in range(1, len(p)) if p[i - 1] > p[i]]
    return StatRecord(len(positions), sum(positions))


def _colored_descents(values: Sequence[int], colors: Sequence[int]) -> list[int]:
    n = len(values)
    out = []
    for i in range(n):
        nxt = (colors[i + 1], values[i + 1]) if i + 1 < n else (0, n + 1)
        if (colors[i], values[i]) > nxt:
            out.append(i + 1)
    return out


def descent_stats_colored(cp: ColoredPermutation) -> StatRecord:
    positions = _colored_descents(cp.values, cp.colors)
    maj = sum(positions)
    return StatRecord(len(positions), maj, cp.r * maj - sum(cp.colors))


def _guard_plain(n: int):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > PLAIN_MAX_N:
        raise EnumerationTooLarge(f"n = {n} exceeds the enumeration cap {PLAIN_MAX_N}")


def _guard_colored(n: int, r: int):
    if n < 1 or r < 1:
        raise ValueError(f"n and r must be positive, got n={n}, r={r}")
    states = r**n * math.factorial(n)
    cap = max_states()
    if states > cap:
        raise EnumerationTooLarge(
            f"{r}^{n} * {n}! = {states} states exceeds the cap {cap} (set {MAX_STATES_ENV} to raise it)"
        )


@lru_cache(maxsize=None)
def _plain_table(n: int) -> Counter:
    """Counter over (first letter, des, maj)."""
    _guard_plain(n)
    table = Counter()
    for p in itertools.permutations(range(1, n + 1)):
        s = descent_stats_plain(p)
        table[(p[0], s.des, s.maj)] += 1
    return table


@lru_cache(maxsize=None)
def _colored_table(n: int, r: int) -> Counter:
    """Counter over (first letter, first color, des, fmaj)."""
    _guard_colored(n, r)
    table = Counter()
    for p in itertools.permutations(range(1, n + 1)):
        for colors in itertools.product(range(r), repeat=n):
            positions = _colored_descents(p, colors)
            maj = sum(positions)
            fmaj = r * maj - sum(colors)
            if fmaj < 0:
                raise AssertionError(f"negative fmaj for {p}, {colors}")
            table[(p[0], colors[0], len(positions), fmaj)] += 1
    return table


def _x_poly(counts: Counter) -> Poly:
    top = max(counts, default=-1)
    return Poly(counts.get(d, 0) for d in range(top + 1))


def eulerian_poly(n: int) -> Poly:
    """A_n(x) = sum over S_n of x^des."""
    counts = Counter()
    for (_, des, _), m in _plain_table(n).items():
        counts[des] += m
    return _x_poly(counts)


def eulerian_refined(n: int, ell: int) -> Poly:
    """A_n^<ell>(x): descents over permutations starting with ``ell``."""
    if not 1 <= ell <= n:
        raise ValueError(f"ell must lie in 1..{n}, got {ell}")
    counts = Counter()
    for (first, des, _), m in _plain_table(n).items():
        if first == ell:
            counts[des] += m
    return _x_poly(counts)


def eulerian_q(n: int) -> QPoly:
    """sum over S_n of x^des q^maj."""
    terms = Counter()
    for (_, des, maj), m in _plain_table(n).items():
        terms[(des, maj)] += m
    return QPoly(terms)


def _check_refinement(n: int, r: int, ell, c):
    if ell is not None and not 1 <= ell <= n:
        raise ValueError(f"ell must lie in 1..{n}, got {ell}")
    if c is not None and not 0 <= c < r:
        raise ValueError(f"color must lie in 0..{r - 1}, got {c}")


def colored_refined_q(n: int, r: int, ell: int | None = None, c: int | None = None) -> QPoly:
    """sum of x^des q^fmaj over Z_r wr S_n, optionally fixing pi(1)=ell and xi_1=c."""
    _check_refinement(n, r, ell, c)
    terms = Counter()
    for (first, color, des, fmaj), m in _colored_table(n, r).items():
        if (ell is None or first == ell) and (c is None or color == c):
            terms[(des, fmaj)] += m
    return QPoly(terms)


def colored_refined(n: int, r: int, ell: int | None = None, c: int | None = None) -> Poly:
    """G_{n,r}, G^{ell,-}, G^{-,c} or G^{ell,c}; an omitted constraint is summed out."""
    _check_refinement(n, r, ell, c)
    counts = Counter()
    for (first, color, des, _), m in _colored_table(n, r).items():
        if (ell is None or first == ell) and (c is None or color == c):
            counts[des] += m
    return _x_poly(counts)


def colored_eulerian(n: int, r: int) -> Poly:
    return colored_refined(n, r)


def colored_permutations(n: int, r: int):
    _guard_colored(n, r)
    for p in itertools.permutations(range(1, n + 1)):
        for colors in itertools.product(range(r), repeat=n):
            yield ColoredPermutation(p, colors, r)
