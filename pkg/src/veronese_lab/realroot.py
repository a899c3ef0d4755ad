"""Exact real-root decisions: Sturm counting, isolation, interlacing.

No floating point enters any decision.  Roots are located by Sturm counts
on rational intervals ``(lo, hi]``; shared roots between two polynomials
are found by isolating the square-free part of their product, so equal
roots never have to be separated by refinement.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .polycore import Poly, poly_gcd

INF = float("inf")


def square_free_decompose(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm.  Factors are monic, square-free, pairwise coprime."""
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    return list(_yun(p))


@lru_cache(maxsize=4096)
def _yun(p: Poly) -> tuple[tuple[Poly, int], ...]:
    out = []
    if p.is_constant():
        return ()
    a = p.monic()
    b = poly_gcd(a, a.derivative())
    c = a.exact_div(b)
    d = a.derivative().exact_div(b) - c.derivative()
    m = 1
    while not c.is_constant():
        g = poly_gcd(c, d)
        if not g.is_constant():
            out.append((g, m))
        c = c.exact_div(g)
        d = d.exact_div(g) - c.derivative()
        m += 1
    return tuple(out)


@lru_cache(maxsize=4096)
def square_free_part(p: Poly) -> Poly:
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


@dataclass(frozen=True)
class SturmChain:
    chain: tuple[Poly, ...]

    @classmethod
    @lru_cache(maxsize=4096)
    def of(cls, p: Poly) -> SturmChain:
        if p.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        p = square_free_part(p)
        chain = [p, p.derivative()]
        while not chain[-1].is_zero() and not chain[-1].is_constant():
            chain.append(-(chain[-2] % chain[-1]))
        if chain[-1].is_zero():
            chain.pop()
        return cls(tuple(chain))

    def variations(self, t) -> int:
        if t == INF:
            signs = [_sign(q.lead) for q in self.chain]
        elif t == -INF:
            signs = [_sign(q.lead) * (-1) ** (len(q.coeffs) - 1) for q in self.chain]
        else:
            signs = [_sign(q(t)) for q in self.chain]
        signs = [s for s in signs if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo, hi) -> int:
        """Distinct real roots in (lo, hi]."""
        if lo >= hi:
            return 0
        return self.variations(lo) - self.variations(hi)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def count_real_roots(p: Poly, lo=-INF, hi=INF) -> int:
    """Number of distinct real roots of p in (lo, hi]."""
    return SturmChain.of(p).count(_exact(lo), _exact(hi))


def _exact(t):
    if t in (INF, -INF):
        return t
    return Fraction(t)


def is_real_rooted(p: Poly) -> bool:
    if p.is_constant():
        return True
    sf = square_free_part(p)
    return count_real_roots(sf) == sf.degree


def has_only_nonpositive_roots(p: Poly) -> bool:
    if p.is_zero():
        return True
    return is_real_rooted(p) and count_real_roots(p, 0, INF) == 0


def has_only_negative_roots(p: Poly) -> bool:
    """Real-rooted with every zero strictly negative (so p(0) != 0)."""
    if p.is_zero():
        return False
    return has_only_nonpositive_roots(p) and p(0) != 0


def cauchy_bound(p: Poly) -> Fraction:
    lead = abs(p.lead)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint intervals (lo, hi], each holding one distinct root, left to right."""

    intervals: tuple[tuple[Fraction, Fraction], ...]
    multiplicities: tuple[int, ...]

    def __len__(self):
        return len(self.intervals)


def _isolate_square_free(sf: Poly, chain: SturmChain) -> list[tuple[Fraction, Fraction]]:
    if sf.is_constant():
        return []
    bound = cauchy_bound(sf)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        c = chain.count(lo, hi)
        if c == 0:
            continue
        if c == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return out


def isolate_roots(p: Poly) -> RootIsolation:
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if not is_real_rooted(p):
        raise ValueError(f"{p} is not real-rooted")
    factors = square_free_decompose(p)
    sf = square_free_part(p)
    intervals = _isolate_square_free(sf, SturmChain.of(sf))
    mults = tuple(_multiplicity_in(factors, lo, hi) for lo, hi in intervals)
    return RootIsolation(tuple(intervals), mults)


def _multiplicity_in(factors, lo, hi) -> int:
    return sum(m * count_real_roots(f, lo, hi) for f, m in factors)


def refine(p: Poly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of p until it is narrower than ``width``."""
    chain = SturmChain.of(p)
    if chain.count(lo, hi) != 1:
        raise ValueError("interval does not isolate exactly one root")
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if chain.count(lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


# -- interlacing -----------------------------------------------------------


@dataclass(frozen=True)
class InterlacingVerdict:
    holds: bool
    witness: str = ""
    pair: tuple[int, int] | None = field(default=None, compare=False)

    def __bool__(self):
        return self.holds


def _merged_roots(f: Poly, g: Poly):
    """Distinct roots of f*g left to right, with their multiplicities in f and g."""
    fg = f * g
    if fg.is_constant():
        return []
    sf = square_free_part(fg)
    intervals = _isolate_square_free(sf, SturmChain.of(sf))
    ff = square_free_decompose(f) if not f.is_constant() else []
    gf = square_free_decompose(g) if not g.is_constant() else []
    return [(iv, _multiplicity_in(ff, *iv), _multiplicity_in(gf, *iv)) for iv in intervals]


def interlaces(g: Poly, f: Poly) -> InterlacingVerdict:
    """Does g interlace f?

    Both must be real-rooted with positive leading coefficients,
    deg f - deg g in {0, 1}, and the zeros u of f and v of g must satisfy
    ... <= v2 <= u2 <= v1 <= u1.  By convention the zero polynomial
    interlaces, and is interlaced by, every real-rooted polynomial.
    """
    for name, p in (("g", g), ("f", f)):
        if p and p.lead < 0:
            return InterlacingVerdict(False, f"leading coefficient not positive: {name} = {p}")
    for name, p in (("g", g), ("f", f)):
        if not is_real_rooted(p):
            return InterlacingVerdict(False, f"not real-rooted: {name} = {p}")
    if g.is_zero() or f.is_zero():
        return InterlacingVerdict(True)
    dg, df = g.degree, f.degree
    if df - dg not in (0, 1):
        return InterlacingVerdict(
            False, f"degree mismatch: deg f = {df}, deg g = {dg} (need deg f - deg g in {{0, 1}})"
        )
    # Scan thresholds right to left.  With F(t), G(t) the number of zeros
    # of f, g that are >= t, the chain holds iff 0 <= F(t) - G(t) <= 1.
    above_f = above_g = 0
    for (lo, hi), mf, mg in reversed(_merged_roots(f, g)):
        above_f += mf
        above_g += mg
        gap = above_f - above_g
        if gap < 0:
            return InterlacingVerdict(
                False,
                f"root order: g has {above_g} zeros >= the zero in ({lo}, {hi}] but f has only {above_f}",
            )
        if gap > 1:
            return InterlacingVerdict(
                False,
                f"root order: f has {above_f} zeros >= the zero in ({lo}, {hi}] but g has only {above_g}",
            )
    return InterlacingVerdict(True)


def is_interlacing_sequence(seq: Sequence[Poly]) -> InterlacingVerdict:
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            v = interlaces(seq[i], seq[j])
            if not v:
                return InterlacingVerdict(False, f"position {i} does not interlace position {j}: {v.witness}", (i, j))
    return InterlacingVerdict(True)
