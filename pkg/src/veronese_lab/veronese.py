"""Sections f^<r,k> and the operator U^n_{r,k}.

``sections(f, r)`` splits ``f`` by exponent residue mod ``r`` so that
``f(x) = sum_k x^k * parts[k](x^r)``.  The operator

    U^n_{r,k} h = ((1 + x + ... + x^(r-1))^n * h)^<r,k>

is computed three ways: directly (:func:`veronese`), from the series
``h/(1-x)^n`` by keeping every r-th coefficient (:func:`veronese_oracle`),
and from the building blocks ``U^n_{r,j} 1`` (:func:`veronese_via_uri`).
"""
from __future__ import annotations

from dataclasses import dataclass

from .polycore import Poly, geometric_kernel, series_of_rational


@dataclass(frozen=True)
class SectionDecomposition:
    r: int
    parts: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.parts) != self.r:
            raise ValueError(f"expected {self.r} parts, got {len(self.parts)}")

    def __getitem__(self, k: int) -> Poly:
        return self.parts[k]

    def __iter__(self):
        return iter(self.parts)


@dataclass(frozen=True)
class VeroneseResult:
    r: int
    n: int
    k: int
    numerator: Poly


class OracleMismatch(ArithmeticError):
    """The subsequence computation disagrees with the kernel computation."""


def _check_r(r: int):
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")


def _check_k(k: int, r: int):
    if not 0 <= k < r:
        raise ValueError(f"k must satisfy 0 <= k <= r-1 = {r - 1}, got {k}")


def sections(f: Poly, r: int) -> SectionDecomposition:
    _check_r(r)
    return SectionDecomposition(r, tuple(Poly(f.coeffs[k::r]) for k in range(r)))


def recompose(d: SectionDecomposition) -> Poly:
    total = Poly()
    for k, part in enumerate(d.parts):
        total = total + part.compose_power(d.r).shift(k)
    return total


def degree_bound(h: Poly, n: int, r: int, k: int) -> int:
    """floor((n(r-1) + deg h - k) / r); -1 when h = 0."""
    if h.is_zero():
        return -1
    return (n * (r - 1) + h.degree - k) // r


def veronese(h: Poly, n: int, r: int, k: int) -> VeroneseResult:
    _check_r(r)
    _check_k(k, r)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    numerator = sections(geometric_kernel(r, n) * h, r)[k]
    if not numerator.is_zero() and numerator.degree > degree_bound(h, n, r, k):
        raise AssertionError("degree bound violated")
    return VeroneseResult(r, n, k, numerator)


def veronese_all(h: Poly, n: int, r: int) -> tuple[Poly, ...]:
    """(U^n_{r,0} h, ..., U^n_{r,r-1} h)."""
    _check_r(r)
    return sections(geometric_kernel(r, n) * h, r).parts


def required_oracle_order(h: Poly, n: int, r: int, k: int) -> int:
    """ceil((n(r-1) + deg h - k) / r) + n."""
    top = n * (r - 1) + (h.degree if h else 0)
    return max(0, -(-(top - k) // r)) + n


def veronese_oracle(h: Poly, n: int, r: int, k: int, M: int | None = None) -> Poly:
    """U^n_{r,k} h from the subsequence a_k, a_{r+k}, a_{2r+k}, ... of h/(1-x)^n.

    Multiplies sum_{i<=M} a_{ri+k} x^i by (1-x)^n modulo x^(M+1) and
    insists that everything above the degree bound cancels.  Nothing here
    needs h(1) != 0.
    """
    _check_r(r)
    _check_k(k, r)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    need = required_oracle_order(h, n, r, k)
    if M is None:
        M = need
    elif M < need:
        raise ValueError(f"truncation order M={M} cannot certify the numerator; need M >= {need}")
    a = series_of_rational(h, n, r * M + k)
    sub = Poly(a[r * i + k] for i in range(M + 1))
    product = (sub * Poly([1, -1]) ** n).truncate(M)
    bound = degree_bound(h, n, r, k)
    if not product.is_zero() and product.degree > bound:
        raise OracleMismatch(
            f"coefficient of x^{product.degree} is {product.lead}, expected zero above "
            f"degree {bound}"
        )
    return product


def unit_blocks(n: int, r: int) -> tuple[Poly, ...]:
    """(U^n_{r,0} 1, ..., U^n_{r,r-1} 1)."""
    return veronese_all(Poly([1]), n, r)


def veronese_via_uri(h: Poly, n: int, r: int, i: int) -> Poly:
    """U^n_{r,i} h assembled from sections of h and the blocks U^n_{r,j} 1.

    U^n_{r,i} h = sum_{j<=i} h^<r,i-j> U_j  +  x * sum_{j>i} h^<r,r+i-j> U_j
    """
    _check_r(r)
    _check_k(i, r)
    hs = sections(h, r)
    blocks = unit_blocks(n, r)
    low = Poly()
    for j in range(i + 1):
        low = low + hs[i - j] * blocks[j]
    high = Poly()
    for j in range(i + 1, r):
        high = high + hs[r + i - j] * blocks[j]
    return low + high.shift(1)


def step_sections(parts: tuple[Poly, ...], r: int) -> tuple[Poly, ...]:
    """One application of the factor (1 + ... + x^(r-1)) to sectioned data.

    Recompose ``parts``, multiply by the geometric kernel, split again.
    Takes the U^n sections of h to the U^(n+1) sections.
    """
    d = SectionDecomposition(r, tuple(parts))
    return sections(geometric_kernel(r, 1) * recompose(d), r).parts
