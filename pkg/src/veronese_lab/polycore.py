"""Exact polynomial and truncated power-series arithmetic over the rationals.

A :class:`Poly` is dense, constant term first::

    >>> Poly([1, 2, 3])
    Poly('3x^2 + 2x + 1')

A :class:`QPoly` is a sparse polynomial in two variables ``x`` and ``q``,
keyed by ``(x-degree, q-degree)``.  Truncated series in ``x`` are
:class:`Series`; their coefficients may be rationals or :class:`Poly`
objects (read as polynomials in ``q``).
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]


class _ZeroDegree:
    """Degree of the zero polynomial: below every integer, refuses arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO_DEGREE"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("ZERO_DEGREE")


ZERO_DEGREE = _ZeroDegree()


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


class Poly:
    """Univariate polynomial with exact rational coefficients.

    Instances are immutable and hashable.  ``Poly([])`` is the zero
    polynomial, whose degree is :data:`ZERO_DEGREE`.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1) -> Poly:
        return cls([0] * degree + [coeff])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly('{self}')"

    def __str__(self):
        return format_poly(self.coeffs, "x")

    @staticmethod
    def _coerce(other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self * (1 / self.lead)

    def compose_power(self, r: int) -> Poly:
        """Return p(x^r)."""
        out = [0] * (r * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[r * i] = c
        return Poly(out)

    def shift(self, k: int) -> Poly:
        """Multiply by x^k."""
        return Poly([0] * k + list(self.coeffs)) if self.coeffs else self

    def truncate(self, order: int) -> Poly:
        """Drop every term of degree above ``order``."""
        return Poly(self.coeffs[: order + 1])


def format_poly(coeffs: Sequence[Fraction], var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}" if mag.denominator != 1 else f"{mag}{mono}"
        else:
            body = str(mag)
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def geometric_kernel(r: int, n: int) -> Poly:
    """(1 + x + ... + x^(r-1))^n."""
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return Poly([1] * r) ** n


def binomial(top: int, bottom: int) -> int:
    if bottom < 0 or top < bottom:
        return 0
    return math.comb(top, bottom)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


# -- q-polynomials ---------------------------------------------------------


class QPoly:
    """Sparse polynomial in ``x`` and ``q`` with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Number] | None = None):
        clean = {}
        for key, c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                clean[(int(key[0]), int(key[1]))] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def from_q_poly(cls, p: Poly, x_degree: int = 0) -> QPoly:
        return cls({(x_degree, j): c for j, c in enumerate(p.coeffs)})

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: QPoly) -> QPoly:
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return QPoly(out)

    def __neg__(self):
        return QPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly({k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        result = QPoly({(0, 0): 1})
        for _ in range(n):
            result = result * self
        return result

    def x_degree(self):
        return max(i for i, _ in self.terms) if self.terms else ZERO_DEGREE

    def at_q_equal_1(self) -> Poly:
        out: dict[int, Fraction] = {}
        for (i, _), c in self.terms.items():
            out[i] = out.get(i, 0) + c
        top = max(out, default=-1)
        return Poly(out.get(i, 0) for i in range(top + 1))

    def x_coefficients(self) -> list[Poly]:
        """Coefficient of x^i as a polynomial in q, for i = 0..x_degree."""
        if not self.terms:
            return []
        top = self.x_degree()
        rows: list[dict[int, Fraction]] = [{} for _ in range(top + 1)]
        for (i, j), c in self.terms.items():
            rows[i][j] = c
        return [Poly(row.get(j, 0) for j in range(max(row, default=-1) + 1)) for row in rows]

    def __repr__(self):
        if not self.terms:
            return "QPoly('0')"
        parts = []
        for (i, j), c in self.terms.items():
            mono = "*".join(s for s in (_mono("x", i), _mono("q", j)) if s)
            parts.append(f"{c}*{mono}" if mono and c != 1 else mono or str(c))
        return "QPoly('" + " + ".join(parts) + "')"


def _mono(var: str, k: int) -> str:
    return "" if k == 0 else var if k == 1 else f"{var}^{k}"


def qpoly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def qpoly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def q_bracket(i: int) -> Poly:
    """[i]_q = 1 + q + ... + q^(i-1), as a polynomial in q; [0]_q = 0."""
    if i < 0:
        raise ValueError(f"q-bracket needs i >= 0, got {i}")
    return Poly([1] * i)


# -- truncated series ------------------------------------------------------


class Series:
    """Power series in x modulo x^(order+1).

    Coefficients are rationals, or :class:`Poly` objects standing for
    polynomials in q.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = list(coeffs[: order + 1])
        zero = _zero_like(cs)
        cs += [zero] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.order == other.order and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        return NotImplemented

    def __getitem__(self, i):
        return self.coeffs[i]

    def __add__(self, other: Series) -> Series:
        m = min(self.order, other.order)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], m)

    def __mul__(self, other) -> Series:
        if not isinstance(other, Series):
            return Series([c * other for c in self.coeffs], self.order)
        m = min(self.order, other.order)
        out = []
        for k in range(m + 1):
            acc = self.coeffs[0] * other.coeffs[k]
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return Series(out, m)

    def __repr__(self):
        return f"Series({list(map(str, self.coeffs))}, order={self.order})"

    def at_q_equal_1(self) -> Series:
        return Series([c(1) if isinstance(c, Poly) else c for c in self.coeffs], self.order)

    def first_difference(self, other: Series):
        """Index and values of the first unequal coefficient, or None."""
        for i, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return i, a, b
        if self.order != other.order:
            return min(self.order, other.order) + 1, None, None
        return None


def _zero_like(cs):
    return Poly() if cs and isinstance(cs[0], Poly) else Fraction(0)


def series_from_poly(p: Poly, order: int) -> Series:
    return Series(list(p.coeffs), order)


def series_of_rational(h: Poly, n: int, order: int) -> Series:
    """Expansion of h(x) / (1-x)^n to order ``order``.

    a_i = sum_j h_j * C(n-1+i-j, n-1).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return series_from_poly(h, order)
    out = []
    for i in range(order + 1):
        acc = Fraction(0)
        for j, hj in enumerate(h.coeffs[: i + 1]):
            acc += hj * binomial(n - 1 + i - j, n - 1)
        out.append(acc)
    return Series(out, order)


def qseries_from_qpoly(p: QPoly, order: int) -> Series:
    return Series(p.x_coefficients(), order) if p else Series([Poly()], order)


def q_pochhammer_reciprocal(shift: int, r: int, n: int, order: int) -> Series:
    """1 / prod_{i<n} (1 - x q^(shift + r*i)) as a series in x over q-polynomials.

    ``(shift=r, r, n)`` gives 1/(xq^r; q^r)_n and ``(0, r, n+1)`` gives
    1/(x; q^r)_{n+1}.
    """
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    result = Series([Poly([1])], order)
    for i in range(n):
        e = shift + r * i
        result = result * Series([Poly.monomial(e * t) for t in range(order + 1)], order)
    return result


q_factorial_pochhammer = q_pochhammer_reciprocal


def q_pochhammer(shift: int, r: int, n: int) -> QPoly:
    """prod_{i<n} (1 - x q^(shift + r*i)) as an exact bivariate polynomial."""
    result = QPoly({(0, 0): 1})
    for i in range(n):
        result = result * QPoly({(0, 0): 1, (1, shift + r * i): -1})
    return result
