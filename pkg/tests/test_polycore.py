from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from veronese_lab.polycore import (
    ZERO_DEGREE,
    Poly,
    QPoly,
    Series,
    geometric_kernel,
    poly_add,
    poly_mul,
    q_bracket,
    q_factorial_pochhammer,
    q_pochhammer,
    qpoly_add,
    qpoly_mul,
    series_of_rational,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(fractions, max_size=6).map(Poly)


def test_poly_add_examples():
    assert poly_add(Poly([1, 1]), Poly()) == Poly([1, 1])
    assert poly_add(Poly([1, 1]), Poly([-1, -1])) == Poly()
    assert poly_add(Poly([1, 2]), Poly([3, 0, 4])) == Poly([4, 2, 4])


def test_poly_mul_examples():
    assert poly_mul(Poly([1, 1]), Poly([1, 1])) == Poly([1, 2, 1])
    assert poly_mul(Poly([3, 1, 4]), Poly()) == Poly()
    assert poly_mul(Poly([1, 1, 1]), Poly([1, -1])) == Poly([1, 0, 0, -1])


def test_zero_degree_sentinel():
    z = Poly([0, 0])
    assert z.is_zero() and z.degree is ZERO_DEGREE
    assert ZERO_DEGREE < -1 and ZERO_DEGREE < 0
    assert not ZERO_DEGREE > -10**9
    with pytest.raises(TypeError):
        ZERO_DEGREE + 1


def test_coefficients_normalized_and_exact():
    p = Poly([Fraction(1, 3), 0, "2/4", 0, 0])
    assert p.coeffs == (Fraction(1, 3), 0, Fraction(1, 2))
    assert p.degree == 2
    assert (p * 3)[0] == 1


def test_division():
    a = Poly([1, 0, 0, -1])
    q, r = divmod(a, Poly([1, -1]))
    assert q == Poly([1, 1, 1]) and r == Poly()
    q, r = divmod(Poly([1, 2, 3]), Poly([0, 2]))
    assert q * Poly([0, 2]) + r == Poly([1, 2, 3])
    with pytest.raises(ZeroDivisionError):
        divmod(a, Poly())


def test_geometric_kernel():
    assert geometric_kernel(3, 1) == Poly([1, 1, 1])
    assert geometric_kernel(2, 2) == Poly([1, 2, 1])
    assert geometric_kernel(1, 7) == Poly([1])
    with pytest.raises(ValueError):
        geometric_kernel(0, 2)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    if a and b:
        assert (a * b).degree == a.degree + b.degree


def test_series_of_rational_examples():
    assert list(series_of_rational(Poly([1]), 2, 3)) == [1, 2, 3, 4]
    assert list(series_of_rational(Poly([1, 1]), 0, 3)) == [1, 1, 0, 0]
    # A_2 = 1 + x: sum (i+1)^2 x^i
    assert list(series_of_rational(Poly([1, 1]), 3, 3)) == [1, 4, 9, 16]


@settings(max_examples=40, deadline=None)
@given(polys, st.integers(1, 5), st.integers(0, 8))
def test_series_difference_recurrence(h, n, M):
    a = series_of_rational(h, n, M)
    b = series_of_rational(h, n - 1, M)
    for i in range(M + 1):
        prev = a[i - 1] if i else 0
        assert a[i] - prev == b[i]


@settings(max_examples=40, deadline=None)
@given(polys, st.integers(0, 5))
def test_series_times_denominator_recovers_numerator(h, n):
    M = (h.degree if h else 0) + n + 2
    a = series_of_rational(h, n, M)
    recovered = (Poly(a.coeffs) * Poly([1, -1]) ** n).truncate(M)
    assert recovered == h


def test_qpoly_examples():
    xq = QPoly({(1, 1): 1})
    assert qpoly_mul(xq, xq) == QPoly({(2, 2): 1})
    two = QPoly.from_q_poly(q_bracket(2))
    assert two * two == QPoly({(0, 0): 1, (0, 1): 2, (0, 2): 1})
    assert qpoly_add(xq, -xq) == QPoly()


def test_telescoping_truncated_product():
    M = 6
    geometric = QPoly({(i, 2 * i): 1 for i in range(M + 1)})
    prod = qpoly_mul(QPoly({(0, 0): 1, (1, 2): -1}), geometric)
    truncated = QPoly({k: c for k, c in prod.terms.items() if k[0] <= M})
    assert truncated == QPoly({(0, 0): 1})


def test_q_bracket():
    assert q_bracket(0) == Poly()
    assert q_bracket(1) == Poly([1])
    assert q_bracket(3) == Poly([1, 1, 1])


def test_pochhammer_reciprocal():
    assert q_factorial_pochhammer(2, 2, 0, 3) == Series([Poly([1])], 3)
    s = q_factorial_pochhammer(2, 2, 1, 2)
    assert s == Series([Poly([1]), Poly.monomial(2), Poly.monomial(4)], 2)
    for n in range(4):
        at_one = q_factorial_pochhammer(1, 1, n, 5).at_q_equal_1()
        assert at_one == series_of_rational(Poly([1]), n, 5)


def test_pochhammer_inverse_of_product():
    M = 5
    inv = q_factorial_pochhammer(0, 2, 3, M)
    prod = Series(q_pochhammer(0, 2, 3).x_coefficients(), M) * inv
    assert prod == Series([Poly([1])], M)


qpolys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 4)), st.integers(-5, 5), max_size=5
).map(QPoly)


@settings(max_examples=50, deadline=None)
@given(qpolys, qpolys)
def test_q_equal_1_is_a_ring_map(a, b):
    assert (a * b).at_q_equal_1() == a.at_q_equal_1() * b.at_q_equal_1()
    assert (a + b).at_q_equal_1() == a.at_q_equal_1() + b.at_q_equal_1()
