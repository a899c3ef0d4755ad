"""
Sections and the Veronese operator
==================================

Split a polynomial by exponent residue, then take sections of
``(1 + x + ... + x^(r-1))^n * h``.  The same numerators come out of the
power series ``h / (1-x)^n`` by keeping every r-th coefficient.
"""

# %%
from veronese_lab.polycore import Poly, series_of_rational
from veronese_lab.veronese import sections, recompose, veronese, veronese_oracle, veronese_all

h = Poly([1, 2, 3, 4])
d = sections(h, 2)
print(d.parts)            # (1 + 3x, 2 + 4x)
print(recompose(d) == h)

# %%
# Numerators for n = 2, r = 3 and each residue k.
h = Poly([2, 3, 1])       # (x+1)(x+2)
for k in range(3):
    print(k, veronese(h, 2, 3, k).numerator)

# %%
# The series view: coefficients of h/(1-x)^2, every third one from k,
# times (1-x)^2, gives the same polynomial.
print(series_of_rational(h, 2, 9).coeffs)
for k in range(3):
    assert veronese_oracle(h, 2, 3, k) == veronese(h, 2, 3, k).numerator

# %%
# Raising n by one is one more multiplication by the kernel.
print(veronese_all(h, 3, 3))
