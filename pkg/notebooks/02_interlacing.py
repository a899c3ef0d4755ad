"""
Certified interlacing
=====================

Real-rootedness and interlacing decided exactly with Sturm sequences.
"""

# %%
from fractions import Fraction

from veronese_lab.identities import u_sequence
from veronese_lab.polycore import Poly
from veronese_lab.realroot import count_real_roots, interlaces, is_interlacing_sequence, isolate_roots, refine

p = Poly([1, 4, 1])                   # roots -2 +- sqrt(3)
print(count_real_roots(p))
for lo, hi in isolate_roots(p).intervals:
    print(refine(p, lo, hi, Fraction(1, 1000)))

# %%
# x + 1 interlaces (x+1)(x+2); x + 3 does not, and the verdict says why.
print(interlaces(Poly([1, 1]), Poly([2, 3, 1])))
print(interlaces(Poly([3, 1]), Poly([2, 3, 1])))

# %%
# Start from h with only negative zeros.  Its sections interlace, and so
# does every U-sequence built from it.
h = Poly([6, 11, 6, 1])               # (x+1)(x+2)(x+3)
for n in range(1, 4):
    seq = u_sequence(h, n, 2)
    print(n, seq, bool(is_interlacing_sequence(seq)))
