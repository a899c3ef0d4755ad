"""
Series identities in x and q
============================

Each check compares truncated power series coefficient by coefficient,
with polynomials in q as coefficients.
"""

# %%
from veronese_lab.identities import (
    summary_table,
    verify_carlitz,
    verify_chow_mansour,
    verify_euler_identity,
    verify_lc_key,
    verify_refined_carlitz,
)
from veronese_lab.permstat import eulerian_poly
from veronese_lab.polycore import Poly

reports = [
    verify_euler_identity(4, 12),
    verify_carlitz(3, 8),
    verify_chow_mansour(2, 3, 6),
    verify_refined_carlitz(3, 2, 2, 1, 6),
    verify_lc_key(3, 2, 2, 1, 6),
]
print(summary_table(reports))

# %%
# Change one coefficient of the numerator and the check fails.
bad = eulerian_poly(4) + Poly([0, 1])
print(verify_euler_identity(4, 12, bad).detail)
