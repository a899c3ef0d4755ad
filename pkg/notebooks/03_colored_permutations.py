"""
Descents of colored permutations
================================

Generating polynomials of des and fmaj over r-colored permutations,
split by first letter and by its color.
"""

# %%
from veronese_lab.permstat import (
    ColoredPermutation,
    colored_refined,
    colored_refined_q,
    descent_stats_colored,
    eulerian_poly,
)
from veronese_lab.realroot import is_interlacing_sequence, is_real_rooted

print(descent_stats_colored(ColoredPermutation((2, 1), (0, 1), 2)))

# %%
for n in range(1, 6):
    print(n, eulerian_poly(n))

# %%
n, r = 3, 3
by_color = [colored_refined(n, r, None, c) for c in range(r)]
for c, g in enumerate(by_color):
    print(c, g)
print("interlacing:", bool(is_interlacing_sequence(by_color)))
print("real-rooted:", is_real_rooted(colored_refined(n, r)))

# %%
# With q marking fmaj.
print(colored_refined_q(2, 2, 1, 1))
