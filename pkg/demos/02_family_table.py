"""
Coloring numbers of the family F(m,p)
=====================================

Counts colorings of the plat closure of b(m,p) by dihedral quandles and
turns them into plat index lower bounds.
"""

import numpy as np

from symquandle import coloring_count_for_system, dihedral, family_bmp, plat_lower_bound, plat_presentation

# the presentation for m = 2, p = 3
print(plat_presentation(family_bmp(2, 3)).to_text())

# counts for m = 2, 3 and p, q in {3, 5, 7}; rows are p, columns q
qs = [3, 5, 7]
for m in (2, 3):
    table = np.array([[coloring_count_for_system(family_bmp(m, p), dihedral(q)) for q in qs]
                      for p in qs])
    print(f"\nm = {m}\n{table}")
    # the diagonal gives q^m and with it the bound m
    print("bounds on the diagonal:", [plat_lower_bound(table[i, i], q) for i, q in enumerate(qs)])
