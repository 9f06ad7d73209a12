"""
Checking symmetric quandle tables
=================================
"""

import numpy as np

from symquandle import dihedral, good_involutions, is_kei, trivial_quandle, validate
from symquandle.symmetric_quandle import alexander_table

# dihedral quandles are kei, so the identity is a good involution
for p in range(3, 8):
    print(f"R_{p}: kei {is_kei(dihedral(p))}, good involutions {len(good_involutions(dihedral(p).op))}")

# x^y = 2x - y over Z_5 is a quandle but not a kei
op = alexander_table(5, 2)
print(validate(op, np.arange(5)).summary())
print("good involutions:", good_involutions(op))

# on a trivial quandle every involution is good
print("T_4:", len(good_involutions(trivial_quandle(4).op)), "good involutions")
