"""
Slide moves and added handles
=============================

Slides change the braid system but not the surface; adding cancelling
bands raises the genus but not the coloring number.
"""

from symquandle import (
    apply_slides,
    coloring_count_for_system,
    component_count,
    dihedral,
    euler_characteristic,
    family_bmp,
    family_bmpg,
    genus_if_orientable,
)

bs = family_bmp(3, 3)
moved = apply_slides(bs, [1, 3, -2, 1])
print(bs.pretty())
print(moved.pretty())

X = dihedral(3)
for name, s in (("original", bs), ("after slides", moved)):
    print(f"{name:<13} chi {euler_characteristic(s)}  components {component_count(s)}"
          f"  colorings {coloring_count_for_system(s, X)}")

# genus g versions of the same 2-knot
for g in range(4):
    s = family_bmpg(3, 3, g)
    print(f"g = {g}: chi {euler_characteristic(s)}, genus {genus_if_orientable(s)},"
          f" colorings {coloring_count_for_system(s, X)}")
