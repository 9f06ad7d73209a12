"""
The free symmetric quandle and the braid action
===============================================

Elements are triples (sign, base generator, conjugator word).
"""

from symquandle import BraidWord, FsqElement, artin_endo, braid_fsq_images, fsq_op, fsq_rho

# x1 and x2 as elements, and the operation x1^x2
x1, x2 = FsqElement.generator(1), FsqElement.generator(2)
print("x1 ^ x2       =", fsq_op(x1, x2).pretty())
print("rho(x1 ^ x2)  =", fsq_rho(fsq_op(x1, x2)).pretty())

# a conjugator that starts with the base letter is absorbed
print("canonical     =", FsqElement(1, 1, [1, 2]).pretty())

# images of the generators under sigma_1 on three strands
s1 = BraidWord(3, [1])
for i, img in enumerate(braid_fsq_images(s1), start=1):
    print(f"sigma_1: x{i} -> {img.pretty()}")

# the braid relation holds for the group automorphisms
a = artin_endo(BraidWord(3, [1, 2, 1]))
b = artin_endo(BraidWord(3, [2, 1, 2]))
print("s1 s2 s1 == s2 s1 s2 on F_3:", a == b)
