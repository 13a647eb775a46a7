"""
Pell equations and the nef cone of S^[2] in Picard rank one
===========================================================

For a K3 surface with Pic(S) = Z L and L.L = 2d, the nef cone of the Hilbert
square is spanned by L and L - s*delta.  The slope s comes from one of two
Pell equations, and this script walks through both.
"""

from k3gauss import nef_cone, pell_general_min, pell_unit_min

# The fundamental unit of x^2 - n y^2 = 1 comes from the continued fraction of
# sqrt(n).  Some units are tiny and some are enormous.
for n in (2, 7, 13, 61, 421):
    u = pell_unit_min(n)
    print(f"x^2 - {n} y^2 = 1: fundamental solution has {len(str(u.b))}-digit y = {u.b}")

# The norm-5 equation x^2 - 4d y^2 = 5 decides which case applies.  For d = 2
# there is no solution at all, because 5 is not a square mod 8.
print()
print("x^2 - 8 y^2 = 5:", pell_general_min(8, 5))
print("x^2 - 44 y^2 = 5:", pell_general_min(44, 5))

# The nef slope s and the dual slope t, as exact fractions.
print()
print(f"{'d':>4}  {'nef slope':>10}  {'dual slope':>10}  case")
for d in range(1, 21):
    cone = nef_cone(d)
    print(f"{d:>4}  {str(cone.nef_slope):>10}  {str(cone.dual_slope):>10}  {cone.case.value}")

# Each description carries its witness and can be re-derived from d alone.
cone = nef_cone(11)
print()
print("d = 11 witness:", cone.witness, "re-derives:", cone.recompute())
