"""
Movable, nef and ample classes L - a*delta in higher Picard rank
================================================================

In Picard rank two the walls of the movable and nef cones come from
(-2)- and (-10)-classes, which are enumerated exactly.  Every negative answer
carries a witness that can be checked independently.
"""

from k3gauss import (
    Mode,
    PicLattice,
    h_minus_2delta_ample,
    h_minus_delta_ample,
    is_positive,
    knutsen_k_very_ample,
    very_ample_mL_minus_delta,
)

# A quartic-like lattice with an elliptic pencil E, L.E = 1.
elliptic = PicLattice(((4, 1), (1, 0)), (1, 0), ("L", "E"))
# A sextic with a (-2)-curve C, L.C = 1.
nodal = PicLattice(((6, 1), (1, -2)), (1, 0), ("L", "C"))

for name, lat in (("elliptic", elliptic), ("nodal", nodal)):
    print(f"--- {name}: gram {lat.gram}")
    for mode in Mode:
        v = is_positive(lat, None, 1, mode)
        print(f"  L - delta {mode.value:>8}: {v.describe()}   witness valid: {v.validate(lat)}")

# L - delta on the nodal lattice sits on the wall of 2C - delta: it is big and
# nef but not ample.  The same answer comes out of the projective-geometry
# criterion (very ample, no lines).
print()
print("nodal, L - delta ample:", h_minus_delta_ample(nodal).describe())
print("nodal, L - 2 delta ample:", h_minus_2delta_ample(nodal).describe())

# k-very ampleness by Knutsen's numerical criterion, and the fact that mL - delta
# is very ample once m >= 7.
print()
for k in range(0, 4):
    print(f"elliptic lattice, L is {k}-very ample: {knutsen_k_very_ample(elliptic, None, k).describe()}")
print()
for m in range(1, 8):
    v = very_ample_mL_minus_delta(elliptic, None, m)
    print(f"{m}L - delta very ample: {v.status.value}")
