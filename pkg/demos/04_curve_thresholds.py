"""
Degree and genus thresholds for curves on K3 surfaces
=====================================================

For a smooth hyperplane section C of a rank one K3 of degree 2d, gamma^k_C is
surjective once d >= 4(k+2)^2 + 5/4.  This is an exact rational comparison, so
the least admissible integer degree is 4(k+2)^2 + 2.
"""

from k3gauss import PicLattice, curve_gauss_general, curve_gauss_rank1, min_genus

for k in range(2, 8):
    base = 4 * (k + 2) ** 2
    row = "".join("Y" if curve_gauss_rank1(d, k).surjective else "." for d in range(base - 2, base + 5))
    print(f"k = {k}: d = {base - 2}..{base + 4}  {row}   genus bounds {min_genus(k)}")

# The bound report shows both sides of the inequality.
v = curve_gauss_rank1(65, 2)
print()
print("d = 65, k = 2:", v.label, [str(b) for b in v.bounds])

# In any Picard rank the stronger bound d > 9(k+2)^2 applies, together with
# the high-degree wall checks.  An elliptic pencil of small degree blocks it.
lat = PicLattice(((300, 2), (2, 0)), (1, 0))
v = curve_gauss_general(lat, None, 2)
print("d = 150 with an elliptic pencil of degree 2:", v.label, "-", v.reason)
print("  witness:", v.certificate.witness.describe())
print("rank one, d = 145:", curve_gauss_general(PicLattice.rank1(145), None, 2).label)
