"""
Surjectivity of higher Gaussian maps in Picard rank one
=======================================================

gamma^k_L is surjective whenever H^1(S^[2], L - (k+2)delta) vanishes.  Each
vanishing comes from one of four rules, and this script replays them on a grid
of degrees to show that no point with n >= 2 escapes.
"""

import collections
import time

from k3gauss import VanishingCertificate, gauss_surjective_rank1, vanishing_certificate

# A few individual certificates first.
for d, n in ((9, 2), (5, 2), (4, 2), (2, 2), (1, 1)):
    print(f"d = {d}, n = {n}: {vanishing_certificate(d, n).value}")

# Now the whole grid d <= 20000, 1 <= n <= 60.
start = time.perf_counter()
tally = collections.Counter()
gaps = []
for d in range(1, 20001):
    for n in range(1, 61):
        cert = vanishing_certificate(d, n)
        tally[cert] += 1
        if cert is VanishingCertificate.NO_CERTIFICATE:
            gaps.append((d, n))
print()
for cert, count in tally.most_common():
    print(f"{cert.value:>20}: {count}")
print(f"uncertified points: {gaps}   ({time.perf_counter() - start:.1f} s)")

# The only gap is (d, n) = (1, 1), which corresponds to k = -1, so every
# gamma^k with k >= 0 has a certificate.
assert all(gauss_surjective_rank1(d, k)[0] for d in range(1, 2001) for k in range(0, 20))
print("gamma^k_L certified for d <= 2000, k < 20")
