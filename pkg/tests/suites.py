"""Deterministic lattice suites shared by the tests."""

from __future__ import annotations

import random

from k3gauss import LatticeError, PicLattice


def random_lattice(rng: random.Random, rank: int, max_d: int = 12, spread: int = 3) -> PicLattice:
    """Random even lattice of signature (1, rank-1) whose first basis vector is ample."""
    while True:
        gram = [[0] * rank for _ in range(rank)]
        gram[0][0] = 2 * rng.randint(1, max_d)
        for i in range(1, rank):
            gram[i][i] = -2 * rng.randint(0, spread)
        for i in range(rank):
            for j in range(i):
                gram[i][j] = gram[j][i] = rng.randint(-spread, spread)
        try:
            return PicLattice(tuple(map(tuple, gram)), (1,) + (0,) * (rank - 1))
        except LatticeError:
            continue


def random_suite(seed: int, count: int, ranks=(1, 2, 3), **kw) -> list[PicLattice]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        rank = rng.choice(ranks)
        if rank == 1:
            out.append(PicLattice.rank1(rng.randint(1, kw.get("max_d", 12))))
        else:
            out.append(random_lattice(rng, rank, **kw))
    return out


def hminus_suite() -> list[tuple[PicLattice, tuple[int, ...]]]:
    """(lattice, L) pairs: rank one, rank two, and L = 2B with B^2 in {2, 4}."""
    cases = [(PicLattice.rank1(d), (1,)) for d in range(1, 31)]
    cases += [(PicLattice.rank1(1), (2,)), (PicLattice.rank1(2), (2,))]
    # L = 2B, B^2 = 4, with an E (B.E = 1, E^2 = -2) or an F (F^2 = 0, B.F = 2)
    for gram in (((4, 1), (1, -2)), ((4, 2), (2, 0)), ((4, 1), (1, 0))):
        lat = PicLattice(gram, (1, 0))
        cases.append((lat, (2, 0)))
    rng = random.Random(2024)
    while len(cases) < 80:
        lat = random_lattice(rng, 2, max_d=10)
        cases.append((lat, lat.ample))
    # B = e1 with B^2 = 2 or 4 and L = 2B
    while len(cases) < 100:
        lat = random_lattice(rng, 2, max_d=2)
        cases.append((lat, tuple(2 * x for x in lat.ample)))
    return cases
