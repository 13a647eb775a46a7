"""Picard lattices of K3 surfaces and the Beauville-Bogomolov extension by delta.

Surface classes are plain tuples of integer coordinates in the lattice basis.
A class ``D - a*delta`` on the Hilbert square is a :class:`Hilb2Class`.
"""

from __future__ import annotations

import enum
import math
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidInputError, LatticeError, SearchCapExceeded

__all__ = [
    "PicLattice",
    "Hilb2Class",
    "Effectivity",
    "DEFAULT_RANK_CAP",
    "rank_cap",
    "signature",
    "q_self",
    "q_pair",
    "divisibility_two",
    "enumerate_classes",
    "classes_by_square",
    "is_effective",
    "is_ample_class",
    "loads_lattice",
    "dumps_lattice",
]

DEFAULT_RANK_CAP = 6
RANK_CAP_ENV = "K3GAUSS_RANK_CAP"

SurfaceClass = tuple[int, ...]


def rank_cap() -> int:
    """Rank cap for enumeration; overridable through ``K3GAUSS_RANK_CAP``."""
    raw = os.environ.get(RANK_CAP_ENV)
    if raw is None:
        return DEFAULT_RANK_CAP
    if not re.fullmatch(r"[1-9][0-9]*", raw.strip()):
        raise InvalidInputError(f"{RANK_CAP_ENV} must be a positive integer, got {raw!r}")
    return int(raw)


def _charpoly(gram: Sequence[Sequence[int]]) -> list[Fraction]:
    """Characteristic polynomial coefficients by Faddeev-LeVerrier, leading first."""
    n = len(gram)
    A = [[Fraction(x) for x in row] for row in gram]
    coeffs = [Fraction(1)]
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M <- A*M + c_{k-1} I
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += coeffs[-1]
        M = AM
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(AM[i][i] for i in range(n)) / k)
    return coeffs


def _sign_changes(values: Sequence[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def signature(gram: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` eigenvalue counts of a symmetric integer matrix.

    Exact: a symmetric matrix has a real-rooted characteristic polynomial, for
    which Descartes' rule of signs counts positive roots exactly.
    """
    coeffs = _charpoly(gram)
    n = len(gram)
    zero = 0
    while zero < n and coeffs[n - zero] == 0:
        zero += 1
    trimmed = coeffs[: n + 1 - zero]
    pos = _sign_changes(trimmed)
    deg = len(trimmed) - 1
    neg = _sign_changes([c * (-1) ** (deg - i) for i, c in enumerate(trimmed)])
    return pos, neg, zero


@dataclass(frozen=True)
class PicLattice:
    """Even hyperbolic lattice with a distinguished ample class.

    ``gram`` is a tuple of rows; ``ample`` a coordinate vector.  Construction
    checks symmetry, even diagonal, signature ``(1, rank-1)`` and ``A.A > 0``,
    and that no (-2)-vector is orthogonal to ``A`` (so ``A`` lies inside a
    Weyl chamber and can be the ample class of some K3 with this lattice).
    """

    gram: tuple[tuple[int, ...], ...]
    ample: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    rank: int = field(init=False)

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "ample", tuple(int(x) for x in self.ample))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        n = len(gram)
        object.__setattr__(self, "rank", n)
        if n < 1:
            raise LatticeError("lattice must have rank >= 1")
        if any(len(row) != n for row in gram):
            raise LatticeError("Gram matrix must be square")
        for i in range(n):
            if gram[i][i] % 2:
                raise LatticeError(f"diagonal entry {gram[i][i]} at position {i} is odd")
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise LatticeError(f"Gram matrix is not symmetric at ({i}, {j})")
        if len(self.ample) != n:
            raise LatticeError(f"ample class has length {len(self.ample)}, expected {n}")
        if self.labels is not None and len(self.labels) != n:
            raise LatticeError(f"{len(self.labels)} labels given for rank {n}")
        sig = signature(gram)
        if sig != (1, n - 1, 0):
            raise LatticeError(f"signature {sig[:2]} (kernel {sig[2]}) is not (1, {n - 1})")
        if self.dot(self.ample, self.ample) <= 0:
            raise LatticeError("ample class must have positive square")
        if n > 1 and _enumerate(self, self.ample, -2, 0):
            raise LatticeError("ample class is orthogonal to a (-2)-class")

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        if len(u) != self.rank or len(v) != self.rank:
            raise InvalidInputError(f"class length mismatch for rank {self.rank}: {tuple(u)}, {tuple(v)}")
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def square(self, u: Sequence[int]) -> int:
        return self.dot(u, u)

    def degree(self, u: Sequence[int]) -> int:
        """Intersection number with the distinguished ample class."""
        return self.dot(self.ample, u)

    @classmethod
    def rank1(cls, d: int) -> "PicLattice":
        """The lattice ``Z L`` with ``L.L = 2d``."""
        if d <= 0:
            raise LatticeError(f"degree parameter d must be positive, got {d}")
        return cls(((2 * d,),), (1,))

    def to_dict(self) -> dict:
        out = {"rank": self.rank, "gram": [list(r) for r in self.gram], "ample": list(self.ample)}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "PicLattice":
        lat = cls(tuple(tuple(r) for r in data["gram"]), tuple(data["ample"]), data.get("labels"))
        if lat.rank != data["rank"]:
            raise LatticeError(f"declared rank {data['rank']} does not match Gram size {lat.rank}")
        return lat


@dataclass(frozen=True)
class Hilb2Class:
    """The class ``surf - a*delta`` in H^2(S^[2], Z) = H^2(S, Z) + Z delta."""

    surf: tuple[int, ...]
    a: int

    def __post_init__(self):
        object.__setattr__(self, "surf", tuple(int(x) for x in self.surf))
        object.__setattr__(self, "a", int(self.a))

    def __str__(self) -> str:
        sign = "-" if self.a >= 0 else "+"
        return f"{self.surf} {sign} {abs(self.a)}*delta"

    def to_dict(self) -> dict:
        return {"surf": list(self.surf), "a": self.a}

    @classmethod
    def from_dict(cls, data: dict) -> "Hilb2Class":
        return cls(tuple(data["surf"]), data["a"])


class Effectivity(enum.Enum):
    EFFECTIVE = "Effective"
    NOT_EFFECTIVE = "NotEffective"
    UNKNOWN = "Unknown"


def q_pair(lat: PicLattice, u: Hilb2Class, v: Hilb2Class) -> int:
    """Beauville-Bogomolov pairing; delta is orthogonal to H^2(S) and q(delta) = -2."""
    return lat.dot(u.surf, v.surf) - 2 * u.a * v.a


def q_self(lat: PicLattice, v: Hilb2Class) -> int:
    return q_pair(lat, v, v)


def divisibility_two(lat: PicLattice, kappa: Hilb2Class) -> bool:
    """Whether ``kappa`` is in the reduced form ``2D - b*delta`` of divisibility-2 classes.

    Inside H^2(S, Z), which is unimodular, this is exactly divisibility 2; for a
    Picard sublattice the ambient divisibility is not visible from ``lat``.
    """
    if len(kappa.surf) != lat.rank:
        raise InvalidInputError(f"class length {len(kappa.surf)} does not match rank {lat.rank}")
    if kappa.a == 0 and not any(kappa.surf):
        raise InvalidInputError("the zero class has no divisibility")
    return all(x % 2 == 0 for x in kappa.surf)


# -- enumeration ---------------------------------------------------------------


def _ldl(M: list[list[Fraction]]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Write x^T M x = sum_i diag[i] * (x_i + sum_{j>i} upper[i][j] x_j)^2."""
    n = len(M)
    Q = [row[:] for row in M]
    for i in range(n):
        if Q[i][i] <= 0:
            raise LatticeError("enumeration form is not positive definite")
        for j in range(i + 1, n):
            Q[j][i] = Q[i][j]
            Q[i][j] = Q[i][j] / Q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                Q[k][l] -= Q[k][i] * Q[i][l]
    diag = [Q[i][i] for i in range(n)]
    upper = [[Q[i][j] if j > i else Fraction(0) for j in range(n)] for i in range(n)]
    return diag, upper


def _int_interval(center: Fraction, radius_sq: Fraction) -> range:
    """Integers x with (x - center)^2 <= radius_sq."""
    if radius_sq < 0:
        return range(0)
    r = math.isqrt(math.floor(radius_sq))
    lo = math.floor(center) - r - 1
    hi = math.floor(center) + r + 1
    while (lo - center) ** 2 > radius_sq and lo <= hi:
        lo += 1
    while (hi - center) ** 2 > radius_sq and hi >= lo:
        hi -= 1
    return range(lo, hi + 1)


def _ellipsoid_points(diag, upper, bound: Fraction):
    n = len(diag)
    x = [0] * n

    def rec(i: int, budget: Fraction):
        center = -sum(upper[i][j] * x[j] for j in range(i + 1, n))
        for xi in _int_interval(center, budget / diag[i]):
            x[i] = xi
            rest = budget - diag[i] * (xi - center) ** 2
            if i == 0:
                yield tuple(x)
            else:
                yield from rec(i - 1, rest)
        x[i] = 0

    yield from rec(n - 1, bound)


@lru_cache(maxsize=1024)
def _complement_form(lat: PicLattice, pol: tuple[int, ...]):
    n = lat.rank
    pp = lat.dot(pol, pol)
    gp = [sum(lat.gram[i][j] * pol[j] for j in range(n)) for i in range(n)]
    # g(D) = 2 (pol.D)^2 / pol^2 - D^2 is positive definite.
    M = [[Fraction(2 * gp[i] * gp[j], pp) - lat.gram[i][j] for j in range(n)] for i in range(n)]
    return pp, _ldl(M)


@lru_cache(maxsize=8192)
def _enumerate_degree(lat: PicLattice, pol: tuple[int, ...], degree: int, min_square: int) -> dict[int, tuple]:
    """Classes with ``pol.D == degree`` and ``D.D >= min_square``, grouped by square."""
    pp, (diag, upper) = _complement_form(lat, pol)
    # D = (degree/pp) pol + w with w in the negative definite complement of pol.
    if Fraction(degree * degree, pp) < min_square:
        return {}
    bound = Fraction(2 * degree * degree, pp) - min_square
    groups: dict[int, list] = {}
    for v in _ellipsoid_points(diag, upper, bound):
        if lat.dot(pol, v) == degree:
            groups.setdefault(lat.dot(v, v), []).append(v)
    return {sq: tuple(sorted(vs)) for sq, vs in groups.items()}


def _enumerate(lat: PicLattice, pol: tuple[int, ...], square: int, degree: int) -> tuple[SurfaceClass, ...]:
    return _enumerate_degree(lat, pol, degree, square).get(square, ())


def _check_enumeration(lat, degree, polarization, max_rank=None) -> tuple[int, ...]:
    cap = rank_cap() if max_rank is None else max_rank
    if lat.rank > cap:
        raise SearchCapExceeded(f"lattice rank {lat.rank} exceeds enumeration cap {cap}")
    if degree <= 0:
        raise InvalidInputError(f"degree must be positive, got {degree}")
    pol = lat.ample if polarization is None else tuple(int(x) for x in polarization)
    if len(pol) != lat.rank:
        raise InvalidInputError(f"polarization length {len(pol)} does not match rank {lat.rank}")
    if lat.dot(pol, pol) <= 0:
        raise InvalidInputError("polarization must have positive square")
    return pol


def enumerate_classes(
    lat: PicLattice,
    square: int,
    degree: int,
    polarization: Sequence[int] | None = None,
    max_rank: int | None = None,
) -> list[SurfaceClass]:
    """All ``D`` with ``D.D == square`` and ``P.D == degree``, sorted lexicographically.

    ``P`` defaults to the lattice's ample class and must have positive square.
    The search is the exact Fincke-Pohst enumeration of the positive definite
    form ``2 (P.D)^2 / P^2 - D^2`` over the ellipsoid those two values pin down.
    """
    pol = _check_enumeration(lat, degree, polarization, max_rank)
    return list(_enumerate(lat, pol, square, degree))


def classes_by_square(
    lat: PicLattice, degree: int, min_square: int, polarization: Sequence[int] | None = None
) -> dict[int, list[SurfaceClass]]:
    """All ``D`` with ``P.D == degree`` and ``D.D >= min_square`` in one pass, keyed by ``D.D``."""
    pol = _check_enumeration(lat, degree, polarization)
    return {sq: list(vs) for sq, vs in _enumerate_degree(lat, pol, degree, min_square).items()}


def is_effective(lat: PicLattice, D: Sequence[int]) -> Effectivity:
    """Riemann-Roch decision for effectivity of a surface class.

    ``D.D >= -2`` forces ``D`` or ``-D`` effective and the ample degree picks the
    sign; nonzero effective classes have positive ample degree.  Classes with
    ``D.D <= -4`` and positive degree are left undecided.
    """
    D = tuple(D)
    deg = lat.degree(D)
    if not any(D) or deg <= 0:
        return Effectivity.NOT_EFFECTIVE
    if lat.square(D) >= -2:
        return Effectivity.EFFECTIVE
    return Effectivity.UNKNOWN


@lru_cache(maxsize=1024)
def _is_ample_class(lat: PicLattice, L: tuple[int, ...]) -> bool:
    A = lat.ample
    LL, AA, AL = lat.square(L), lat.square(A), lat.dot(A, L)
    if LL <= 0 or AL <= 0:
        return False
    if all(L[i] * A[j] == L[j] * A[i] for i in range(lat.rank) for j in range(i)):
        return True  # a positive multiple of A
    # A (-2)-wall separating A from L meets the segment at some H with H.H >= min(A^2, L^2)
    # and A.H <= max(A^2, A.L); Cauchy-Schwarz on H^perp bounds (A.C)^2.
    m = min(AA, LL)
    bound = 2 * (Fraction(max(AA, AL) ** 2, m) - AA)
    for alpha in range(1, math.isqrt(math.floor(bound)) + 1):
        for C in _enumerate(lat, A, -2, alpha):
            if lat.dot(L, C) <= 0:
                return False
    return True


def is_ample_class(lat: PicLattice, L: Sequence[int]) -> bool:
    """Whether ``L`` lies in the same open chamber as the distinguished ample class."""
    L = tuple(int(x) for x in L)
    if len(L) != lat.rank:
        raise InvalidInputError(f"class length {len(L)} does not match rank {lat.rank}")
    return _is_ample_class(lat, L)


# -- text format ---------------------------------------------------------------

_INT = r"-?(?:0|[1-9][0-9]*)"
_KEYS = ("rank", "gram", "ample", "labels")


def _parse_ints(text: str, what: str) -> list[int]:
    tokens = text.split()
    for tok in tokens:
        if not re.fullmatch(_INT, tok):
            raise LatticeError(f"{what}: {tok!r} is not an integer")
    return [int(t) for t in tokens]


def loads_lattice(text: str) -> PicLattice:
    """Parse the lattice text format.

    One ``key: value`` per line; ``#`` starts a comment line.  ``gram`` rows are
    separated by ``;``.  Example::

        rank: 2
        gram: 4 1; 1 0
        ample: 1 0
        labels: L E
    """
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in _KEYS:
            raise LatticeError(f"line {lineno}: expected one of {', '.join(_KEYS)} followed by ':'")
        if key in fields:
            raise LatticeError(f"line {lineno}: duplicate key {key!r}")
        fields[key] = value.strip()
    for key in ("rank", "gram", "ample"):
        if key not in fields:
            raise LatticeError(f"missing required key {key!r}")
    rank = _parse_ints(fields["rank"], "rank")
    if len(rank) != 1 or rank[0] < 1:
        raise LatticeError("rank must be a single positive integer")
    rows = [_parse_ints(r, "gram") for r in fields["gram"].split(";")]
    if len(rows) != rank[0] or any(len(r) != rank[0] for r in rows):
        raise LatticeError(f"gram must have {rank[0]} rows of {rank[0]} integers")
    ample = _parse_ints(fields["ample"], "ample")
    labels = None
    if "labels" in fields:
        labels = tuple(fields["labels"].split())
        for lab in labels:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", lab):
                raise LatticeError(f"invalid label {lab!r}")
    return PicLattice(tuple(tuple(r) for r in rows), tuple(ample), labels)


def dumps_lattice(lat: PicLattice) -> str:
    """Canonical text form; ``dumps_lattice(loads_lattice(s)) == s`` for canonical ``s``."""
    lines = [
        f"rank: {lat.rank}",
        "gram: " + "; ".join(" ".join(str(x) for x in row) for row in lat.gram),
        "ample: " + " ".join(str(x) for x in lat.ample),
    ]
    if lat.labels is not None:
        lines.append("labels: " + " ".join(lat.labels))
    return "\n".join(lines) + "\n"
