"""Positivity of classes ``L - a*delta`` on S^[2] for any Picard rank.

Movability and ampleness are decided by searching the finitely many
(-2)- and (-10)-classes ``kappa`` whose walls can separate ``L - a*delta`` from
the ample cone.  For ``kappa = D - b*delta`` with ``q(kappa) = -2`` and
``q(L - a*delta, kappa) <= 0`` one has ``b^2 (d - a^2) <= d`` and
``0 < L.D <= 2ab``; for ``kappa = 2D - b*delta`` with ``q(kappa) = -10`` one has
``b^2 (d - a^2) <= 5d`` and ``0 < L.D <= ab``.  Hodge index adds
``(L.D)^2 >= 2d D^2``.

Wall conventions: a class on a wall (pairing exactly 0) is not ample and not in
the interior of the movable cone, but it is big and nef.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .errors import BoundNotMetError, DegenerateSquareError, InvalidInputError, K3GaussError
from .lattice import (
    Effectivity,
    Hilb2Class,
    PicLattice,
    classes_by_square,
    divisibility_two,
    enumerate_classes,
    is_ample_class,
    is_effective,
    q_pair,
    q_self,
)

__all__ = [
    "Mode",
    "Status",
    "WallKind",
    "ObstructionWitness",
    "KnutsenWitness",
    "DivisorWitness",
    "InequalityWitness",
    "PositivityVerdict",
    "witness_from_dict",
    "minus2_candidates",
    "minus10_candidates",
    "is_movable",
    "is_positive",
    "movable_highdeg",
    "positive_highdeg",
    "knutsen_k_very_ample",
    "very_ample_mL_minus_delta",
    "h_minus_delta_ample",
    "h_minus_2delta_ample",
]

Vector = tuple[int, ...]


class Mode(enum.Enum):
    MOVABLE = "movable"
    BIG_NEF = "bignef"
    AMPLE = "ample"


class Status(enum.Enum):
    YES = "Yes"
    NO = "No"
    INDETERMINATE = "Indeterminate"


class WallKind(enum.Enum):
    MINUS_TWO = "MinusTwo"
    MINUS_TEN = "MinusTen"


def _ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


# -- witnesses -------------------------------------------------------------------


@dataclass(frozen=True)
class ObstructionWitness:
    """A wall class ``kappa`` with ``q(L - a*delta, kappa) = pairing <= 0``."""

    kind: WallKind
    kappa: Hilb2Class
    L: Vector
    a: int
    pairing: int
    effectivity: Effectivity = Effectivity.EFFECTIVE

    @property
    def b(self) -> int:
        return self.kappa.a

    @property
    def D(self) -> Vector:
        """The surface part with the factor 2 of a (-10)-class removed."""
        if self.kind is WallKind.MINUS_TEN:
            return tuple(x // 2 for x in self.kappa.surf)
        return self.kappa.surf

    def validate(self, lat: PicLattice) -> bool:
        L, a, b, D = self.L, self.a, self.b, self.D
        d = Fraction(lat.square(L), 2)
        x, y = lat.square(D), lat.dot(L, D)
        if b <= 0 or not any(D) or d <= a * a:
            return False
        if q_pair(lat, Hilb2Class(L, a), self.kappa) != self.pairing or self.pairing > 0:
            return False
        if is_effective(lat, D) is not self.effectivity or self.effectivity is Effectivity.NOT_EFFECTIVE:
            return False
        if y < 1 or y * y < 2 * d * x:
            return False
        if self.kind is WallKind.MINUS_TWO:
            ok = q_self(lat, self.kappa) == -2 and b * b * (d - a * a) <= d and y <= 2 * a * b
        else:
            ok = (
                q_self(lat, self.kappa) == -10
                and divisibility_two(lat, self.kappa)
                and b * b * (d - a * a) <= 5 * d
                and y <= a * b
            )
        return ok

    def describe(self) -> str:
        return f"{self.kind.value} class kappa = {self.kappa}, D = {self.D}, pairing {self.pairing}"

    def to_dict(self) -> dict:
        return {
            "type": "obstruction",
            "kind": self.kind.value,
            "kappa": self.kappa.to_dict(),
            "L": list(self.L),
            "a": self.a,
            "pairing": self.pairing,
            "effectivity": self.effectivity.value,
        }


@dataclass(frozen=True)
class KnutsenWitness:
    """Effective ``D`` with ``2 D^2 <= L.D <= D^2 + k + 1 <= 2k + 2``."""

    D: Vector
    L: Vector
    k: int
    square: int
    degree: int

    def validate(self, lat: PicLattice) -> bool:
        x, y, k = self.square, self.degree, self.k
        return (
            lat.square(self.D) == x
            and lat.dot(self.L, self.D) == y
            and y >= 1
            and 2 * x <= y <= x + k + 1 <= 2 * k + 2
            and is_effective(lat, self.D) is Effectivity.EFFECTIVE
        )

    def describe(self) -> str:
        return f"D = {self.D} with D^2 = {self.square}, L.D = {self.degree}"

    def to_dict(self) -> dict:
        return {
            "type": "knutsen",
            "D": list(self.D),
            "L": list(self.L),
            "k": self.k,
            "square": self.square,
            "degree": self.degree,
        }


#: role -> (D^2, B.D) required of a DivisorWitness
DIVISOR_ROLES = {
    "line": (-2, 1),
    "B.F=1": (0, 1),
    "B.E=1": (-2, 1),
    "B.F=2": (0, 2),
}


@dataclass(frozen=True)
class DivisorWitness:
    """An effective class with prescribed square and degree against ``B``."""

    role: str
    D: Vector
    B: Vector

    def validate(self, lat: PicLattice) -> bool:
        if self.role not in DIVISOR_ROLES:
            return False
        square, degree = DIVISOR_ROLES[self.role]
        return (
            lat.square(self.D) == square
            and lat.dot(self.B, self.D) == degree
            and is_effective(lat, self.D) is Effectivity.EFFECTIVE
        )

    def describe(self) -> str:
        return f"{self.role} divisor D = {self.D}"

    def to_dict(self) -> dict:
        return {"type": "divisor", "role": self.role, "D": list(self.D), "B": list(self.B)}


@dataclass(frozen=True)
class InequalityWitness:
    """A failed numerical hypothesis.

    ``kind`` is ``"knutsen_square"`` (``L.L < 4k``, ``param = k``) or
    ``"q_nonpositive"`` (``q(L - a*delta) <= 0``, ``param = a``).
    """

    kind: str
    L: Vector
    param: int

    def values(self, lat: PicLattice) -> tuple[int, str, int]:
        if self.kind == "knutsen_square":
            return lat.square(self.L), "<", 4 * self.param
        if self.kind == "q_nonpositive":
            return q_self(lat, Hilb2Class(self.L, self.param)), "<=", 0
        raise InvalidInputError(f"unknown inequality kind {self.kind!r}")

    def validate(self, lat: PicLattice) -> bool:
        lhs, rel, rhs = self.values(lat)
        return lhs < rhs if rel == "<" else lhs <= rhs

    def describe(self) -> str:
        if self.kind == "knutsen_square":
            return f"L.L < 4k with k = {self.param}"
        return f"q(L - {self.param}*delta) <= 0"

    def to_dict(self) -> dict:
        return {"type": "inequality", "kind": self.kind, "L": list(self.L), "param": self.param}


Witness = Union[ObstructionWitness, KnutsenWitness, DivisorWitness, InequalityWitness]


def witness_from_dict(data: dict) -> Witness:
    t = data["type"]
    if t == "obstruction":
        return ObstructionWitness(
            WallKind(data["kind"]),
            Hilb2Class.from_dict(data["kappa"]),
            tuple(data["L"]),
            data["a"],
            data["pairing"],
            Effectivity(data["effectivity"]),
        )
    if t == "knutsen":
        return KnutsenWitness(tuple(data["D"]), tuple(data["L"]), data["k"], data["square"], data["degree"])
    if t == "divisor":
        return DivisorWitness(data["role"], tuple(data["D"]), tuple(data["B"]))
    if t == "inequality":
        return InequalityWitness(data["kind"], tuple(data["L"]), data["param"])
    raise InvalidInputError(f"unknown witness type {t!r}")


@dataclass(frozen=True)
class PositivityVerdict:
    status: Status
    witness: Witness | None = None
    pending: tuple[Vector, ...] = field(default=())

    def __post_init__(self):
        if (self.status is Status.NO) != (self.witness is not None):
            raise InvalidInputError("a No verdict carries exactly one witness")
        if self.status is not Status.INDETERMINATE and self.pending:
            raise InvalidInputError("only Indeterminate verdicts list pending classes")

    @property
    def is_yes(self) -> bool:
        return self.status is Status.YES

    def validate(self, lat: PicLattice) -> bool:
        return self.witness is None or self.witness.validate(lat)

    def describe(self) -> str:
        if self.status is Status.NO:
            return f"No, witness {self.witness.describe()}"
        if self.status is Status.INDETERMINATE:
            return "Indeterminate, pending effectivity of " + ", ".join(map(str, self.pending))
        return "Yes"

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "pending": [list(p) for p in self.pending],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PositivityVerdict":
        w = data.get("witness")
        return cls(
            Status(data["status"]),
            None if w is None else witness_from_dict(w),
            tuple(tuple(p) for p in data.get("pending", ())),
        )


YES = PositivityVerdict(Status.YES)


# -- helpers ---------------------------------------------------------------------


def _as_class(lat: PicLattice, L: Sequence[int] | None) -> Vector:
    L = lat.ample if L is None else tuple(int(x) for x in L)
    if len(L) != lat.rank:
        raise InvalidInputError(f"class length {len(L)} does not match rank {lat.rank}")
    if not is_ample_class(lat, L):
        raise InvalidInputError(f"{L} is not ample on this lattice")
    return L


def _setup(lat: PicLattice, L: Sequence[int] | None, a: int) -> tuple[Vector, int]:
    L = _as_class(lat, L)
    if a <= 0:
        raise InvalidInputError(f"a must be positive, got {a}")
    q = q_self(lat, Hilb2Class(L, a))
    if q <= 0:
        raise DegenerateSquareError(q, a)
    return L, lat.square(L) // 2


def _verdict(candidates: Sequence, blocks) -> PositivityVerdict:
    pending = []
    for w in candidates:
        if not blocks(w):
            continue
        if w.effectivity is Effectivity.EFFECTIVE:
            return PositivityVerdict(Status.NO, w)
        pending.append(w.D)
    if pending:
        return PositivityVerdict(Status.INDETERMINATE, pending=tuple(pending))
    return YES


def _blocks(mode: Mode):
    if mode is Mode.BIG_NEF:
        return lambda w: w.pairing < 0
    return lambda w: w.pairing <= 0


# -- full wall search ---------------------------------------------------------------


def minus2_candidates(lat: PicLattice, L: Sequence[int] | None, a: int) -> list[ObstructionWitness]:
    """All (-2)-classes ``D - b*delta`` with ``b > 0``, ``D`` not ruled out as effective,
    and ``q(L - a*delta, kappa) <= 0``.  Ordered by ``b`` then ``D``.
    """
    L, d = _setup(lat, L, a)
    out = []
    b = 1
    while b * b * (d - a * a) <= d:
        x = 2 * b * b - 2
        y_min = _ceil_sqrt(2 * d * x) if x > 0 else 1
        found = []
        for y in range(max(1, y_min), 2 * a * b + 1):
            for D in enumerate_classes(lat, x, y, polarization=L):
                eff = is_effective(lat, D)
                if eff is Effectivity.NOT_EFFECTIVE:
                    continue
                kappa = Hilb2Class(D, b)
                found.append(ObstructionWitness(WallKind.MINUS_TWO, kappa, L, a, q_pair(lat, Hilb2Class(L, a), kappa), eff))
        out.extend(sorted(found, key=lambda w: w.D))
        b += 1
    return out


def minus10_candidates(lat: PicLattice, L: Sequence[int] | None, a: int) -> list[ObstructionWitness]:
    """All (-10)-classes ``2D - b*delta`` (b odd) with ``q(L - a*delta, kappa) <= 0``."""
    L, d = _setup(lat, L, a)
    out = []
    b = 1
    while b * b * (d - a * a) <= 5 * d:
        x = (b * b - 5) // 2
        y_min = _ceil_sqrt(2 * d * x) if x > 0 else 1
        found = []
        for y in range(max(1, y_min), a * b + 1):
            for D in enumerate_classes(lat, x, y, polarization=L):
                eff = is_effective(lat, D)
                if eff is Effectivity.NOT_EFFECTIVE:
                    continue
                kappa = Hilb2Class(tuple(2 * v for v in D), b)
                found.append(ObstructionWitness(WallKind.MINUS_TEN, kappa, L, a, q_pair(lat, Hilb2Class(L, a), kappa), eff))
        out.extend(sorted(found, key=lambda w: w.D))
        b += 2
    return out


def is_movable(lat: PicLattice, L: Sequence[int] | None, a: int) -> PositivityVerdict:
    """Whether ``L - a*delta`` lies in the interior of the movable cone."""
    return _verdict(minus2_candidates(lat, L, a), _blocks(Mode.AMPLE))


def is_positive(lat: PicLattice, L: Sequence[int] | None, a: int, mode: Mode = Mode.AMPLE) -> PositivityVerdict:
    """Decide movable / big and nef / ample for ``L - a*delta``.

    ``AMPLE`` fails on any wall with pairing ``<= 0``; ``BIG_NEF`` only on
    pairing ``< 0``, so classes on a (-2)- or (-10)-wall count as big and nef.
    """
    mode = Mode(mode)
    if mode is Mode.MOVABLE:
        return is_movable(lat, L, a)
    walls = minus2_candidates(lat, L, a) + minus10_candidates(lat, L, a)
    return _verdict(walls, _blocks(mode))


# -- high degree shortcuts ---------------------------------------------------------


def _elliptic_scan(lat: PicLattice, L: Vector, a: int, max_degree: int) -> PositivityVerdict:
    base = Hilb2Class(L, a)
    for y in range(1, max_degree + 1):
        for D in enumerate_classes(lat, 0, y, polarization=L):
            kappa = Hilb2Class(D, 1)
            return PositivityVerdict(
                Status.NO, ObstructionWitness(WallKind.MINUS_TWO, kappa, L, a, q_pair(lat, base, kappa))
            )
    return YES


def movable_highdeg(lat: PicLattice, L: Sequence[int] | None, a: int) -> PositivityVerdict:
    """Movability when ``d > 4a^2/3``: only elliptic ``D`` with ``L.D <= 2a`` obstruct."""
    L, d = _setup(lat, L, a)
    if 3 * d <= 4 * a * a:
        raise BoundNotMetError(f"d = {d} does not exceed 4a^2/3 for a = {a}; use is_movable")
    return _elliptic_scan(lat, L, a, 2 * a)


def positive_highdeg(lat: PicLattice, L: Sequence[int] | None, a: int, mode: Mode = Mode.AMPLE) -> PositivityVerdict:
    """Big and nef / ample when ``d > 9a^2/4``.

    Obstructions are elliptic ``D`` with ``L.D <= 2a`` and (-2)-curves with
    ``L.D <= a`` for ampleness; for big and nef both bounds become strict.
    """
    mode = Mode(mode)
    L, d = _setup(lat, L, a)
    if 4 * d <= 9 * a * a:
        raise BoundNotMetError(f"d = {d} does not exceed 9a^2/4 for a = {a}; use is_positive")
    if mode is Mode.MOVABLE:
        return movable_highdeg(lat, L, a)
    strict = mode is Mode.BIG_NEF
    verdict = _elliptic_scan(lat, L, a, 2 * a - 1 if strict else 2 * a)
    if not verdict.is_yes:
        return verdict
    base = Hilb2Class(L, a)
    for y in range(1, (a - 1 if strict else a) + 1):
        for D in enumerate_classes(lat, -2, y, polarization=L):
            kappa = Hilb2Class(tuple(2 * v for v in D), 1)
            return PositivityVerdict(
                Status.NO, ObstructionWitness(WallKind.MINUS_TEN, kappa, L, a, q_pair(lat, base, kappa))
            )
    return YES


# -- k-very ampleness -----------------------------------------------------------------


def knutsen_k_very_ample(lat: PicLattice, L: Sequence[int] | None, k: int) -> PositivityVerdict:
    """k-very ampleness of an ample ``L`` by Knutsen's numerical criterion.

    A divisor witness is preferred over the ``L.L < 4k`` witness when both exist.
    """
    L = _as_class(lat, L)
    if k < 0:
        raise InvalidInputError(f"k must be >= 0, got {k}")
    pending = []
    # Degree ascending, then square descending; D^2 is even and in [-k, k+1].
    for y in range(1, 2 * k + 3):
        x_hi = y // 2 - (y // 2) % 2
        x_lo = max(y - k - 1, -k)
        by_square = classes_by_square(lat, y, x_lo, polarization=L)
        for x in range(x_hi, x_lo - 1, -2):
            for D in by_square.get(x, ()):
                eff = is_effective(lat, D)
                if eff is Effectivity.EFFECTIVE:
                    return PositivityVerdict(Status.NO, KnutsenWitness(D, L, k, x, y))
                if eff is Effectivity.UNKNOWN:
                    pending.append(D)
    if lat.square(L) < 4 * k:
        return PositivityVerdict(Status.NO, InequalityWitness("knutsen_square", L, k))
    if pending:
        return PositivityVerdict(Status.INDETERMINATE, pending=tuple(pending))
    return YES


def very_ample_mL_minus_delta(lat: PicLattice, L: Sequence[int] | None, m: int) -> PositivityVerdict:
    """Very ampleness of ``mL - delta``, equivalent to 2-very ampleness of ``mL``."""
    L = _as_class(lat, L)
    if m < 1:
        raise InvalidInputError(f"m must be >= 1, got {m}")
    verdict = knutsen_k_very_ample(lat, tuple(m * x for x in L), 2)
    # Effective D has L.D >= 1, so mL.D >= 7 > 6 leaves the window empty.
    if m >= 7 and not verdict.is_yes:
        raise K3GaussError(f"enumerator found {verdict.describe()} for m = {m} >= 7")
    return verdict


# -- L - delta and L - 2 delta -------------------------------------------------------


def _half(lat: PicLattice, L: Vector, square: int) -> Vector | None:
    if any(x % 2 for x in L):
        return None
    B = tuple(x // 2 for x in L)
    return B if lat.square(B) == square else None


def _first_effective(lat: PicLattice, role: str, B: Vector) -> PositivityVerdict | None:
    square, degree = DIVISOR_ROLES[role]
    for D in enumerate_classes(lat, square, degree, polarization=B):
        if is_effective(lat, D) is Effectivity.EFFECTIVE:
            return PositivityVerdict(Status.NO, DivisorWitness(role, D, B))
    return None


def h_minus_delta_ample(lat: PicLattice, L: Sequence[int] | None = None) -> PositivityVerdict:
    """Ampleness of ``L - delta``.

    Yes iff ``L`` is very ample without lines (effective ``D^2 = -2``, ``L.D = 1``),
    or ``L = 2B`` with ``B^2 = 2`` and no elliptic ``F`` with ``B.F = 1``.
    """
    L = _as_class(lat, L)
    if lat.square(L) <= 2:
        return PositivityVerdict(Status.NO, InequalityWitness("q_nonpositive", L, 1))
    B = _half(lat, L, 2)
    if B is not None:
        return _first_effective(lat, "B.F=1", B) or YES
    verdict = knutsen_k_very_ample(lat, L, 1)
    if not verdict.is_yes:
        return verdict
    return _first_effective(lat, "line", L) or YES


def h_minus_2delta_ample(lat: PicLattice, L: Sequence[int] | None = None) -> PositivityVerdict:
    """Ampleness of ``L - 2delta``.

    Yes iff ``L`` is 3-very ample, or ``L = 2B`` with ``B^2 = 4`` and no effective
    ``E`` (``E^2 = -2``, ``B.E = 1``) or ``F`` (``F^2 = 0``, ``B.F = 2``).
    """
    L = _as_class(lat, L)
    if lat.square(L) <= 8:
        return PositivityVerdict(Status.NO, InequalityWitness("q_nonpositive", L, 2))
    B = _half(lat, L, 4)
    if B is not None:
        return _first_effective(lat, "B.E=1", B) or _first_effective(lat, "B.F=2", B) or YES
    return knutsen_k_very_ample(lat, L, 3)
