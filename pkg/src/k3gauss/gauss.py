"""Surjectivity certificates for higher Gaussian maps of K3 surfaces and their curves.

The surface map gamma^k_L is surjective once H^1(S^[2], L - (k+2)delta) = 0.
For a smooth curve C in |L| (genus g = d + 1 when L.L = 2d) the map gamma^k_C
is surjective in rank one when ``d >= 4(k+2)^2 + 5/4``, and for any Picard rank
when ``d > 9(k+2)^2`` and L - (k+2)delta passes the high-degree wall tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import DegenerateSquareError, InvalidInputError
from .lattice import PicLattice, is_ample_class
from .positivity import (
    Mode,
    PositivityVerdict,
    Status,
    is_positive,
    movable_highdeg,
    positive_highdeg,
)
from .rank1 import VanishingCertificate, gauss_surjective_rank1

__all__ = [
    "BoundCheck",
    "GaussVerdict",
    "gauss_surjective_k3",
    "curve_gauss_rank1",
    "curve_gauss_general",
    "curve_threshold",
    "min_genus",
    "gounelas_ottem_bound",
]

Certificate = Union[VanishingCertificate, PositivityVerdict]


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated inequality ``value <relation> threshold``."""

    name: str
    value: Fraction
    relation: str
    threshold: Fraction

    @property
    def holds(self) -> bool:
        if self.relation == ">=":
            return self.value >= self.threshold
        if self.relation == ">":
            return self.value > self.threshold
        raise InvalidInputError(f"unsupported relation {self.relation!r}")

    def __str__(self) -> str:
        rel = self.relation if self.holds else {">=": "<", ">": "<="}[self.relation]
        return f"{self.name} = {self.value} {rel} {self.threshold}"

    def to_dict(self) -> dict:
        return {"name": self.name, "value": str(self.value), "relation": self.relation, "threshold": str(self.threshold)}

    @classmethod
    def from_dict(cls, data: dict) -> "BoundCheck":
        return cls(data["name"], Fraction(data["value"]), data["relation"], Fraction(data["threshold"]))


@dataclass(frozen=True)
class GaussVerdict:
    """``surjective`` is True only with a certificate; False means Unknown, never "not surjective"."""

    surjective: bool
    certificate: Certificate | None = None
    reason: str = ""
    bounds: tuple[BoundCheck, ...] = ()

    def __post_init__(self):
        if self.surjective and self.certificate is None:
            raise InvalidInputError("a surjective verdict needs a certificate")

    @property
    def label(self) -> str:
        return "surjective" if self.surjective else "unknown"

    def to_dict(self) -> dict:
        cert = self.certificate
        if isinstance(cert, VanishingCertificate):
            cert_d = {"type": "vanishing", "tag": cert.value}
        elif isinstance(cert, PositivityVerdict):
            cert_d = {"type": "positivity", **cert.to_dict()}
        else:
            cert_d = None
        return {
            "surjective": self.label,
            "certificate": cert_d,
            "reason": self.reason,
            "bounds": [b.to_dict() for b in self.bounds],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GaussVerdict":
        c = data["certificate"]
        if c is None:
            cert = None
        elif c["type"] == "vanishing":
            cert = VanishingCertificate(c["tag"])
        else:
            cert = PositivityVerdict.from_dict(c)
        return cls(
            data["surjective"] == "surjective",
            cert,
            data["reason"],
            tuple(BoundCheck.from_dict(b) for b in data["bounds"]),
        )


def _ample(lat: PicLattice, L: Sequence[int] | None) -> tuple[int, ...]:
    L = lat.ample if L is None else tuple(int(x) for x in L)
    if len(L) != lat.rank or not is_ample_class(lat, L):
        raise InvalidInputError(f"{L} is not an ample class of this lattice")
    return L


def _check_k(k: int, minimum: int) -> None:
    if k < minimum:
        raise InvalidInputError(f"k must be >= {minimum}, got {k}")


def gauss_surjective_k3(lat: PicLattice, L: Sequence[int] | None = None, k: int = 1) -> GaussVerdict:
    """Surjectivity of gamma^k_L.

    On ``Pic = Z L`` the rank one vanishing certificates apply; otherwise the
    route is Kawamata-Viehweg, which needs ``L - (k+2)delta`` big and nef.
    """
    _check_k(k, 0)
    L = _ample(lat, L)
    if lat.rank == 1 and L == (1,):
        ok, cert = gauss_surjective_rank1(lat.gram[0][0] // 2, k)
        return GaussVerdict(ok, cert, cert.value)
    n = k + 2
    try:
        verdict = is_positive(lat, L, n, Mode.BIG_NEF)
    except DegenerateSquareError as exc:
        bound = BoundCheck(f"q(L - {n}*delta)", Fraction(exc.square), ">", Fraction(0))
        return GaussVerdict(False, None, "DegenerateSquare", (bound,))
    if verdict.is_yes:
        return GaussVerdict(True, verdict, "Kawamata-Viehweg")
    return GaussVerdict(False, verdict, f"L - {n}*delta not certified big and nef")


def curve_threshold(k: int) -> Fraction:
    """``4(k+2)^2 + 5/4``."""
    return 4 * (k + 2) ** 2 + Fraction(5, 4)


def gounelas_ottem_bound(d: int, k: int) -> bool:
    """Whether ``d >= 4(k+2)^2 + 5/4``, the degree making L + (k+2)xi big and nef on P(Omega_S)."""
    if d < 1 or k < 0:
        raise InvalidInputError(f"need d >= 1 and k >= 0, got d = {d}, k = {k}")
    return d >= curve_threshold(k)


def curve_gauss_rank1(d: int, k: int) -> GaussVerdict:
    """gamma^k_C for a smooth hyperplane section of a rank one K3 of degree 2d."""
    _check_k(k, 2)
    if d < 1:
        raise InvalidInputError(f"d must be positive, got {d}")
    bound = BoundCheck("d", Fraction(d), ">=", curve_threshold(k))
    if not bound.holds:
        return GaussVerdict(False, None, "degree below threshold", (bound,))
    ok, cert = gauss_surjective_rank1(d, k)
    if not ok:
        return GaussVerdict(False, None, "surface map not certified", (bound,))
    return GaussVerdict(True, cert, f"bound {bound.threshold} <= {d}", (bound,))


def curve_gauss_general(lat: PicLattice, L: Sequence[int] | None, k: int) -> GaussVerdict:
    """gamma^k_C for C in |L| on any polarized K3 with ``d > 9(k+2)^2``."""
    _check_k(k, 2)
    L = _ample(lat, L)
    n = k + 2
    d = lat.square(L) // 2
    bound = BoundCheck("d", Fraction(d), ">", Fraction(9 * n * n))
    if not bound.holds:
        return GaussVerdict(False, None, "degree below threshold", (bound,))
    movable = movable_highdeg(lat, L, n)
    if not movable.is_yes:
        return GaussVerdict(False, movable, f"L - {n}*delta not movable", (bound,))
    positive = positive_highdeg(lat, L, n, Mode.BIG_NEF)
    if positive.status is not Status.YES:
        return GaussVerdict(False, positive, f"L - {n}*delta not big and nef", (bound,))
    return GaussVerdict(True, positive, "Kawamata-Viehweg", (bound,))


def min_genus(k: int) -> tuple[int, int]:
    """Genus bounds for surjectivity of gamma^k on a general curve.

    Returns ``(4(k+2)^2 + 1, 4(k+2)^2 + 3)``: the least genus above ``4(k+2)^2``,
    and ``d + 1`` for the least integer ``d >= 4(k+2)^2 + 5/4``.
    """
    _check_k(k, 2)
    base = 4 * (k + 2) ** 2
    d_min = math.ceil(curve_threshold(k))
    return base + 1, d_min + 1
