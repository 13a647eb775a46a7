"""Picard rank one: the nef cone of S^[2] and vanishing of H^1(S^[2], L - n*delta).

For ``Pic(S) = Z L`` with ``L.L = 2d`` the nef cone in the ``(L, delta)`` plane
is ``<L, L - s*delta>`` with ``s = nef_slope`` and its dual is
``<delta, L - t*delta>`` with ``t = dual_slope``.  Both slopes come from a Pell
equation; see :func:`nef_cone`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import PellSolution, isqrt, pell_general_min, pell_square_min, pell_unit_min
from .errors import InvalidInputError

__all__ = [
    "ConeCase",
    "ConeDescription",
    "VanishingCertificate",
    "nef_cone",
    "vanishing_certificate",
    "gauss_surjective_rank1",
    "p2_gauss_surjective",
]


class ConeCase(enum.Enum):
    SQUARE_NO_PELL5 = "SquareNoPell5"
    PELL_UNIT = "PellUnit"
    PELL5 = "Pell5"


class VanishingCertificate(enum.Enum):
    """Why H^1(S^[2], L - n*delta) vanishes, or that no listed rule applies."""

    KV_AMPLE = "KVAmple"
    KV_BIG_NEF_BOUNDARY = "KVBigNefBoundary"
    ISOTROPIC_FIBRATION = "IsotropicFibration"
    VERBITSKY = "Verbitsky"
    NO_CERTIFICATE = "NoCertificate"

    @property
    def vanishes(self) -> bool:
        return self is not VanishingCertificate.NO_CERTIFICATE


@dataclass(frozen=True)
class ConeDescription:
    d: int
    nef_slope: Fraction
    dual_slope: Fraction
    case: ConeCase
    witness: PellSolution | None

    def __post_init__(self):
        if not 0 < self.nef_slope <= self.dual_slope:
            raise InvalidInputError(f"slopes {self.nef_slope}, {self.dual_slope} out of order")
        if (self.witness is None) != (self.case is ConeCase.SQUARE_NO_PELL5):
            raise InvalidInputError(f"case {self.case.value} inconsistent with witness {self.witness}")

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "nef_slope": str(self.nef_slope),
            "dual_slope": str(self.dual_slope),
            "case": self.case.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ConeDescription":
        w = data["witness"]
        return cls(
            int(data["d"]),
            Fraction(data["nef_slope"]),
            Fraction(data["dual_slope"]),
            ConeCase(data["case"]),
            None if w is None else PellSolution.from_dict(w),
        )

    def recompute(self) -> bool:
        """Re-derive the description from ``d`` and compare."""
        return nef_cone(self.d) == self


def _solve_pell5(d: int) -> PellSolution | None:
    n = 4 * d
    if isqrt(n)[1]:
        return pell_square_min(n, 5)
    return pell_general_min(n, 5)


@lru_cache(maxsize=65536)
def nef_cone(d: int) -> ConeDescription:
    """Nef cone of S^[2] for a Picard rank one K3 of degree 2d.

    * ``x^2 - 4d y^2 = 5`` solvable, minimal ``(a, b)``: slope ``2db/a``, dual ``a/(2b)``.
    * otherwise ``d = t^2``: both slopes ``t``.
    * otherwise ``(a, b)`` fundamental for ``x^2 - d y^2 = 1``: slope ``db/a``, dual ``a/b``.
    """
    if not isinstance(d, int) or d <= 0:
        raise InvalidInputError(f"d must be a positive integer, got {d!r}")
    sol = _solve_pell5(d)
    if sol is not None:
        return ConeDescription(d, Fraction(2 * d * sol.b, sol.a), Fraction(sol.a, 2 * sol.b), ConeCase.PELL5, sol)
    t, square = isqrt(d)
    if square:
        return ConeDescription(d, Fraction(t), Fraction(t), ConeCase.SQUARE_NO_PELL5, None)
    unit = pell_unit_min(d)
    return ConeDescription(d, Fraction(d * unit.b, unit.a), Fraction(unit.a, unit.b), ConeCase.PELL_UNIT, unit)


def vanishing_certificate(d: int, n: int) -> VanishingCertificate:
    """Certificate for H^1(S^[2], L - n*delta) = 0 on a rank one K3 of degree 2d.

    Rules are tried in order: Kawamata-Viehweg inside the nef cone, on its
    boundary ray when big, the isotropic fibration when ``q = 0``, and
    Verbitsky's vanishing once ``n`` reaches the dual slope.
    """
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    cone = nef_cone(d)
    if n < cone.nef_slope:
        return VanishingCertificate.KV_AMPLE
    if n == cone.nef_slope:
        q = 2 * d - 2 * n * n
        if q > 0:
            return VanishingCertificate.KV_BIG_NEF_BOUNDARY
        if q == 0:
            return VanishingCertificate.ISOTROPIC_FIBRATION
    if n >= cone.dual_slope:
        return VanishingCertificate.VERBITSKY
    return VanishingCertificate.NO_CERTIFICATE


def gauss_surjective_rank1(d: int, k: int) -> tuple[bool, VanishingCertificate]:
    """Surjectivity of the k-th Gaussian map of L via vanishing of H^1(L - (k+2)delta)."""
    if k < 0:
        raise InvalidInputError(f"k must be >= 0, got {k}")
    cert = vanishing_certificate(d, k + 2)
    return cert.vanishes, cert


def p2_gauss_surjective(a: int, k: int) -> bool:
    """Sufficient condition ``a >= k - 1`` for surjectivity of gamma^k of O(a) on P^2.

    The nef cone of P^2[2] is ``<H, H - delta>`` and ``K = -3H``, so
    ``aH - (k+2)delta - K = (a+3)H - (k+2)delta`` is nef exactly when ``a >= k - 1``.
    """
    if a < 1:
        raise InvalidInputError(f"a must be >= 1, got {a}")
    if k < 0:
        raise InvalidInputError(f"k must be >= 0, got {k}")
    return a >= k - 1
