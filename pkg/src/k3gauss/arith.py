"""Exact integer helpers and minimal solutions of Pell-type equations.

Rationals are :class:`fractions.Fraction` throughout; nothing in the decision
path touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, SearchCapExceeded

__all__ = [
    "Rat",
    "PellSolution",
    "isqrt",
    "sqrt_cf_period",
    "pell_unit_min",
    "pell_general_min",
    "pell_square_min",
    "NAGELL_SEARCH_CAP",
]

Rat = Fraction

#: Largest y-range the Nagell class-representative search will scan.
NAGELL_SEARCH_CAP = 10**7


@dataclass(frozen=True)
class PellSolution:
    """Minimal positive solution ``(a, b)`` of ``x**2 - n*y**2 = c``."""

    a: int
    b: int
    n: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0:
            raise InvalidInputError(f"Pell solution must be positive, got ({self.a}, {self.b})")
        if self.a * self.a - self.n * self.b * self.b != self.c:
            raise InvalidInputError(
                f"({self.a}, {self.b}) does not solve x^2 - {self.n}y^2 = {self.c}"
            )

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"

    def to_dict(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "n": str(self.n), "c": str(self.c)}

    @classmethod
    def from_dict(cls, data: dict) -> "PellSolution":
        return cls(int(data["a"]), int(data["b"]), int(data["n"]), int(data["c"]))


def isqrt(n: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(n)), n is a perfect square)``.

    >>> isqrt(15)
    (3, False)
    >>> isqrt(16)
    (4, True)
    """
    if n < 0:
        raise InvalidInputError(f"isqrt of negative number {n}")
    r = math.isqrt(n)
    return r, r * r == n


def _check_nonsquare(n: int) -> int:
    if not isinstance(n, int) or n <= 0:
        raise InvalidInputError(f"Pell coefficient must be a positive integer, got {n!r}")
    r, sq = isqrt(n)
    if sq:
        raise InvalidInputError(f"Pell coefficient {n} is a perfect square")
    return r


def _sqrt_cf_terms(n: int, root: int, count: int) -> tuple[list[int], list[int]]:
    """First ``count`` partial quotients of sqrt(n) and the matching Q values.

    With convergents p_i/q_i, ``p_i**2 - n*q_i**2 == (-1)**(i+1) * qs[i]``.
    """
    m, q, a = 0, 1, root
    quotients, qs = [], []
    for _ in range(count):
        quotients.append(a)
        m = q * a - m
        q = (n - m * m) // q
        a = (root + m) // q
        qs.append(q)
    return quotients, qs


def sqrt_cf_period(n: int) -> list[int]:
    """Continued fraction of sqrt(n) as ``[a0, a1, ..., a_l]`` covering one period."""
    root = _check_nonsquare(n)
    m, q, a = 0, 1, root
    terms = [root]
    while a != 2 * root:
        m = q * a - m
        q = (n - m * m) // q
        a = (root + m) // q
        terms.append(a)
    return terms


def _convergent(quotients: list[int], index: int) -> tuple[int, int]:
    p_prev, p = 1, quotients[0]
    q_prev, q = 0, 1
    for a in quotients[1 : index + 1]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q


def pell_unit_min(n: int) -> PellSolution:
    """Fundamental solution of ``x**2 - n*y**2 = 1`` from the continued fraction of sqrt(n)."""
    root = _check_nonsquare(n)
    period = len(sqrt_cf_period(n)) - 1
    index = period - 1 if period % 2 == 0 else 2 * period - 1
    quotients, _ = _sqrt_cf_terms(n, root, index + 1)
    a, b = _convergent(quotients, index)
    return PellSolution(a, b, n, 1)


def _first_convergent_with_value(n: int, root: int, c: int) -> tuple[int, int] | None:
    # Norm values repeat with the period; two periods cover both sign parities.
    period = len(sqrt_cf_period(n)) - 1
    quotients, qs = _sqrt_cf_terms(n, root, 2 * period)
    for i, q in enumerate(qs):
        if (q if i % 2 else -q) == c:
            return _convergent(quotients, i)
    return None


def _nagell_search(n: int, c: int) -> tuple[int, int] | None:
    unit = pell_unit_min(n)
    u, v = unit.a, unit.b
    # Fundamental solutions of each class have 0 <= y <= v*sqrt(c / (2(u+1))).
    y_max = math.isqrt(v * v * c // (2 * (u + 1)))
    if y_max > NAGELL_SEARCH_CAP:
        raise SearchCapExceeded(f"Nagell search for x^2 - {n}y^2 = {c} needs y up to {y_max}")
    for y in range(1, y_max + 1):
        x, sq = isqrt(n * y * y + c)
        if sq:
            return x, y
    # Only the y = 0 class remains; its least positive-y member is sqrt(c) * (u, v).
    r, sq = isqrt(c)
    if sq:
        return r * u, r * v
    return None


def pell_general_min(n: int, c: int) -> PellSolution | None:
    """Minimal positive solution of ``x**2 - n*y**2 = c`` for ``c > 0``, or None.

    Minimality is in ``x`` (equivalently in ``y``, since ``x**2 = c + n*y**2``).
    For squarefree ``c`` with ``c**2 < n`` two periods of convergents of sqrt(n)
    are scanned; otherwise the y-range of Nagell's class representatives is
    searched exhaustively.
    """
    root = _check_nonsquare(n)
    if not isinstance(c, int) or c <= 0:
        raise InvalidInputError(f"right-hand side must be a positive integer, got {c!r}")
    # Lagrange: for c*c < n every primitive solution is a convergent; squarefree c forces primitivity.
    if c * c < n and _is_squarefree(c):
        found = _first_convergent_with_value(n, root, c)
    else:
        found = _nagell_search(n, c)
    if found is None:
        return None
    return PellSolution(found[0], found[1], n, c)


def _is_squarefree(c: int) -> bool:
    f = 2
    while f * f <= c:
        if c % (f * f) == 0:
            return False
        f += 1
    return True


def pell_square_min(n: int, c: int) -> PellSolution | None:
    """Minimal positive solution of ``x**2 - n*y**2 = c`` when ``n = t**2`` is a square.

    The equation factors as ``(x - t*y)(x + t*y) = c``, so only divisor pairs of c
    need checking.
    """
    if not isinstance(n, int) or n <= 0:
        raise InvalidInputError(f"coefficient must be a positive integer, got {n!r}")
    t, sq = isqrt(n)
    if not sq:
        raise InvalidInputError(f"{n} is not a perfect square; use pell_general_min")
    if not isinstance(c, int) or c <= 0:
        raise InvalidInputError(f"right-hand side must be a positive integer, got {c!r}")
    best = None
    for r in range(1, math.isqrt(c) + 1):
        if c % r:
            continue
        s = c // r
        if (r + s) % 2 or (s - r) % (2 * t):
            continue
        x, y = (r + s) // 2, (s - r) // (2 * t)
        if y > 0 and (best is None or x < best[0]):
            best = (x, y)
    if best is None:
        return None
    return PellSolution(best[0], best[1], n, c)
