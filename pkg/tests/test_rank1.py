import math
from fractions import Fraction

import pytest

from k3gauss import (
    ConeCase,
    ConeDescription,
    InvalidInputError,
    VanishingCertificate as VC,
    gauss_surjective_rank1,
    nef_cone,
    p2_gauss_surjective,
    vanishing_certificate,
)

from oracles import rank1_nef_slope_from_brute


@pytest.mark.parametrize(
    "d, slope, dual, case, witness",
    [
        (1, Fraction(2, 3), Fraction(3, 2), ConeCase.PELL5, (3, 1)),
        (2, Fraction(4, 3), Fraction(3, 2), ConeCase.PELL_UNIT, (3, 2)),
        (4, Fraction(2), Fraction(2), ConeCase.SQUARE_NO_PELL5, None),
        (11, Fraction(22, 7), Fraction(7, 2), ConeCase.PELL5, (7, 1)),
        (5, Fraction(2), Fraction(5, 2), ConeCase.PELL5, (5, 1)),
        (7, Fraction(21, 8), Fraction(8, 3), ConeCase.PELL_UNIT, (8, 3)),
    ],
)
def test_nef_cone_examples(d, slope, dual, case, witness):
    cone = nef_cone(d)
    assert (cone.nef_slope, cone.dual_slope, cone.case) == (slope, dual, case)
    assert (None if cone.witness is None else (cone.witness.a, cone.witness.b)) == witness


@pytest.mark.parametrize("d", [1, 2, 4, 11])
def test_golden_slopes_rederived(d):
    assert nef_cone(d).nef_slope == rank1_nef_slope_from_brute(d)


def test_slope_order_and_square_case():
    for d in range(1, 400):
        cone = nef_cone(d)
        t = math.isqrt(d)
        assert cone.nef_slope <= cone.dual_slope
        assert (cone.nef_slope == cone.dual_slope) == (cone.case is ConeCase.SQUARE_NO_PELL5)
        if cone.case is ConeCase.SQUARE_NO_PELL5:
            assert t * t == d
        assert cone.recompute()
        assert ConeDescription.from_dict(cone.to_dict()) == cone


def test_nef_slope_bounded_by_sqrt_d():
    # q(L - s*delta) >= 0 on the nef cone: s^2 <= d
    for d in range(1, 400):
        assert nef_cone(d).nef_slope ** 2 <= d


@pytest.mark.parametrize("d", [0, -1])
def test_nef_cone_rejects(d):
    with pytest.raises(InvalidInputError):
        nef_cone(d)


@pytest.mark.parametrize(
    "d, n, cert",
    [
        (9, 2, VC.KV_AMPLE),
        (4, 2, VC.ISOTROPIC_FIBRATION),
        (2, 2, VC.VERBITSKY),
        (1, 1, VC.NO_CERTIFICATE),
        (5, 2, VC.KV_BIG_NEF_BOUNDARY),
        (9, 3, VC.ISOTROPIC_FIBRATION),
    ],
)
def test_vanishing_examples(d, n, cert):
    assert vanishing_certificate(d, n) is cert


@pytest.mark.parametrize(
    "d, k, cert",
    [(2, 1, VC.VERBITSKY), (9, 1, VC.ISOTROPIC_FIBRATION), (1, 0, VC.VERBITSKY), (2, 2, VC.VERBITSKY)],
)
def test_gauss_rank1_examples(d, k, cert):
    assert gauss_surjective_rank1(d, k) == (True, cert)


def test_gauss_rank1_rejects():
    with pytest.raises(InvalidInputError):
        gauss_surjective_rank1(3, -1)
    with pytest.raises(InvalidInputError):
        vanishing_certificate(3, 0)


def test_no_certificate_gap_small_d():
    gaps = [(d, n) for d in range(1, 2000) for n in range(1, 30) if vanishing_certificate(d, n) is VC.NO_CERTIFICATE]
    assert gaps == [(1, 1)]


@pytest.mark.parametrize("a, k, expected", [(3, 4, True), (1, 2, True), (1, 3, False), (5, 6, True), (5, 7, False)])
def test_p2(a, k, expected):
    assert p2_gauss_surjective(a, k) is expected


def test_p2_rejects():
    with pytest.raises(InvalidInputError):
        p2_gauss_surjective(0, 1)
    with pytest.raises(InvalidInputError):
        p2_gauss_surjective(1, -1)
