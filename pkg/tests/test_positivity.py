import random

import pytest

from k3gauss import (
    BoundNotMetError,
    DegenerateSquareError,
    Hilb2Class,
    InvalidInputError,
    Mode,
    PicLattice,
    PositivityVerdict,
    Status,
    h_minus_2delta_ample,
    h_minus_delta_ample,
    is_movable,
    is_positive,
    knutsen_k_very_ample,
    minus2_candidates,
    minus10_candidates,
    movable_highdeg,
    nef_cone,
    positive_highdeg,
    very_ample_mL_minus_delta,
)
from k3gauss.positivity import (
    DivisorWitness,
    InequalityWitness,
    KnutsenWitness,
    ObstructionWitness,
    WallKind,
)

from suites import hminus_suite, random_lattice, random_suite

ELLIPTIC = PicLattice(((4, 1), (1, 0)), (1, 0))
NODAL = PicLattice(((6, 1), (1, -2)), (1, 0))
R = PicLattice.rank1


def test_minus2_elliptic_example():
    cands = minus2_candidates(ELLIPTIC, None, 1)
    w = cands[0]
    assert w.D == (0, 1) and w.kappa == Hilb2Class((0, 1), 1)
    assert w.pairing == -1
    # 2E and L - 2E sit on walls through L - delta
    assert [(c.D, c.pairing) for c in cands[1:]] == [((0, 2), 0), ((1, -2), 0)]
    assert all(c.validate(ELLIPTIC) for c in cands)


def test_minus2_empty_rank1():
    assert minus2_candidates(R(3), None, 1) == []


@pytest.mark.parametrize("lat, a", [(R(1), 1), (R(4), 2), (R(1), 3)])
def test_degenerate_square(lat, a):
    with pytest.raises(DegenerateSquareError):
        minus2_candidates(lat, None, a)
    with pytest.raises(DegenerateSquareError):
        minus10_candidates(lat, None, a)


def test_minus10_examples():
    assert minus10_candidates(R(7), None, 2) == []
    (w,) = minus10_candidates(NODAL, None, 1)
    assert w.kind is WallKind.MINUS_TEN
    assert w.D == (0, 1) and w.kappa.surf == (0, 2) and w.pairing == 0
    assert w.validate(NODAL)


def test_movable_examples():
    v = is_movable(ELLIPTIC, None, 1)
    assert v.status is Status.NO and v.witness.D == (0, 1)
    assert is_movable(R(3), None, 1).is_yes
    assert is_movable(R(50), None, 2).is_yes


def test_positive_examples():
    assert is_positive(NODAL, None, 1, Mode.BIG_NEF).is_yes
    v = is_positive(NODAL, None, 1, Mode.AMPLE)
    assert v.status is Status.NO and v.witness.kappa.surf == (0, 2) and v.witness.pairing == 0
    assert is_positive(R(7), None, 2, Mode.AMPLE).is_yes
    with pytest.raises(DegenerateSquareError):
        is_positive(R(4), None, 2, Mode.AMPLE)


def test_positive_rejects():
    with pytest.raises(InvalidInputError):
        is_positive(ELLIPTIC, (0, 1), 1)
    with pytest.raises(InvalidInputError):
        is_positive(ELLIPTIC, None, 0)
    with pytest.raises(ValueError):
        is_positive(ELLIPTIC, None, 1, "nef")


def test_rank1_slope_oracle():
    """Ample iff a < s, big and nef iff a <= s, with s the Pell slope."""
    checked = 0
    for d in range(2, 201):
        lat = R(d)
        s = nef_cone(d).nef_slope
        for a in range(1, 15):
            if d <= a * a:
                continue
            assert is_positive(lat, None, a, Mode.AMPLE).is_yes == (a < s), (d, a)
            assert is_positive(lat, None, a, Mode.BIG_NEF).is_yes == (a <= s), (d, a)
            checked += 1
    assert checked > 1500


# high degree shortcuts


def test_highdeg_examples():
    v = movable_highdeg(ELLIPTIC, None, 1)
    assert v.status is Status.NO and v.witness.D == (0, 1)
    for d in (2, 5, 13, 40):
        assert movable_highdeg(R(d), None, 1).is_yes
    with pytest.raises(BoundNotMetError):
        movable_highdeg(R(10), None, 3)
    assert positive_highdeg(NODAL, None, 1, Mode.BIG_NEF).is_yes
    assert positive_highdeg(NODAL, None, 1, Mode.AMPLE).status is Status.NO
    with pytest.raises(BoundNotMetError):
        positive_highdeg(R(9), None, 2, Mode.AMPLE)


def _highdeg_cases(count=500, seed=99):
    rng = random.Random(seed)
    while count:
        lat = random_lattice(rng, 2, max_d=40, spread=4)
        d = lat.square(lat.ample) // 2
        choices = [a for a in range(1, 8) if 4 * d > 9 * a * a]
        if choices:
            count -= 1
            yield lat, rng.choice(choices)


def test_highdeg_agrees_with_full_search():
    seen = set()
    for lat, a in _highdeg_cases():
        for mode in (Mode.AMPLE, Mode.BIG_NEF):
            fast = positive_highdeg(lat, None, a, mode)
            full = is_positive(lat, None, a, mode)
            assert fast.status is full.status, (lat.gram, a, mode)
            assert fast.validate(lat)
            seen.add((mode, fast.status))
        assert movable_highdeg(lat, None, a).status is is_movable(lat, None, a).status
    # the suite exercises both outcomes in both modes
    assert len(seen) == 4


# k-very ampleness


def test_knutsen_examples():
    v = knutsen_k_very_ample(ELLIPTIC, None, 1)
    assert v.status is Status.NO and isinstance(v.witness, KnutsenWitness) and v.witness.D == (0, 1)
    v = knutsen_k_very_ample(R(1), None, 1)
    assert v.status is Status.NO and isinstance(v.witness, InequalityWitness)
    assert knutsen_k_very_ample(R(4), None, 2).is_yes
    with pytest.raises(InvalidInputError):
        knutsen_k_very_ample(R(4), None, -1)


def test_knutsen_rank1_closed_form():
    for k in range(0, 51):
        for d in range(1, 2 * k + 6):
            v = knutsen_k_very_ample(R(d), None, k)
            assert v.is_yes == (d >= 2 * k), (d, k)
            if not v.is_yes:
                assert v.witness.validate(R(d))


def test_knutsen_square_necessary():
    for lat in random_suite(21, 60, ranks=(1, 2, 3), max_d=10):
        L2 = lat.square(lat.ample)
        for k in range(0, 6):
            if knutsen_k_very_ample(lat, None, k).is_yes:
                assert L2 >= 4 * k


def test_knutsen_monotone_in_k():
    for lat in random_suite(22, 40, ranks=(2, 3), max_d=10):
        answers = [knutsen_k_very_ample(lat, None, k).status for k in range(0, 6)]
        yes = [s is Status.YES for s in answers]
        assert yes == sorted(yes, reverse=True)


def test_very_ample_mL_examples():
    assert very_ample_mL_minus_delta(R(2), None, 7).is_yes
    v = very_ample_mL_minus_delta(ELLIPTIC, None, 1)
    assert v.status is Status.NO and v.witness.D == (0, 1)
    v = very_ample_mL_minus_delta(R(2), None, 1)
    assert v.status is Status.NO and isinstance(v.witness, InequalityWitness)


def test_very_ample_mL_monotone():
    for lat in random_suite(31, 60, ranks=(1, 2, 3), max_d=8):
        answers = [very_ample_mL_minus_delta(lat, None, m).is_yes for m in range(1, 9)]
        assert answers == sorted(answers)
        assert answers[-2:] == [True, True]


# L - delta and L - 2 delta


@pytest.mark.parametrize(
    "fn, lat, L, status",
    [
        (h_minus_delta_ample, R(3), None, Status.YES),
        (h_minus_delta_ample, R(1), (2,), Status.YES),
        (h_minus_delta_ample, ELLIPTIC, None, Status.NO),
        (h_minus_2delta_ample, R(6), None, Status.YES),
        (h_minus_2delta_ample, R(4), None, Status.NO),
        (h_minus_2delta_ample, R(2), (2,), Status.YES),
    ],
)
def test_hminus_examples(fn, lat, L, status):
    assert fn(lat, L).status is status


def test_hminus_special_witnesses():
    lat = PicLattice(((4, 1), (1, -2)), (1, 0))
    v = h_minus_2delta_ample(lat, (2, 0))
    assert isinstance(v.witness, DivisorWitness) and v.witness.role == "B.E=1"
    lat = PicLattice(((4, 2), (2, 0)), (1, 0))
    v = h_minus_2delta_ample(lat, (2, 0))
    assert isinstance(v.witness, DivisorWitness) and v.witness.role == "B.F=2"


def test_hminus_agree_with_wall_search():
    for lat, L in hminus_suite():
        for fn, a in ((h_minus_delta_ample, 1), (h_minus_2delta_ample, 2)):
            v = fn(lat, L)
            assert v.validate(lat)
            if lat.square(L) <= 2 * a * a:
                assert v.status is Status.NO
            else:
                assert v.status is is_positive(lat, L, a, Mode.AMPLE).status, (lat.gram, L, a)


# witnesses


def test_witness_rejects_tampering():
    w = minus2_candidates(ELLIPTIC, None, 1)[0]
    bad = ObstructionWitness(w.kind, w.kappa, w.L, w.a, w.pairing + 1, w.effectivity)
    assert not bad.validate(ELLIPTIC)
    bad = ObstructionWitness(WallKind.MINUS_TEN, w.kappa, w.L, w.a, w.pairing, w.effectivity)
    assert not bad.validate(ELLIPTIC)
    assert not KnutsenWitness((0, 1), (1, 0), 1, 0, 2).validate(ELLIPTIC)
    assert not InequalityWitness("knutsen_square", (1,), 1).validate(R(2))
    assert not DivisorWitness("line", (0, 1), (1, 0)).validate(ELLIPTIC)


def test_verdict_round_trip():
    verdicts = [
        is_movable(ELLIPTIC, None, 1),
        is_positive(NODAL, None, 1, Mode.AMPLE),
        knutsen_k_very_ample(R(1), None, 1),
        h_minus_2delta_ample(PicLattice(((4, 1), (1, -2)), (1, 0)), (2, 0)),
        is_positive(R(7), None, 2),
    ]
    for v in verdicts:
        assert PositivityVerdict.from_dict(v.to_dict()) == v


def test_verdict_invariants():
    with pytest.raises(InvalidInputError):
        PositivityVerdict(Status.NO)
    with pytest.raises(InvalidInputError):
        PositivityVerdict(Status.YES, pending=((0, 1),))


def test_indeterminate_from_unknown_effectivity():
    # D = (0, 1) has D^2 = -4 and L.D = 2: inside the k = 5 window, effectivity unknown
    lat = PicLattice(((20, 2), (2, -4)), (1, 0))
    assert knutsen_k_very_ample(lat, None, 4).is_yes
    v = knutsen_k_very_ample(lat, None, 5)
    assert v.status is Status.INDETERMINATE
    assert (0, 1) in v.pending
    assert "pending" in v.describe()
