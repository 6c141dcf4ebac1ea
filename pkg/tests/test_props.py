import random

import pytest

from gaugeverify import props
from gaugeverify.polyring import Ideal, Polynomial, ideal_intersect, ideal_sum, member


def verdicts(entries):
    return [(e.anchor, e.params.get("gauge"), e.verdict) for e in entries if e.verdict != "pass"]


@pytest.mark.parametrize("mirrored", [False, True])
@pytest.mark.parametrize("sign,kw", [(1, 11), (-1, -7)])
def test_higherweight(mirrored, sign, kw):
    es = props.check_higherweight(9, kw, 23, mirrored=mirrored, sign=sign)
    assert len(es) >= 3
    assert verdicts(es) == []


@pytest.mark.parametrize("label", ["t21", "t12", "t12s"])
@pytest.mark.parametrize("sign,kw", [(1, 11), (-1, -7)])
def test_arm_cyclicity(label, sign, kw):
    es = props.check_arm_cyclicity(label, sign, 9, kw, 23)
    assert verdicts(es) == []
    # the ledger includes negative controls: p is in no single ideal
    assert any("not" in e.anchor for e in es)


def test_arm_witnesses():
    assert verdicts(props.arm_witnesses(-7, 23)) == []


@pytest.mark.parametrize("label", ["t21", "t12s"])
def test_wchi3_ledger(label):
    es = props.check_wchi3_ledger(label, 1, 9, 11, -7, p=23)
    assert len(es) >= 20
    assert verdicts(es) == []


def test_gorenstein_single_bases():
    assert props.gorenstein_single("t12s") == ["a0", "a1*d1 + p", "b0", "c0", "d0"]
    for label in ("t21", "t12", "t12s"):
        assert verdicts(props.check_gorenstein_single(label)) == []


def test_gorenstein_product():
    B, hyper, ok = props.gorenstein_shape(["t12s", "t21", "t12s"])
    assert ok and hyper == 2
    B, hyper, ok = props.gorenstein_shape(["t21", "t12"])
    assert ok and hyper == 0


def test_linear_distortion_identity():
    assert props.linear_distortion_identity()


def test_distortion_lemmas_small():
    es = props.check_distortion_lemmas(trials=15, seed=3)
    assert [e.verdict for e in es] == ["pass"] * 3


def test_distortion_check_is_not_vacuous():
    # a wrong sign in the conclusion of the linear lemma must be caught
    roster = ("p", "u", "w", "z")
    p, u, w, z = Polynomial.gens(roster)
    x, y = u, w
    a, b, c, d = z, 1 + z, 2 * z, 3
    I1 = Ideal(roster, [x + p * a, y + p * b])
    I2 = Ideal(roster, [x + p * c, y + p * d])
    target = ideal_sum(ideal_intersect(I1, I2), Ideal(roster, [p]))
    assert member((d - b) * x + (a - c) * y, target)
    assert not member((d - b) * x - (a - c) * y, target)


def test_solve_scalar():
    R = ("p", "x")
    p, x = Polynomial.gens(R)
    I = Ideal(R, [x - 2 * p])
    assert props.solve_scalar(x, p, I) == -2
    assert props.solve_scalar(x * x, p, I) is None
