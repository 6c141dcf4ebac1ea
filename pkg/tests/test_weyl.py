import pytest

from gaugeverify import weyl
from gaugeverify.verifier import ADM_DISPLAY

Factor = weyl.Factor


def names(s):
    return {str(x) for x in s}


@pytest.mark.parametrize("f", [1, 2, 3])
@pytest.mark.parametrize("lam", [(2, 1), (3, 0)])
def test_admissible_sets_match_display(f, lam):
    sets = weyl.admissible_set([lam] * f)
    assert len(sets) == f
    for s in sets:
        assert names(s) == ADM_DISPLAY[lam]
    assert len(weyl.product_elements(sets)) == len(ADM_DISPLAY[lam]) ** f


def test_parse_roundtrip_and_lengths():
    for text in ["t(2,1)", "t(1,2)", "t(1,2)s", "t(3,0)", "t(0,3)", "t(0,3)s", "t(2,1)s"]:
        assert str(Factor.parse(text)) == text
    assert weyl.length(Factor.parse("t(2,1)")) == 1
    assert weyl.length(Factor.parse("t(3,0)")) == 3


def test_bruhat_order():
    t30, t03 = Factor.parse("t(3,0)"), Factor.parse("t(0,3)")
    for x in ADM_DISPLAY[(3, 0)]:
        assert weyl.bruhat_leq(Factor.parse(x), t30) or weyl.bruhat_leq(Factor.parse(x), t03)
    assert not weyl.bruhat_leq(t03, t30)
    assert not weyl.bruhat_leq(t30, Factor.parse("t(2,1)"))
    # elements in different components of the extended group are incomparable
    assert not weyl.bruhat_leq(Factor.parse("t(1,1)"), t30)


def test_reduced_word_reproduces_element():
    x = Factor.parse("t(1,2)s")
    w = weyl.reduced_word(x)
    assert len(w) == weyl.length(x)


@pytest.mark.parametrize("f", [1, 2, 3])
def test_hypercube_exhaustive(f):
    shapes = weyl.all_shapes(f)
    assert len(shapes) == 2 ** f
    for shape in shapes:
        results = weyl.hypercube_check(shape)
        assert results
        assert all(ok for _, _, ok in results), [r for r in results if not r[2]][:3]


def test_is_deep():
    assert weyl.is_deep([(10, 3)], 23, 2)
    assert not weyl.is_deep([(22, 0)], 23, 2)
