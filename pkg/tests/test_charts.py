import pytest

from gaugeverify.charts import (CONJUGATE_LABEL, GAUGE_LABELS, MULTICHART_LABELS, SHIFTS, WEIGHT_21, Base,
                                build_gauge, build_multichart, canonical_label, chart_mapping,
                                conjugate_gauge, gauge_mapping)
from gaugeverify.monodromy import det_condition_ideal


def test_canonical_labels():
    assert canonical_label("t(2,1)") == "t21"
    assert canonical_label(" t(1,2)s ") == "t12s"
    assert canonical_label("t03s") == "t03s"
    with pytest.raises(ValueError):
        canonical_label("t(4,0)")


def test_conjugate_labels_are_an_involution():
    for label in GAUGE_LABELS:
        assert CONJUGATE_LABEL[CONJUGATE_LABEL[label]] == label
    assert {CONJUGATE_LABEL[x] for x in WEIGHT_21} == WEIGHT_21


@pytest.mark.parametrize("label", GAUGE_LABELS)
@pytest.mark.parametrize("symbolic", [False, True])
def test_gauge_determinant_is_cubic(label, symbolic):
    g = build_gauge(label, Base(23, symbolic))
    d = g.matrix.det()
    assert d.degree() == 3
    assert d.leading().is_constant()
    assert len(det_condition_ideal(g).gens) <= 3
    assert set(g.roster) >= set(gauge_mapping(label))


@pytest.mark.parametrize("label", GAUGE_LABELS)
def test_conjugate_gauge_matches_partner(label):
    g = build_gauge(label, Base(23))
    c = conjugate_gauge(g)
    assert c.label == CONJUGATE_LABEL[label]


@pytest.mark.parametrize("chart", MULTICHART_LABELS)
@pytest.mark.parametrize("symbolic", [False, True])
def test_projections(chart, symbolic):
    mc = build_multichart(chart, Base(31, symbolic))
    assert mc.gauges() == [SHIFTS[chart][s] for s in (0, 1, -1)]
    for gauge in mc.gauges():
        pr = mc.projections[gauge]
        assert pr.is_surjective()
        assert mc.projection_identity(gauge)


def test_chart_mapping_is_an_involution_on_names():
    m = chart_mapping("t21")
    back = chart_mapping("t12")
    assert all(back[m[x]] == x for x in m)


def test_unknown_chart():
    with pytest.raises(ValueError):
        build_multichart("t30")
