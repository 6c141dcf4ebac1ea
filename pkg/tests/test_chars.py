import random

import pytest

from gaugeverify import chars, weyl
from gaugeverify.verifier import job_jl, job_multiplicity


@pytest.mark.parametrize("p", [5, 7, 11, 23])
@pytest.mark.parametrize("f", [1, 2, 3])
@pytest.mark.parametrize("split", [True, False])
def test_products_of_embeddings(p, f, split):
    assert chars.check_products_of_embeddings(p, f, split) == []


def test_products_of_embeddings_fail_at_three():
    # 2 alpha is trivial on the split torus when q = 3
    assert chars.check_products_of_embeddings(3, 1, True) == [(-2,), (2,)]
    assert chars.check_products_of_embeddings(3, 1, False) == []


def test_graded_sizes_and_pbw():
    for f in (1, 2, 3):
        assert sum(chars.graded_sizes(f)) == chars.pbw_count(f)
    assert chars.graded_sizes(1) == (1, 2, 4)
    assert chars.graded_sizes(2) == (1, 4, 12)
    assert chars.pbw_count(1) == 7
    assert chars.pbw_count(2) == 17


def test_multiplicity_audit_generic():
    audit = chars.multiplicity_audit(chars.CharacterClass(7, 1, True, (3, 5)), 1, 7)
    assert all(audit.values())


def test_multiplicity_audit_breaks_at_five():
    # alpha^2 = alpha^-2 once q = 5, so the degree 2 complement repeats characters
    audit = chars.multiplicity_audit(chars.CharacterClass(5, 1, True, (0, 0)), 1, 5)
    assert not audit["degree2_rest_multiplicity_free"]
    assert audit["chi_alpha_multiplicity_one"]


@pytest.mark.parametrize("p,f", [(7, 1), (7, 2), (11, 3), (23, 2)])
def test_multiplicity_jobs_pass_above_five(p, f):
    for split in (True, False):
        assert all(e.ok for e in job_multiplicity(p, f, split, 20, 0))


def test_character_classes():
    c = chars.char_class([(3, 1)], 7)
    assert c == chars.char_class([(3 + 6, 1 + 6)], 7)
    assert chars.root_class(0, 1, 7).is_regular() in (True, False)


@pytest.mark.parametrize("p", [7, 11, 23])
@pytest.mark.parametrize("f", [1, 2, 3])
@pytest.mark.parametrize("split", [True, False])
def test_jl_unique_sign(p, f, split):
    es = job_jl(p, f, split, 20, 0)
    assert len(es) == 20
    assert all(e.verdict == "pass" for e in es), [e.detail for e in es if not e.ok][:2]
    assert all(e.params["eps"] in (1, -1) for e in es)


def test_jl_without_deep_presentations():
    # at p = 5 no presentation is 2-deep; shallow ones lose the sign for some roots
    es = job_jl(5, 1, True, 20, 0)
    assert len(es) == 20 and all(e.params["depth"] == 0 for e in es)
    bad = [e for e in es if not e.ok]
    assert bad and all("disagree" in e.detail for e in bad)


def test_jl_trivial_shift():
    rng = random.Random(4)
    wflips, nu = chars.random_presentation(rng, 23, 2, True, margin=4)
    eps, cert = chars.inertial_jl_shift(wflips, nu, [(0, 0)] * 2, 23, True)
    assert eps == 1 and cert["matches"] == [1]


def test_jl_certificate_matches_target():
    rng = random.Random(5)
    wflips, nu = chars.random_presentation(rng, 23, 1, False, margin=4)
    alpha = weyl.root(0, 1, 1)
    eps, cert = chars.inertial_jl_shift(wflips, nu, alpha, 23, False)
    assert cert["candidates"][eps] == cert["target"]
    assert cert["matches"] == [eps] == cert["alpha_signs"]
