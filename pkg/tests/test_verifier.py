import json
import xml.etree.ElementTree as ET

import pytest

from gaugeverify.report import Entry, Report
from gaugeverify.verifier import (ALL_KINDS, ConfigError, RunConfig, expand_checks, is_prime, plan, run_all,
                                  run_job)


def fast_config(**kw):
    base = dict(checks=("admissible", "embeddings", "coherence"), kappas=(9,), primes=(23,),
                chars_primes=(7,), chars_fs=(1,), weyl_fmax=1)
    base.update(kw)
    return RunConfig(**base)


def test_defaults_validate():
    c = RunConfig().validate()
    assert c.primes == (23,)
    assert set(c.checks) == set(ALL_KINDS)


@pytest.mark.parametrize("kw", [
    {"p": 5}, {"primes": (23, 25)}, {"kappas": (24,)}, {"kappas": (1,)}, {"triples": ((9, 11, 22),)},
    {"f": 2, "nilpotent": (True,)}, {"checks": ("bogus",)}, {"kappas": (9.5,)},
    {"split": False, "nilpotent": (True, False)},
])
def test_invalid_configs(kw):
    with pytest.raises(ConfigError):
        RunConfig(**kw).validate()


def test_kappa_congruent_to_one_rejected():
    with pytest.raises(ConfigError, match="not generic"):
        RunConfig(primes=(23, 31), kappas=(32,)).validate()


def test_from_dict_sections():
    c = RunConfig.from_dict({
        "run": {"p": 31, "f": 1, "seed": 4},
        "rho_bar": {"torus": "split", "nilpotent": [True], "depth": 4},
        "kappa": {"values": [9, 13], "triples": [[9, 11, -7]]},
        "checks": {"enabled": ["weyl", "a2"]},
    }).validate()
    assert c.p == 31 and c.primes == (31,) and c.nilpotent == (True,)
    assert c.checks == ("admissible", "hypercube", "a2")
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"run": {"q": 1}})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"extra": {}})
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"rho_bar": {"torus": "diagonal"}})


def test_from_toml(tmp_path):
    path = tmp_path / "run.toml"
    path.write_text('[run]\np = 43\n[kappa]\nvalues = [13]\n[checks]\nenabled = ["chars"]\n')
    c = RunConfig.from_toml(str(path)).validate()
    assert c.p == 43 and c.kappas == (13,) and c.checks == ("embeddings", "multiplicity", "jl")
    path.write_text("[run\n")
    with pytest.raises(ConfigError):
        RunConfig.from_toml(str(path))


def test_expand_checks():
    assert expand_checks(["monodromy", "a2"]) == ("a2", "a4", "coherence")
    assert expand_checks(["all"]) == ALL_KINDS
    with pytest.raises(ConfigError):
        expand_checks(["nope"])


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_plan_is_ordered_and_complete():
    c = RunConfig(primes=(23, 31, 43)).validate()
    ids = [jid for jid, _, _ in plan(c)]
    assert len(ids) == len(set(ids))
    kinds = {k for _, k, _ in plan(c)}
    assert kinds == set(ALL_KINDS)
    # numeric runs at every prime, symbol-p once per kappa
    a2 = [kw for _, k, kw in plan(c) if k == "a2"]
    assert len(a2) == 3 * 3 + 3


def test_empty_selection():
    report = run_all(RunConfig(checks=()))
    assert report.entries == [] and report.ok


def test_run_job_turns_errors_into_failures():
    es = run_job("a2", {"p": 0, "kappa": 9, "symbolic": False})
    assert [(e.anchor, e.verdict) for e in es] == [("job raised", "fail")]
    assert "ValueError" in es[0].detail


def test_report_determinism():
    a = run_all(fast_config()).to_json()
    b = run_all(fast_config(), jobs=2).to_json()
    assert a == b
    data = json.loads(a)
    assert data["summary"]["fail"] == 0
    assert all(e["id"].count("#") == 1 for e in data["entries"])


def test_report_writers():
    r = Report()
    r.add("demo[p=7]", [Entry("x", "holds", {"p": 7}, True),
                        Entry("x", "breaks", {"p": 7, "v": (1, 2)}, False, "witness"),
                        Entry.skip("x", "n/a", {}, "why")])
    s = r.summary()
    assert s == {"pass": 1, "fail": 1, "skip": 1, "total": 3}
    assert not r.ok
    root = ET.fromstring(r.to_junit())
    assert root.get("failures") == "1" and root.get("skipped") == "1"
    case = root.find("testsuite").findall("testcase")[1]
    assert case.find("failure").get("message") == "witness"
    assert json.loads(r.to_json())["entries"][1]["params"]["v"] == [1, 2]
    assert "FAIL(1)" in r.text_summary()


def test_proposition_entries_are_chart_level():
    es = run_job("higherweight", {"p": 23, "triple": (9, 11, -7)})
    assert es and all(e.level == "chart" for e in es)
    r = Report()
    r.add("hw", es)
    assert json.loads(r.to_json())["entries"][0]["level"] == "chart"
    assert "[chart-level]" in r.to_junit()
    assert all(e.level is None for e in run_job("admissible", {"f": 1}))
