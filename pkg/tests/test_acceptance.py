"""Acceptance suite: one test per criterion, each timed against its limit.

Every test prints a single PASS/FAIL line, and the terminal summary repeats
them in order.  Grid: primes 23, 31, 43 with kappa 9, -7, 13 for the ideal
tables; the character checks use p in 5, 7, 11, 23 and f in 1, 2, 3.
"""

from collections import Counter

import engine_suites
from gaugeverify import appendix
from gaugeverify.charts import GAUGE_LABELS
from gaugeverify.verifier import RunConfig, run_all

PRIMES = (23, 31, 43)
KAPPAS = (9, -7, 13)
TRIPLES = ((9, 11, -7), (13, -8, 17), (-9, 15, 10))
CHAR_PRIMES = (5, 7, 11, 23)
CHAR_FS = (1, 2, 3)


def run(*checks, **kw):
    base = dict(checks=checks, primes=PRIMES, kappas=KAPPAS, triples=TRIPLES, chars_primes=CHAR_PRIMES,
                chars_fs=CHAR_FS, weyl_fmax=3)
    base.update(kw)
    return run_all(RunConfig(**base))


def failures(report, limit=3):
    bad = report.failures()
    return ["%s %s: %s" % (e.anchor, e.params, e.detail) for e in bad[:limit]], len(bad)


def test_criterion_01_single_type_tables(criterion):
    c = criterion(1, "single-type ideal tables", 60)
    report = run("a2")
    eq = [e for e in report.entries if not e.anchor.startswith("printed")]
    numeric = [e for e in eq if e.params["mode"] == "numeric"]
    cells = {(e.params["gauge"], e.params["p"], e.params["kappa"]) for e in numeric}
    c.require(len(cells) == len(GAUGE_LABELS) * len(PRIMES) * len(KAPPAS), "grid incomplete: %d" % len(cells))
    c.require(len(numeric) >= 63, "only %d equality checks" % len(numeric))
    bad, n = failures(report)
    c.require(n == 0, "%d failures, e.g. %s" % (n, bad))
    c.note("%d equality checks (%d numeric, %d symbol-p), printed-table corrections at %s"
           % (len(eq), len(numeric), len(eq) - len(numeric),
              ",".join("%s/%s" % k for k in appendix.CORRECTED_SINGLE)))
    criterion.finish(c)


def test_criterion_02_k_ideal_pullbacks(criterion):
    c = criterion(2, "multi-type K-ideal pullbacks", 60)
    report = run("a4")
    eq = [e for e in report.entries if e.anchor.startswith("pullback")]
    displays = {(e.params["chart"], e.params["gauge"], e.params["weight"], e.params["variant"]) for e in eq}
    c.require(len(displays) >= 6, "only %d displays" % len(displays))
    bad, n = failures(report)
    c.require(n == 0, "%d failures, e.g. %s" % (n, bad))
    c.note("%d displays x %d parameter points = %d preimage equalities"
           % (len(displays), len(eq) // max(len(displays), 1), len(eq)))
    criterion.finish(c)


def test_criterion_03_admissible_and_hypercube(criterion):
    c = criterion(3, "admissible sets and hypercube", 5)
    report = run("admissible", "hypercube")
    kinds = Counter(e.check for e in report.entries)
    c.require(kinds["admissible"] == 18 and kinds["hypercube"] == 2 + 4 + 8, "unexpected counts %s" % kinds)
    bad, n = failures(report)
    c.require(n == 0, "%d failures, e.g. %s" % (n, bad))
    c.note("%d admissible-set comparisons, %d rho-bar shapes" % (kinds["admissible"], kinds["hypercube"]))
    criterion.finish(c)


def test_criterion_04_products_of_embeddings(criterion):
    c = criterion(4, "products of embeddings", 10)
    report = run("embeddings")
    inside = [e for e in report.entries if e.params["p"] > 3]
    outside = [e for e in report.entries if e.params["p"] == 3]
    c.require(len(inside) == len(CHAR_PRIMES) * len(CHAR_FS) * 2, "grid incomplete")
    c.require(all(e.ok for e in inside), "violations inside the hypothesis")
    c.require(outside and all(e.ok for e in outside), "no violation found at p = 3")
    c.note("%d configurations clean, p = 3 violation e.g. n = %s" % (len(inside), outside[0].params["violations"]))
    criterion.finish(c)


def test_criterion_05_multiplicity_audit(criterion):
    c = criterion(5, "multiplicity audit", 5)
    report = run("multiplicity", samples=50)
    per = Counter((e.params["p"], e.params["f"], e.params["torus"]) for e in report.entries)
    c.require(len(per) == len(CHAR_PRIMES) * len(CHAR_FS) * 2 and set(per.values()) == {50},
              "sampling incomplete")
    bad = Counter((e.params["p"], e.params["f"], e.params["torus"], e.detail) for e in report.failures())
    for key, n in sorted(bad.items()):
        c.require(False, "%d/50 fail at p=%d f=%d %s (%s)" % (n, *key))
    c.note("%d characters audited" % len(report.entries))
    criterion.finish(c)


def test_criterion_06_proposition_ledgers(criterion):
    c = criterion(6, "proposition ledgers", 120)
    report = run("higherweight", "arm", "wchi3")
    by = Counter(e.check for e in report.entries)
    points = len(PRIMES) * len(TRIPLES)
    c.require(by["higherweight"] >= 12 * points, "higherweight ledger short: %d" % by["higherweight"])
    c.require(by["arm"] >= 12 * points, "arm ledger short: %d" % by["arm"])
    controls = [e for e in report.entries if e.anchor.startswith("negative control")]
    c.require(len(controls) == 12 * points, "negative controls missing")
    dets = [e for e in report.entries if e.check == "wchi3" and "mod p" in e.anchor]
    c.require(len(dets) >= 4 * points, "kappa determinant checks missing")
    signs = {(e.params["frame"], e.params["alpha_sign"]) for e in report.entries if e.check == "wchi3"}
    c.require(len(signs) >= 4, "wchi3 ledgers must cover both shapes and signs: %s" % sorted(signs))
    c.require(all(e.level == "chart" for e in report.entries), "verdicts must be labelled chart-level")
    bad, n = failures(report)
    c.require(n == 0, "%d failures, e.g. %s" % (n, bad))
    c.note("%d chart-level assertions (%s), %d negative controls, %d determinant checks"
           % (len(report.entries), ", ".join("%s %d" % kv for kv in sorted(by.items())), len(controls), len(dets)))
    criterion.finish(c)


def test_criterion_07_gorenstein_shape(criterion):
    c = criterion(7, "Gorenstein factor structure", 10)
    report = run("gorenstein", f=3, shapes=27)
    singles = [e for e in report.entries if "u" not in e.params]
    products = [e for e in report.entries if "u" in e.params]
    c.require(len(products) == 27, "expected all 27 product shapes, got %d" % len(products))
    bad, n = failures(report)
    c.require(n == 0, "%d failures, e.g. %s" % (n, bad))
    c.note("%d single-gauge checks, %d product shapes at f=3" % (len(singles), len(products)))
    criterion.finish(c)


def test_criterion_08_distortion_lemmas(criterion):
    c = criterion(8, "distortion lemmas", 30)
    report = run("distortion", trials=100)
    got = {e.anchor: e for e in report.entries}
    c.require(len(got) == 3, "expected identity plus two randomized lemmas")
    c.require(all(e.params.get("trials", 100) == 100 for e in got.values()), "trial count")
    bad, n = failures(report)
    c.require(n == 0, "%d failures, e.g. %s" % (n, bad))
    c.note("symbolic identity plus 100 + 100 random instances")
    criterion.finish(c)


def test_criterion_09_inertial_jl(criterion):
    c = criterion(9, "inertial JL sign", 5)
    report = run("jl", jl_samples=20)
    per = Counter((e.params["p"], e.params["f"], e.params["torus"]) for e in report.entries)
    c.require(len(per) == len(CHAR_PRIMES) * len(CHAR_FS) * 2 and set(per.values()) == {20},
              "sampling incomplete")
    bad = Counter((e.params["p"], e.params["f"], e.params["torus"]) for e in report.failures())
    for key, n in sorted(bad.items()):
        c.require(False, "%d/20 without a unique certified sign at p=%d f=%d %s" % (n, *key))
    c.note("%d certified shifts" % len(report.entries))
    criterion.finish(c)


def test_criterion_10_engine_properties(criterion):
    c = criterion(10, "engine property suites", 30)
    for name, suite in sorted(engine_suites.SUITES.items()):
        bad = suite(count=200)
        c.require(not bad, "%s: %d failures, e.g. %s" % (name, len(bad), bad[:1]))
    c.note("%d suites x 200 instances" % len(engine_suites.SUITES))
    criterion.finish(c)
