"""Run configuration, the job table and the orchestration of all checks."""

import random
from concurrent.futures import ProcessPoolExecutor

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib

from . import appendix, chars, props, weyl
from .charts import GAUGE_ELEMENT, GAUGE_LABELS, WEIGHT_21, Base, build_gauge, build_multichart
from .monodromy import (GenericityError, MonodromyConfig, conjugation_coherence, derive_le_ideal,
                        fixed_weight_ideals, k_ideal, table_ideal)
from .polyring import ideal_equal
from .report import Entry, Report


class ConfigError(ValueError):
    pass


GROUPS = {
    "weyl": ("admissible", "hypercube"),
    "chars": ("embeddings", "multiplicity", "jl"),
    "monodromy": ("a2", "a4", "coherence"),
    "props": ("higherweight", "arm", "wchi3", "gorenstein", "distortion"),
}
ALL_KINDS = tuple(k for g in GROUPS.values() for k in g)

ADM_DISPLAY = {
    (2, 1): {"t(2,1)", "t(1,2)", "t(1,2)s"},
    (3, 0): {"t(3,0)", "t(2,1)s", "t(2,1)", "t(1,2)s", "t(1,2)", "t(0,3)s", "t(0,3)"},
}

LABEL_OF_ELEMENT = {v: k for k, v in GAUGE_ELEMENT.items()}


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class RunConfig:
    """Everything a run needs; build with ``from_dict`` / ``from_toml`` and call ``validate``."""

    def __init__(self, p=23, f=2, split=True, nilpotent=None, depth=5, seed=0, primes=None,
                 kappas=(9, -7, 13), triples=((9, 11, -7), (13, -8, 17), (-9, 15, 10)),
                 checks=ALL_KINDS, trials=100, samples=50, jl_samples=20,
                 chars_primes=(5, 7, 11, 23), chars_fs=(1, 2, 3), weyl_fmax=3, shapes=10):
        self.p = p
        self.f = f
        self.split = split
        self.nilpotent = tuple(nilpotent) if nilpotent is not None else (False,) * f
        self.depth = depth
        self.seed = seed
        self.primes = tuple(primes) if primes else (p,)
        self.kappas = tuple(kappas)
        self.triples = tuple(tuple(t) for t in triples)
        self.checks = tuple(checks)
        self.trials = trials
        self.samples = samples
        self.jl_samples = jl_samples
        self.chars_primes = tuple(chars_primes)
        self.chars_fs = tuple(chars_fs)
        self.weyl_fmax = weyl_fmax
        self.shapes = shapes

    @classmethod
    def from_dict(cls, d):
        """Sections [run], [rho_bar], [kappa], [checks]."""
        known = {"run", "rho_bar", "kappa", "checks"}
        extra = set(d) - known
        if extra:
            raise ConfigError("unknown config sections: %s" % ", ".join(sorted(extra)))
        run, rho, kap, chk = (d.get(k, {}) for k in ("run", "rho_bar", "kappa", "checks"))
        kw = {}
        for key in ("p", "f", "seed", "primes", "trials", "samples", "jl_samples",
                    "chars_primes", "chars_fs", "weyl_fmax", "shapes"):
            if key in run:
                kw[key] = run[key]
        if "torus" in rho:
            if rho["torus"] not in ("split", "nonsplit"):
                raise ConfigError("rho_bar.torus must be 'split' or 'nonsplit'")
            kw["split"] = rho["torus"] == "split"
        if "nilpotent" in rho:
            kw["nilpotent"] = rho["nilpotent"]
        if "depth" in rho:
            kw["depth"] = rho["depth"]
        if "values" in kap:
            kw["kappas"] = kap["values"]
        if "triples" in kap:
            kw["triples"] = kap["triples"]
        if "enabled" in chk:
            kw["checks"] = expand_checks(chk["enabled"])
        unknown = (set(run) - {"p", "f", "seed", "primes", "trials", "samples", "jl_samples",
                               "chars_primes", "chars_fs", "weyl_fmax", "shapes"}) | \
                  (set(rho) - {"torus", "nilpotent", "depth"}) | (set(kap) - {"values", "triples"}) | \
                  (set(chk) - {"enabled"})
        if unknown:
            raise ConfigError("unknown config keys: %s" % ", ".join(sorted(unknown)))
        try:
            return cls(**kw)
        except TypeError as e:
            raise ConfigError(str(e))

    @classmethod
    def from_toml(cls, path):
        try:
            with open(path, "rb") as fh:
                data = tomllib.load(fh)
        except (OSError, tomllib.TOMLDecodeError) as e:
            raise ConfigError("cannot read %s: %s" % (path, e))
        return cls.from_dict(data)

    def validate(self):
        def is_int(x):
            return isinstance(x, int) and not isinstance(x, bool)

        for name in ("p", "f", "seed", "depth", "trials", "samples", "jl_samples", "weyl_fmax", "shapes"):
            if not is_int(getattr(self, name)):
                raise ConfigError("%s must be an integer" % name)
        for p in (self.p,) + self.primes:
            if not is_int(p) or not is_prime(p) or p <= 5:
                raise ConfigError("p=%r must be a prime > 5" % (p,))
        if self.f < 1:
            raise ConfigError("f must be positive")
        if len(self.nilpotent) != self.f:
            raise ConfigError("rho_bar.nilpotent needs one flag per embedding (f=%d)" % self.f)
        if any(self.nilpotent) and not self.split:
            raise ConfigError("a nontrivial unipotent part needs the split torus")
        if self.depth < 0 or self.trials < 1 or self.samples < 1 or self.jl_samples < 1:
            raise ConfigError("depth must be >= 0 and counts >= 1")
        for t in self.triples:
            if len(t) != 3:
                raise ConfigError("kappa triples are (u, u t_alpha, u t_-alpha)")
        values = list(self.kappas) + [k for t in self.triples for k in t]
        for k in values:
            if not is_int(k):
                raise ConfigError("kappa values must be integers, got %r" % (k,))
            for p in self.primes:
                try:
                    MonodromyConfig(k, p, self.depth).validate()
                except GenericityError as e:
                    raise ConfigError("kappa is not generic: %s (needs kappa not congruent to "
                                      "+-n for |n| <= %d)" % (e, self.depth))
        for q in self.chars_primes:
            if not is_int(q) or not is_prime(q):
                raise ConfigError("chars_primes must be primes")
        bad = set(self.checks) - set(ALL_KINDS)
        if bad:
            raise ConfigError("unknown checks: %s" % ", ".join(sorted(bad)))
        return self

    def shape(self):
        return weyl.RhoBarShape(self.nilpotent, [(0, 0)] * self.f)


def expand_checks(names):
    out = []
    for n in names:
        if n == "all":
            out.extend(ALL_KINDS)
        elif n in GROUPS:
            out.extend(GROUPS[n])
        elif n in ALL_KINDS:
            out.append(n)
        else:
            raise ConfigError("unknown check %r" % n)
    return tuple(dict.fromkeys(out))


# ---------------------------------------------------------------------------
# jobs: each returns a list of entries


def _rng(*key):
    return random.Random(":".join(str(k) for k in key))


def job_admissible(f):
    out = []
    for lam, disp in ADM_DISPLAY.items():
        sets = weyl.admissible_set([lam] * f)
        for j, s in enumerate(sets):
            got = {str(x) for x in s}
            out.append(Entry("admissible", "Adm(%d,%d) at one embedding" % lam,
                             {"f": f, "j": j}, got == disp,
                             "" if got == disp else "got %s" % sorted(got)))
        n = len(weyl.product_elements(sets))
        out.append(Entry("admissible", "Adm(%d,%d) is the product over embeddings" % lam,
                         {"f": f, "size": n}, n == len(disp) ** f))
    return out


def job_hypercube(f):
    out = []
    for shape in weyl.all_shapes(f):
        res = weyl.hypercube_check(shape)
        bad = [r for r in res if not r[2]]
        out.append(Entry("hypercube", "hypercube properties of the filtered (2,1)-admissible set",
                         {"f": f, "nilpotent": list(shape.nilpotent), "instances": len(res)},
                         not bad, "" if not bad else "first failure %s %s" % (bad[0][0], bad[0][1])))
    return out


def job_embeddings(p, f, split):
    bad = chars.check_products_of_embeddings(p, f, split)
    case = "split" if split else "nonsplit"
    if p <= 3:
        return [Entry("embeddings", "documented violation outside p > 3",
                      {"p": p, "f": f, "torus": case, "violations": bad[:4]}, bool(bad),
                      "" if bad else "expected a violation")]
    return [Entry("embeddings", "sum n_alpha alpha with |n| <= 2 trivial only for n = 0",
                  {"p": p, "f": f, "torus": case}, not bad, "" if not bad else "violations %s" % bad[:4])]


def _random_character(rng, p, f, split):
    q = p ** f
    m = q - 1 if split else q * q - 1
    res = (rng.randrange(m), rng.randrange(m)) if split else (rng.randrange(m),)
    return chars.CharacterClass(p, f, split, res)


def job_multiplicity(p, f, split, samples, seed):
    rng = _rng(seed, "multiplicity", p, f, split)
    out = []
    case = "split" if split else "nonsplit"
    for i in range(samples):
        chi = _random_character(rng, p, f, split)
        audit = chars.multiplicity_audit(chi, f, p, split)
        bad = sorted(k for k, v in audit.items() if not v)
        out.append(Entry("multiplicity", "degree-2 complement multiplicity-free, chi alpha multiplicity one",
                         {"p": p, "f": f, "torus": case, "chi": list(chi.residues)}, not bad,
                         "" if not bad else "failed: %s" % ", ".join(bad)))
    return out


JL_DEPTH = 2


def _deep_presentation(rng, p, f, split, depth):
    while True:
        wflips, nu = chars.random_presentation(rng, p, f, split, margin=depth + 1)
        if weyl.is_deep(nu, p, depth):
            return wflips, nu


def job_jl(p, f, split, samples, seed):
    case = "split" if split else "nonsplit"
    # below p = 2 * JL_DEPTH + 3 no presentation is JL_DEPTH-deep; sample what exists
    depth = JL_DEPTH if p - 2 * JL_DEPTH > 2 else 0
    params = {"p": p, "f": f, "torus": case, "depth": depth}
    rng = _rng(seed, "jl", p, f, split)
    out = []
    tries = 0
    while len(out) < samples:
        tries += 1
        if tries > 100 * samples:
            out.append(Entry("jl", "sampling regular characters", params, False, "too few regular samples"))
            break
        wflips, nu = _deep_presentation(rng, p, f, split, depth)
        j = rng.randrange(f)
        sign = rng.choice((1, -1))
        alpha = weyl.root(j, f, sign)
        mu = chars.matching_weight(wflips, nu, p, split)
        if not chars.char_class(mu, p, split).is_regular():
            continue
        ps = dict(params, w=[int(x) for x in wflips], nu=[list(x) for x in nu], j=j, alpha_sign=sign)
        try:
            eps, cert = chars.inertial_jl_shift(wflips, nu, alpha, p, split)
        except ValueError as e:
            out.append(Entry("jl", "sign of the root shift", ps, False, str(e)))
            continue
        ps.update(eps=eps, target=list(cert["target"]), candidates={str(k): list(v) for k, v in
                                                                   sorted(cert["candidates"].items())})
        out.append(Entry("jl", "sign of the root shift", ps, True))
    return out


def _kappa_tag(p, kappa, symbolic):
    return {"p": p, "kappa": kappa, "mode": "symbol-p" if symbolic else "numeric"}


def job_a2(p, kappa, symbolic):
    base = Base(p, symbolic)
    out = []
    tag = _kappa_tag(p, kappa, symbolic)
    for label in GAUGE_LABELS:
        g = build_gauge(label, base)
        ps = dict(tag, gauge=label)
        le = derive_le_ideal(g, kappa, (3, 0))
        ok = ideal_equal(le, table_ideal(g, "le", kappa))
        out.append(Entry("a2", "weight <= (3,0) ideal equals the table", ps, ok))
        if label in WEIGHT_21:
            _, _, checks = fixed_weight_ideals(g, kappa)
            out.append(Entry("a2", "weight (2,1) ideal equals the table", ps, checks["21_derived"]))
            out.append(Entry("a2", "weight (3,0) ideal: table equals (le : I21^infinity)", ps,
                             checks["30_is_quotient"]))
            out.append(Entry("a2", "weight <= (3,0) ideal is I21 cap I30", ps, checks["le_is_intersection"]))
        else:
            I21 = derive_le_ideal(build_gauge(label, base, (2, 1)), kappa, (2, 1))
            out.append(Entry("a2", "weight (2,1) ideal is the unit ideal", ps, I21.is_unit()))
            out.append(Entry("a2", "weight (3,0) ideal equals the weight <= (3,0) table", ps,
                             ideal_equal(le, table_ideal(g, "30", kappa))))
        for w in ("le", "30"):
            verbatim_ok = ideal_equal(table_ideal(g, w, kappa, verbatim=True), table_ideal(g, w, kappa))
            expected = (label, w) not in appendix.CORRECTED_SINGLE
            out.append(Entry("a2", "printed table %s agrees with the corrected one exactly where expected" % w,
                             dict(ps, printed_matches=verbatim_ok), verbatim_ok == expected))
    return out


def job_a4(p, kappa, symbolic):
    base = Base(p, symbolic)
    out = []
    tag = _kappa_tag(p, kappa, symbolic)
    charts = {}
    for key in appendix.MULTI_TABLES:
        chart, gauge, weight, variant = key
        if chart not in charts:
            charts[chart] = build_multichart(chart, base)
        mc = charts[chart]
        K = k_ideal(mc, gauge, weight, kappa)
        ns = mc.namespace()
        ps = dict(tag, chart=chart, gauge=gauge, weight=weight, variant=variant or "as printed")
        ok = ideal_equal(K, appendix.multi_ideal(key, ns, mc.roster, kappa))
        out.append(Entry("a4", "pullback of the gauge ideal equals the displayed K-ideal", ps, ok))
        printed = ideal_equal(K, appendix.multi_ideal(key, ns, mc.roster, kappa, verbatim=True))
        expected = key not in appendix.CORRECTED_MULTI
        out.append(Entry("a4", "printed display agrees exactly where expected",
                         dict(ps, printed_matches=printed), printed == expected))
    return out


def job_coherence(p, kappa, symbolic):
    base = Base(p, symbolic)
    out = []
    for label in GAUGE_LABELS:
        for w in ((3, 0), (2, 1)) if label in WEIGHT_21 else ((3, 0),):
            out.append(Entry("coherence", "conjugation by s t_(1,0) maps the ideal to the partner gauge",
                             dict(_kappa_tag(p, kappa, symbolic), gauge=label, weight="%d%d" % w),
                             conjugation_coherence(label, kappa, w, base)))
    return out


def job_higherweight(p, triple):
    ku, kp, km = triple
    out = []
    for mirrored in (False, True):
        for sign, kw in ((1, kp), (-1, km)):
            out += props.check_higherweight(ku, kw, p, mirrored=mirrored, sign=sign)
    return out


def job_arm(p, triple):
    ku, kp, km = triple
    out = []
    for label in ("t21", "t12", "t12s"):
        for sign, kw in ((1, kp), (-1, km)):
            out += props.check_arm_cyclicity(label, sign, ku, kw, p)
    out += props.arm_witnesses(km, p)
    return out


def job_wchi3(p, triple):
    out = []
    for label in ("t21", "t12s"):
        for sign in (1, -1):
            out += props.check_wchi3_ledger(label, sign, *triple, p=p)
    return out


def job_gorenstein(p, kappa, f, nilpotent, shapes, seed):
    out = []
    for label in sorted(WEIGHT_21):
        out += props.check_gorenstein_single(label, kappa, p)
    shape = weyl.RhoBarShape(nilpotent, [(0, 0)] * f)
    elements = weyl.product_elements(weyl.adm_rho([(2, 1)] * f, shape))
    rng = _rng(seed, "gorenstein", p, f, tuple(nilpotent))
    picks = elements if len(elements) <= shapes else rng.sample(elements, shapes)
    for u in picks:
        labels = [LABEL_OF_ELEMENT[str(x)] for x in u.factors]
        out += props.check_gorenstein(labels, kappa, p)
    return out


def job_distortion(trials, seed):
    return props.check_distortion_lemmas(trials, seed)


JOBS = {
    "admissible": job_admissible, "hypercube": job_hypercube, "embeddings": job_embeddings,
    "multiplicity": job_multiplicity, "jl": job_jl, "a2": job_a2, "a4": job_a4,
    "coherence": job_coherence, "higherweight": job_higherweight, "arm": job_arm,
    "wchi3": job_wchi3, "gorenstein": job_gorenstein, "distortion": job_distortion,
}


def plan(config):
    """The ordered list of (job id, kind, kwargs) for a validated config."""
    c = config
    jobs = []

    def add(kind, **kw):
        if kind in c.checks:
            jid = kind + "".join("[%s=%s]" % (k, _short(v)) for k, v in kw.items())
            jobs.append((jid, kind, kw))

    for f in range(1, c.weyl_fmax + 1):
        add("admissible", f=f)
    for f in range(1, c.weyl_fmax + 1):
        add("hypercube", f=f)
    for q in c.chars_primes:
        for f in c.chars_fs:
            for split in (True, False):
                add("embeddings", p=q, f=f, split=split)
    # below the hypothesis p > 3: 2 alpha = 0 already happens for the split torus
    for f in c.chars_fs:
        add("embeddings", p=3, f=f, split=True)
    for q in c.chars_primes:
        for f in c.chars_fs:
            for split in (True, False):
                add("multiplicity", p=q, f=f, split=split, samples=c.samples, seed=c.seed)
    for q in c.chars_primes:
        for f in c.chars_fs:
            for split in (True, False):
                add("jl", p=q, f=f, split=split, samples=c.jl_samples, seed=c.seed)
    for kind in ("a2", "a4", "coherence"):
        for k in c.kappas:
            for p in c.primes:
                add(kind, p=p, kappa=k, symbolic=False)
            # symbol-p ideals do not depend on the numeric p
            add(kind, p=c.primes[0], kappa=k, symbolic=True)
    for kind in ("higherweight", "arm", "wchi3"):
        for t in c.triples:
            for p in c.primes:
                add(kind, p=p, triple=tuple(t))
    add("gorenstein", p=c.p, kappa=c.kappas[0], f=c.f, nilpotent=tuple(c.nilpotent),
        shapes=c.shapes, seed=c.seed)
    add("distortion", trials=c.trials, seed=c.seed)
    return jobs


def _short(v):
    if isinstance(v, bool):
        return "split" if v else "nonsplit"
    if isinstance(v, (tuple, list)):
        return ",".join(str(_short(x)) for x in v)
    return v


CHART_LEVEL = frozenset(["higherweight", "arm", "wchi3"])


def run_job(kind, kwargs):
    try:
        out = JOBS[kind](**kwargs)
    except (ArithmeticError, ValueError) as e:
        return [Entry(kind, "job raised", _plain_params(kwargs), False, "%s: %s" % (type(e).__name__, e))]
    if kind in CHART_LEVEL:
        for e in out:
            e.level = "chart"
    return out


def _plain_params(kw):
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in kw.items()}


def _run_star(args):
    return run_job(*args)


def run_all(config, jobs=1, progress=None):
    """Validate, execute every planned job and merge the entries in plan order."""
    config.validate()
    planned = plan(config)
    report = Report()
    if jobs > 1 and len(planned) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = ex.map(_run_star, [(kind, kw) for _, kind, kw in planned])
            for (jid, _, _), es in zip(planned, results):
                report.add(jid, es)
                if progress:
                    progress(jid, es)
    else:
        for jid, kind, kw in planned:
            es = run_job(kind, kw)
            report.add(jid, es)
            if progress:
                progress(jid, es)
    return report
