"""Transcribed single-type and multi-type ideal tables, with the corrections layer.

Every table entry is a function ``(ns, k) -> list of generators`` where ``ns``
maps variable names (and 'p') to Polynomials and ``k`` is the integer kappa of
the type.  ``TABLES`` holds the corrected tables used by the checks;
``VERBATIM`` keeps the transcription as printed, so the difference between the
two stays visible and testable.
"""

from fractions import Fraction

from .polyring import Ideal


def _F(x):
    return Fraction(x)


# ---------------------------------------------------------------------------
# single-type ideals, keyed by gauge then by weight: 'le' (at most (3,0)), '21', '30'


def _t21_le(g, k):
    a0, a1, b0, c0, c1, d0, p = (g[x] for x in ("a0", "a1", "b0", "c0", "c1", "d0", "p"))
    return [a1 + (k - 2) * b0 * c1,
            d0 - (k - 1) * b0 * c1,
            k * c0 - (k - 1) * (k - 2) * b0 * c1 ** 2,
            k * a0 - b0 * c1 * ((k - 1) ** 2 * (k - 2) * b0 * c1 - p * k),
            b0 * ((k - 1) * (k - 2) * b0 * c1 - 2 * p)]


def _t21_21(g, k):
    return [g["b0"], g["a1"], g["d0"], g["c0"], g["a0"]]


def _t21_30(g, k):
    a0, a1, b0, c0, c1, d0, p = (g[x] for x in ("a0", "a1", "b0", "c0", "c1", "d0", "p"))
    return [a1 + p * _F(2) / (k - 1),
            d0 - p * _F(2) / (k - 2),
            k * c0 - 2 * p * c1,
            k * a0 - p * p * _F(2) / (k - 1),
            (k - 1) * (k - 2) * b0 * c1 - 2 * p]


def _t12_le(g, k):
    a0, b0, b1, c0, d0, d1, p = (g[x] for x in ("a0", "b0", "b1", "c0", "d0", "d1", "p"))
    return [d1 + (k - 2) * c0 * b1,
            a0 - (k - 1) * c0 * b1,
            k * b0 - (k - 1) * (k - 2) * c0 * b1 ** 2,
            k * d0 - c0 * b1 * ((k - 1) ** 2 * (k - 2) * c0 * b1 - p * k),
            c0 * ((k - 1) * (k - 2) * c0 * b1 - 2 * p)]


def _t12_21(g, k):
    return [g["c0"], g["d1"], g["a0"], g["b0"], g["d0"]]


def _t12_30(g, k):
    a0, b0, b1, c0, d0, d1, p = (g[x] for x in ("a0", "b0", "b1", "c0", "d0", "d1", "p"))
    return [d1 + p * _F(2) / (k - 1),
            a0 - p * _F(2) / (k - 2),
            k * b0 - 2 * p * b1,
            k * d0 - p * p * _F(2) / (k - 1),
            (k - 1) * (k - 2) * c0 * b1 - 2 * p]


def _t12s_le(g, k):
    a0, a1, b0, c0, d0, d1, p = (g[x] for x in ("a0", "a1", "b0", "c0", "d0", "d1", "p"))
    h = a1 * d1 + p
    return [c0 + (k - 1) * h,
            b0 - k * h,
            (k + 1) * a0 + k * (k - 1) * a1 * h,
            (k - 2) * d0 + k * (k - 1) * d1 * h,
            h * (k * (k - 1) * a1 * d1 + (k - 2) * (k + 1) * p)]


def _t12s_21(g, k):
    return [g["c0"], g["b0"], g["a0"], g["d0"], g["a1"] * g["d1"] + g["p"]]


def _t12s_30_printed(g, k):
    a0, a1, b0, c0, d0, d1, p = (g[x] for x in ("a0", "a1", "b0", "c0", "d0", "d1", "p"))
    return [c0 + _F(2) / k,
            b0 - _F(2) / (k - 1),
            (k + 1) * a0 + 2 * p * a1,
            (k - 2) * d0 + 2 * p * d1,
            (a1 * d1 + p) - p * _F(2) / (k * (k - 1))]


def _t12s_30(g, k):
    # the first two generators are missing their factor p as printed
    a0, a1, b0, c0, d0, d1, p = (g[x] for x in ("a0", "a1", "b0", "c0", "d0", "d1", "p"))
    return [c0 + p * _F(2) / k,
            b0 - p * _F(2) / (k - 1)] + _t12s_30_printed(g, k)[2:]


def _t30_le(g, k):
    a0, a1, a2, c0, c1, c2, p = (g[x] for x in ("a0", "a1", "a2", "c0", "c1", "c2", "p"))
    return [a0, a1, a2, (k - 2) * c1 + 2 * p * c2, (k - 1) * c0 + p * c1]


def _t03_le(g, k):
    b0, b1, b2, d0, d1, d2, p = (g[x] for x in ("b0", "b1", "b2", "d0", "d1", "d2", "p"))
    return [d0, d1, d2, (k - 2) * b1 + 2 * p * b2, (k - 1) * b0 + p * b1]


def _t03s_le(g, k):
    a0, a1, a2, c0, c1, d0, p = (g[x] for x in ("a0", "a1", "a2", "c0", "c1", "d0", "p"))
    return [d0 * a2 - (c1 - p), (k - 1) * a1 + 2 * p * a2, p * a1 + k * a0,
            (k - 2) * c1 + 2 * p, (k - 1) * c0 + p * c1]


def _t21s_le(g, k):
    a0, b0, b1, d0, d1, d2, p = (g[x] for x in ("a0", "b0", "b1", "d0", "d1", "d2", "p"))
    return [a0 * d2 - (b1 - p), (k - 1) * d1 + 2 * p * d2, p * d1 + k * d0,
            (k - 2) * b1 + 2 * p, (k - 1) * b0 + p * b1]


def _unit(g, k):
    return [g["p"] * 0 + 1]


def _flip(fn, name):
    """Table entry with the variable ``name`` replaced by its negative."""
    def wrapped(g, k):
        h = dict(g)
        h[name] = -g[name]
        return fn(h, k)
    return wrapped


VERBATIM = {
    "t21": {"le": _t21_le, "21": _t21_21, "30": _t21_30},
    "t12": {"le": _t12_le, "21": _t12_21, "30": _t12_30},
    "t12s": {"le": _t12s_le, "21": _t12s_21, "30": _t12s_30_printed},
    "t30": {"le": _t30_le, "21": _unit, "30": _t30_le},
    "t03": {"le": _t03_le, "21": _unit, "30": _t03_le},
    "t03s": {"le": _t03s_le, "21": _unit, "30": _t03s_le},
    "t21s": {"le": _t21s_le, "21": _unit, "30": _t21s_le},
}

# sign slips: in each of the three weight-(2,1) gauges one variable enters the
# printed ideals with the wrong sign; flipping it repairs every affected line
SIGN_ERRATA = {"t21": "c0", "t12": "b0", "t12s": "d0"}

TABLES = {label: dict(entries) for label, entries in VERBATIM.items()}
TABLES["t12s"]["30"] = _t12s_30
for _label, _name in SIGN_ERRATA.items():
    TABLES[_label] = {w: _flip(fn, _name) for w, fn in TABLES[_label].items()}


def table_ideal(label, weight, ns, roster, k, verbatim=False):
    src = VERBATIM if verbatim else TABLES
    fn = src[label][weight]
    return Ideal(roster, fn(ns, k))


# ---------------------------------------------------------------------------
# multi-type ideals, keyed by (chart, gauge, weight)


def _a4_t21_t21_21(g, k):
    al0, al1, al2, be0, be1, ga0, ga1, ga2, de0, de1, p = _greek(g)
    return [al0 + p * al1 + p ** 2 * al2 + p ** 3, be0 + p * be1, ga0 + p * ga1 + p ** 2 * ga2,
            de0 + p * de1 + p ** 2, be1, al2 + p, de1 + p, ga1 + p * ga2, al1]


def _a4_t21_t12_30_printed(g, k):
    al0, al1, al2, be0, be1, ga0, ga1, ga2, de0, de1, p = _greek(g)
    return [al0 + p * al1 + p ** 2 * al2 + p ** 3, al1 + 2 * p * al2 + 3 * p ** 2,
            ga0 + p * ga1 + p ** 2 * ga2, ga1 + 2 * p * ga2,
            ga2 * be1 - p * _F(2) / ((k - 1) * (k - 2)),
            de1 + p * _F(2) / (k - 1),
            al2 + (1 - _F(1) / (k - 2)) * 2 * p,
            k * be0 - 2 * p * be1,
            k * de0 - p ** 2 * _F(2) / (k - 1)]


def _a4_t21_t12_30(g, k):
    out = _a4_t21_t12_30_printed(g, k)
    out[7] = k * g["beta0"] + 2 * g["p"] * g["beta1"]
    return out


def _a4_t21_t12_21(g, k):
    al0, al1, al2, be0, be1, ga0, ga1, ga2, de0, de1, p = _greek(g)
    return [al0 + p * al1 + p ** 2 * al2 + p ** 3, al1 + 2 * p * al2 + 3 * p ** 2,
            ga0 + p * ga1 + p ** 2 * ga2, ga1 + 2 * p * ga2, ga2, de1, al2 + 2 * p, be0, de0]


def _a4_t21_t30_30(g, k):
    al0, al1, al2, be0, be1, ga0, ga1, ga2, de0, de1, p = _greek(g)
    return [be1, be0, de1 + 2 * p, de0 - p ** 2, al2, al1, al0,
            (k - 2) * ga1 + 2 * p * ga2, (k - 1) * ga0 + p * ga1]


def _a4_t12s_t12s_21(g, k):
    al0, al1, be0, be1, be2, ga0, ga1, ga2, de0, de1, p = _greek_s(g)
    return [al0 + p * al1 + p ** 2, be0 + p * be1 + p ** 2 * be2, ga0 + p * ga1 + p ** 2 * ga2,
            de0 + p * de1 + p ** 2, de1 + p, al1 + p, be1 + p * be2, ga1 + p * ga2, be2 * ga2 + p]


def _a4_t12s_t12s_21_simplified(g, k):
    al0, al1, be0, be1, be2, ga0, ga1, ga2, de0, de1, p = _greek_s(g)
    return [al0, al1 + p, be0, be1 + p * be2, ga0, ga1 + p * ga2, de0, de1 + p, be2 * ga2 + p]


def _a4_t12s_t03s_30(g, k):
    al0, al1, be0, be1, be2, ga0, ga1, ga2, de0, de1, p = _greek_s(g)
    return [al0 - p ** 2, al1 + 2 * p, ga0 - p ** 2 * ga2, ga1 + 2 * p * ga2,
            ga2 * be2 - (de1 - p), (k - 1) * be1 + 2 * p * be2, p * be1 + k * be0,
            (k - 2) * de1 + 2 * p, (k - 1) * de0 + p * de1]


def _a4_t12s_t21s_30(g, k):
    al0, al1, be0, be1, be2, ga0, ga1, ga2, de0, de1, p = _greek_s(g)
    return [de0 - p ** 2, de1 + 2 * p, be0 - p ** 2 * be2, be1 + 2 * p * be2,
            be2 * ga2 - (al1 - p), (k - 1) * ga1 + 2 * p * ga2, p * ga1 + k * ga0,
            (k - 2) * al1 + 2 * p, (k - 1) * al0 + p * al1]


def _greek(g):
    names = ("alpha0", "alpha1", "alpha2", "beta0", "beta1", "gamma0", "gamma1", "gamma2",
             "delta0", "delta1", "p")
    return tuple(g[x] for x in names)


def _greek_s(g):
    names = ("alpha0", "alpha1", "beta0", "beta1", "beta2", "gamma0", "gamma1", "gamma2",
             "delta0", "delta1", "p")
    return tuple(g[x] for x in names)


# (chart, gauge, weight, variant)
MULTI_VERBATIM = {
    ("t21", "t21", "21", ""): _a4_t21_t21_21,
    ("t21", "t12", "30", ""): _a4_t21_t12_30_printed,
    ("t21", "t12", "21", ""): _a4_t21_t12_21,
    ("t21", "t30", "30", ""): _a4_t21_t30_30,
    ("t12s", "t12s", "21", ""): _a4_t12s_t12s_21,
    ("t12s", "t12s", "21", "simplified"): _a4_t12s_t12s_21_simplified,
    ("t12s", "t03s", "30", ""): _a4_t12s_t03s_30,
    ("t12s", "t21s", "30", ""): _a4_t12s_t21s_30,
}

MULTI_TABLES = dict(MULTI_VERBATIM)
MULTI_TABLES[("t21", "t12", "30", "")] = _a4_t21_t12_30

# table entries that differ from the printed version
CORRECTED_SINGLE = sorted({(label, w) for label in SIGN_ERRATA for w in ("le", "30")})
CORRECTED_MULTI = [("t21", "t12", "30", "")]


def multi_ideal(key, ns, roster, k, verbatim=False):
    src = MULTI_VERBATIM if verbatim else MULTI_TABLES
    return Ideal(roster, src[key](ns, k))
