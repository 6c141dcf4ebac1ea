"""Determinant and truncated monodromy ideals of gauge charts, and their pullbacks."""

from fractions import Fraction

from . import appendix
from .charts import CONJUGATE_LABEL, DEFAULT_BASE, WEIGHT_21, build_gauge, gauge_mapping, _uv
from .polyring import (Ideal, MatrixPoly, Polynomial, UPoly, ideal_equal, ideal_intersect,
                       ideal_saturate, ideal_saturate_ideal, preimage_ideal)


class GenericityError(ValueError):
    pass


class MonodromyConfig:
    """kappa of one type, the prime and the genericity depth required of kappa."""

    __slots__ = ("kappa", "p", "depth")

    def __init__(self, kappa, p=23, depth=5):
        self.kappa = int(kappa)
        self.p = int(p)
        self.depth = int(depth)

    def __repr__(self):
        return "MonodromyConfig(kappa=%d, p=%d, depth=%d)" % (self.kappa, self.p, self.depth)

    def violations(self):
        r = self.kappa % self.p
        return [n for n in range(-self.depth, self.depth + 1) if (r - n) % self.p == 0]

    def is_generic(self):
        return not self.violations()

    def validate(self):
        bad = self.violations()
        if bad:
            raise GenericityError("kappa=%d is congruent to %d mod %d" % (self.kappa, bad[0], self.p))
        return self


def det_condition_ideal(chart):
    """u^0, u^1, u^2 coefficients of det A; the u^3 coefficient must be a nonzero constant."""
    d = chart.matrix.det()
    if d.degree() != 3 or not d.leading().is_constant():
        raise ValueError("det of %s is not a cubic with constant leading coefficient" % chart.label)
    return Ideal(chart.roster, [d.coeff(i) for i in range(3)])


def monodromy_operator(chart, kappa_op):
    """(v dA/du - A diag(kappa_op, 0)) adj(A)."""
    A = chart.matrix
    roster = chart.roster
    _, v = _uv(roster, chart.base)
    zero = UPoly(roster, [])
    D = MatrixPoly(roster, [[UPoly.const(roster, Fraction(kappa_op)), zero], [zero, zero]])
    C = A.derivative() * v - A * D
    return C * A.adjugate()


def _low(e, n):
    return [e.coeff(i) for i in range(n)]


def raw_generators(chart, kappa_op, weight):
    """Generators before p-saturation: det, monodromy and (weight (2,1)) vanishing at u = 0."""
    gens = list(det_condition_ideal(chart).gens)
    M = monodromy_operator(chart, kappa_op)
    p = chart.base.p_element(chart.roster)
    for i in range(2):
        for k in range(2):
            e = M[i, k]
            if (i, k) == (1, 0):
                e = e.divide_linear(p)
                if e is None:
                    raise ArithmeticError("lower left monodromy entry of %s is not divisible by v" % chart.label)
            gens += _low(e, 2)
    if tuple(weight) == (2, 1):
        A = chart.matrix
        for i in range(2):
            for k in range(2):
                e = A[i, k]
                if (i, k) == (1, 0):
                    e = e.divide_linear(p)
                gens.append(e.coeff(0))
    return [g for g in gens if g]


def strip_p(f):
    """Divide by the variable p as long as possible (symbol-p mode only)."""
    if "p" not in f.roster or f.is_zero():
        return f
    while True:
        q = f.divide_by_var("p")
        if q is None:
            return f
        f = q


def derive_le_ideal(chart, kappa, weight=(3, 0), saturate=True):
    """I^{<= weight} for the table value ``kappa`` (the operator uses chart.kappa_operator).

    Numeric p: the ideal over Q is already p-saturated.  Symbol p: each
    generator is stripped of powers of p, then the ideal is saturated by p.
    """
    gens = raw_generators(chart, chart.kappa_operator(kappa), weight)
    if chart.base.symbolic:
        gens = [strip_p(g) for g in gens]
        I = Ideal(chart.roster, gens)
        if saturate:
            I = ideal_saturate(I, chart.base.p_element(chart.roster))
        return I
    return Ideal(chart.roster, gens)


def table_ideal(chart, weight_key, kappa, verbatim=False):
    return appendix.table_ideal(chart.label, weight_key, chart.namespace(), chart.roster,
                                Fraction(kappa), verbatim)


def fixed_weight_ideals(chart, kappa):
    """(I_21, I_30) from the tables, with the consistency checks as a dict of booleans."""
    I21 = table_ideal(chart, "21", kappa)
    I30 = table_ideal(chart, "30", kappa)
    le = derive_le_ideal(chart, kappa, (3, 0))
    checks = {}
    if chart.label in WEIGHT_21:
        checks["le_is_intersection"] = ideal_equal(le, ideal_intersect(I21, I30))
        checks["30_is_quotient"] = ideal_equal(ideal_saturate_ideal(le, I21), I30)
    else:
        checks["le_is_30"] = ideal_equal(le, I30)
    checks["21_derived"] = ideal_equal(I21, derive_le_ideal(chart, kappa, (2, 1)))
    return I21, I30, checks


def weight_key(weight):
    w = tuple(weight) if not isinstance(weight, str) else weight
    return {(2, 1): "21", (3, 0): "30", "21": "21", "30": "30", "le": "le", "le30": "le"}[w]


def k_ideal(multichart, gauge, weight, kappa):
    """Preimage under pr_gauge of the fixed-weight ideal of the gauge."""
    pr = multichart.projections[gauge]
    g = build_gauge(gauge, multichart.base)
    I = table_ideal(g, weight_key(weight), kappa)
    return preimage_ideal(pr, I)


def k_ideals(multichart, kappas, weights=None):
    """{(gauge, weight key): K ideal} for every gauge in the table.

    ``kappas`` maps gauge labels to kappa; ``weights`` maps gauges to a list of
    weights (default: (2,1) and (3,0) where the gauge admits (2,1), else (3,0)).
    """
    out = {}
    for g in multichart.gauges():
        ws = (weights or {}).get(g)
        if ws is None:
            ws = ["21", "30"] if g in WEIGHT_21 else ["30"]
        for w in ws:
            out[g, weight_key(w)] = k_ideal(multichart, g, w, kappas[g])
    return out


def det_condition_on_chart(multichart):
    return Ideal(multichart.roster, multichart.det_ideal_generators())


def relabel_ideal(I, mapping, roster):
    images = {x: Polynomial.var(roster, mapping.get(x, x)) for x in I.roster}
    return Ideal(roster, [g.substitute(images, roster) for g in I.gens])


def conjugate_kappa(label, kappa, base=None):
    """Table kappa of the conjugate gauge producing the relabeled ideal.

    Conjugation by s t_(1,0) sends the operator scalar k to 1 - k.
    """
    base = base or DEFAULT_BASE
    g = build_gauge(label, base)
    c = build_gauge(CONJUGATE_LABEL[label], base)
    return c.kappa_operator(1 - g.kappa_operator(Fraction(kappa)))


def conjugation_coherence(label, kappa, weight=(3, 0), base=None):
    """The ideal of the conjugate gauge equals the relabeled ideal of ``label``."""
    base = base or DEFAULT_BASE
    g = build_gauge(label, base, weight)
    c = build_gauge(CONJUGATE_LABEL[label], base, weight)
    I = derive_le_ideal(g, kappa, weight)
    J = derive_le_ideal(c, conjugate_kappa(label, kappa, base), weight)
    return ideal_equal(relabel_ideal(I, gauge_mapping(label), c.roster), J)
