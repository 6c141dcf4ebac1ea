"""Universal gauge matrices and multi-type charts.

Matrices are stored in u = v + p.  Unit variables (the diagonal unit factor in
front of each gauge matrix) are dropped.  The prime p is either a number or,
in symbol-p mode, the first variable of every roster.
"""

from fractions import Fraction

from .polyring import MatrixPoly, Polynomial, SubstitutionMap, UPoly
from .weyl import Factor


class Base:
    """Where p lives: a nonzero rational, or the ring variable 'p'."""

    __slots__ = ("p", "symbolic")

    def __init__(self, p=23, symbolic=False):
        self.p = Fraction(p)
        if not self.p:
            raise ValueError("p must be nonzero")
        self.symbolic = bool(symbolic)

    def __eq__(self, other):
        return isinstance(other, Base) and (self.p, self.symbolic) == (other.p, other.symbolic)

    def __hash__(self):
        return hash((self.p, self.symbolic))

    def __repr__(self):
        return "Base(p=%s%s)" % (self.p, ", symbolic" if self.symbolic else "")

    def roster(self, names):
        return (("p",) if self.symbolic else ()) + tuple(names)

    def p_element(self, roster):
        if self.symbolic:
            return Polynomial.var(roster, "p")
        return Polynomial.constant(roster, self.p)

    def namespace(self, roster):
        """Variables of ``roster`` by name, plus 'p'."""
        ns = {x: Polynomial.var(roster, x) for x in roster}
        ns["p"] = self.p_element(roster)
        return ns

    def numeric(self):
        return Base(self.p, False)

    def specialize(self, f, roster=None):
        """Substitute the numeric p for the variable 'p'."""
        if not self.symbolic:
            return f
        if roster is None:
            roster = tuple(x for x in f.roster if x != "p")
        images = {x: Polynomial.var(roster, x) for x in f.roster if x != "p"}
        images["p"] = Polynomial.constant(roster, self.p)
        return f.substitute(images, roster)


DEFAULT_BASE = Base()


# ---------------------------------------------------------------------------
# gauges

GAUGE_ROSTERS = {
    "t21": ("a0", "a1", "b0", "c0", "c1", "d0"),
    "t12": ("a0", "b0", "b1", "c0", "d0", "d1"),
    "t12s": ("a0", "a1", "b0", "c0", "d0", "d1"),
    "t30": ("a0", "a1", "a2", "c0", "c1", "c2"),
    "t03": ("b0", "b1", "b2", "d0", "d1", "d2"),
    "t03s": ("a0", "a1", "a2", "c0", "c1", "d0"),
    "t21s": ("a0", "b0", "b1", "d0", "d1", "d2"),
}

GAUGE_ELEMENT = {
    "t21": "t(2,1)",
    "t12": "t(1,2)",
    "t12s": "t(1,2)s",
    "t30": "t(3,0)",
    "t03": "t(0,3)",
    "t03s": "t(0,3)s",
    "t21s": "t(2,1)s",
}

GAUGE_LABELS = tuple(GAUGE_ROSTERS)

# conjugation by s t_(1,0) pairs the gauges up
CONJUGATE_LABEL = {"t21": "t12", "t12": "t21", "t12s": "t12s", "t30": "t03",
                   "t03": "t30", "t03s": "t21s", "t21s": "t03s"}

# gauges whose tables are written in the conjugated frame: the monodromy
# operator there uses 1 - kappa
FLIPPED_KAPPA = frozenset(["t12", "t03", "t21s"])

WEIGHT_21 = frozenset(["t21", "t12", "t12s"])


def canonical_label(label):
    """Accepts 't21', 't(2,1)', 't(1,2)s' style labels."""
    text = label.strip().replace(" ", "")
    if text in GAUGE_ROSTERS:
        return text
    for key, elt in GAUGE_ELEMENT.items():
        if text == elt:
            return key
    try:
        x = Factor.parse(text)
    except ValueError:
        raise ValueError("unknown gauge label %r" % label) from None
    for key, elt in GAUGE_ELEMENT.items():
        if Factor.parse(elt) == x:
            return key
    raise ValueError("unsupported gauge %r" % label)


def _gauge_rows(label, ns, u, v):
    g = ns
    if label == "t21":
        return [[u * u + g["a1"] * u + g["a0"], g["b0"]],
                [v * (g["c1"] * u + g["c0"]), u + g["d0"]]]
    if label == "t12":
        return [[u + g["a0"], g["b1"] * u + g["b0"]],
                [v * g["c0"], u * u + g["d1"] * u + g["d0"]]]
    if label == "t12s":
        return [[g["a1"] * u + g["a0"], u + g["b0"]],
                [v * (u + g["c0"]), g["d1"] * u + g["d0"]]]
    if label == "t30":
        return [[u ** 3 + g["a2"] * u * u + g["a1"] * u + g["a0"], 0],
                [v * (g["c2"] * u * u + g["c1"] * u + g["c0"]), 1]]
    if label == "t03":
        return [[1, g["b2"] * u * u + g["b1"] * u + g["b0"]],
                [0, u ** 3 + g["d2"] * u * u + g["d1"] * u + g["d0"]]]
    if label == "t03s":
        return [[g["a2"] * u * u + g["a1"] * u + g["a0"], 1],
                [v * (u * u + g["c1"] * u + g["c0"]), g["d0"]]]
    if label == "t21s":
        return [[g["a0"], u * u + g["b1"] * u + g["b0"]],
                [v, g["d2"] * u * u + g["d1"] * u + g["d0"]]]
    raise ValueError("unknown gauge %r" % label)


def _uv(roster, base):
    u = UPoly.u(roster)
    v = u - UPoly(roster, [base.p_element(roster)])
    return u, v


def _lift_ns(ns, roster):
    return {k: UPoly(roster, [x]) for k, x in ns.items()}


class GaugeChart:
    """A gauge: label, variables, matrix in u and the declared weight bound."""

    def __init__(self, label, names, matrix, base, weight=(3, 0)):
        self.label = label
        self.names = tuple(names)
        self.matrix = matrix
        self.base = base
        self.weight = tuple(weight)

    @property
    def roster(self):
        return self.matrix.roster

    @property
    def element(self):
        return Factor.parse(GAUGE_ELEMENT[self.label])

    def __repr__(self):
        return "GaugeChart(%s, %s)" % (self.label, self.base)

    def namespace(self):
        return self.base.namespace(self.roster)

    def kappa_operator(self, kappa):
        """The scalar entering diag(., 0) of the monodromy operator for table value ``kappa``."""
        return 1 - kappa if self.label in FLIPPED_KAPPA else kappa

    def degree_bounds(self):
        """(i, k) -> (bound, exact) from the shape of the Weyl element."""
        x = self.element
        z = (1, 0) if x.flip else (0, 1)  # z(k) for k = 0, 1
        out = {}
        for i in range(2):
            for k in range(2):
                out[i, k] = (x.nu[k] - (1 if i < z[k] else 0), i == z[k])
        return out

    def check_degrees(self):
        """Degree and leading-coefficient conditions; returns a list of failures."""
        bad = []
        for (i, k), (bound, exact) in self.degree_bounds().items():
            e = self.matrix[i, k]
            if e.degree() > bound:
                bad.append(((i, k), "degree %d > %d" % (e.degree(), bound)))
            if exact:
                if e.degree() != bound:
                    bad.append(((i, k), "degree %d != %d" % (e.degree(), bound)))
                elif not e.leading().is_constant():
                    bad.append(((i, k), "leading coefficient is not a unit"))
        return bad


def build_gauge(label, base=DEFAULT_BASE, weight=(3, 0)):
    label = canonical_label(label)
    weight = tuple(weight)
    if weight not in ((2, 1), (3, 0)):
        raise ValueError("unsupported weight %r" % (weight,))
    names = GAUGE_ROSTERS[label]
    roster = base.roster(names)
    u, v = _uv(roster, base)
    rows = _gauge_rows(label, _lift_ns(base.namespace(roster), roster), u, v)
    return GaugeChart(label, names, MatrixPoly(roster, rows), base, weight)


def _swap_letter(name, pairs):
    for a, b in pairs:
        if name.startswith(a):
            return b + name[len(a):]
        if name.startswith(b):
            return a + name[len(b):]
    return name


GAUGE_SWAP = (("a", "d"), ("b", "c"))
CHART_SWAP = (("alpha", "delta"), ("beta", "gamma"))


def conjugate_matrix(m, base):
    """P A P^{-1} for P = s t_(1,0): (A11, A12, A21, A22) -> (A22, A21/v, v A12, A11)."""
    roster = m.roster
    _, v = _uv(roster, base)
    p = base.p_element(roster)
    q = m[1, 0].divide_linear(p)
    if q is None:
        raise ValueError("lower left entry is not divisible by v")
    return MatrixPoly(roster, [[m[1, 1], q], [v * m[0, 1], m[0, 0]]])


def relabel_matrix(m, names, mapping, new_roster):
    images = {x: Polynomial.var(new_roster, mapping.get(x, x)) for x in m.roster}
    return m.map_coeffs(lambda c: c.substitute(images, new_roster), new_roster)


def conjugate_gauge(chart):
    label = CONJUGATE_LABEL[chart.label]
    mapping = {x: _swap_letter(x, GAUGE_SWAP) for x in chart.names}
    names = GAUGE_ROSTERS[label]
    if sorted(mapping.values()) != sorted(names):
        raise AssertionError("conjugation does not match the roster of %s" % label)
    roster = chart.base.roster(names)
    m = relabel_matrix(conjugate_matrix(chart.matrix, chart.base), chart.names, mapping, roster)
    return GaugeChart(label, names, m, chart.base, chart.weight)


def gauge_mapping(label):
    """Variable relabeling induced by conjugation on the gauge ``label``."""
    return {x: _swap_letter(x, GAUGE_SWAP) for x in GAUGE_ROSTERS[label]}


# ---------------------------------------------------------------------------
# multi-type charts

CHART_ROSTERS = {
    "t21": ("alpha2", "alpha1", "alpha0", "beta1", "beta0",
            "gamma2", "gamma1", "gamma0", "delta1", "delta0"),
    "t12s": ("alpha0", "alpha1", "beta0", "beta1", "beta2",
             "gamma0", "gamma1", "gamma2", "delta0", "delta1"),
}
CHART_ROSTERS["t12"] = tuple(_swap_letter(x, CHART_SWAP) for x in CHART_ROSTERS["t21"])

# images of the chart variables, in roster order, under pr for each gauge in the table
_PROJECTIONS = {
    "t21": {
        "t21": lambda g, p: [g["a1"] - p, g["a0"] - p * g["a1"], -p * g["a0"], g["b0"], -p * g["b0"],
                             g["c1"], g["c0"] - p * g["c1"], -p * g["c0"], g["d0"] - p, -p * g["d0"]],
        "t12": lambda g, p: [g["a0"] - 2 * p, -2 * p * g["a0"] + p * p, p * p * g["a0"], g["b1"], g["b0"],
                             g["c0"], -2 * p * g["c0"], p * p * g["c0"], g["d1"], g["d0"]],
        "t30": lambda g, p: [g["a2"], g["a1"], g["a0"], 0, 0, g["c2"], g["c1"], g["c0"], -2 * p, p * p],
    },
    "t12s": {
        "t12s": lambda g, p: [-p * g["b0"], g["b0"] - p, -p * g["a0"], g["a0"] - p * g["a1"], g["a1"],
                              -p * g["d0"], g["d0"] - p * g["d1"], g["d1"], -p * g["c0"], g["c0"] - p],
        "t03s": lambda g, p: [p * p, -2 * p, g["a0"], g["a1"], g["a2"],
                              p * p * g["d0"], -2 * p * g["d0"], g["d0"], g["c0"], g["c1"]],
        "t21s": lambda g, p: [g["b0"], g["b1"], p * p * g["a0"], -2 * p * g["a0"], g["a0"],
                              g["d0"], g["d1"], g["d2"], p * p, -2 * p],
    },
}

# which gauge plays u, u t_alpha and u t_{-alpha}
SHIFTS = {
    "t21": {0: "t21", 1: "t30", -1: "t12"},
    "t12": {0: "t12", 1: "t21", -1: "t03"},
    "t12s": {0: "t12s", 1: "t03s", -1: "t21s"},
}

MULTICHART_LABELS = ("t21", "t12", "t12s")


def _psi_rows(label, ns, u, v):
    g = ns
    if label == "t21":
        return [[u ** 3 + g["alpha2"] * u * u + g["alpha1"] * u + g["alpha0"], v * (g["beta1"] * u + g["beta0"])],
                [v * (g["gamma2"] * u * u + g["gamma1"] * u + g["gamma0"]),
                 v * (u * u + g["delta1"] * u + g["delta0"])]]
    if label == "t12s":
        return [[v * (u * u + g["alpha1"] * u + g["alpha0"]), g["beta2"] * u * u + g["beta1"] * u + g["beta0"]],
                [v * (g["gamma2"] * u * u + g["gamma1"] * u + g["gamma0"]),
                 v * (u * u + g["delta1"] * u + g["delta0"])]]
    raise ValueError("no transcribed chart for %r" % label)


def weyl_matrix_v3(x, roster, base):
    """v^3 x^{-1} as a matrix over the roster, for a single-embedding Weyl element x."""
    _, v = _uv(roster, base)
    lam = x.translation_part()

    def vp(e):
        if e < 0:
            raise ValueError("negative power of v")
        return v ** e

    zero = UPoly(roster, [])
    if x.flip:
        # (t_lam s)^{-1} = s t_{-lam}
        return MatrixPoly(roster, [[zero, vp(3 - lam[1])], [vp(3 - lam[0]), zero]])
    return MatrixPoly(roster, [[vp(3 - lam[0]), zero], [zero, vp(3 - lam[1])]])


class MultiChart:
    """Chart variables, the matrix Psi v^3 and its projections to gauges."""

    def __init__(self, label, names, matrix, base, projections):
        self.label = label
        self.names = tuple(names)
        self.matrix = matrix
        self.base = base
        self.projections = projections  # gauge label -> SubstitutionMap

    @property
    def roster(self):
        return self.matrix.roster

    def __repr__(self):
        return "MultiChart(%s, %s)" % (self.label, self.base)

    def gauges(self):
        return list(self.projections)

    def shift(self, sign):
        return SHIFTS[self.label][sign]

    def gauge(self, label):
        return build_gauge(label, self.base)

    def namespace(self):
        return self.base.namespace(self.roster)

    def project(self, label):
        """pr applied entrywise to Psi v^3."""
        pr = self.projections[label]
        return self.matrix.map_coeffs(pr, pr.target)

    def projection_identity(self, label):
        """pr(Psi v^3) == A (v^3 z^{-1}) for the gauge ``label``."""
        g = self.gauge(label)
        rhs = g.matrix * weyl_matrix_v3(g.element, g.roster, self.base)
        return self.project(label) == rhs

    def det_ideal_generators(self):
        """Coefficients forcing det(Psi v^3) into Q^x v^3 u^3."""
        roster = self.roster
        u, v = _uv(roster, self.base)
        d = self.matrix.det()
        if d.is_zero() or d.degree() != 6 or not d.leading().is_constant():
            raise ValueError("determinant of the chart has unexpected shape")
        target = (v ** 3) * (u ** 3) * d.leading()
        diff = d - target
        return [c for c in diff.coeffs if c]


def _projection_map(chart_label, gauge_label, base):
    src = base.roster(CHART_ROSTERS[chart_label])
    g = build_gauge(gauge_label, base)
    ns = base.namespace(g.roster)
    p = ns["p"]
    imgs = _PROJECTIONS[chart_label][gauge_label](ns, p)
    images = {}
    for name, img in zip(CHART_ROSTERS[chart_label], imgs):
        if not isinstance(img, Polynomial):
            img = Polynomial.constant(g.roster, img)
        images[name] = img
    if base.symbolic:
        images["p"] = p
    return SubstitutionMap(src, g.roster, images)


def _conjugate_projection(pr, chart_label, gauge_label, base):
    """Transport a projection of the t21 chart to the conjugated chart."""
    new_gauge = CONJUGATE_LABEL[gauge_label]
    src = base.roster(CHART_ROSTERS[chart_label])
    tgt = build_gauge(new_gauge, base).roster
    gmap = {x: Polynomial.var(tgt, _swap_letter(x, GAUGE_SWAP)) for x in pr.target if x != "p"}
    if base.symbolic:
        gmap["p"] = Polynomial.var(tgt, "p")
    images = {}
    for s, img in pr.images.items():
        images[_swap_letter(s, CHART_SWAP)] = img.substitute(gmap, tgt)
    return new_gauge, SubstitutionMap(src, tgt, images)


def build_multichart(label, base=DEFAULT_BASE):
    label = canonical_label(label)
    if label not in MULTICHART_LABELS:
        raise ValueError("no multi-type chart for %r" % label)
    if label == "t12":
        orig = build_multichart("t21", base)
        names = CHART_ROSTERS["t12"]
        roster = base.roster(names)
        mapping = {x: _swap_letter(x, CHART_SWAP) for x in orig.names}
        matrix = relabel_matrix(conjugate_matrix(orig.matrix, base), orig.names, mapping, roster)
        projections = {}
        for g, pr in orig.projections.items():
            new_g, new_pr = _conjugate_projection(pr, "t12", g, base)
            projections[new_g] = new_pr
        projections = {k: projections[k] for k in SHIFTS["t12"].values()}
        return MultiChart("t12", names, matrix, base, projections)
    names = CHART_ROSTERS[label]
    roster = base.roster(names)
    u, v = _uv(roster, base)
    rows = _psi_rows(label, _lift_ns(base.namespace(roster), roster), u, v)
    projections = {g: _projection_map(label, g, base) for g in SHIFTS[label].values()}
    return MultiChart(label, names, MatrixPoly(roster, rows), base, projections)


def chart_mapping(label):
    """Relabeling of chart variables under conjugation, from ``label`` to its partner."""
    return {x: _swap_letter(x, CHART_SWAP) for x in CHART_ROSTERS[label]}
