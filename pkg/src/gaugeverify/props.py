"""Chart-level checks of the multi-type ideal identities.

All checks run in symbol-p mode: p is a ring variable, so statements of the
form ``I + (p) = J + (p)`` are not vacuous.  Each check returns a list of
``Entry`` records.
"""

import random
from fractions import Fraction

from .charts import (SHIFTS, Base, build_gauge, build_multichart, chart_mapping,
                     CONJUGATE_LABEL)
from .monodromy import k_ideal, table_ideal
from .report import Entry
from .polyring import (Ideal, Polynomial, TermOrder, ideal_equal,
                       ideal_contains, ideal_intersect, ideal_sum, ideal_product, member)


def _witness(f, I):
    """Normal form of f modulo I, as a string (empty when f is in I)."""
    r = I.groebner().reduce(f)
    return "" if r.is_zero() else "normal form %s" % r


def _mod_p(q, p):
    """Residue of a rational number mod p (None if the denominator vanishes mod p)."""
    q = Fraction(q)
    if q.denominator % p == 0:
        return None
    return q.numerator * pow(q.denominator, -1, p) % p


def solve_scalar(f, g, I):
    """c in Q with f + c g in I, or None."""
    G = I.groebner()
    rf, rg = G.reduce(f), G.reduce(g)
    if rg.is_zero():
        return Fraction(0) if rf.is_zero() else None
    m, c = next(iter(sorted(rg.terms.items())))
    cand = -rf.coefficient(m) / c
    return cand if (rf + rg * cand).is_zero() else None


_IDEAL_CACHE = {}


def clear_cache():
    _IDEAL_CACHE.clear()


class Setting:
    """A multi-type chart in symbol-p mode with the three kappa values of its types.

    ``frame`` is the chart whose variable names the assertions are written in;
    when it differs from ``label`` the assertions are transported by conjugation.
    """

    def __init__(self, label, kappa_u, kappa_plus, kappa_minus, p=23, frame=None):
        self.base = Base(p, symbolic=True)
        self.label = label
        self.frame = frame or label
        self.kappas = {0: int(kappa_u), 1: int(kappa_plus), -1: int(kappa_minus)}
        self.chart = build_multichart(label, self.base)
        self.roster = self.chart.roster
        ns = self.base.namespace(self.roster)
        if self.frame != label:
            to_label = chart_mapping(self.frame)
            ns = dict({k: ns[v] for k, v in to_label.items()}, p=ns["p"])
        self.ns = ns
        # symbol-p ideals do not depend on the numeric p, only on the kappa values
        key = (label, self.frame, self.kappas[0], self.kappas[1], self.kappas[-1])
        self._cache = _IDEAL_CACHE.setdefault(key, {})

    @property
    def transported(self):
        return self.frame != self.label

    def gauge(self, sign):
        """The gauge for u (sign 0) or u t_{+-alpha}; signs refer to the frame chart."""
        s = -sign if self.transported else sign
        return SHIFTS[self.label][s]

    def kappa(self, sign):
        """kappa of the table attached to the gauge, in the frame's convention."""
        k = self.kappas[sign]
        if not self.transported:
            return k
        src = SHIFTS[self.frame][sign]
        g = self.gauge(sign)
        kop = build_gauge(src, self.base).kappa_operator(k)
        return build_gauge(g, self.base).kappa_operator(1 - kop)

    def K(self, sign, weight):
        key = (sign, weight)
        if key not in self._cache:
            self._cache[key] = k_ideal(self.chart, self.gauge(sign), weight, self.kappa(sign))
        return self._cache[key]

    def K21(self):
        return self.K(0, "21")

    def K30(self, sign):
        return self.K(sign, "30")

    def inter(self, sign):
        key = ("inter", sign)
        if key not in self._cache:
            self._cache[key] = ideal_intersect(self.K21(), self.K30(sign))
        return self._cache[key]

    def P(self):
        return self.ns["p"]

    def ideal(self, gens):
        return Ideal(self.roster, gens)

    def plus_p(self, I):
        return ideal_sum(I, self.ideal([self.P()]))

    def params(self, **extra):
        out = {"chart": self.label, "frame": self.frame, "p": int(self.base.p),
               "kappa_u": self.kappas[0], "kappa_plus": self.kappas[1], "kappa_minus": self.kappas[-1]}
        out.update(extra)
        return out


def _member_entry(check, anchor, st, f, I, **params):
    ok = member(f, I)
    return Entry(check, anchor, st.params(element=str(f), **params), ok, "" if ok else _witness(f, I))


# ---------------------------------------------------------------------------
# higher weight


def check_higherweight(kappa_u, kappa_w, p=23, mirrored=False, sign=1):
    """x y - p in K30, K30 + (x) = K21 + (p), K30 + (y) = K21(w) + (p).

    Written in the frame of u = t(2,1), w = t(1,2) (reached through -alpha);
    ``mirrored`` runs u = t(1,2), w = t(2,1) on the conjugate chart.
    """
    st = Setting("t12" if mirrored else "t21", kappa_u, kappa_w, kappa_w, p, frame="t21")
    g = st.ns
    x, y0 = g["beta1"], g["gamma2"]
    K30 = st.K30(-1)
    tag = {"alpha_sign": sign, "u": "t(1,2)" if mirrored else "t(2,1)"}
    c = solve_scalar(-st.P(), x * y0, K30)
    if c is None:
        return [Entry("higherweight", "xy-p in K30", st.params(**tag), False, "no rescaling of y works")]
    expected = Fraction((kappa_w - 1) * (kappa_w - 2), 2)
    out = [Entry("higherweight", "rescaling of y", st.params(scale=str(c), **tag), c == expected,
                 "" if c == expected else "expected %s" % expected)]
    y = y0 * c
    out.append(_member_entry("higherweight", "xy-p in K30", st, x * y - st.P(), K30, **tag))
    out.append(Entry("higherweight", "K30+(x) = K21(u)+(p)", st.params(**tag),
                     ideal_equal(ideal_sum(K30, st.ideal([x])), st.plus_p(st.K21()))))
    out.append(Entry("higherweight", "K30+(y) = K21(w)+(p)", st.params(**tag),
                     ideal_equal(ideal_sum(K30, st.ideal([y])), st.plus_p(st.K(-1, "21")))))
    return out


# ---------------------------------------------------------------------------
# arm cyclicity


def check_arm_cyclicity(label, sign, kappa_u, kappa_w, p=23):
    st = Setting(label, kappa_u, kappa_w, kappa_w, p)
    K21, K30 = st.K21(), st.K30(sign)
    P = st.P()
    tag = {"alpha_sign": sign, "w": st.gauge(sign)}
    out = [Entry("arm", "K30(w)+(p) in K21(u)+(p)", st.params(**tag),
                 ideal_contains(st.plus_p(K21), st.plus_p(K30))),
           _member_entry("arm", "p in K21(u)+K30(w)", st, P, ideal_sum(K21, K30), **tag)]
    for name, I in (("K21(u)", K21), ("K30(w)", K30)):
        ok = not member(P, I)
        out.append(Entry("arm", "negative control: p not in %s" % name, st.params(**tag), ok))
    # the same containment with p specialized is the unit ideal
    num = build_multichart(label, Base(p))
    Kn = ideal_sum(k_ideal(num, st.gauge(0), "21", st.kappa(0)),
                   k_ideal(num, st.gauge(sign), "30", st.kappa(sign)))
    out.append(Entry("arm", "numeric p: K21(u)+K30(w) is the unit ideal", st.params(**tag), Kn.is_unit()))
    return out


def arm_witnesses(kappa_w, p=23):
    """The two explicit witness pairs for u = t(2,1)."""
    out = []
    st = Setting("t21", 9, kappa_w, kappa_w, p)
    g, P = st.ns, st.P()
    out.append(_member_entry("arm", "delta1+p in K21(u)", st, g["delta1"] + P, st.K21()))
    out.append(_member_entry("arm", "delta1+2p/(kappa-1) in K30(t(1,2))", st,
                             g["delta1"] + P * Fraction(2, kappa_w - 1), st.K30(-1)))
    out.append(_member_entry("arm", "delta1+2p in K30(t(3,0))", st, g["delta1"] + 2 * P, st.K30(1)))
    return out


# ---------------------------------------------------------------------------
# the W_{chi,3} ledger


def _maximal_ideals(st, free):
    """Sample maximal ideals over the residual locus: p, every other variable, and free - value.

    At most one of the ``free`` variables takes a nonzero value (their product
    vanishes on the locus when there are two of them).
    """
    points = [dict.fromkeys(free, 0)]
    for v in free:
        points.append(dict(points[0], **{v: 1}))
    out = []
    for vals in points:
        gens = [st.P()] + [st.ns[n] for n in st.ns if n != "p" and n not in free]
        gens += [st.ns[v] - vals[v] for v in free]
        out.append((vals, st.ideal(gens)))
    return out


def _pm(st, I, m):
    return ideal_sum(I, ideal_product(st.ideal([st.P()]), m))


def _frak_j(st, m):
    """(K21 cap K30(+), p) + (K21 cap K30(-), p) + m (K21, p): the image the surjectivity is about."""
    K = st.plus_p(st.K21())
    return st.plus_p(ideal_sum(ideal_sum(st.inter(1), st.inter(-1)), ideal_product(m, K)))


def _distortion_entries(st, elt, name, I, J, ms, sign, zero=None):
    """Hypothesis of the intersection distortion lemma at each sample point.

    ``zero`` names a variable that must lie in m for the lemma to apply; at the
    other points the element is checked in the image directly.
    """
    out = []
    for vals, m in ms:
        params = st.params(alpha_sign=sign, residue=str(vals))
        if zero is None or vals[zero] == 0:
            ok = member(elt, _pm(st, I, m)) and member(elt, _pm(st, J, m))
            out.append(Entry("wchi3", "%s in (K21+pm) and (K30+pm)" % name, params, ok))
        else:
            out.append(Entry("wchi3", "%s in the image of the intersections mod m(K21,p) (%s a unit)"
                             % (name, zero), params, member(elt, _frak_j(st, m))))
    return out


def _surjectivity(st, ms, sign):
    out = []
    K = st.plus_p(st.K21())
    for vals, m in ms:
        lhs = _frak_j(st, m)
        out.append(Entry("wchi3", "surjectivity onto (K21,p)/m(K21,p)",
                         st.params(alpha_sign=sign, residue=str(vals)), ideal_equal(lhs, K)))
    return out


def wchi3_t21(st, sign=1):
    """Ledger for u = t(2,1) in the frame of the t(2,1) chart."""
    g, P = st.ns, st.P()
    al0, al1, al2 = g["alpha0"], g["alpha1"], g["alpha2"]
    be0, be1 = g["beta0"], g["beta1"]
    ga0, ga1, ga2 = g["gamma0"], g["gamma1"], g["gamma2"]
    de0, de1 = g["delta0"], g["delta1"]
    K21, Kp, Km = st.K21(), st.K30(1), st.K30(-1)
    Ip, Im = st.inter(1), st.inter(-1)
    out = []
    E = lambda anchor, f, I: _member_entry("wchi3", anchor, st, f, I, alpha_sign=sign)
    residual = st.ideal([P, al0, be0, ga0, de0, be1, al2, de1, ga1, al1])
    out.append(Entry("wchi3", "(K21,p) = (p, alpha0, beta0, gamma0, delta0, beta1, alpha2, delta1, gamma1, alpha1)",
                     st.params(alpha_sign=sign), ideal_equal(st.plus_p(K21), residual)))
    out.append(E("alpha1 in K21 cap K30(+)", al1, Ip))
    out.append(E("beta1 in K21 cap K30(+)", be1, Ip))
    out.append(E("gamma0+p gamma1+p^2 gamma2 in K21 cap K30(-)", ga0 + P * ga1 + P ** 2 * ga2, Im))
    out.append(E("alpha0+p alpha1+p^2 alpha2+p^3 in K21", al0 + P * al1 + P ** 2 * al2 + P ** 3, K21))
    out.append(E("alpha0 in K30(+)", al0, Kp))
    out.append(E("beta0+p beta1 in K21", be0 + P * be1, K21))
    out.append(E("beta0 in K30(+)", be0, Kp))
    out.append(E("delta0+p delta1+p^2 in K21", de0 + P * de1 + P ** 2, K21))
    out.append(E("delta0-p^2 in K30(+)", de0 - P ** 2, Kp))
    ms = _maximal_ideals(st, ["gamma2"])
    for elt, name in ((al0, "alpha0"), (be0, "beta0"), (de0, "delta0")):
        out += _distortion_entries(st, elt, name, K21, Kp, ms, sign)
    out.append(E("gamma1+p gamma2 in K21", ga1 + P * ga2, K21))
    out.append(E("gamma1+2p gamma2 in K30(-)", ga1 + 2 * P * ga2, Km))
    out.append(E("alpha2+delta1+2p-beta1 gamma2 in K21 cap K30(-)", al2 + de1 + 2 * P - be1 * ga2, Im))
    out.append(E("alpha2-delta1 in K21", al2 - de1, K21))
    out.append(E("beta1 gamma2 in K21", be1 * ga2, K21))
    s = solve_scalar(al2 - de1, be1 * ga2, Km)
    out.append(Entry("wchi3", "exists s: alpha2-delta1+s beta1 gamma2 in K30(-)",
                     st.params(alpha_sign=sign, s=str(s)), s is not None))
    km = st.kappas[-1]
    out.append(E("delta1+p in K21", de1 + P, K21))
    out.append(E("delta1+2p/(kappa-1) in K30(-)", de1 + P * Fraction(2, km - 1), Km))
    coef = 1 - Fraction(2, km - 1)
    lin = ga2 * de1 + coef * ga1
    out.append(E("gamma2 delta1+(1-2/(kappa-1)) gamma1 in (K21 cap K30(-), p)", lin, st.plus_p(Im)))
    pp = int(st.base.p)
    r = _mod_p(coef, pp)
    out.append(Entry("wchi3", "1-2/(kappa-1) is a unit mod p", st.params(alpha_sign=sign, residue=r),
                     r not in (None, 0)))
    out += _surjectivity(st, ms, sign)
    return out


def wchi3_t12s(st, sign=1):
    """Ledger for u = t(1,2)s."""
    g, P = st.ns, st.P()
    al0, al1 = g["alpha0"], g["alpha1"]
    be0, be1, be2 = g["beta0"], g["beta1"], g["beta2"]
    ga0, ga1, ga2 = g["gamma0"], g["gamma1"], g["gamma2"]
    de0, de1 = g["delta0"], g["delta1"]
    K21, Kp, Km = st.K21(), st.K30(1), st.K30(-1)
    Ip, Im = st.inter(1), st.inter(-1)
    kp, km = st.kappas[1], st.kappas[-1]
    out = []
    E = lambda anchor, f, I: _member_entry("wchi3", anchor, st, f, I, alpha_sign=sign)
    residual = st.ideal([P, al0, be0, be1, ga0, ga1, de0, de1, al1, be2 * ga2])
    out.append(Entry("wchi3", "(K21,p) = (p, alpha0, beta0, beta1, gamma0, gamma1, delta0, delta1, alpha1, beta2 gamma2)",
                     st.params(alpha_sign=sign), ideal_equal(st.plus_p(K21), residual)))
    out.append(E("alpha0+p alpha1+p^2 in K21 cap K30(+)", al0 + P * al1 + P ** 2, Ip))
    out.append(E("gamma0+p gamma1+p^2 gamma2 in K21 cap K30(+)", ga0 + P * ga1 + P ** 2 * ga2, Ip))
    out.append(E("delta0+p delta1+p^2 in K21 cap K30(-)", de0 + P * de1 + P ** 2, Im))
    out.append(E("beta0+p beta1+p^2 beta2 in K21 cap K30(-)", be0 + P * be1 + P ** 2 * be2, Im))
    out.append(E("beta1+p beta2 in K21", be1 + P * be2, K21))
    out.append(E("beta1+2p beta2/(kappa-1) in K30(+)", be1 + P * be2 * Fraction(2, kp - 1), Kp))
    ms = _maximal_ideals(st, ["beta2", "gamma2"])
    out += _distortion_entries(st, be1, "beta1", K21, Kp, ms, sign, zero="beta2")
    out += _distortion_entries(st, ga1, "gamma1", K21, Kp, ms, sign, zero="gamma2")
    out.append(E("alpha1+2p in K30(+)", al1 + 2 * P, Kp))
    out.append(E("delta1+2p/(kappa-2) in K30(+)", de1 + P * Fraction(2, kp - 2), Kp))
    out.append(E("alpha1+p in K21", al1 + P, K21))
    out.append(E("delta1+p in K21", de1 + P, K21))
    cp = 1 - Fraction(2, kp - 2)
    cm = 1 - Fraction(2, km - 2)
    out.append(E("(1-2/(kappa+ -2)) alpha1+delta1 in (K21 cap K30(+), p)", cp * al1 + de1, st.plus_p(Ip)))
    out.append(E("alpha1+(1-2/(kappa- -2)) delta1 in (K21 cap K30(-), p)", al1 + cm * de1, st.plus_p(Im)))
    pp = int(st.base.p)
    r = _mod_p(cp * cm, pp)
    out.append(Entry("wchi3", "(1-2/(kappa+ -2))(1-2/(kappa- -2)) is not 1 mod p",
                     st.params(alpha_sign=sign, residue=r), r is not None and r != 1))
    out.append(E("gamma1(2/(kappa-2)-1)-gamma2 delta1 in (K21 cap K30(+), p)",
                 ga1 * (-cp) - ga2 * de1, st.plus_p(Ip)))
    out.append(E("(1-2/(kappa-2)) beta2 gamma2+2/(kappa-2) delta1 in (K21 cap K30(+), p)",
                 cp * be2 * ga2 + (1 - cp) * de1, st.plus_p(Ip)))
    r = _mod_p(cp, pp)
    out.append(Entry("wchi3", "1-2/(kappa-2) is a unit mod p", st.params(alpha_sign=sign, residue=r),
                     r not in (None, 0)))
    out += _surjectivity(st, ms, sign)
    return out


def check_wchi3_ledger(label, sign, kappa_u, kappa_plus, kappa_minus, p=23):
    """Run the ledger for u = t(2,1) or t(1,2)s.

    The sign +1 is computed on the chart itself; the sign -1 is transported
    through the conjugate chart, where alpha and -alpha trade places.
    """
    if label not in ("t21", "t12s"):
        raise ValueError("ledgers exist for t21 and t12s")
    if sign == 1:
        st = Setting(label, kappa_u, kappa_plus, kappa_minus, p)
    else:
        st = Setting(CONJUGATE_LABEL[label], kappa_u, kappa_plus, kappa_minus, p, frame=label)
    return wchi3_t21(st, sign) if label == "t21" else wchi3_t12s(st, sign)


# ---------------------------------------------------------------------------
# Gorenstein shape


def _lex(names):
    # chart variables in table order, p last
    return TermOrder("lex", priority=list(names) + ["p"])


def _is_hyperbolic(f):
    """x y + c p with x != y chart variables and c a nonzero constant."""
    if len(f.terms) != 2:
        return False
    ip = f.roster.index("p")
    mons = sorted(f.terms)
    pm = tuple(1 if i == ip else 0 for i in range(len(f.roster)))
    if pm not in f.terms:
        return False
    other = [m for m in mons if m != pm][0]
    return sum(other) == 2 and max(other) == 1 and other[ip] == 0


def _is_linear(f):
    return f.total_degree() == 1


def gorenstein_basis(label, kappa=9, p=23):
    """Reduced lex basis of the weight-(2,1) ideal of one gauge (symbol p)."""
    base = Base(p, symbolic=True)
    g = build_gauge(label, base, (2, 1))
    I = table_ideal(g, "21", kappa)
    return g, I, I.groebner(_lex(g.names))


def gorenstein_single(label, kappa=9, p=23):
    g, _, B = gorenstein_basis(label, kappa, p)
    return sorted(f.to_string(_lex(g.names)) for f in B)


def check_gorenstein_single(label, kappa=9, p=23):
    g, I, B = gorenstein_basis(label, kappa, p)
    order = _lex(g.names)
    listed = {f.monic(order) for f in I.gens}
    params = {"gauge": label, "p": p, "kappa": kappa, "basis": gorenstein_single(label, kappa, p)}
    out = [Entry("gorenstein", "reduced lex basis is the listed generator set", params, set(B) == listed)]
    hyper = sum(_is_hyperbolic(f) for f in B)
    linear = sum(_is_linear(f) for f in B)
    if label == "t12s":
        ok = hyper == 1 and linear == len(B) - 1
        out.append(Entry("gorenstein", "one hyperbolic relation xy+p, the rest linear", params, ok))
    else:
        out.append(Entry("gorenstein", "all generators linear", params, linear == len(B)))
    return out


def gorenstein_shape(labels, kappa=9, p=23):
    """Reduced lex basis of the weight-(2,1) ideal over a product of gauges.

    Returns (basis, number of hyperbolic generators, all others linear?).
    """
    base = Base(p, symbolic=True)
    names = []
    pieces = []
    for j, label in enumerate(labels):
        g = build_gauge(label, base, (2, 1))
        nm = ["%s_%d" % (x, j) for x in g.names]
        names += nm
        pieces.append((g, table_ideal(g, "21", kappa), dict(zip(g.names, nm))))
    roster = ("p",) + tuple(names)
    gens = [f.rename(ren).to_roster(roster) for _, I, ren in pieces for f in I.gens]
    B = Ideal(roster, gens).groebner(_lex(names))
    hyper = sum(_is_hyperbolic(f) for f in B)
    linear = all(_is_linear(f) or _is_hyperbolic(f) for f in B)
    return B, hyper, linear


def check_gorenstein(labels, kappa=9, p=23):
    B, hyper, ok = gorenstein_shape(labels, kappa, p)
    expected = sum(1 for x in labels if x == "t12s")
    return [Entry("gorenstein", "hyperbolic factors exactly at t(1,2)s components",
                  {"u": ";".join(labels), "p": p, "kappa": kappa, "basis_size": len(B)},
                  ok and hyper == expected, "" if ok and hyper == expected else
                  "hyperbolic=%d expected=%d" % (hyper, expected))]


# ---------------------------------------------------------------------------
# distortion lemmas


def linear_distortion_identity():
    """(d-b)x+(a-g)y+p(ad-bg) lies in both (x+pa, y+pb) and (x+pg, y+pd), symbolically."""
    roster = ("p", "x", "y", "a", "b", "c", "d")
    p, x, y, a, b, c, d = Polynomial.gens(roster)
    lhs = (d - b) * x + (a - c) * y + p * (a * d - b * c)
    r1 = (d - b) * (x + p * a) + (a - c) * (y + p * b)
    r2 = (d - b) * (x + p * c) + (a - c) * (y + p * d)
    return lhs == r1 and lhs == r2


def _rand_poly(rng, roster, names, coef=3):
    f = Polynomial.constant(roster, rng.randint(-coef, coef))
    for n in names:
        f = f + Polynomial.var(roster, n) * rng.randint(-coef, coef)
    return f


def linear_distortion_instance(rng):
    """Random (x+pa, y+pb) and (x+pc, y+pd); check (d-b)x+(a-c)y in (I1 cap I2, p)."""
    roster = ("p", "u", "w", "z")
    p = Polynomial.var(roster, "p")
    x = _rand_poly(rng, roster, ["u", "w"])
    y = _rand_poly(rng, roster, ["w", "z"])
    a, b, c, d = (_rand_poly(rng, roster, ["z"]) for _ in range(4))
    I1 = Ideal(roster, [x + p * a, y + p * b])
    I2 = Ideal(roster, [x + p * c, y + p * d])
    concl = (d - b) * x + (a - c) * y
    return member(concl, ideal_sum(ideal_intersect(I1, I2), Ideal(roster, [p])))


def intersection_distortion_instance(rng):
    """Triangular p-saturated ideals and p^2-perturbations of them.

    Returns (hypotheses hold, images of the two intersections in K/mK agree),
    with K = I1 + J1 and m = (p, x1, x2), the only point of V(K).
    """
    roster = ("p", "x1", "x2")
    p, x1, x2 = Polynomial.gens(roster)
    ca = rng.choice([1, 2, 3, -1, -2])
    cb = rng.choice([c for c in (1, 2, 3, -1, -2, 4) if c != ca])

    def tri(c):
        return [x1 + p * c, x2 + p * _rand_poly(rng, roster, ["x1"])]

    # triangular p^2-multiples keep the ideals p-saturated; a common shift of
    # the first generators keeps p in the sum
    shift = p * p * _rand_poly(rng, roster, ["p"], 2)

    def perturb(gens):
        return [gens[0] + shift, gens[1] + p * p * _rand_poly(rng, roster, ["x1"], 2)]

    I1g, J1g = tri(ca), tri(cb)
    I1, J1 = Ideal(roster, I1g), Ideal(roster, J1g)
    Ii, Ji = Ideal(roster, perturb(I1g)), Ideal(roster, perturb(J1g))
    K = ideal_sum(I1, J1)
    P2 = Ideal(roster, [p * p])
    hyp = (member(p, K) and member(p, ideal_sum(Ii, Ji))
           and ideal_equal(ideal_sum(I1, P2), ideal_sum(Ii, P2))
           and ideal_equal(ideal_sum(J1, P2), ideal_sum(Ji, P2))
           and all(ideal_contains(K, I) for I in (Ii, Ji)))
    mK = ideal_product(Ideal(roster, [p, x1, x2]), K)
    lhs = ideal_sum(ideal_intersect(I1, J1), mK)
    rhs = ideal_sum(ideal_intersect(Ii, Ji), mK)
    return hyp, ideal_equal(lhs, rhs)


def check_distortion_lemmas(trials=100, seed=0):
    rng = random.Random(seed)
    out = [Entry("distortion", "linear distortion identity", {}, linear_distortion_identity())]
    bad = [i for i in range(trials) if not linear_distortion_instance(rng)]
    out.append(Entry("distortion", "linear distortion", {"trials": trials, "seed": seed}, not bad,
                     "counterexamples at %s" % bad if bad else ""))
    bad_hyp, bad = [], []
    for i in range(trials):
        hyp, ok = intersection_distortion_instance(rng)
        if not hyp:
            bad_hyp.append(i)
        elif not ok:
            bad.append(i)
    out.append(Entry("distortion", "intersection distortion for two pairs of ideals", {"trials": trials, "seed": seed},
                     not bad and not bad_hyp,
                     ("counterexamples at %s " % bad if bad else "") +
                     ("hypotheses failed at %s" % bad_hyp if bad_hyp else "")))
    return out
