"""Extended affine Weyl group of GL2 over f embeddings.

A factor ``(flip, nu)`` stands for z*t_nu with z in S2 (``flip`` true for the
nontrivial element s) and t_nu = diag(v^nu1, v^nu2).  Factors are rendered in
translation-first form, e.g. ``t(1,2)s`` = t_(1,2)*s = s*t_(2,1).

The Bruhat order is the one attached to the opposite Borel: lengths are
measured from the base alcove -1 < x1 - x2 < 0.
"""

from itertools import product

ETA = (1, 0)


def _swap(nu):
    return (nu[1], nu[0])


class Factor:
    """One embedding component z*t_nu of an extended affine Weyl group element."""

    __slots__ = ("flip", "nu")

    def __init__(self, flip=False, nu=(0, 0)):
        self.flip = bool(flip)
        self.nu = (int(nu[0]), int(nu[1]))

    @classmethod
    def translation(cls, lam):
        return cls(False, lam)

    @classmethod
    def t_first(cls, lam, flip=False):
        """The element t_lam * s^flip."""
        lam = (int(lam[0]), int(lam[1]))
        return cls(flip, _swap(lam) if flip else lam)

    @classmethod
    def parse(cls, text):
        text = text.strip().replace(" ", "")
        if text in ("1", "e", "id"):
            return cls()
        if text == "s":
            return cls(True, (0, 0))
        if not text.startswith("t("):
            raise ValueError("cannot parse Weyl element %r" % text)
        close = text.index(")")
        a, b = text[2:close].split(",")
        rest = text[close + 1:]
        if rest not in ("", "s"):
            raise ValueError("cannot parse Weyl element %r" % text)
        return cls.t_first((int(a), int(b)), rest == "s")

    def translation_part(self):
        """lam with self = t_lam * s^flip."""
        return _swap(self.nu) if self.flip else self.nu

    def __mul__(self, other):
        nu1 = _swap(self.nu) if other.flip else self.nu
        return Factor(self.flip != other.flip, (nu1[0] + other.nu[0], nu1[1] + other.nu[1]))

    def inverse(self):
        nu = _swap(self.nu) if self.flip else self.nu
        return Factor(self.flip, (-nu[0], -nu[1]))

    def __eq__(self, other):
        return isinstance(other, Factor) and self.flip == other.flip and self.nu == other.nu

    def __hash__(self):
        return hash((self.flip, self.nu))

    def __lt__(self, other):
        return (self.omega(), length(self), str(self)) < (other.omega(), length(other), str(other))

    def __str__(self):
        lam = self.translation_part()
        return "t(%d,%d)%s" % (lam[0], lam[1], "s" if self.flip else "")

    __repr__ = __str__

    def omega(self):
        """Index of the coset of the affine Weyl group (the Omega-component)."""
        return self.nu[0] + self.nu[1]

    def h_shift(self):
        lam = self.translation_part()
        return lam[0] - lam[1]

    def matrix(self):
        """Monomial matrix as {(i, k): v-exponent} for the nonzero entries."""
        lam = self.translation_part()
        if self.flip:
            # t_lam * s
            return {(0, 1): lam[0], (1, 0): lam[1]}
        return {(0, 0): lam[0], (1, 1): lam[1]}


IDENTITY = Factor()
S = Factor(True, (0, 0))
# simple reflections of the affine Weyl group, walls of the base alcove (-1, 0)
S1 = Factor(True, (0, 0))           # reflection in x1 - x2 = 0
S0 = Factor.t_first((-1, 1), True)  # reflection in x1 - x2 = -1
SIMPLE = (S0, S1)


def length(x):
    """Number of walls separating the base alcove (-1, 0) from its image under x."""
    d = x.h_shift()
    return abs(d + 1) if x.flip else abs(d)


def length_zero_element(n):
    """The unique length-zero element in the coset with nu1 + nu2 = n."""
    if n % 2 == 0:
        return Factor(False, (n // 2, n // 2))
    return Factor.t_first(((n - 1) // 2, (n + 1) // 2), True)


def affine_part(x):
    """x * omega^{-1} in the affine Weyl group (omega the length-zero element of the coset)."""
    return x * length_zero_element(x.omega()).inverse()


def reduced_word(x):
    """Reduced word of the affine part of x in the letters 0, 1 (right descents peeled off)."""
    w = affine_part(x)
    word = []
    while length(w) > 0:
        for i, s in enumerate(SIMPLE):
            ws = w * s
            if length(ws) < length(w):
                word.append(i)
                w = ws
                break
        else:
            raise AssertionError("no descent found for %s" % w)
    word.reverse()
    return tuple(word)


def _bruhat_affine(x, y):
    lx, ly = length(x), length(y)
    if lx > ly:
        return False
    if ly == 0:
        return x == y
    for s in SIMPLE:
        ys = y * s
        if length(ys) < ly:
            xs = x * s
            if length(xs) < lx:
                return _bruhat_affine(xs, ys)
            return _bruhat_affine(x, ys)
    raise AssertionError("no descent for %s" % y)


def bruhat_leq(x, y):
    """Bruhat order on single-embedding factors; different Omega-cosets are incomparable."""
    if x.omega() != y.omega():
        return False
    return _bruhat_affine(affine_part(x), affine_part(y))


def word_element(word):
    w = IDENTITY
    for i in word:
        w = w * SIMPLE[i]
    return w


class AffineWeylElement:
    """Tuple of factors, one per embedding."""

    __slots__ = ("factors",)

    def __init__(self, factors):
        self.factors = tuple(factors)

    @classmethod
    def parse(cls, text):
        return cls(Factor.parse(t) for t in text.split(";"))

    @classmethod
    def identity(cls, f):
        return cls([IDENTITY] * f)

    @classmethod
    def translation(cls, lams):
        return cls(Factor.translation(l) for l in lams)

    @classmethod
    def flips(cls, flips):
        return cls(Factor(fl, (0, 0)) for fl in flips)

    def __len__(self):
        return len(self.factors)

    def __getitem__(self, j):
        return self.factors[j]

    def __mul__(self, other):
        if len(self.factors) != len(other.factors):
            raise ValueError("embedding counts differ")
        return AffineWeylElement(a * b for a, b in zip(self.factors, other.factors))

    def inverse(self):
        return AffineWeylElement(a.inverse() for a in self.factors)

    def __eq__(self, other):
        return isinstance(other, AffineWeylElement) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __str__(self):
        return ";".join(str(a) for a in self.factors)

    __repr__ = __str__


def root(j, f, sign=1):
    """The root +-alpha_j as a weight vector (tuple of pairs)."""
    return tuple((sign, -sign) if i == j else (0, 0) for i in range(f))


def roots(f):
    return [root(j, f, s) for j in range(f) for s in (1, -1)]


def translate(x, mu):
    """x * t_mu for a weight vector mu."""
    return x * AffineWeylElement.translation(mu)


# ---------------------------------------------------------------------------
# admissible sets


SUPPORTED_WEIGHTS = ((2, 1), (3, 0))


def _candidates(n, max_len):
    out = []
    for d in range(-max_len - 2, max_len + 3):
        if (d - n) % 2:
            continue
        lam = ((n + d) // 2, (n - d) // 2)
        for flip in (False, True):
            x = Factor.t_first(lam, flip)
            if length(x) <= max_len:
                out.append(x)
    return out


def admissible_factor_set(lam):
    lam = (int(lam[0]), int(lam[1]))
    if lam[0] < lam[1]:
        raise ValueError("weight %r is not dominant" % (lam,))
    tops = {Factor.translation(lam), Factor.translation(_swap(lam))}
    max_len = max(length(t) for t in tops)
    return frozenset(x for x in _candidates(lam[0] + lam[1], max_len)
                     if any(bruhat_leq(x, t) for t in tops))


def admissible_set(lams):
    """Adm(lambda) per embedding, as a list of sets (the product is the admissible set)."""
    out = []
    for lam in lams:
        lam = tuple(lam)
        if lam not in SUPPORTED_WEIGHTS and lam != (0, 0):
            raise ValueError("unsupported weight %r" % (lam,))
        out.append(admissible_factor_set(lam))
    return out


def adm_rho(lams, shape):
    """Admissible sets filtered by the nontrivial unipotent flags of ``shape``."""
    out = []
    for j, lam in enumerate(lams):
        lam = tuple(lam)
        if lam not in SUPPORTED_WEIGHTS:
            raise ValueError("unsupported weight %r" % (lam,))
        full = admissible_factor_set(lam)
        if shape.nilpotent[j]:
            banned = Factor.translation(_swap(lam))
            full = frozenset(x for x in full if x != banned)
        out.append(full)
    return out


def in_product(x, sets):
    return all(a in s for a, s in zip(x.factors, sets))


def product_elements(sets):
    return [AffineWeylElement(c) for c in product(*[sorted(s) for s in sets])]


# ---------------------------------------------------------------------------
# rho-bar shapes, lowest alcove data


def pairing(nu):
    """<nu, alpha^vee> for a pair."""
    return nu[0] - nu[1]


def is_deep(nu, p, m):
    """m < <nu + eta, alpha_j^vee> < p - m at every embedding."""
    return all(m < pairing((a + ETA[0], b + ETA[1])) < p - m for a, b in nu)


class RhoBarShape:
    """Combinatorial shadow of a mod p representation: N flags and a presentation (w, mu)."""

    __slots__ = ("nilpotent", "reducible", "wflips", "mu", "depth")

    def __init__(self, nilpotent, mu, wflips=None, reducible=None, depth=0):
        self.nilpotent = tuple(bool(n) for n in nilpotent)
        f = len(self.nilpotent)
        self.mu = tuple((int(a), int(b)) for a, b in mu)
        if len(self.mu) != f:
            raise ValueError("mu needs one pair per embedding")
        self.wflips = tuple(bool(x) for x in (wflips or (False,) * f))
        if reducible is None:
            reducible = any(self.nilpotent)
        self.reducible = bool(reducible)
        if any(self.nilpotent) and not self.reducible:
            raise ValueError("a nontrivial unipotent part forces rho-bar to be reducible")
        if self.reducible and any(self.wflips):
            raise ValueError("the Weyl part must be trivial when rho-bar is reducible")
        self.depth = int(depth)

    @property
    def f(self):
        return len(self.nilpotent)

    def check_depth(self, p):
        return is_deep(self.mu, p, self.depth)

    def w_star(self, p=None):
        if p is not None and not self.check_depth(p):
            raise ValueError("mu is not %d-deep for p=%d" % (self.depth, p))
        return w_star(self.wflips, self.mu)


def w_star(wflips, nu, p=None, depth=0):
    """w^{-1} t_{nu+eta} for a presentation (w, nu)."""
    nu = tuple((int(a), int(b)) for a, b in nu)
    if p is not None and not is_deep(nu, p, depth):
        raise ValueError("presentation is not %d-deep in the lowest alcove" % depth)
    w = AffineWeylElement.flips(wflips)
    return w.inverse() * AffineWeylElement.translation([(a + ETA[0], b + ETA[1]) for a, b in nu])


def w_star_rho_tau(shape, wflips, nu, p=None, depth=0):
    """w*(rhobar) * w*(tau)^{-1}."""
    return shape.w_star() * w_star(wflips, nu, p, depth).inverse()


def lifts_rho(shape, wflips, nu, lams, p=None, depth=0):
    """Predicate: w*(rhobar, tau)_j lies in the filtered admissible set at every embedding."""
    x = w_star_rho_tau(shape, wflips, nu, p, depth)
    return in_product(x, adm_rho(lams, shape))


def hypercube_check(shape):
    """Enumerate both hypercube properties of the filtered (2,1)-admissible set.

    Returns a list of (name, parameters, ok) tuples.
    """
    f = shape.f
    sets = adm_rho([(2, 1)] * f, shape)
    results = []
    rts = roots(f)
    for u in product_elements(sets):
        for a in rts:
            x = translate(u, tuple((2 * x1, 2 * x2) for x1, x2 in a))
            results.append(("double-root", {"u": str(u), "alpha": a}, not in_product(x, sets)))
        for a1 in rts:
            for a2 in rts:
                j1 = next(i for i, v in enumerate(a1) if v != (0, 0))
                j2 = next(i for i, v in enumerate(a2) if v != (0, 0))
                if j1 >= j2:
                    continue
                both = tuple((x[0] + y[0], x[1] + y[1]) for x, y in zip(a1, a2))
                if in_product(translate(u, both), sets):
                    ok = in_product(translate(u, a1), sets) and in_product(translate(u, a2), sets)
                else:
                    ok = True
                results.append(("independent-pair", {"u": str(u), "alpha1": a1, "alpha2": a2}, ok))
    return results


def all_shapes(f):
    """Every assignment of unipotent flags at f embeddings (mu is irrelevant here)."""
    return [RhoBarShape(flags, [(0, 0)] * f) for flags in product((False, True), repeat=f)]
