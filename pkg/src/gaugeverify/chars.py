"""Characters of the finite torus, tame inertial types and their bookkeeping.

Weights are tuples of f pairs; index k is the embedding j0 composed with the
k-th power of Frobenius.  The Frobenius on weights is (F mu)_k = p * mu_{k+1};
twisted by w it becomes Phi_w = F o w^{-1}.
"""

from collections import Counter
from itertools import combinations, product
from math import comb

from .weyl import ETA, is_deep, root


def _swap(pair):
    return (pair[1], pair[0])


def phi(mu, wflips, p):
    """Phi_w(mu) = F(w^{-1} mu)."""
    f = len(mu)
    out = []
    for k in range(f):
        nxt = (k + 1) % f
        pair = _swap(mu[nxt]) if wflips[nxt] else mu[nxt]
        out.append((p * pair[0], p * pair[1]))
    return tuple(out)


def orbit_length(wflips):
    """Order of the coordinate permutation underlying Phi_w."""
    f = len(wflips)
    return f if sum(wflips) % 2 == 0 else 2 * f


def tau_exponents(wflips, mu, p):
    """(d, (e1, e2)): j0-component of sum_{i<d} Phi_w^i(mu), reduced mod p^d - 1."""
    f = len(mu)
    d = orbit_length(wflips)
    mod = p ** d - 1
    e1 = e2 = 0
    swapped = False
    for k in range(d):
        if k > 0 and wflips[k % f]:
            swapped = not swapped
        a, b = mu[k % f]
        if swapped:
            a, b = b, a
        e1 += p ** k * a
        e2 += p ** k * b
    return d, (e1 % mod, e2 % mod)


def ordered_exponents(wflips, mu, p):
    """Exponents of the two characters as powers of the level-2f fundamental character."""
    f = len(mu)
    q = p ** f
    d, (e1, e2) = tau_exponents(wflips, mu, p)
    mod = q * q - 1
    if d == f:
        e1, e2 = e1 * (q + 1), e2 * (q + 1)
    return (e1 % mod, e2 % mod)


def type_exponents(wflips, mu, p):
    """The type as a sorted pair of exponents (types are multisets of characters)."""
    return tuple(sorted(ordered_exponents(wflips, mu, p)))


def tau(wflips, nu, p):
    """Type of tau(w, nu + eta)."""
    return type_exponents(wflips, tuple((a + ETA[0], b + ETA[1]) for a, b in nu), p)


def _add(mu, nu, scale=1):
    return tuple((a + scale * c, b + scale * d) for (a, b), (c, d) in zip(mu, nu))


class CharacterClass:
    """A character of the finite torus of H, i.e. a class of X^*(T) modulo (Phi - 1).

    ``split`` tori are products of two copies of F_q^x and the class is a pair
    of residues mod q-1; otherwise the torus is F_{q^2}^x and the class is a
    single residue mod q^2-1.
    """

    __slots__ = ("p", "f", "split", "residues")

    def __init__(self, p, f, split, residues):
        self.p, self.f, self.split = p, f, split
        self.residues = tuple(residues)

    @property
    def modulus(self):
        q = self.p ** self.f
        return q - 1 if self.split else q * q - 1

    def __eq__(self, other):
        return (isinstance(other, CharacterClass) and (self.p, self.f, self.split) ==
                (other.p, other.f, other.split) and self.residues == other.residues)

    def __hash__(self):
        return hash((self.p, self.f, self.split, self.residues))

    def __mul__(self, other):
        m = self.modulus
        return CharacterClass(self.p, self.f, self.split,
                              tuple((a + b) % m for a, b in zip(self.residues, other.residues)))

    def __repr__(self):
        return "chi%s" % (self.residues,)

    def is_regular(self):
        q = self.p ** self.f
        if self.split:
            return self.residues[0] != self.residues[1]
        r = self.residues[0]
        return r != (q * r) % self.modulus

    def conjugate(self):
        """Frobenius conjugate representative (the other choice of embedding of F_{q^2})."""
        if self.split:
            return self
        q = self.p ** self.f
        return CharacterClass(self.p, self.f, False, ((q * self.residues[0]) % self.modulus,))


def char_class(mu, p, split=True, conjugate=False):
    """Class of the weight mu for the split torus or for w_H = s at embedding j0."""
    mu = tuple((int(a), int(b)) for a, b in mu)
    f = len(mu)
    if split:
        _, (e1, e2) = tau_exponents((False,) * f, mu, p)
        out = CharacterClass(p, f, True, (e1, e2))
    else:
        wflips = (True,) + (False,) * (f - 1)
        _, (e1, _) = tau_exponents(wflips, mu, p)
        out = CharacterClass(p, f, False, (e1,))
    return out.conjugate() if conjugate else out


def root_class(j, f, p, split=True, sign=1, conjugate=False):
    return char_class(root(j, f, sign), p, split, conjugate)


def _small_vectors(f, bound):
    rng = range(-bound, bound + 1)
    return [n for n in product(rng, repeat=f) if any(n)]


def check_products_of_embeddings(p, f, split=True, bound=2):
    """Look for nonzero n in {-bound..bound}^f with prod alpha_j^{n_j} trivial.

    Returns the list of violating vectors (empty when the lemma holds).
    """
    bad = []
    for n in _small_vectors(f, bound):
        mu = tuple((k, -k) for k in n)
        c = char_class(mu, p, split)
        if all(r == 0 for r in c.residues):
            bad.append(n)
    return bad


def graded_pieces(chi, f, p, split=True, conjugate=False):
    """Characters on the degree 0, 1, 2 pieces of the graded ring, as Counters.

    Degree 1 carries chi*alpha for the 2f roots; degree 2 carries chi*alpha^2 and
    chi*alpha*beta (alpha != beta, not opposite), plus f copies of chi from
    alpha*alpha^{-1} and f more from the torus directions.
    """
    rts = [root_class(j, f, p, split, s, conjugate) for j in range(f) for s in (1, -1)]
    deg0 = Counter([chi])
    deg1 = Counter(chi * a for a in rts)
    deg2 = Counter()
    for a in rts:
        deg2[chi * a * a] += 1
    for i, k in combinations(range(len(rts)), 2):
        # opposite roots sit next to each other
        if i // 2 == k // 2:
            deg2[chi] += 1
        else:
            deg2[chi * rts[i] * rts[k]] += 1
    deg2[chi] += f
    return deg0, deg1, deg2


def graded_sizes(f):
    """Expected dimensions of the degree 0, 1, 2 pieces."""
    return 1, 2 * f, 2 * f + comb(2 * f, 2) + f


def pbw_count(f):
    """Monomials of weight <= 2 in 2f weight-one and f weight-two generators."""
    n1, n2 = 2 * f, f
    return 1 + n1 + comb(n1 + 1, 2) + n2


def multiplicity_audit(chi, f, p, split=True, conjugate=False):
    """Multiplicity statements about the graded pieces.

    Returns a dict of named booleans.
    """
    deg0, deg1, deg2 = graded_pieces(chi, f, p, split, conjugate)
    total = deg0 + deg1 + deg2
    sizes = tuple(sum(d.values()) for d in (deg0, deg1, deg2))
    out = {
        "sizes": sizes == graded_sizes(f),
        "pbw": sum(sizes) == pbw_count(f),
        "chi_isotypic_degree2": deg2[chi] == 2 * f,
        "degree2_rest_multiplicity_free": all(m == 1 for c, m in deg2.items() if c != chi),
        "chi_alpha_multiplicity_one": all(total[c] == 1 for c in deg1),
    }
    return out


# ---------------------------------------------------------------------------
# the shift lemma relating presentations of a type


def _flip_parity(wflips):
    return sum(wflips) % 2 == 1


def matching_weight(wflips, nu, p, split):
    """A weight mu supported at j0 with tau(w_H, mu) isomorphic to tau(w, nu + eta)."""
    f = len(nu)
    if _flip_parity(wflips) == split:
        raise ValueError("the Weyl part does not match the torus type")
    mu_eta = _add(nu, [ETA] * f)
    d, (e1, e2) = tau_exponents(wflips, mu_eta, p)
    rest = [(0, 0)] * (f - 1)
    mu = tuple([(e1, e2)] + rest) if split else tuple([(e1, 0)] + rest)
    wh = (False,) * f if split else (True,) + (False,) * (f - 1)
    if type_exponents(wh, mu, p) != type_exponents(wflips, mu_eta, p):
        raise AssertionError("failed to match type exponents")
    return mu


def inertial_jl_shift(wflips, nu, alpha, p, split, depth=0):
    """Find the sign eps with tau(w, nu + eta + eps*alpha) ~ tau(w_H, mu + alpha).

    ``alpha`` is a weight vector (zero or a root).  Returns (eps, certificate).
    """
    f = len(nu)
    mu = matching_weight(wflips, nu, p, split)
    wh = (False,) * f if split else (True,) + (False,) * (f - 1)
    target = type_exponents(wh, _add(mu, alpha), p)
    chi = char_class(mu, p, split)
    cert = {"mu": mu, "chi": chi.residues, "regular": chi.is_regular(), "target": target}
    if not any(a or b for a, b in alpha):
        cert["candidates"] = {1: tau(wflips, nu, p)}
        cert["matches"] = [1] if cert["candidates"][1] == target else []
        if not cert["matches"]:
            raise AssertionError("trivial shift does not preserve the type")
        return 1, cert
    good = []
    cands = {}
    for eps in (1, -1):
        shifted = _add(nu, alpha, eps)
        cands[eps] = tau(wflips, shifted, p)
        if cands[eps] == target and is_deep(shifted, p, depth):
            good.append(eps)
    cert["candidates"] = cands
    cert["matches"] = good
    cert["alpha_signs"] = _alpha_signs(wh, wflips, mu, nu, alpha, p)
    if cert["alpha_signs"] != good:
        raise ValueError("root-level signs %r disagree with type-level signs %r"
                         % (cert["alpha_signs"], good))
    if len(good) != 1:
        raise ValueError("expected exactly one sign, got %r" % (good,))
    return good[0], cert


def _alpha_signs(wh, wflips, mu, nu, alpha, p):
    """Signs eps with tau(w_H, alpha) = tau(w, alpha)^eps, read in the orientation matching mu to nu."""
    f = len(nu)
    q2 = p ** (2 * f) - 1
    left = ordered_exponents(wh, mu, p)
    right = ordered_exponents(wflips, _add(nu, [ETA] * f), p)
    orient = [o for o in (False, True) if left == (right[::-1] if o else right)]
    a_h = ordered_exponents(wh, alpha, p)
    a_w = ordered_exponents(wflips, alpha, p)
    signs = []
    for eps in (1, -1):
        cand = tuple((eps * x) % q2 for x in a_w)
        if any(a_h == (cand[::-1] if o else cand) for o in orient):
            signs.append(eps)
    return signs


def random_presentation(rng, p, f, split, margin=3):
    """A random (w, nu) with nu + eta well inside the lowest alcove and matching torus type."""
    while True:
        wflips = tuple(rng.random() < 0.5 for _ in range(f))
        if _flip_parity(wflips) != split:
            break
    nu = []
    for _ in range(f):
        h = rng.randint(margin, p - margin) - 1
        c = rng.randint(-3, 3)
        nu.append((c + h, c))
    return wflips, tuple(nu)
