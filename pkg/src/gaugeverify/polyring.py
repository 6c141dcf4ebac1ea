"""Exact multivariate polynomials over Q and ideal operations.

Polynomials carry an explicit roster (ordered tuple of variable names) and a
sparse map from exponent tuples to ``Fraction`` coefficients.  Ideals cache
reduced Groebner bases per term order.  Everything is immutable once built.
"""

import heapq
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

Rational = Fraction


class RosterMismatch(ValueError):
    pass


def _coerce_coeff(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    raise TypeError("unsupported coefficient type %r" % type(c).__name__)


class Polynomial:
    """Sparse polynomial over Q in a fixed roster of variables."""

    __slots__ = ("roster", "terms", "_hash")

    def __init__(self, roster, terms=None):
        self.roster = tuple(roster)
        n = len(self.roster)
        clean = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n or any(e < 0 for e in m):
                    raise ValueError("bad exponent vector %r for roster %r" % (m, self.roster))
                c = _coerce_coeff(c)
                if c:
                    clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, roster, terms):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.roster = roster
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, roster, c):
        roster = tuple(roster)
        c = _coerce_coeff(c)
        return cls._raw(roster, {(0,) * len(roster): c} if c else {})

    @classmethod
    def zero(cls, roster):
        return cls._raw(tuple(roster), {})

    @classmethod
    def var(cls, roster, name):
        roster = tuple(roster)
        i = roster.index(name)
        m = [0] * len(roster)
        m[i] = 1
        return cls._raw(roster, {tuple(m): Fraction(1)})

    @classmethod
    def gens(cls, roster):
        roster = tuple(roster)
        return tuple(cls.var(roster, x) for x in roster)

    # -- basic predicates -------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return self.terms.get((0,) * len(self.roster), Fraction(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, name):
        i = self.roster.index(name)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def variables(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.roster[i])
        return tuple(x for x in self.roster if x in used)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.roster != self.roster:
                raise RosterMismatch("rosters differ: %r vs %r" % (self.roster, other.roster))
            return other
        return Polynomial.constant(self.roster, other)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.roster, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.roster, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _coerce_coeff(other)
            if not c:
                return Polynomial.zero(self.roster)
            return Polynomial._raw(self.roster, {m: c * a for m, a in self.terms.items()})
        other = self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.roster, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("division only by nonzero constants")
            other = other.constant_value()
        c = _coerce_coeff(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self * (1 / c)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.roster, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            if other.roster != self.roster:
                raise RosterMismatch("rosters differ: %r vs %r" % (self.roster, other.roster))
            return self.terms == other.terms
        try:
            c = _coerce_coeff(other)
        except TypeError:
            return NotImplemented
        return self.terms == ({(0,) * len(self.roster): c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.roster, frozenset(self.terms.items())))
        return self._hash

    # -- structure --------------------------------------------------------
    def coefficient(self, monomial):
        return self.terms.get(tuple(monomial), Fraction(0))

    def leading(self, order):
        """Leading (monomial, coefficient) under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.key(self.roster)
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def monic(self, order):
        _, c = self.leading(order)
        return self * (1 / c)

    def sorted_terms(self, order):
        key = order.key(self.roster)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def divide_by_var(self, name):
        """Exact division by a variable; None if not divisible."""
        i = self.roster.index(name)
        out = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                return None
            mm = list(m)
            mm[i] -= 1
            out[tuple(mm)] = c
        return Polynomial._raw(self.roster, out)

    def coefficients_in(self, name):
        """Return {e: coefficient polynomial} viewing self as a polynomial in ``name``."""
        i = self.roster.index(name)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            mm = m[:i] + (0,) + m[i + 1:]
            out.setdefault(e, {})[mm] = c
        return {e: Polynomial._raw(self.roster, t) for e, t in out.items()}

    # -- change of ring ---------------------------------------------------
    def to_roster(self, roster):
        """Reinterpret in a different roster containing every used variable."""
        roster = tuple(roster)
        if roster == self.roster:
            return self
        pos = {x: i for i, x in enumerate(roster)}
        idx = []
        for i, x in enumerate(self.roster):
            idx.append(pos.get(x))
        n = len(roster)
        out = {}
        for m, c in self.terms.items():
            mm = [0] * n
            for i, e in enumerate(m):
                if e:
                    j = idx[i]
                    if j is None:
                        raise RosterMismatch("variable %s missing from target roster" % self.roster[i])
                    mm[j] = e
            out[tuple(mm)] = c
        return Polynomial._raw(roster, out)

    def rename(self, mapping, roster=None):
        """Rename variables by ``mapping`` (old name -> new name)."""
        new_roster = tuple(mapping.get(x, x) for x in self.roster)
        if len(set(new_roster)) != len(new_roster):
            raise ValueError("renaming is not injective")
        p = Polynomial._raw(new_roster, dict(self.terms))
        return p.to_roster(roster) if roster is not None else p

    def substitute(self, mapping, target_roster=None):
        return substitute(self, mapping, target_roster)

    def evaluate(self, values):
        """Evaluate at rational values for every variable of the roster."""
        total = Fraction(0)
        vals = [_coerce_coeff(values[x]) for x in self.roster]
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t *= v ** e
            total += t
        return total

    # -- printing ---------------------------------------------------------
    def _mono_str(self, m, power="^"):
        parts = []
        for x, e in zip(self.roster, m):
            if e == 1:
                parts.append(x)
            elif e:
                parts.append("%s%s%d" % (x, power, e))
        return "*".join(parts)

    def to_string(self, order=None):
        if not self.terms:
            return "0"
        order = order or GREVLEX
        out = []
        for m, c in self.sorted_terms(order):
            mono = self._mono_str(m)
            if not mono:
                s = str(abs(c))
            elif abs(c) == 1:
                s = mono
            else:
                s = "%s*%s" % (abs(c), mono)
            if not out:
                out.append(("-" if c < 0 else "") + s)
            else:
                out.append(("- " if c < 0 else "+ ") + s)
        return " ".join(out)

    def canonical(self, order):
        """Canonical dump line: coefficients as num/den, monomials as var^e."""
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms(order):
            mono = "*".join("%s^%d" % (x, e) for x, e in zip(self.roster, m) if e)
            coef = "%d/%d" % (c.numerator, c.denominator)
            parts.append(coef + ("*" + mono if mono else ""))
        return " + ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return "Polynomial(%s)" % self.to_string()


def poly_ring(names):
    """Return (roster, generators) for a list/space-separated string of names."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    roster = tuple(names)
    if len(set(roster)) != len(roster):
        raise ValueError("duplicate variable names in roster")
    return roster, Polynomial.gens(roster)


# ---------------------------------------------------------------------------
# term orders


class TermOrder:
    """Monomial order: ``lex``, ``grevlex``, or a block order of grevlex blocks.

    ``priority`` optionally lists variable names from most to least significant;
    variables of the roster not listed keep their roster order after the listed
    ones.  ``blocks`` (elimination orders) is a tuple of name tuples; monomials
    are compared block by block, grevlex inside each block, and unlisted
    variables form a trailing block.
    """

    __slots__ = ("kind", "priority", "blocks", "_cache")

    def __init__(self, kind="grevlex", priority=None, blocks=None):
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError("unknown term order %r" % kind)
        if kind == "block" and not blocks:
            raise ValueError("block order needs blocks")
        self.kind = kind
        self.priority = tuple(priority) if priority else None
        self.blocks = tuple(tuple(b) for b in blocks) if blocks else None
        self._cache = {}

    def __eq__(self, other):
        return (isinstance(other, TermOrder) and self.kind == other.kind
                and self.priority == other.priority and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.kind, self.priority, self.blocks))

    def __repr__(self):
        if self.kind == "block":
            return "TermOrder(block, %r)" % (self.blocks,)
        if self.priority:
            return "TermOrder(%s, %r)" % (self.kind, self.priority)
        return "TermOrder(%s)" % self.kind

    def describe(self):
        if self.kind == "block":
            return "block[" + " | ".join(",".join(b) for b in self.blocks) + "]"
        if self.priority:
            return "%s[%s]" % (self.kind, ",".join(self.priority))
        return self.kind

    def _perm(self, roster, names):
        pos = {x: i for i, x in enumerate(roster)}
        listed = [pos[x] for x in names if x in pos]
        seen = set(listed)
        return listed + [i for i in range(len(roster)) if i not in seen]

    def key(self, roster):
        k = self._cache.get(roster)
        if k is not None:
            return k
        if self.kind == "block":
            pos = {x: i for i, x in enumerate(roster)}
            groups = [[pos[x] for x in b if x in pos] for b in self.blocks]
            seen = {i for g in groups for i in g}
            rest = [i for i in range(len(roster)) if i not in seen]
            if rest:
                groups.append(rest)
            groups = [tuple(g) for g in groups if g]

            def k(m, groups=groups):
                out = []
                for g in groups:
                    sub = [m[i] for i in g]
                    out.append(sum(sub))
                    out.extend(-e for e in reversed(sub))
                return tuple(out)
        else:
            perm = self._perm(roster, self.priority or ())
            identity = perm == list(range(len(roster)))
            if self.kind == "lex":
                if identity:
                    def k(m):
                        return m
                else:
                    def k(m, perm=perm):
                        return tuple(m[i] for i in perm)
            else:
                rperm = tuple(reversed(perm))

                def k(m, rperm=rperm):
                    return (sum(m),) + tuple(-m[i] for i in rperm)
        memo = {}

        def cached(m, k=k, memo=memo):
            v = memo.get(m)
            if v is None:
                v = memo[m] = k(m)
            return v
        self._cache[roster] = cached
        return cached


LEX = TermOrder("lex")
GREVLEX = TermOrder("grevlex")


def elimination_order(eliminate, keep_priority=None):
    """Block order with the variables in ``eliminate`` ranked above all others."""
    blocks = (tuple(eliminate),)
    if keep_priority:
        blocks = blocks + (tuple(keep_priority),)
    return TermOrder("block", blocks=blocks)


# ---------------------------------------------------------------------------
# Buchberger over dict polynomials (internal)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _mdiv(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _lead(f, key):
    return max(f, key=key)


def _reduce(f, basis, key, full=True):
    """Remainder of dict polynomial ``f`` modulo ``basis`` (list of (lm, poly), monic)."""
    f = dict(f)
    rem = {}
    # max-heap of monomials of f; stale entries are skipped on pop
    heap = [(_neg(key(m)), m) for m in f]
    heapq.heapify(heap)
    seen = set(f)
    while heap:
        _, m = heapq.heappop(heap)
        seen.discard(m)
        c = f.get(m)
        if c is None:
            continue
        for lm, g in basis:
            if _divides(lm, m):
                q = _mdiv(m, lm)
                for gm, gc in g.items():
                    t = tuple(a + b for a, b in zip(gm, q))
                    v = f.get(t, 0) - c * gc
                    if v:
                        f[t] = v
                        if t not in seen:
                            seen.add(t)
                            heapq.heappush(heap, (_neg(key(t)), t))
                    else:
                        del f[t]
                break
        else:
            rem[m] = c
            del f[m]
            if not full:
                rem.update(f)
                return rem
    return rem


def _neg(k):
    return tuple(-x for x in k)


def _spoly_int(f, lf, g, lg):
    """a_g x^(l-lf) f - a_f x^(l-lg) g with a the leading coefficients."""
    l = _lcm(lf, lg)
    qf = _mdiv(l, lf)
    qg = _mdiv(l, lg)
    af, ag = f[lf], g[lg]
    d = gcd(af, ag)
    af, ag = af // d, ag // d
    out = {}
    for m, c in f.items():
        out[tuple(a + b for a, b in zip(m, qf))] = ag * c
    for m, c in g.items():
        t = tuple(a + b for a, b in zip(m, qg))
        v = out.get(t, 0) - af * c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _update(G, LM, pairs, h, lh):
    """Gebauer-Moeller pair update after adding h (index len(G))."""
    new_index = len(G)
    # pairs (i, new): drop pairs whose lcm is a proper multiple of another new lcm
    cands = {}
    for i, lm in enumerate(LM):
        if lm is None:
            continue
        cands[i] = _lcm(lm, lh)
    # chain criterion among new pairs
    items = list(cands.items())
    keep = []
    for i, l in items:
        coprime = all(a == 0 or b == 0 for a, b in zip(LM[i], lh))
        keep.append((i, l, coprime))
    # remove pairs whose lcm is divisible (properly) by another candidate's lcm
    pruned = []
    for idx, (i, l, cop) in enumerate(keep):
        dominated = False
        for jdx, (j, l2, _) in enumerate(keep):
            if jdx != idx and _divides(l2, l) and l2 != l:
                dominated = True
                break
        if not dominated:
            pruned.append((i, l, cop))
    # among equal lcms keep one; if any of them coprime, drop all
    by_lcm = {}
    for i, l, cop in pruned:
        by_lcm.setdefault(l, []).append((i, cop))
    fresh = set()
    for l, lst in by_lcm.items():
        if any(cop for _, cop in lst):
            continue
        fresh.add((min(i for i, _ in lst), new_index))
    # old pairs: drop (i, j) if lh | lcm(i, j) and lcm differs from both new lcms
    kept_old = set()
    for (i, j) in pairs:
        lij = _lcm(LM[i], LM[j])
        if (_divides(lh, lij) and lij != _lcm(LM[i], lh) and lij != _lcm(LM[j], lh)):
            continue
        kept_old.add((i, j))
    G.append(h)
    LM.append(lh)
    return kept_old | fresh


def _primitive(f, key=None):
    """Integer polynomial with coprime coefficients and positive leading coefficient."""
    den = 1
    for c in f.values():
        if not isinstance(c, int):
            d = c.denominator
            den = den * d // gcd(den, d)
    g = {m: int(c * den) for m, c in f.items()}
    cont = 0
    for c in g.values():
        cont = gcd(cont, c)
        if cont == 1:
            break
    if key is not None and g[_lead(g, key)] < 0:
        cont = -cont
    if cont != 1:
        g = {m: c // cont for m, c in g.items()}
    return g


def _reduce_int(f, basis, key, full=True):
    """Fraction-free remainder: some nonzero integer multiple of f reduced by ``basis``.

    ``basis`` holds (lm, g, lc) with g an integer polynomial of leading coefficient lc.
    """
    f = dict(f)
    rem = {}
    heap = [(_neg(key(m)), m) for m in f]
    heapq.heapify(heap)
    seen = set(f)
    while heap:
        _, m = heapq.heappop(heap)
        seen.discard(m)
        c = f.get(m)
        if c is None:
            continue
        for lm, g, a in basis:
            if _divides(lm, m):
                d = gcd(a, c)
                sf, sg = a // d, c // d
                if sf != 1:
                    for t in f:
                        f[t] *= sf
                    for t in rem:
                        rem[t] *= sf
                q = _mdiv(m, lm)
                for gm, gc in g.items():
                    t = tuple(x + y for x, y in zip(gm, q))
                    v = f.get(t, 0) - sg * gc
                    if v:
                        f[t] = v
                        if t not in seen:
                            seen.add(t)
                            heapq.heappush(heap, (_neg(key(t)), t))
                    else:
                        del f[t]
                break
        else:
            rem[m] = c
            del f[m]
            if not full:
                rem.update(f)
                break
    return _primitive(rem, key) if rem else rem


def _to_monic(g, key):
    a = g[_lead(g, key)]
    return {m: Fraction(c, a) for m, c in g.items()}


def _buchberger(polys, key):
    """Reduced monic basis as (lm, poly) pairs; works on primitive integer polynomials."""
    G, LM = [], []
    pairs = set()
    basis = []
    # feed generators in a deterministic order (by leading monomial)
    start = [_primitive(f, key) for f in polys if f]
    start.sort(key=lambda f: key(_lead(f, key)))
    for f in start:
        r = _reduce_int(f, basis, key)
        if not r:
            continue
        lr = _lead(r, key)
        pairs = _update(G, LM, pairs, r, lr)
        basis.append((lr, r, r[lr]))
    while pairs:
        i, j = min(pairs, key=lambda pr: (key(_lcm(LM[pr[0]], LM[pr[1]])), pr))
        pairs.discard((i, j))
        s = _spoly_int(G[i], LM[i], G[j], LM[j])
        r = _reduce_int(s, basis, key)
        if not r:
            continue
        lr = _lead(r, key)
        pairs = _update(G, LM, pairs, r, lr)
        basis.append((lr, r, r[lr]))
    # minimalize and interreduce
    items = sorted(zip(LM, G), key=lambda t: key(t[0]))
    minimal = []
    for lm, g in items:
        if any(_divides(l2, lm) for l2, _ in minimal):
            continue
        minimal = [(l2, g2) for l2, g2 in minimal if not _divides(lm, l2)]
        minimal.append((lm, g))
    reduced = []
    for idx, (lm, g) in enumerate(minimal):
        others = [(l2, g2, g2[l2]) for l2, g2 in minimal[:idx] + minimal[idx + 1:]]
        r = _reduce_int(g, others, key)
        reduced.append((lm, _to_monic(r, key)))
    reduced.sort(key=lambda t: key(t[0]), reverse=True)
    return reduced


# ---------------------------------------------------------------------------
# Groebner bases and ideals


class GroebnerBasis:
    """Reduced Groebner basis of an ideal for a fixed order."""

    __slots__ = ("roster", "order", "polys", "_pairs", "_key")

    def __init__(self, roster, order, pairs):
        self.roster = roster
        self.order = order
        self._key = order.key(roster)
        self._pairs = pairs
        self.polys = tuple(Polynomial._raw(roster, g) for _, g in pairs)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def is_unit(self):
        return len(self.polys) == 1 and self.polys[0].is_constant()

    def reduce(self, f):
        if f.roster != self.roster:
            raise RosterMismatch("rosters differ: %r vs %r" % (f.roster, self.roster))
        return Polynomial._raw(self.roster, _reduce(f.terms, self._pairs, self._key))

    def contains(self, f):
        return not self.reduce(f).terms

    def leading_monomials(self):
        return tuple(lm for lm, _ in self._pairs)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.roster == other.roster
                and self.order == other.order and self.polys == other.polys)

    def __hash__(self):
        return hash((self.roster, self.order, self.polys))

    def __repr__(self):
        return "GroebnerBasis([%s])" % ", ".join(str(g) for g in self.polys)


class Ideal:
    """Ideal given by generators in a roster, with cached Groebner bases."""

    __slots__ = ("roster", "gens", "_gb")

    def __init__(self, roster, gens=()):
        self.roster = tuple(roster)
        checked = []
        for g in gens:
            if not isinstance(g, Polynomial):
                g = Polynomial.constant(self.roster, g)
            if g.roster != self.roster:
                raise RosterMismatch("generator %s lives in %r, ideal in %r" % (g, g.roster, self.roster))
            if g:
                checked.append(g)
        self.gens = tuple(checked)
        self._gb = {}

    def groebner(self, order=None):
        order = order or GREVLEX
        gb = self._gb.get(order)
        if gb is None:
            key = order.key(self.roster)
            pairs = _buchberger([g.terms for g in self.gens], key)
            gb = GroebnerBasis(self.roster, order, pairs)
            self._gb[order] = gb
        return gb

    def contains(self, f):
        return member(f, self)

    def is_unit(self):
        return self.groebner().is_unit()

    def is_zero(self):
        return not self.gens

    def __add__(self, other):
        return ideal_sum(self, other)

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.gens)

    def dump(self, order=None, header=None):
        return dump_ideal(self, order, header)


def _same_roster(*objs):
    r = objs[0].roster
    for o in objs[1:]:
        if o.roster != r:
            raise RosterMismatch("rosters differ: %r vs %r" % (r, o.roster))
    return r


def groebner(ideal, order=None):
    if not ideal.roster:
        raise ValueError("empty roster")
    return ideal.groebner(order)


def member(f, ideal):
    _same_roster(f, ideal)
    if not f:
        return True
    return ideal.groebner().contains(f)


def ideal_equal(I, J):
    _same_roster(I, J)
    return I.groebner() == J.groebner()


def ideal_contains(I, J):
    """True iff J is contained in I."""
    _same_roster(I, J)
    gb = I.groebner()
    return all(gb.contains(g) for g in J.gens)


def ideal_sum(I, J):
    if isinstance(J, Polynomial):
        J = Ideal(I.roster, [J])
    elif isinstance(J, (list, tuple)):
        J = Ideal(I.roster, J)
    _same_roster(I, J)
    return Ideal(I.roster, I.gens + J.gens)


def ideal_product(I, J):
    _same_roster(I, J)
    return Ideal(I.roster, [a * b for a in I.gens for b in J.gens])


def _fresh(roster, base="t_"):
    name = base
    i = 0
    while name in roster:
        i += 1
        name = "%s%d" % (base, i)
    return name


def eliminate(ideal, names):
    """Elimination ideal: intersection of ``ideal`` with the ring without ``names``."""
    names = tuple(names)
    for x in names:
        if x not in ideal.roster:
            raise ValueError("unknown variable %s" % x)
    keep = tuple(x for x in ideal.roster if x not in names)
    order = elimination_order(names, keep)
    gb = ideal.groebner(order)
    idx = [ideal.roster.index(x) for x in names]
    out = []
    for g in gb:
        if all(m[i] == 0 for m in g.terms for i in idx):
            out.append(g.to_roster(keep))
    return Ideal(keep, out)


def ideal_intersect(I, J):
    """I cap J by the tag method: eliminate t from t*I + (1-t)*J."""
    roster = _same_roster(I, J)
    t = _fresh(roster)
    big = (t,) + roster
    tv = Polynomial.var(big, t)
    gens = [tv * g.to_roster(big) for g in I.gens]
    gens += [(1 - tv) * g.to_roster(big) for g in J.gens]
    return eliminate(Ideal(big, gens), (t,))


def ideal_saturate(I, f):
    """I : f^infinity via an auxiliary variable t with t*f - 1."""
    _same_roster(I, f)
    if not f:
        raise ValueError("cannot saturate by zero")
    roster = I.roster
    t = _fresh(roster)
    big = (t,) + roster
    tv = Polynomial.var(big, t)
    gens = [g.to_roster(big) for g in I.gens] + [tv * f.to_roster(big) - 1]
    return eliminate(Ideal(big, gens), (t,))


def ideal_saturate_ideal(I, J):
    """I : J^infinity as the intersection of the saturations by generators of J."""
    _same_roster(I, J)
    if not J.gens:
        return Ideal(I.roster, [1])
    out = None
    for g in J.gens:
        s = ideal_saturate(I, g)
        out = s if out is None else ideal_intersect(out, s)
    return out


def ideal_quotient(I, f):
    """I : f (one step) via intersection with (f)."""
    _same_roster(I, f)
    inter = ideal_intersect(I, Ideal(I.roster, [f]))
    gens = []
    for g in inter.gens:
        q = divide_exact(g, f)
        gens.append(q)
    return Ideal(I.roster, gens)


def divide_exact(f, g):
    """Exact polynomial division f / g; raises if not divisible."""
    _same_roster(f, g)
    order = GREVLEX
    key = order.key(f.roster)
    lg, cg = g.leading(order)
    rem = dict(f.terms)
    quo = {}
    gt = g.terms
    while rem:
        m = max(rem, key=key)
        if not _divides(lg, m):
            raise ValueError("not exactly divisible")
        q = _mdiv(m, lg)
        c = rem[m] / cg
        quo[q] = c
        for gm, gc in gt.items():
            t = tuple(a + b for a, b in zip(gm, q))
            v = rem.get(t, 0) - c * gc
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return Polynomial._raw(f.roster, quo)


# ---------------------------------------------------------------------------
# substitutions and preimages


def substitute(f, mapping, target_roster=None):
    """Ring homomorphism given on variables.

    ``mapping`` sends every variable of ``f.roster`` to a Polynomial over the
    target roster or to a rational constant.
    """
    missing = [x for x in f.roster if x not in mapping]
    if missing:
        raise KeyError("unmapped variables: %s" % ", ".join(missing))
    if target_roster is None:
        for v in mapping.values():
            if isinstance(v, Polynomial):
                target_roster = v.roster
                break
        else:
            target_roster = ()
    target_roster = tuple(target_roster)
    images = []
    for x in f.roster:
        v = mapping[x]
        if not isinstance(v, Polynomial):
            v = Polynomial.constant(target_roster, v)
        elif v.roster != target_roster:
            raise RosterMismatch("image of %s lives in %r" % (x, v.roster))
        images.append(v)
    powers = [dict() for _ in images]

    def power(i, e):
        cache = powers[i]
        r = cache.get(e)
        if r is None:
            r = images[i] ** e
            cache[e] = r
        return r

    out = Polynomial.zero(target_roster)
    for m, c in f.terms.items():
        t = Polynomial.constant(target_roster, c)
        for i, e in enumerate(m):
            if e:
                t = t * power(i, e)
        out = out + t
    return out


def specialize(f, values, target_roster=None):
    """Substitute rational constants for some variables and drop them."""
    roster = tuple(x for x in f.roster if x not in values) if target_roster is None else tuple(target_roster)
    mapping = {}
    for x in f.roster:
        if x in values:
            mapping[x] = values[x] if not isinstance(values[x], Polynomial) else values[x]
        else:
            mapping[x] = Polynomial.var(roster, x)
    return substitute(f, mapping, roster)


class SubstitutionMap:
    """Homomorphism from Q[source] to Q[target] given by images of variables."""

    def __init__(self, source, target, images):
        self.source = tuple(source)
        self.target = tuple(target)
        self.images = {}
        for x in self.source:
            if x not in images:
                raise KeyError("unmapped variable %s" % x)
            v = images[x]
            if not isinstance(v, Polynomial):
                v = Polynomial.constant(self.target, v)
            if v.roster != self.target:
                raise RosterMismatch("image of %s lives in %r" % (x, v.roster))
            self.images[x] = v
        self._graph = None

    def __call__(self, f):
        if f.roster != self.source:
            raise RosterMismatch("map source %r, got %r" % (self.source, f.roster))
        return substitute(f, self.images, self.target)

    def _shared(self):
        """Variables common to both rosters; they must be mapped to themselves."""
        shared = [x for x in self.source if x in self.target]
        for x in shared:
            if self.images[x] != Polynomial.var(self.target, x):
                raise ValueError("shared variable %s must map to itself" % x)
        return shared

    def graph(self):
        """Groebner basis of the graph ideal (s - pr(s)) with target variables first.

        Variables shared by both rosters act as coefficients.  Returns (big
        roster, eliminated target names, GroebnerBasis).
        """
        if self._graph is None:
            shared = self._shared()
            only_t = tuple(x for x in self.target if x not in shared)
            big = only_t + self.source
            gens = [Polynomial.var(big, s) - self.images[s].to_roster(big)
                    for s in self.source if s not in shared]
            order = elimination_order(only_t, self.source)
            gb = Ideal(big, gens).groebner(order)
            self._graph = (big, len(only_t), gb)
        return self._graph

    def kernel(self):
        big, nt, gb = self.graph()
        out = []
        for g in gb:
            if all(m[i] == 0 for m in g.terms for i in range(nt)):
                out.append(g.to_roster(self.source))
        return Ideal(self.source, out)

    def lift(self, g):
        """A preimage of ``g`` (in the target) under the map; raises if none exists."""
        if g.roster != self.target:
            raise RosterMismatch("expected target roster %r" % (self.target,))
        big, nt, gb = self.graph()
        nf = gb.reduce(g.to_roster(big))
        if any(m[i] for m in nf.terms for i in range(nt)):
            raise ValueError("map is not surjective: %s has no preimage" % g)
        return nf.to_roster(self.source)

    def is_surjective(self):
        try:
            for x in self.target:
                self.lift(Polynomial.var(self.target, x))
        except ValueError:
            return False
        return True


def preimage_ideal(pr, I):
    """pr^{-1}(I) = ker(pr) + lifts of the generators of I, for surjective pr."""
    if I.roster != pr.target:
        raise RosterMismatch("ideal roster %r differs from map target %r" % (I.roster, pr.target))
    if not pr.is_surjective():
        raise ValueError("preimage requires a surjective map")
    gens = list(pr.kernel().gens) + [pr.lift(g) for g in I.gens]
    return Ideal(pr.source, gens)


# ---------------------------------------------------------------------------
# canonical dump


def dump_ideal(I, order=None, header=None, basis=True):
    """Canonical text dump of an ideal (its reduced Groebner basis by default)."""
    order = order or GREVLEX
    lines = []
    head = "# roster: %s; order: %s" % (",".join(I.roster), order.describe())
    if header:
        head += "; " + "; ".join("%s=%s" % (k, v) for k, v in header)
    lines.append(head)
    polys = I.groebner(order).polys if basis else I.gens
    for g in polys:
        lines.append(g.canonical(order))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# polynomials in the distinguished variable u with Polynomial coefficients


class UPoly:
    """Polynomial in ``u`` whose coefficients are Polynomials over a roster."""

    __slots__ = ("roster", "coeffs")

    def __init__(self, roster, coeffs):
        self.roster = tuple(roster)
        cs = []
        for c in coeffs:
            if not isinstance(c, Polynomial):
                c = Polynomial.constant(self.roster, c)
            elif c.roster != self.roster:
                raise RosterMismatch("coefficient roster %r, expected %r" % (c.roster, self.roster))
            cs.append(c)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def u(cls, roster):
        return cls(roster, [0, 1])

    @classmethod
    def const(cls, roster, c):
        return cls(roster, [c])

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Polynomial.zero(self.roster)

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return self.coeffs[-1]

    def _lift(self, other):
        if isinstance(other, UPoly):
            if other.roster != self.roster:
                raise RosterMismatch("rosters differ")
            return other
        return UPoly(self.roster, [other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(self.roster, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.roster, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return UPoly(self.roster, [])
        out = [Polynomial.zero(self.roster)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UPoly(self.roster, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        r = UPoly(self.roster, [1])
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            other = self._lift(other)
        return self.roster == other.roster and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self):
        return UPoly(self.roster, [c * i for i, c in enumerate(self.coeffs)][1:])

    def divide_linear(self, root):
        """Exact division by (u - root); returns None if the remainder is nonzero."""
        if not isinstance(root, Polynomial):
            root = Polynomial.constant(self.roster, root)
        n = len(self.coeffs)
        if n == 0:
            return self
        q = [None] * (n - 1)
        carry = Polynomial.zero(self.roster)
        for i in range(n - 1, 0, -1):
            carry = self.coeffs[i] + carry * root if i < n - 1 else self.coeffs[i]
            q[i - 1] = carry
        rem = self.coeffs[0] + (carry * root if n > 1 else 0)
        if rem:
            return None
        return UPoly(self.roster, q)

    def map_coeffs(self, fn, roster):
        return UPoly(roster, [fn(c) for c in self.coeffs])

    def to_string(self, var="u"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else "%s^%d" % (var, i))
            cs = c.to_string()
            if not mono:
                parts.append("(%s)" % cs)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append("(%s)*%s" % (cs, mono))
        return " + ".join(parts)

    def __str__(self):
        return self.to_string()

    __repr__ = __str__


class MatrixPoly:
    """2x2 matrix of UPoly entries."""

    __slots__ = ("roster", "rows")

    def __init__(self, roster, rows):
        self.roster = tuple(roster)
        fixed = []
        for row in rows:
            r = []
            for e in row:
                if not isinstance(e, UPoly):
                    e = UPoly(self.roster, [e])
                elif e.roster != self.roster:
                    raise RosterMismatch("entry roster %r, expected %r" % (e.roster, self.roster))
                r.append(e)
            fixed.append(tuple(r))
        if len(fixed) != 2 or any(len(r) != 2 for r in fixed):
            raise ValueError("MatrixPoly is 2x2")
        self.rows = tuple(fixed)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return [self.rows[i][j] for i in range(2) for j in range(2)]

    def __add__(self, other):
        return MatrixPoly(self.roster, [[self[i, j] + other[i, j] for j in range(2)] for i in range(2)])

    def __sub__(self, other):
        return MatrixPoly(self.roster, [[self[i, j] - other[i, j] for j in range(2)] for i in range(2)])

    def __neg__(self):
        return MatrixPoly(self.roster, [[-self[i, j] for j in range(2)] for i in range(2)])

    def __mul__(self, other):
        if isinstance(other, MatrixPoly):
            return MatrixPoly(self.roster, [[self[i, 0] * other[0, j] + self[i, 1] * other[1, j]
                                             for j in range(2)] for i in range(2)])
        return MatrixPoly(self.roster, [[self[i, j] * other for j in range(2)] for i in range(2)])

    def __rmul__(self, other):
        return MatrixPoly(self.roster, [[other * self[i, j] for j in range(2)] for i in range(2)])

    def __eq__(self, other):
        return isinstance(other, MatrixPoly) and self.roster == other.roster and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def det(self):
        return self[0, 0] * self[1, 1] - self[0, 1] * self[1, 0]

    def adjugate(self):
        return MatrixPoly(self.roster, [[self[1, 1], -self[0, 1]], [-self[1, 0], self[0, 0]]])

    def derivative(self):
        return MatrixPoly(self.roster, [[self[i, j].derivative() for j in range(2)] for i in range(2)])

    def map_coeffs(self, fn, roster):
        return MatrixPoly(roster, [[self[i, j].map_coeffs(fn, roster) for j in range(2)] for i in range(2)])

    def is_zero(self):
        return all(e.is_zero() for e in self.entries())

    def to_string(self, var="u"):
        return "\n".join("[ %s ;  %s ]" % (r[0].to_string(var), r[1].to_string(var)) for r in self.rows)

    def __str__(self):
        return self.to_string()
