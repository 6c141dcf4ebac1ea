"""Randomized property suites for the polynomial engine.

Each suite draws small random instances in three or four variables and
returns a list of failure descriptions (empty when every instance holds).
"""

import random

from gaugeverify.polyring import (Ideal, Polynomial, SubstitutionMap, ideal_contains, ideal_intersect,
                                  ideal_product, ideal_quotient, ideal_saturate, member, poly_ring,
                                  preimage_ideal)

ROSTER, (X, Y, Z) = poly_ring("x y z")


def random_poly(rng, gens=(X, Y, Z), terms=3, degree=2, coef=3, roster=ROSTER):
    f = Polynomial.zero(roster)
    for _ in range(terms):
        m = Polynomial.constant(roster, rng.randint(-coef, coef))
        for _ in range(rng.randint(0, degree)):
            m = m * rng.choice(gens)
        f = f + m
    return f


def random_ideal(rng, n=2, **kw):
    return Ideal(ROSTER, [random_poly(rng, **kw) for _ in range(n)])


def membership_linearity(count=200, seed=1):
    """Normal forms are linear; combinations of generators are members."""
    rng = random.Random(seed)
    bad = []
    for i in range(count):
        I = random_ideal(rng, rng.choice((1, 2)))
        gb = I.groebner()
        f, g = random_poly(rng), random_poly(rng)
        a, b = rng.randint(-4, 4), rng.randint(-4, 4)
        if gb.reduce(f * a + g * b) != gb.reduce(f) * a + gb.reduce(g) * b:
            bad.append((i, "normal form not linear", I, f, g))
        h = sum((random_poly(rng, terms=2, degree=1) * q for q in I.gens), Polynomial.zero(ROSTER))
        if not member(h, I):
            bad.append((i, "combination of generators not a member", I, h))
        if not member(h * a + f - gb.reduce(f), I):
            bad.append((i, "f - NF(f) not a member", I, f))
    return bad


def intersection_saturation(count=200, seed=2):
    """I*J <= I cap J <= I, J and I <= I:f <= I:f^oo with f^k (I:f^oo) <= I."""
    rng = random.Random(seed)
    bad = []
    for i in range(count):
        I = random_ideal(rng, 2, terms=2)
        J = random_ideal(rng, 1, terms=2)
        K = ideal_intersect(I, J)
        if not (ideal_contains(I, K) and ideal_contains(J, K)):
            bad.append((i, "intersection not inside both", I, J))
        if not ideal_contains(K, ideal_product(I, J)):
            bad.append((i, "product not inside intersection", I, J))
        f = rng.choice((X, Y, Z)) + rng.randint(-2, 2)
        S = ideal_saturate(I, f)
        Q = ideal_quotient(I, f)
        if not (ideal_contains(Q, I) and ideal_contains(S, Q)):
            bad.append((i, "I <= I:f <= I:f^oo fails", I, f))
        for s in S.gens:
            t, k = s, 0
            while not member(t, I) and k < 8:
                t, k = t * f, k + 1
            if k == 8:
                bad.append((i, "saturation generator not killed by a power of f", I, f, s))
    return bad


SOURCE = ("s", "t", "u", "v")


def random_surjection(rng):
    """A triangular substitution Q[s,t,u,v] -> Q[x,y,z]; surjective by construction."""
    sx = random_poly(rng, (Y, Z), terms=2)
    sy = random_poly(rng, (Z,), terms=2)
    sw = random_poly(rng, terms=2)
    images = {"s": X + sx, "t": Y + sy, "u": Z * rng.choice((1, -1, 2)) + rng.randint(-2, 2), "v": sw}
    return SubstitutionMap(SOURCE, ROSTER, images)


def preimage_correspondence(count=200, seed=3):
    """f lies in pr^-1(J) exactly when pr(f) lies in J."""
    rng = random.Random(seed)
    bad = []
    src = Polynomial.gens(SOURCE)
    for i in range(count):
        pr = random_surjection(rng)
        J = random_ideal(rng, rng.choice((1, 2)), terms=2)
        P = preimage_ideal(pr, J)
        if any(not member(pr(g), J) for g in P.gens):
            bad.append((i, "generator of the preimage maps outside J", J))
            continue
        inside = sum((random_poly(rng, src, terms=2, degree=1, roster=SOURCE) * g for g in P.gens),
                     Polynomial.zero(SOURCE))
        probe = random_poly(rng, src, terms=3, roster=SOURCE)
        for f in (inside, probe, inside + probe):
            if member(f, P) != member(pr(f), J):
                bad.append((i, "membership disagrees", J, f))
        for g in J.gens:
            if not member(pr.lift(g), P):
                bad.append((i, "lift of a generator outside the preimage", J, g))
    return bad


SUITES = {
    "membership linearity": membership_linearity,
    "intersection and saturation containments": intersection_saturation,
    "preimage correspondence": preimage_correspondence,
}
