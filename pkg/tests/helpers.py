"""Random elements of the shipped algebras (seeded, for reproducible tests)."""

import random
from fractions import Fraction

from skewpbw.scalars import GaussianRational


def rand_rational(rng, span=3):
    num = rng.randint(-span, span)
    den = rng.choice((1, 1, 1, 2, 3))
    return Fraction(num, den)


def rand_scalar(rng, field, nonzero=False):
    while True:
        if field.has_i:
            c = GaussianRational(rand_rational(rng), rng.choice((0, 0, rand_rational(rng))))
        else:
            c = rand_rational(rng)
        if c or not nonzero:
            return field(c)


def rand_exp(rng, n, maxdeg):
    e = [0] * n
    for _ in range(rng.randint(0, maxdeg)):
        e[rng.randrange(n)] += 1
    return tuple(e)


def rand_ring(rng, R, deg=1, terms=2, nonzero=False):
    """A random coefficient-ring element with small degree."""
    base = R.base
    while True:
        out = R.zero
        for _ in range(rng.randint(1, terms)):
            c = rand_scalar(rng, base)
            if R.kind == "field":
                out = out + c
            else:
                out = out + R.monomial(rand_exp(rng, len(R.names), deg), c)
        if out or not nonzero:
            return out


def rand_poly(rng, alg, deg=2, terms=3, rdeg=1, nonzero=False):
    while True:
        p = alg.zero
        for _ in range(rng.randint(1, terms)):
            p = p + alg.monomial(rand_exp(rng, alg.n, deg), rand_ring(rng, alg.ring, rdeg))
        if p or not nonzero:
            return p


def rand_vec(rng, alg, m, deg=2, terms=2, rdeg=1, density=0.7, nonzero=True):
    while True:
        comps = [rand_poly(rng, alg, deg, terms, rdeg) if rng.random() < density else alg.zero
                 for _ in range(m)]
        v = alg.vector(comps)
        if v or not nonzero:
            return v


def rng_for(*key):
    return random.Random(hash(key) & 0xFFFFFFFF if not all(isinstance(k, int) for k in key)
                         else sum(k * 1000003 ** i for i, k in enumerate(key)))
