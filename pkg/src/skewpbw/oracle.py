"""Brute-force cross-checks that avoid the algebra's rewriting engine.

* :func:`naive_normalize` rewrites a word one commutation rule at a time,
  always at the leftmost place where a rule applies.
* :func:`linear_membership` decides whether ``f = sum f_i q_i`` has a
  solution with every ``q_i`` of total degree at most ``D`` by solving a
  linear system over Q.  Rational numbers are central in every shipped
  algebra, so ``A`` is a Q-vector space spanned by ``m x^gamma`` (and
  ``i m x^gamma`` over Q(i)) with ``m`` a monomial of the coefficient ring.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from sympy.polys.domains import QQ as SQQ
from sympy.polys.matrices import DomainMatrix

from .algebra import Poly
from .division import as_vectors

__all__ = ["naive_normalize", "linear_membership", "OracleResult", "OracleTooLarge",
           "MEMBER", "NOT_MEMBER", "UNKNOWN", "exponents_upto"]

MEMBER = "member"
NOT_MEMBER = "not-member-up-to-D"
UNKNOWN = "unknown"


class OracleTooLarge(RuntimeError):
    """The linear system would exceed the configured size guard."""


def naive_normalize(alg, word):
    """Normal form of a product given as a sequence of factors.

    Factors are variable names, coefficient-ring generator names or
    coefficient-ring elements.
    Each step applies one of ``r s -> (rs)``, ``x_j r -> sigma_j(r) x_j +
    delta_j(r)`` or ``x_j x_i -> c x_i x_j + tail`` (``j > i``).
    """
    R = alg.ring
    start = []
    for w in word:
        if isinstance(w, str) and w in alg.names:
            start.append(("v", alg.names.index(w)))
        elif isinstance(w, str):
            start.append(("r", R.gens[R.names.index(w)]))
        else:
            start.append(("r", R(w)))
    todo = [tuple(start)]
    out = {}
    while todo:
        t = todo.pop()
        k = _first_redex(t)
        if k is None:
            c = R.one
            vars_ = t
            if t and t[0][0] == "r":
                c, vars_ = t[0][1], t[1:]
            if not c:
                continue
            e = [0] * alg.n
            for _, v in vars_:
                e[v] += 1
            e = tuple(e)
            s = out.get(e, R.zero) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
            continue
        a, b = t[k], t[k + 1]
        pre, post = t[:k], t[k + 2:]
        if a[0] == "r" and b[0] == "r":
            todo.append(pre + (("r", a[1] * b[1]),) + post)
        elif b[0] == "r":
            j = a[1]
            s = alg.sigma[j](b[1])
            if s:
                todo.append(pre + (("r", s), ("v", j)) + post)
            d = alg.delta[j](b[1])
            if d:
                todo.append(pre + (("r", d),) + post)
        else:
            j, i = a[1], b[1]
            c, tail = alg.relation(i, j)
            todo.append(pre + (("r", c), ("v", i), ("v", j)) + post)
            for e, r in tail.items():
                v = next((m for m in range(alg.n) if e[m]), None)
                mid = (("r", r),) if v is None else (("r", r), ("v", v))
                todo.append(pre + mid + post)
    return Poly(alg, out)


def _first_redex(t):
    for k in range(len(t) - 1):
        a, b = t[k], t[k + 1]
        if a[0] == "r" and b[0] == "r":
            return k
        if a[0] == "v" and b[0] == "r":
            return k
        if a[0] == "v" and b[0] == "v" and a[1] > b[1]:
            return k
    return None


def exponents_upto(n, D):
    """All exponent tuples of length ``n`` with total degree at most ``D``."""
    if n == 0:
        return [()]
    return [e for e in product(range(D + 1), repeat=n) if sum(e) <= D]


@dataclass
class OracleResult:
    status: str
    quotients: list = None
    unknowns: int = 0

    def __bool__(self):
        return self.status == MEMBER


def _scalar_parts(c, has_i):
    if has_i:
        return (c.re, c.im)
    return (Fraction(c),)


def _coords(v, R, has_i):
    """Q-coordinates ``{(index, exp, ring_exp, part): q}`` of a vector."""
    out = {}
    for idx, p in enumerate(v.components):
        for e, c in p.terms.items():
            for re_, s in R.terms(c).items():
                for part, q in enumerate(_scalar_parts(s, has_i)):
                    if q:
                        out[(idx, e, re_, part)] = q
    return out


def linear_membership(f, F, D, max_unknowns=3000, strict=False):
    """Search for ``f = sum F_i q_i`` with ``deg q_i <= D`` (ring variables included).

    Returns an :class:`OracleResult` with status ``MEMBER`` (and explicit
    quotients), ``NOT_MEMBER`` (no solution of degree at most ``D``) or
    ``UNKNOWN`` when the system is above ``max_unknowns``; with
    ``strict=True`` that last case raises :class:`OracleTooLarge`.
    """
    if D < 0:
        raise ValueError("degree bound must be non-negative")
    f, F = as_vectors(f, F)
    alg = f.alg
    R = alg.ring
    has_i = R.base.has_i
    rnames = getattr(R, "names", ())
    scalars = [R.base.one] + ([R.base.i] if has_i else [])
    cols = []
    for i, g in enumerate(F):
        for gamma in exponents_upto(alg.n, D):
            for rexp in exponents_upto(len(rnames), D - sum(gamma)):
                for s in scalars:
                    cols.append((i, gamma, rexp, s))
    if len(cols) > max_unknowns:
        if strict:
            raise OracleTooLarge(f"{len(cols)} unknowns exceed the guard {max_unknowns}")
        return OracleResult(UNKNOWN, unknowns=len(cols))
    rows = {}
    col_data = []
    for i, gamma, rexp, s in cols:
        c = R.monomial(rexp, s) if rnames else R(s)
        col_data.append(_coords(F[i] * alg.monomial(gamma, c), R, has_i))
    target = _coords(f, R, has_i)
    for cd in col_data + [target]:
        for key in cd:
            rows.setdefault(key, len(rows))
    ncols = len(cols) + 1
    sdm = {}
    for j, cd in enumerate(col_data + [target]):
        for key, q in cd.items():
            sdm.setdefault(rows[key], {})[j] = SQQ(q.numerator, q.denominator)
    if not rows:
        return OracleResult(MEMBER, [alg.zero] * len(F), len(cols))
    M = DomainMatrix(sdm, (len(rows), ncols), SQQ)
    red, pivots = M.rref()
    if len(cols) in pivots:
        return OracleResult(NOT_MEMBER, unknowns=len(cols))
    dense = red.to_Matrix()
    q = [alg.zero] * len(F)
    for r, pc in enumerate(pivots):
        val = dense[r, len(cols)]
        if not val:
            continue
        val = Fraction(int(val.p), int(val.q))
        i, gamma, rexp, s = cols[pc]
        c = R.monomial(rexp, s * val) if rnames else R(s * val)
        q[i] = q[i] + alg.monomial(gamma, c)
    return OracleResult(MEMBER, q, len(cols))
