"""Bijective skew PBW extensions ``A = sigma(R)<x1, ..., xn>`` and the free module A^m.

Elements of A are stored in the unique left normal form
``sum c_alpha x^alpha`` (coefficients on the left of standard
monomials).  Products are brought to normal form by rewriting with

* ``x_i r = sigma_i(r) x_i + delta_i(r)`` for ``r`` in R, and
* ``x_j x_i = c_ij x_i x_j + (r0 + sum_k r_k x_k)`` for ``j > i``.

The rewriting is done recursively on total degree and memoised per
algebra, which gives ``x^alpha r`` and ``x^alpha x^beta`` and therefore
the constants ``sigma^alpha(r)``, ``c_{alpha,beta}`` and tails
``p_{alpha,r}``, ``p_{alpha,beta}``.
"""

from .coeffring import RingDerivation, RingEndo, RingMismatch, _is_scalar
from .order import DEFAULT_ORDER, OrderSpec

__all__ = ["SkewPBWExtension", "Poly", "Vec", "AlgebraMismatch"]


class AlgebraMismatch(TypeError):
    """Operands belong to different algebras or modules of different rank."""


def _add_scaled(acc, d, a=None):
    """``acc += a * d`` in place (``a`` multiplies the coefficients on the left)."""
    for e, c in d.items():
        if a is not None:
            c = a * c
            if not c:
                continue
        s = acc.get(e)
        s = c if s is None else s + c
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)
    return acc


class SkewPBWExtension:
    """A bijective skew PBW extension of a coefficient ring.

    Parameters
    ----------
    ring : coefficient ring (``QQ``, ``QQi``, a :class:`PolynomialRing` or a
        :class:`SkewPolynomialRing`).
    names : names of the extension variables ``x1..xn`` in their PBW order.
    sigma : mapping from variable (name or index) to :class:`RingEndo`;
        missing entries are the identity.
    delta : mapping from variable to :class:`RingDerivation` or to a dict
        of generator images; missing entries are zero.
    relations : mapping ``(j, i) -> (c, tail)`` with ``j > i`` for
        ``x_j x_i = c x_i x_j + tail``.  ``tail`` maps ``None`` (constant
        part) or a variable to a coefficient.  Omitted pairs commute.
    """

    def __init__(self, ring, names, sigma=None, delta=None, relations=None, name="A"):
        self.ring = ring
        self.names = tuple(names)
        self.name = name
        n = self.n = len(self.names)
        if n == 0 or len(set(self.names)) != n:
            raise ValueError("need distinct extension variable names")
        clash = set(self.names) & set(getattr(ring, "names", ()))
        if clash:
            raise ValueError(f"names used twice: {sorted(clash)}")

        self.sigma = [RingEndo(ring) for _ in range(n)]
        for k, s in (sigma or {}).items():
            k = self._index(k)
            if s.ring != ring:
                raise RingMismatch("sigma on a different ring")
            self.sigma[k] = s
        self.delta = [RingDerivation(ring, self.sigma[k]) for k in range(n)]
        for k, d in (delta or {}).items():
            k = self._index(k)
            if not isinstance(d, RingDerivation):
                d = RingDerivation(ring, self.sigma[k], d)
            self.delta[k] = d
        for s in self.sigma:
            s.check()
        for d in self.delta:
            d.check()
        self.sigma_inv = [s.inverse() for s in self.sigma]

        self._rel = {}
        for (j, i), (c, tail) in (relations or {}).items():
            j, i = self._index(j), self._index(i)
            if not j > i:
                raise ValueError("relations must be given for x_j x_i with j > i")
            c = ring(c)
            if not ring.is_unit(c):
                raise ValueError(f"c_{{{i + 1},{j + 1}}} = {ring.format(c)} is not invertible")
            td = {}
            for k, r in (tail or {}).items():
                r = ring(r)
                if r:
                    e = (0,) * n if k is None else self._unit(self._index(k))
                    td[e] = td.get(e, ring.zero) + r
            self._rel[(i, j)] = (c, {e: r for e, r in td.items() if r})

        self._cache_coeff = {}
        self._cache_var = {}
        self._cache_mono = {}
        self._cache_spow = {}
        self.zero = Poly(self, {})
        self.one = self.const(ring.one)

    # -- construction helpers ------------------------------------------

    def _index(self, k):
        if isinstance(k, str):
            try:
                return self.names.index(k)
            except ValueError:
                raise ValueError(f"unknown variable {k!r}") from None
        if not 0 <= k < self.n:
            raise ValueError(f"variable index {k} out of range")
        return k

    def _unit(self, k):
        return tuple(int(i == k) for i in range(self.n))

    def relation(self, i, j):
        """``(c_ij, tail)`` for ``x_j x_i`` with ``i < j`` (0-based)."""
        return self._rel.get((i, j), (self.ring.one, {}))

    def const(self, r):
        r = self.ring(r)
        return Poly(self, {(0,) * self.n: r} if r else {})

    def monomial(self, exp, c=None):
        c = self.ring.one if c is None else self.ring(c)
        exp = tuple(exp)
        if len(exp) != self.n:
            raise ValueError("exponent arity mismatch")
        return Poly(self, {exp: c} if c else {})

    def var(self, k):
        return self.monomial(self._unit(self._index(k)))

    def gens(self):
        return [self.var(k) for k in range(self.n)]

    def poly(self, terms):
        out = {}
        for e, c in dict(terms).items():
            c = self.ring(c)
            if c:
                out[tuple(e)] = c
        return Poly(self, out)

    def vector(self, comps):
        return Vec(self, [p if isinstance(p, Poly) else self.const(p) for p in comps])

    def zero_vector(self, m):
        return Vec(self, [self.zero] * m)

    def unit_vector(self, m, i):
        """``e_i`` of rank ``m`` (``i`` from 1)."""
        if not 1 <= i <= m:
            raise ValueError(f"unit vector index {i} outside 1..{m}")
        return Vec(self, [self.one if k == i else self.zero for k in range(1, m + 1)])

    def __repr__(self):
        return f"{self.name} = sigma({self.ring!r})<{', '.join(self.names)}>"

    # -- automorphism powers ------------------------------------------

    def sigma_pow(self, alpha, r):
        """``sigma^alpha(r) = sigma_1^a1 ... sigma_n^an (r)`` (sigma_n applied first)."""
        key = ("+", tuple(alpha), r)
        hit = self._cache_spow.get(key)
        if hit is not None:
            return hit
        out = r
        for k in range(self.n - 1, -1, -1):
            for _ in range(alpha[k]):
                out = self.sigma[k](out)
        self._cache_spow[key] = out
        return out

    def sigma_pow_inv(self, alpha, r):
        """``sigma^{-alpha}(r) = sigma_n^{-an} ... sigma_1^{-a1} (r)`` (sigma_1^{-1} applied first)."""
        key = ("-", tuple(alpha), r)
        hit = self._cache_spow.get(key)
        if hit is not None:
            return hit
        out = r
        for k in range(self.n):
            for _ in range(alpha[k]):
                out = self.sigma_inv[k](out)
        self._cache_spow[key] = out
        return out

    def psi(self, t1, t2, r):
        """``psi_{t1,t2}(r) = sigma^{t1+t2}(sigma^{-t2}(r))``."""
        s = tuple(a + b for a, b in zip(t1, t2))
        return self.sigma_pow(s, self.sigma_pow_inv(t2, r))

    def psi_inv(self, t1, t2, r):
        """``psi^{-1}_{t1,t2}(r) = sigma^{t2}(sigma^{-(t1+t2)}(r))``."""
        s = tuple(a + b for a, b in zip(t1, t2))
        return self.sigma_pow(t2, self.sigma_pow_inv(s, r))

    # -- rewriting core -------------------------------------------------

    def _mono_coeff(self, alpha, r):
        # x^alpha r as {exp: coeff}
        if not r:
            return {}
        if not any(alpha):
            return {alpha: r}
        key = (alpha, r)
        hit = self._cache_coeff.get(key)
        if hit is not None:
            return hit
        j = max(k for k in range(self.n) if alpha[k])
        rest = alpha[:j] + (alpha[j] - 1,) + alpha[j + 1:]
        s = self.sigma[j](r)
        if not s:
            raise ValueError(f"sigma_{j + 1} sends a nonzero element to zero")
        out = self._times_var(self._mono_coeff(rest, s), j)
        d = self.delta[j](r)
        if d:
            _add_scaled(out, self._mono_coeff(rest, d))
        self._cache_coeff[key] = out
        return out

    def _times_var(self, d, i):
        out = {}
        for e, c in d.items():
            _add_scaled(out, self._mono_var(e, i), c)
        return out

    def _mono_var(self, alpha, i):
        # x^alpha x_i
        key = (alpha, i)
        hit = self._cache_var.get(key)
        if hit is not None:
            return hit
        later = [k for k in range(i + 1, self.n) if alpha[k]]
        if not later:
            out = {alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]: self.ring.one}
        else:
            j = later[-1]
            rest = alpha[:j] + (alpha[j] - 1,) + alpha[j + 1:]
            c, tail = self.relation(i, j)
            out = self._times_var(self._times_var(self._mono_coeff(rest, c), i), j)
            for e, r in tail.items():
                part = self._mono_coeff(rest, r)
                k = next((m for m in range(self.n) if e[m]), None)
                if k is not None:
                    part = self._times_var(part, k)
                _add_scaled(out, part)
        self._cache_var[key] = out
        return out

    def _mono_mono(self, alpha, beta):
        # x^alpha x^beta
        if not any(beta):
            return {alpha: self.ring.one}
        if not any(alpha):
            return {beta: self.ring.one}
        key = (alpha, beta)
        hit = self._cache_mono.get(key)
        if hit is not None:
            return hit
        i = next(k for k in range(self.n) if beta[k])
        last = max(k for k in range(self.n) if alpha[k])
        if last <= i:
            out = {tuple(a + b for a, b in zip(alpha, beta)): self.ring.one}
        else:
            rest = beta[:i] + (beta[i] - 1,) + beta[i + 1:]
            out = {}
            for e, c in self._mono_var(alpha, i).items():
                _add_scaled(out, self._mono_mono(e, rest), c)
        self._cache_mono[key] = out
        return out

    def _mul_terms(self, f, g):
        out = {}
        for a_exp, a in f.items():
            for b_exp, b in g.items():
                for e, c in self._mono_coeff(a_exp, b).items():
                    _add_scaled(out, self._mono_mono(e, b_exp), a * c)
        return out

    # -- public arithmetic on monomials ------------------------------

    def mul_mono_coeff(self, alpha, r):
        """``x^alpha r = sigma^alpha(r) x^alpha + p``; returns ``(sigma^alpha(r), p)``."""
        alpha = tuple(alpha)
        r = self.ring(r)
        d = dict(self._mono_coeff(alpha, r))
        lead = d.pop(alpha, self.ring.zero)
        return lead, Poly(self, d)

    def mul_mono_mono(self, alpha, beta):
        """``x^alpha x^beta = c x^{alpha+beta} + p``; returns ``(c, p)``."""
        alpha, beta = tuple(alpha), tuple(beta)
        d = dict(self._mono_mono(alpha, beta))
        lead = d.pop(tuple(a + b for a, b in zip(alpha, beta)), self.ring.zero)
        return lead, Poly(self, d)

    def c(self, alpha, beta):
        """The invertible constant ``c_{alpha,beta}``."""
        alpha, beta = tuple(alpha), tuple(beta)
        return self._mono_mono(alpha, beta).get(tuple(a + b for a, b in zip(alpha, beta)),
                                                self.ring.zero)

    def poly_mul(self, f, g):
        return f * g

    def vec_right_mul(self, v, g):
        return v * g


class Poly:
    """An element of a skew PBW extension in left normal form."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.alg is not self.alg:
                raise AlgebraMismatch("polynomials from different algebras")
            return other
        if _is_scalar(other) or other in self.alg.ring:
            return self.alg.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly(self.alg, _add_scaled(dict(self.terms), o.terms))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.alg, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Vec):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly(self.alg, self.alg._mul_terms(self.terms, o.terms))

    def __rmul__(self, other):
        # left scalar: multiply coefficients on the left
        if _is_scalar(other) or other in self.alg.ring:
            r = self.alg.ring(other)
            return Poly(self.alg, _add_scaled({}, self.terms, r))
        return NotImplemented

    def __pow__(self, k):
        out = self.alg.one
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.alg is other.alg and self.terms == other.terms
        o = self._coerce(other) if not isinstance(other, Vec) else None
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def format(self, order=DEFAULT_ORDER):
        from .parsing import format_poly
        return format_poly(self, order)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.format()})"


class Vec:
    """An element of the free right module ``A^m`` as a tuple of components."""

    __slots__ = ("alg", "components")

    def __init__(self, alg, components):
        self.alg = alg
        comps = tuple(components)
        for p in comps:
            if not isinstance(p, Poly) or p.alg is not alg:
                raise AlgebraMismatch("vector components must be polynomials of the algebra")
        self.components = comps

    @property
    def m(self):
        return len(self.components)

    def _check(self, other):
        if not isinstance(other, Vec):
            return False
        if other.alg is not self.alg or other.m != self.m:
            raise AlgebraMismatch("vectors of different algebras or ranks")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return Vec(self.alg, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return Vec(self.alg, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return Vec(self.alg, [-a for a in self.components])

    def __mul__(self, g):
        """Right action ``f g`` of ``g`` in A (or in R)."""
        if not isinstance(g, Poly):
            if _is_scalar(g) or g in self.alg.ring:
                g = self.alg.const(g)
            else:
                return NotImplemented
        elif g.alg is not self.alg:
            raise AlgebraMismatch("vector and polynomial from different algebras")
        return Vec(self.alg, [a * g for a in self.components])

    def __bool__(self):
        return any(self.components)

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.alg is other.alg and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def degree(self):
        return max((p.degree() for p in self.components), default=-1)

    def terms(self):
        """``{(exp, index): coeff}`` over all components (index from 1)."""
        return {(e, i): c for i, p in enumerate(self.components, start=1)
                for e, c in p.terms.items()}

    def format(self, order=DEFAULT_ORDER):
        from .parsing import format_vec
        return format_vec(self, order)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Vec({self.format()})"
