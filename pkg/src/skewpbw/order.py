"""Monomial orders on Mon(A) and Mon(A^m), divisibility and leading data.

Exponents are tuples of naturals.  A module monomial ``x^alpha e_i`` is
the pair ``(alpha, i)`` with ``i`` counted from 1.
"""

from dataclasses import dataclass

__all__ = ["OrderSpec", "cmp_mono", "cmp_vec_mono", "divides",
           "quotient_exponent", "lcm_mono", "lcm_vec", "leading", "Leading"]

_BASE_ALIASES = {"deglex": "deglex", "gradlex": "deglex",
                 "degrevlex": "degrevlex", "gradlexrev": "degrevlex"}
_MODULE_ALIASES = {"top": "top", "toprev": "toprev"}


def _deglex(e):
    return (sum(e), e)


def _degrevlex(e):
    return (sum(e), tuple(-a for a in reversed(e)))


_BASE_KEYS = {"deglex": _deglex, "degrevlex": _degrevlex}


@dataclass(frozen=True)
class OrderSpec:
    """Base monomial order plus the module tie-break (TOP or TOPREV).

    ``deglex`` (alias ``gradlex``): degree first, then the leftmost
    differing exponent decides, larger wins.  ``degrevlex`` (alias
    ``gradlexrev``): degree first, then the rightmost differing exponent
    decides, smaller wins.  TOP breaks ties between equal monomials by
    the larger index, TOPREV by the smaller one.
    """

    base: str = "deglex"
    module: str = "top"

    def __post_init__(self):
        try:
            object.__setattr__(self, "base", _BASE_ALIASES[self.base.lower()])
        except KeyError:
            raise ValueError(f"unknown monomial order {self.base!r}") from None
        try:
            object.__setattr__(self, "module", _MODULE_ALIASES[self.module.lower()])
        except KeyError:
            raise ValueError(f"unknown module order {self.module!r}") from None

    def key(self, exp):
        return _BASE_KEYS[self.base](exp)

    def vec_key(self, exp, index):
        return (self.key(exp), index if self.module == "top" else -index)


DEFAULT_ORDER = OrderSpec()


def _sign(a, b):
    return (a > b) - (a < b)


def cmp_mono(alpha, beta, base="deglex"):
    """Return 1, 0 or -1 as ``x^alpha`` is above, equal to or below ``x^beta``."""
    if len(alpha) != len(beta):
        raise ValueError("exponent arity mismatch")
    spec = base if isinstance(base, OrderSpec) else OrderSpec(base)
    return _sign(spec.key(tuple(alpha)), spec.key(tuple(beta)))


def cmp_vec_mono(X, Y, spec=DEFAULT_ORDER):
    """Compare module monomials ``X = (alpha, i)`` and ``Y = (beta, j)``.

    ``None`` stands for the zero vector, which lies below every monomial.
    """
    if X is None or Y is None:
        return _sign(X is not None, Y is not None)
    (a, i), (b, j) = X, Y
    if len(a) != len(b):
        raise ValueError("exponent arity mismatch")
    return _sign(spec.vec_key(tuple(a), i), spec.vec_key(tuple(b), j))


def divides(alpha, beta):
    """``x^alpha | x^beta`` iff ``alpha <= beta`` componentwise."""
    if len(alpha) != len(beta):
        raise ValueError("exponent arity mismatch")
    return all(a <= b for a, b in zip(alpha, beta))


def quotient_exponent(alpha, beta):
    """The unique ``theta`` with ``beta = theta + alpha``."""
    if not divides(alpha, beta):
        raise ValueError(f"{alpha} does not divide {beta}")
    return tuple(b - a for a, b in zip(alpha, beta))


def lcm_mono(alpha, beta):
    if len(alpha) != len(beta):
        raise ValueError("exponent arity mismatch")
    return tuple(max(a, b) for a, b in zip(alpha, beta))


def lcm_vec(X, Y):
    """lcm of module monomials; ``None`` (the zero vector) when the indices differ."""
    (a, i), (b, j) = X, Y
    if i != j:
        return None
    return lcm_mono(a, b), i


@dataclass(frozen=True)
class Leading:
    """Leading monomial, coefficient and index; ``lm`` is ``None`` for zero."""

    lm: tuple = None
    lc: object = 0
    index: int = None

    @property
    def is_zero(self):
        return self.lm is None

    @property
    def lt(self):
        return None if self.lm is None else (self.lc, self.lm, self.index)


def leading(f, spec=DEFAULT_ORDER):
    """Leading data of a polynomial (``index`` is ``None``) or a vector."""
    comps = getattr(f, "components", None)
    if comps is None:
        if not f.terms:
            return Leading()
        e = max(f.terms, key=spec.key)
        return Leading(e, f.terms[e], None)
    best = None
    for i, p in enumerate(comps, start=1):
        if not p.terms:
            continue
        e = max(p.terms, key=spec.key)
        k = spec.vec_key(e, i)
        if best is None or k > best[0]:
            best = (k, e, i, p.terms[e])
    if best is None:
        return Leading()
    return Leading(best[1], best[3], best[2])
