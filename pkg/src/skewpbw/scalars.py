"""Exact scalar fields: the rationals and the Gaussian rationals Q(i).

Rationals are plain :class:`fractions.Fraction` values.  Gaussian
rationals get a small immutable class of their own.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = ["Fraction", "GaussianRational", "QQ", "QQi", "RationalField",
           "GaussianRationalField", "I"]


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)


I = GaussianRational(0, 1)


def _fmt_rational(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_imag(q):
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return _fmt_rational(q) + "*i"


def format_scalar(c):
    """Render a rational or Gaussian rational, e.g. ``-1/2``, ``3*i``, ``1 - i``."""
    if isinstance(c, GaussianRational):
        if not c.im:
            return _fmt_rational(c.re)
        if not c.re:
            return _fmt_imag(c.im)
        im = _fmt_imag(abs(c.im))
        return f"{_fmt_rational(c.re)} {'-' if c.im < 0 else '+'} {im}"
    return _fmt_rational(_frac(c))


def scalar_is_compound(c):
    """True when the printed scalar is a sum and needs parentheses in a product."""
    return isinstance(c, GaussianRational) and bool(c.re) and bool(c.im)


class _Field:
    """Shared behaviour of the two scalar fields.

    A field is trivially right Groebner soluble: membership and syzygies
    are settled by pivoting on the first nonzero generator.
    """

    kind = "field"
    gens = ()
    names = ()

    def __contains__(self, a):
        raise NotImplementedError

    def check(self, a):
        if a not in self:
            raise TypeError(f"{a!r} is not an element of {self}")
        return a

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return bool(a)

    def inverse(self, a):
        if not a:
            raise ZeroDivisionError("zero is not invertible")
        return self.one / a

    def conj(self, a):
        return a

    @property
    def base(self):
        return self

    def scalar(self, c):
        return self(c)

    def solve_right(self, a, gens):
        for a_ in (a, *gens):
            self.check(a_)
        n = len(gens)
        for p, r in enumerate(gens):
            if r:
                out = [self.zero] * n
                out[p] = self.inverse(r) * a
                return out
        return [self.zero] * n if not a else None

    def right_syzygies(self, gens):
        for r in gens:
            self.check(r)
        n = len(gens)
        unit = [[self.one if i == j else self.zero for i in range(n)] for j in range(n)]
        pivot = next((p for p, r in enumerate(gens) if r), None)
        if pivot is None:
            return [tuple(e) for e in unit]
        inv = self.inverse(gens[pivot])
        out = []
        for j in range(n):
            if j == pivot:
                continue
            b = list(unit[j])
            b[pivot] = -(inv * gens[j])
            out.append(tuple(b))
        return out

    def terms(self, a):
        """Monomial expansion used by the linear oracle: ``{(): a}``."""
        return {(): a} if a else {}

    def monomial(self, exps, c):
        return self(c)

    def degree(self, a):
        return 0 if a else -1

    def format(self, a):
        return format_scalar(a)


class RationalField(_Field):
    has_i = False
    tag = "Q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, GaussianRational):
            if x.im:
                raise ValueError("imaginary unit is not in Q")
            return x.re
        return _frac(x)

    def __contains__(self, a):
        return isinstance(a, (Fraction, int)) and not isinstance(a, bool)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class GaussianRationalField(_Field):
    has_i = True
    tag = "Qi"

    def __init__(self):
        self.zero = GaussianRational(0)
        self.one = GaussianRational(1)
        self.i = I

    def __call__(self, x):
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_frac(x))

    def __contains__(self, a):
        return isinstance(a, GaussianRational)

    def conj(self, a):
        return a.conjugate()

    def __eq__(self, other):
        return isinstance(other, GaussianRationalField)

    def __hash__(self):
        return hash("Qi")

    def __repr__(self):
        return "QQi"


QQ = RationalField()
QQi = GaussianRationalField()
