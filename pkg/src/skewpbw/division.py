"""Right reduction and the right division algorithm in A^m.

A one-step reduction of ``f`` by ``F`` picks the generators whose leading
monomial divides ``lm(f)`` (same index, ``beta_j <= lambda``), solves

    lc(f) = sum_j lc(f_j) c_{beta_j, alpha_j} s_j

in the coefficient ring, and subtracts ``sum_j f_j r_j x^{alpha_j}`` with
``r_j = psi^{-1}_{beta_j, alpha_j}(s_j)``.  Division iterates this until
the leading monomial is no longer divisible or the equation has no
solution.
"""

from dataclasses import dataclass, field

from .algebra import AlgebraMismatch, Vec
from .order import DEFAULT_ORDER, divides, leading, quotient_exponent

__all__ = ["Witness", "ReductionStep", "DivisionResult", "is_reducible", "reduce_once",
           "divide", "check_one_step", "shifted_step", "as_vectors"]


@dataclass(frozen=True)
class Witness:
    """Evidence that ``f`` is reducible: the indices J, exponents and coefficients."""

    J: tuple
    betas: tuple
    alphas: tuple
    s: tuple
    r: tuple


@dataclass(frozen=True)
class ReductionStep:
    """``after = before - sum f_i r_i x^{alpha_i}`` over ``participants``."""

    participants: tuple   # (generator index, r_i, alpha_i)
    before: Vec
    after: Vec


@dataclass
class DivisionResult:
    quotients: list
    remainder: Vec
    steps: list = field(default_factory=list)

    def __iter__(self):
        return iter((self.quotients, self.remainder))


def as_vectors(f, F):
    """Promote polynomials to rank-1 vectors and check algebra and rank."""
    from .algebra import Poly
    if isinstance(f, Poly):
        f = f.alg.vector([f])
    F = [g.alg.vector([g]) if isinstance(g, Poly) else g for g in F]
    for g in F:
        if not isinstance(g, Vec):
            raise TypeError("generators must be vectors or polynomials")
        if g.alg is not f.alg or g.m != f.m:
            raise AlgebraMismatch("generators and dividend differ in algebra or rank")
        if not g:
            raise ValueError("generators must be nonzero")
    return f, F


def _leads(F, spec):
    return [leading(g, spec) for g in F]


def is_reducible(f, F, spec=DEFAULT_ORDER):
    """A :class:`Witness` of a one-step reduction of ``f`` by ``F``, or ``None``."""
    f, F = as_vectors(f, F)
    return _witness(f, _leads(F, spec), spec)


def _witness(f, leads, spec):
    if not f:
        return None
    alg = f.alg
    lf = leading(f, spec)
    J, betas, alphas, row = [], [], [], []
    for j, lg in enumerate(leads):
        if lg.index == lf.index and divides(lg.lm, lf.lm):
            a = quotient_exponent(lg.lm, lf.lm)
            J.append(j)
            betas.append(lg.lm)
            alphas.append(a)
            row.append(lg.lc * alg.c(lg.lm, a))
    if not J:
        return None
    s = alg.ring.solve_right(lf.lc, row)
    if s is None:
        return None
    r = [alg.psi_inv(b, a, sj) for b, a, sj in zip(betas, alphas, s)]
    return Witness(tuple(J), tuple(betas), tuple(alphas), tuple(s), tuple(r))


def _apply(f, F, w):
    alg = f.alg
    h = f
    parts = []
    for j, a, r in zip(w.J, w.alphas, w.r):
        if not r:
            continue
        h = h - F[j] * alg.monomial(a, r)
        parts.append((j, r, a))
    return h, tuple(parts)


def reduce_once(f, F, spec=DEFAULT_ORDER, witness=None):
    """Perform one reduction step; returns ``(h, ReductionStep)``."""
    f, F = as_vectors(f, F)
    w = witness or is_reducible(f, F, spec)
    if w is None:
        raise ValueError("vector is reduced with respect to F")
    h, parts = _apply(f, F, w)
    return h, ReductionStep(parts, f, h)


def divide(f, F, spec=DEFAULT_ORDER, trace=False):
    """Right division: ``f = sum F_j q_j + h`` with ``h`` reduced by ``F``.

    Follows the division loop exactly, including stopping when the
    leading-coefficient equation has no solution.
    """
    f, F = as_vectors(f, F)
    alg = f.alg
    q = [alg.zero] * len(F)
    h = f
    steps = []
    leads = _leads(F, spec)
    while h:
        w = _witness(h, leads, spec)
        if w is None:
            break
        nh, parts = _apply(h, F, w)
        for j, r, a in parts:
            q[j] = q[j] + alg.monomial(a, r)
        if trace:
            steps.append(ReductionStep(parts, h, nh))
        h = nh
    return DivisionResult(q, h, steps)


def check_one_step(before, after, participants, F, spec=DEFAULT_ORDER):
    """Verify that ``before -> after`` is a valid one-step reduction by ``F``.

    Checks divisibility of leading monomials, the leading-coefficient
    identity ``lc(before) = sum lc(f_i) sigma^{beta_i}(r_i) c_{beta_i, alpha_i}``,
    the update ``after = before - sum f_i r_i x^{alpha_i}`` and the strict
    drop of the leading monomial.
    """
    before, F = as_vectors(before, F)
    alg = before.alg
    lb = leading(before, spec)
    if lb.is_zero or not participants:
        return False
    total = alg.ring.zero
    expect = before
    for j, r, a in participants:
        lg = leading(F[j], spec)
        if lg.index != lb.index or not divides(lg.lm, lb.lm):
            return False
        if quotient_exponent(lg.lm, lb.lm) != tuple(a):
            return False
        total = total + lg.lc * alg.sigma_pow(lg.lm, r) * alg.c(lg.lm, a)
        expect = expect - F[j] * alg.monomial(a, r)
    if total != lb.lc or expect != after:
        return False
    la = leading(after, spec)
    return la.is_zero or spec.vec_key(la.lm, la.index) < spec.vec_key(lb.lm, lb.index)


def shifted_step(step, F, theta):
    """Lift a recorded step along ``x^theta``.

    With ``x^{alpha_i} x^theta = c_i x^{alpha_i+theta} + p_i`` and
    ``p = -sum f_i r_i p_i``, the vector ``f x^theta + p`` reduces in one
    step to ``h x^theta`` using coefficients ``r_i c_i`` at exponents
    ``alpha_i + theta``.  Returns ``(start, end, participants)``.
    """
    alg = step.before.alg
    theta = tuple(theta)
    xt = alg.monomial(theta)
    p = alg.zero_vector(step.before.m)
    parts = []
    for j, r, a in step.participants:
        c, tail = alg.mul_mono_mono(a, theta)
        p = p - F[j] * (alg.const(r) * tail)
        parts.append((j, r * c, tuple(x + y for x, y in zip(a, theta))))
    return step.before * xt + p, step.after * xt, tuple(parts)
