import random

import pytest
from hypothesis import given, strategies as st

from skewpbw.algebra import AlgebraMismatch
from skewpbw.datasets import ALGEBRAS, load_algebra, load_exprs
from skewpbw.division import (check_one_step, divide, is_reducible, reduce_once,
                              shifted_step)
from skewpbw.order import OrderSpec, leading

from helpers import rand_exp, rand_vec

ALG = {name: load_algebra(name) for name in ALGEBRAS}


def combine(F, q):
    out = F[0].alg.zero_vector(F[0].m)
    for f, c in zip(F, q):
        out = out + f * c
    return out


def lm_key(v, spec):
    ld = leading(v, spec)
    return None if ld.is_zero else spec.vec_key(ld.lm, ld.index)


def division_contract(f, F, spec):
    res = divide(f, F, spec, trace=True)
    assert combine(F, res.quotients) + res.remainder == f
    assert is_reducible(res.remainder, F, spec) is None
    # lm(f) = max{lm(lm(f_i) lm(q_i)), lm(h)}
    cands = [lm_key(res.remainder, spec)]
    for g, q in zip(F, res.quotients):
        if q:
            lg, lq = leading(g, spec), leading(q, spec)
            cands.append(spec.vec_key(tuple(a + b for a, b in zip(lg.lm, lq.lm)), lg.index))
    cands = [c for c in cands if c is not None]
    assert (max(cands) if cands else None) == lm_key(f, spec)
    keys = [lm_key(s.before, spec) for s in res.steps] + [lm_key(res.remainder, spec)]
    assert all(b is None or a > b for a, b in zip(keys, keys[1:]))
    return res


def test_zero_and_irreducible():
    A = ALG["commutative"]
    F = [A.vector([A.var("x")])]
    assert is_reducible(A.zero_vector(1), F) is None
    assert is_reducible(A.vector([A.var("y")]), F) is None
    res = divide(A.vector([A.var("y")]), F)
    assert not res.quotients[0] and res.remainder == A.vector([A.var("y")])


def test_single_generator_reduces_itself():
    A = ALG["iterated"]
    F = load_exprs("iterated_F", A)
    h, step = reduce_once(F[2], [F[2]])
    assert not h and step.participants[0][1] == A.ring.one


def test_reduce_once_requires_witness():
    A = ALG["commutative"]
    with pytest.raises(ValueError):
        reduce_once(A.vector([A.one]), [A.vector([A.var("x")])])


def test_mismatch():
    A, B = ALG["commutative"], ALG["sl2"]
    with pytest.raises(AlgebraMismatch):
        divide(A.vector([A.one]), [B.vector([B.one])])
    with pytest.raises(AlgebraMismatch):
        divide(A.vector([A.one]), [A.vector([A.one, A.one])])
    with pytest.raises(ValueError):
        divide(A.vector([A.one]), [A.zero_vector(1)])


def test_diffusion_first_step():
    D = ALG["diffusion"]
    f = load_exprs("diffusion_f", D)[0]
    F = load_exprs("diffusion_F", D)
    w = is_reducible(f, F)
    # every generator's leading monomial divides D1^2*D2
    assert w.J == (0, 1, 2)
    h, step = reduce_once(f, F)
    assert leading(h).lm != (2, 1)
    assert check_one_step(step.before, step.after, step.participants, F)


def test_iterated_division_reproduces_print():
    B = ALG["iterated"]
    F = load_exprs("iterated_F", B)
    v = load_exprs("iterated_v", B)[0]
    q = load_exprs("iterated_q", B)
    h = load_exprs("iterated_h", B)[0]
    res = division_contract(v, F, OrderSpec("deglex"))
    assert res.quotients == q and res.remainder == h


def test_insoluble_equation_stops():
    # over Q[x1,x2]: lc x1 is not in the right ideal generated by x2
    D = ALG["diffusion"]
    x1, x2 = D.ring.gens
    F = [D.vector([D.monomial((1, 0), x2)])]
    f = D.vector([D.monomial((1, 0), x1) + D.var("D2")])
    res = divide(f, F)
    assert res.remainder == f and not res.quotients[0]


@given(st.integers(0, 10 ** 6), st.sampled_from(ALGEBRAS),
       st.sampled_from(["deglex", "degrevlex"]), st.sampled_from(["top", "toprev"]))
def test_division_contract_random(seed, name, base, module):
    A = ALG[name]
    rng = random.Random(seed)
    m = rng.randint(1, 3)
    F = [rand_vec(rng, A, m, deg=2) for _ in range(rng.randint(1, 3))]
    f = rand_vec(rng, A, m, deg=3, terms=3)
    division_contract(f, F, OrderSpec(base, module))


@given(st.integers(0, 10 ** 6), st.sampled_from(["diffusion", "iterated", "sl2", "qweyl"]))
def test_shifted_step_is_one_step(seed, name):
    A = ALG[name]
    rng = random.Random(seed)
    F = [rand_vec(rng, A, 2, deg=2) for _ in range(3)]
    f = rand_vec(rng, A, 2, deg=3, terms=3)
    for step in divide(f, F, trace=True).steps[:3]:
        theta = rand_exp(rng, A.n, 2)
        start, end, parts = shifted_step(step, F, theta)
        assert check_one_step(start, end, parts, F)
