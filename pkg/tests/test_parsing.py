import random

import pytest

from skewpbw.datasets import ALGEBRAS, load_algebra, read_text
from skewpbw.parsing import (ParseError, format_poly, parse_algebra, parse_expr, parse_exprs,
                             split_exprs)

from helpers import rand_poly, rand_vec


def test_shipped_algebras_parse():
    D = load_algebra("diffusion")
    assert D.names == ("D1", "D2") and D.ring.names == ("x1", "x2")
    B = load_algebra("iterated")
    assert B.names == ("x", "y", "z") and B.ring.phi == "conj"


def test_missing_relation_commutes():
    A = parse_algebra("algebra T\ncoeff Q\nvars a b\n")
    assert parse_expr("b*a", A) == parse_expr("a*b", A)


def test_expression_examples():
    D = load_algebra("diffusion")
    f = parse_expr("x1*x2^2*D1^2*D2 + x1^2*x2*D2", D)
    assert str(f) == "x1*x2^2*D1^2*D2 + x1^2*x2*D2"
    assert str(parse_expr("D2*D1", D)) == "2*D1*D2 + x2*D1 - x1*D2"
    z = parse_expr("[0,0]", D)
    assert z.m == 2 and not z
    assert parse_expr("D1/2 - (x1 + 1)^2", D) == parse_expr("1/2*D1 - x1^2 - 2*x1 - 1", D)
    assert parse_expr("x1**2 D1", D) == parse_expr("x1^2*D1", D)


@pytest.mark.parametrize("text, line, col", [
    ("algebra A\ncoeff Q\nvars x y\nrel x * y = 2*x*y\n", 4, 5),
    ("algebra A\ncoeff Q\nvars x y\nrel y * x = 0*x*y\n", 4, None),
    ("algebra A\ncoeff Q\nvars x y\nrel y * x = x*y + x*x\n", 4, None),
    ("algebra A\ncoeff Q\nvars x\nsigma x : t -> t\n", 4, None),
    ("algebra A\ncoeff cpoly Q t\nvars D\nsigma D : t -> t + t^2\n", None, None),
    ("algebra A\ncoeff Q\nvars x\nfoo\n", 4, 1),
    ("algebra A\ncoeff Q\nvars x\nrel x * q = 1\n", 4, None),
    ("algebra A\ncoeff Q\nvars x y\nrel y * x = i*x*y\n", 4, None),
    ("algebra A\ncoeff Z\nvars x\n", 2, 1),
])
def test_algebra_errors_carry_locations(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse_algebra(text)
    if line is not None:
        assert exc.value.line == line
    if col is not None:
        assert exc.value.col == col


def test_sigmainv_lines():
    text = ("algebra P\ncoeff cpoly Q s t\nvars D\n"
            "sigma D : s -> t, t -> s\nsigmainv D : s -> t, t -> s\n")
    A = parse_algebra(text)
    s, t = A.ring.gens
    assert A.mul_mono_coeff((1,), s)[0] == t


def test_expression_errors():
    D = load_algebra("diffusion")
    with pytest.raises(ParseError, match="unknown symbol"):
        parse_expr("D3", D)
    with pytest.raises(ParseError, match="imaginary"):
        parse_expr("i*D1", D)
    with pytest.raises(ParseError):
        parse_expr("D1 +", D)
    with pytest.raises(ParseError, match="expected 3"):
        parse_expr("[1, 2]", D, rank=3)
    with pytest.raises(ParseError) as exc:
        parse_expr("D1 $ D2", D)
    assert exc.value.col == 4


def test_split_exprs_joins_brackets():
    items = split_exprs("# comment\n[1,\n 2]\n\nx + 1  # tail\n")
    assert items == [(2, "[1,  2]"), (5, "x + 1")]
    with pytest.raises(ParseError):
        split_exprs("[1, 2\n")


@pytest.mark.parametrize("name", ALGEBRAS)
def test_round_trip(name):
    A = load_algebra(name)
    rng = random.Random(11)
    for _ in range(30):
        p = rand_poly(rng, A, deg=3, terms=4, rdeg=2)
        assert parse_expr(str(p), A) == p
        v = rand_vec(rng, A, 3)
        assert parse_expr(str(v), A) == v


def test_round_trip_corpus():
    B = load_algebra("iterated")
    for name in ("iterated_F", "iterated_v", "iterated_h", "iterated_basis"):
        for v in parse_exprs(read_text(name + ".txt"), B):
            assert parse_expr(str(v), B) == v


def test_format_order():
    B = load_algebra("iterated")
    p = parse_expr("w + x*z + y^2", B)
    from skewpbw.order import OrderSpec
    assert format_poly(p) == "x*z + y^2 + w"
    assert format_poly(p, OrderSpec("degrevlex")) == "y^2 + x*z + w"
