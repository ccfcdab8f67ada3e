"""Algebras and inputs shipped with the package."""

from importlib import resources

from .parsing import parse_algebra, parse_exprs

__all__ = ["ALGEBRAS", "data_path", "load_algebra", "load_exprs", "read_text"]

ALGEBRAS = ("diffusion", "iterated", "commutative", "weyl", "qweyl", "conjplane", "sl2")


def data_path(name):
    return resources.files("skewpbw") / "data" / name


def read_text(name):
    return data_path(name).read_text(encoding="utf-8")


def load_algebra(name):
    """Parse ``data/<name>.alg``."""
    return parse_algebra(read_text(name + ".alg"))


def load_exprs(name, alg):
    """Parse every expression of ``data/<name>.txt`` over ``alg``."""
    return parse_exprs(read_text(name + ".txt"), alg)
