"""Exact arithmetic in bijective skew PBW extensions, right division and
right Groebner bases of submodules of A^m."""

from .scalars import QQ, QQi, I, GaussianRational
from .coeffring import (PolynomialRing, SkewPolynomialRing, RingEndo, RingDerivation,
                        RingMismatch, ring_is_invertible, ring_inverse,
                        solve_right_membership, right_syzygies)
from .order import OrderSpec, DEFAULT_ORDER, cmp_mono, cmp_vec_mono, leading, divides
from .algebra import SkewPBWExtension, Poly, Vec, AlgebraMismatch
from .parsing import ParseError, parse_algebra, parse_expr, parse_exprs, format_poly, format_vec
