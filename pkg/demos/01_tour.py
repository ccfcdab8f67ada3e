"""A short tour: define an algebra, multiply, divide, complete, decide membership.

Run with ``python3 demos/01_tour.py``.
"""

from skewpbw import parse_algebra, parse_expr
from skewpbw.buchberger import groebner, is_groebner, member, trim
from skewpbw.division import divide

# The enveloping algebra of sl2 over Q: three variables, no twist on scalars.
A = parse_algebra("""
algebra sl2
coeff Q
vars e f h
rel f * e = e*f - h
rel h * e = e*h + 2*e
rel h * f = f*h - 2*f
""")

# Products are rewritten into the ordered monomial basis.
print("h*f*e =", parse_expr("h*f*e", A))

# Right division of a polynomial by two others.
g1, g2 = parse_expr("e*f - h", A), parse_expr("e^2", A)
target = parse_expr("e^2*f*h + e*f + h^2", A)
q, r = divide(target, [g1, g2])
print("quotients:", [str(x) for x in q], " remainder:", r.components[0])

# Completing {g1, g2} to a right Groebner basis turns division into a membership test.
G = groebner([g1, g2])
print(f"basis has {len(G)} elements; is_groebner = {bool(is_groebner(G))}")
for k, g in enumerate(trim(G).basis, 1):
    print(f"  g{k} = {g.components[0]}")
probe = g1 * parse_expr("h + 3", A) + g2 * parse_expr("f", A)
print("g1*(h+3) + g2*f in the right ideal:", bool(member(probe, G)))
# Division by the original generators alone cannot see this.
eh = parse_expr("e*h + e", A)
print("e*h + e in the right ideal:", bool(member(eh, G)),
      "| remainder by g1, g2 only:", divide(eh, [g1, g2]).remainder.components[0])
print("1 in the right ideal:", bool(member(A.vector([A.one]), G)))
