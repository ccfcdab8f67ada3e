"""The diffusion-algebra example over Q[x1, x2].

The printed run claims remainder 0 with quotients g1, g2, g3.  Here the
division is carried out, the printed quotients are multiplied back, and a
degree-bounded linear search asks whether f lies in the right ideal at all.
Run with ``python3 demos/03_diffusion_example.py``.
"""

from skewpbw.datasets import load_algebra, load_exprs
from skewpbw.division import divide
from skewpbw.oracle import linear_membership

D = load_algebra("diffusion")
f = load_exprs("diffusion_f", D)[0]
F = load_exprs("diffusion_F", D)
g = load_exprs("diffusion_g", D)

print("D2*D1 =", D.var("D2") * D.var("D1"))
q, h = divide(f, F)
for k, qk in enumerate(q, 1):
    print(f"q{k} = {qk}")
print("h =", h.components[0])

back = sum((fi * gi for fi, gi in zip(F, g)), D.zero)
print("\nf1 g1 + f2 g2 + f3 g3 with the printed quotients:")
print("  ", back)
print("equals f:", back == f)

for bound in range(4):
    print(f"f in the right ideal with quotients of degree <= {bound}:",
          linear_membership(f, F, bound).status)
