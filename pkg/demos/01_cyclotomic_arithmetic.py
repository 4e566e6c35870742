"""
Exact arithmetic in Q(zeta_q)
=============================

Elements are stored as polynomials in zeta reduced modulo the cyclotomic
polynomial, so equality is exact and composite orders work too.
"""

import mpmath

from chordslide import CycloNum, make_root

z = make_root(7)
xi = z + z ** 2 + z ** 4
print("xi          =", xi)
print("xi^2 + xi   =", xi * xi + xi)            # -2
print("xi numeric  =", complex(xi))             # (-1 + sqrt(-7)) / 2

# inverses come from the product of Galois conjugates
a = 1 - z
print("1/(1-z)     =", a.inverse())
print("check       =", a * a.inverse())

# prod_{l=1}^{q-1} (1 - zeta^l) = q, also for q = 9 and 15
for q in (7, 9, 15):
    acc = CycloNum.one(q)
    for l in range(1, q):
        acc = acc * (1 - make_root(q, l))
    print(f"q = {q:2d}: product = {acc}")

# high-precision embedding
print("Re zeta_7 at 200 bits:", mpmath.nstr(z.embed(200).re, 60))
