"""
Period matrices of y^q = x (1 - x)
==================================

Every period of dx / y^n is a cyclotomic multiple of one beta-function
value, which cancels in tau = Omega_A^-1 Omega_B.  So tau is exact.
"""

from chordslide import (CurveSpec, period_matrix_closed_form, period_matrix_direct,
                        reduce_Cq1, schindler_tau, transform_cs)

g = 3
spec = CurveSpec.hyperelliptic(2 * g + 1)

T, record = reduce_Cq1(g)
print(f"chord-slide basis for {spec} uses {len(record.moves)} slides")
print(T)

natural = period_matrix_direct(spec, "natural")
print("\n" + natural.to_text())

# the closed form needs no elimination at all
print("\nclosed form agrees:", period_matrix_closed_form(g).tau == natural.tau)

# change of symplectic basis: tau_CS = -tau^-1 + I
cs = period_matrix_direct(spec, "chord_slide")
print("tau_CS = -tau^-1 + I:", transform_cs(natural).tau == cs.tau)
print("\n" + cs.to_latex())

# Schindler's recurrence lands on the reversed ordering
print("\nSchindler recurrence:")
print(schindler_tau(g).to_text())

# numerics on request
for row in natural.numeric(64):
    print("  ".join(f"{complex(x):.6f}" for x in row))
