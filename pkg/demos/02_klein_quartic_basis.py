"""
A symplectic basis for the Klein quartic
========================================

The curve y^7 = x (1-x)^2 has genus 3.  Its six loops c_1..c_6 meet
according to a skew-symmetric intersection matrix; six chord slides and a
reordering bring that matrix to [[0, I], [-I, 0]].
"""

from chordslide import CurveSpec, LinearChordDiagram, intersection_matrix, reduce_klein
from chordslide.homology import KLEIN_DIAGRAM_SLIDES
from chordslide.linalg import congruence

spec = CurveSpec(7, 1, 2)
A = intersection_matrix(spec)
print("intersection matrix A:")
print(A)

red = reduce_klein()
print("\nslides (chord, along, position):")
for mv in red.record.moves:
    print(f"  c_{mv.chord} along c_{mv.along}, {mv.position} position")
print("\nT:")
print(red.T)
print("\nT A T^t:")
print(congruence(red.T, A))

# the same slides, performed on the chord diagram itself
diagram = LinearChordDiagram.klein()
print("\ndiagram:", " ".join(diagram.labels()))
for step in KLEIN_DIAGRAM_SLIDES:
    diagram, mv = diagram.apply(step)
    print(f"  {step:8s} -> {' '.join(diagram.labels())}")
print("intersections agree with the homology bookkeeping:", diagram.is_consistent())
