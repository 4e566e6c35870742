"""Symplectic bases and exact period matrices of cyclic covers of P^1.

The curves are y^p = x^l (1-x)^m branched over 0, 1 and infinity, with the
hyperelliptic family y^q = x(1-x) treated in closed form.
"""

from .cyclo import ComplexApprox, CycloNum, cyclotomic_polynomial, embed_complex, make_root
from .homology import (CurveSpec, Endpoint, LinearChordDiagram, Move, SlideRecord,
                       apply_slide, basis_change_H, block_J, intersection_matrix,
                       natural_basis_K, reduce_Cq1, reduce_Cq1_full, reduce_generic,
                       reduce_klein, reversal_L, symplectic_basis, transvection)
from .linalg import (ExactMatrix, SingularMatrixError, is_symplectic_Z, mat_det,
                     mat_inverse, mat_mul, solve, standard_symplectic, sym_poly,
                     vandermonde, vandermonde_inverse)
from .periods import (FormDescriptor, PeriodResult, holomorphic_basis, hyperelliptic_forms,
                      loop_periods, normalized_period,
                      period_blocks, period_matrix_closed_form, period_matrix_direct,
                      schindler_sequence, schindler_tau, symplectic_action,
                      transform_cs, transform_schindler)
from .verify import check_riemann, cross_check, cyclotomic_product_identity

__version__ = "0.1.0"

__all__ = [
    "ComplexApprox",
    "CycloNum",
    "cyclotomic_polynomial",
    "embed_complex",
    "make_root",
    "CurveSpec",
    "Endpoint",
    "LinearChordDiagram",
    "Move",
    "SlideRecord",
    "apply_slide",
    "basis_change_H",
    "block_J",
    "intersection_matrix",
    "natural_basis_K",
    "reduce_Cq1",
    "reduce_Cq1_full",
    "reduce_generic",
    "reduce_klein",
    "reversal_L",
    "symplectic_basis",
    "transvection",
    "ExactMatrix",
    "SingularMatrixError",
    "is_symplectic_Z",
    "mat_det",
    "mat_inverse",
    "mat_mul",
    "solve",
    "standard_symplectic",
    "sym_poly",
    "vandermonde",
    "vandermonde_inverse",
    "FormDescriptor",
    "PeriodResult",
    "holomorphic_basis",
    "hyperelliptic_forms",
    "loop_periods",
    "normalized_period",
    "period_blocks",
    "period_matrix_closed_form",
    "period_matrix_direct",
    "schindler_sequence",
    "schindler_tau",
    "symplectic_action",
    "transform_cs",
    "transform_schindler",
    "check_riemann",
    "cross_check",
    "cyclotomic_product_identity",
]
