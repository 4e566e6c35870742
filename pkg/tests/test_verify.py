import json
import math
import time

import pytest

from chordslide import (CurveSpec, ExactMatrix, check_riemann, cross_check,
                        cyclotomic_product_identity, make_root, period_matrix_direct)

# smallest eigenvalue of Im(tau), from numpy.linalg.eigvalsh on the float embedding
MARGINS = {
    ("klein", (7, 1, 2)): 0.3874613088388101,
    ("natural", (7, 1, 1)): 0.5461958535654948,
    ("chord_slide", (7, 1, 1)): 0.304395975779597,
}


@pytest.mark.parametrize("basis, spec", list(MARGINS))
def test_riemann_margins(basis, spec):
    report = check_riemann(period_matrix_direct(CurveSpec(*spec), basis), 128)
    assert report["symmetric"]
    assert report["posdef"] == "pass"
    assert report["pass"]
    assert report["margin"] == pytest.approx(MARGINS[basis, spec], abs=1e-12)


def test_klein_imaginary_diagonal():
    tau = period_matrix_direct(CurveSpec(7, 1, 2), "klein").tau
    unit = math.sqrt(7) / 8
    for k, expected in enumerate((3, 4, 3)):
        assert complex(tau[k, k]).imag == pytest.approx(expected * unit, rel=1e-14)


def test_asymmetric_input():
    z = make_root(7)
    m = ExactMatrix([[1 + z, z], [z ** 2, 1 + z]])
    report = check_riemann(m)
    assert not report["symmetric"]
    assert report["asymmetric_at"] == [1, 2]
    assert not report["pass"]


def test_negative_definite_fails():
    tau = period_matrix_direct(CurveSpec.hyperelliptic(7)).tau
    report = check_riemann(-tau)
    assert report["posdef"] == "fail"
    assert not report["pass"]


def test_real_matrix_is_inconclusive():
    report = check_riemann(ExactMatrix.identity(3))
    assert report["posdef"] == "inconclusive, raise precision"
    assert not report["pass"]


@pytest.mark.parametrize("bits", [64, 128, 256, 512])
def test_verdict_stable_across_precision(bits):
    res = period_matrix_direct(CurveSpec.hyperelliptic(11))
    assert check_riemann(res, bits)["posdef"] == "pass"


@pytest.mark.parametrize("q", [5, 7, 9, 15, 33])
def test_product_identity(q):
    assert cyclotomic_product_identity(q)


@pytest.mark.parametrize("g", [2, 3])
def test_cross_check_passes(g):
    report = cross_check(g)
    failed = [c["name"] for c in report["checks"] if not c["pass"]]
    assert failed == []
    assert report["pass"]
    assert (report["g"], report["q"], report["precision_bits"]) == (g, 2 * g + 1, 128)
    json.dumps(report)


def test_cross_check_contents():
    report = cross_check(3)
    names = [c["name"] for c in report["checks"]]
    for expected in ("cq1_reduction_symplectic", "H_structure", "closed_form_eq_direct",
                     "tau_cs_relation", "schindler_eq_LtauL", "cyclotomic_product_identity",
                     "riemann_natural_direct", "riemann_chord_slide_direct"):
        assert expected in names
    closed = next(c for c in report["checks"] if c["name"] == "closed_form_eq_direct")
    assert closed["j_hat_variant_matches"] is False
    assert closed["j_hat_first_difference"] == [1, 1]


def test_cross_check_genus_bound():
    with pytest.raises(ValueError):
        cross_check(1)


def test_cross_check_genus_fifteen():
    t0 = time.perf_counter()
    report = cross_check(15)
    elapsed = time.perf_counter() - t0
    assert report["pass"], [c["name"] for c in report["checks"] if not c["pass"]]
    assert elapsed < 60
