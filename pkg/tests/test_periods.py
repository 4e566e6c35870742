import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import known
from chordslide import (CurveSpec, CycloNum, PeriodResult, basis_change_H,
                        holomorphic_basis, hyperelliptic_forms, make_root, normalized_period,
                        period_blocks, period_matrix_closed_form, period_matrix_direct,
                        reduce_Cq1, reduce_klein, reversal_L, schindler_sequence, schindler_tau,
                        symplectic_action, transform_cs, transform_schindler)
from chordslide.linalg import solve
from chordslide.periods import closed_form_entry, first_difference, loop_periods
from helpers import cmat, cyc

SPECS = [(5, 1, 1), (7, 1, 1), (7, 1, 2), (11, 1, 2), (11, 1, 3), (13, 2, 3), (13, 1, 4),
         (17, 3, 5), (19, 1, 1), (19, 2, 7)]


@pytest.fixture(scope="module")
def tau3():
    return period_matrix_direct(CurveSpec.hyperelliptic(7), "natural")


@pytest.mark.parametrize("spec", SPECS)
def test_holomorphic_basis_size_and_exponents(spec):
    s = CurveSpec(*spec)
    forms = holomorphic_basis(s)
    assert len(forms) == s.genus
    # every eigenspace is at most one-dimensional on these curves
    assert all(f.d == 0 for f in forms)
    assert len({f.eigen_exponent for f in forms}) == s.genus


def test_hyperelliptic_forms_exponents():
    assert [f.eigen_exponent for f in hyperelliptic_forms(7)] == [1, 2, 3]
    assert str(hyperelliptic_forms(7)[0]) == "1 dx / y^6"


def test_klein_forms():
    forms = holomorphic_basis(CurveSpec(7, 1, 2))
    assert sorted(f.eigen_exponent for f in forms) == [1, 2, 4]


def test_normalized_period(zeta7):
    f = hyperelliptic_forms(7)[1]
    assert normalized_period(f, 3) == 1 - zeta7 ** 6
    assert normalized_period(f, 7) == 0


def test_loop_periods_shape():
    m = loop_periods(CurveSpec(11, 1, 2))
    assert m.shape == (5, 10)


class TestSevenOne:
    def test_blocks(self):
        oa, ob = period_blocks(CurveSpec.hyperelliptic(7), reduce_Cq1(3)[0], hyperelliptic_forms(7))
        assert oa == cmat(known.A_1)
        assert ob == cmat(known.B_1)
        assert oa.det() == -7 * cyc("z^4+z^5")

    def test_tau_chord_slide(self):
        res = period_matrix_direct(CurveSpec.hyperelliptic(7), "chord_slide")
        assert res.tau == cmat(known.TAU_7_1)

    def test_tau_natural(self, tau3):
        assert tau3.tau == cmat(known.TAU_3)

    def test_cs_relation(self, tau3):
        assert transform_cs(tau3).tau == cmat(known.TAU_7_1)


class TestKlein:
    def test_blocks(self):
        oa, ob = period_blocks(CurveSpec(7, 1, 2), reduce_klein().T)
        assert oa == cmat(known.A_2)
        assert ob == cmat(known.B_2)
        assert oa.det() == 7 * cyc("1-xi")

    @pytest.mark.parametrize("basis", ["klein", "generic"])
    def test_tau(self, basis):
        res = period_matrix_direct(CurveSpec(7, 1, 2), basis)
        assert res.tau == cmat(known.TAU_7_2_TIMES_4) * Fraction(1, 4)

    def test_tau_entries_in_quadratic_subfield(self, xi):
        tau = period_matrix_direct(CurveSpec(7, 1, 2), "klein").tau
        for row in tau.tolist():
            for x in row:
                assert x.galois(2) == x


@pytest.mark.parametrize("basis", ["natural", "chord_slide", "schindler"])
def test_hyperelliptic_only_bases(basis):
    with pytest.raises(ValueError):
        period_matrix_direct(CurveSpec(7, 1, 2), basis)


def test_klein_basis_needs_klein_curve():
    with pytest.raises(ValueError):
        period_matrix_direct(CurveSpec(11, 1, 2), "klein")


@pytest.mark.parametrize("spec", [(11, 1, 2), (13, 2, 3), (13, 1, 4), (9, 1, 1)])
def test_generic_basis_gives_symmetric_tau(spec):
    res = period_matrix_direct(CurveSpec(*spec), "generic")
    assert res.tau.is_symmetric()


@pytest.mark.parametrize("g", range(2, 8))
def test_closed_form_matches_direct(g):
    direct = period_matrix_direct(CurveSpec.hyperelliptic(2 * g + 1))
    assert period_matrix_closed_form(g).tau == direct.tau


def test_j_hat_variant_differs(tau3):
    alt = period_matrix_closed_form(3, hat="j")
    diff = first_difference(alt.tau, tau3.tau)
    assert diff is not None
    assert diff[:2] == (1, 1)


def test_closed_form_entry_agrees(tau3):
    assert closed_form_entry(3, 2, 3) == tau3.tau.entry(2, 3)


def test_closed_form_arguments():
    with pytest.raises(ValueError):
        period_matrix_closed_form(1)
    with pytest.raises(ValueError):
        period_matrix_closed_form(3, hat="i")


@pytest.mark.parametrize("g", range(2, 7))
def test_schindler_recurrence(g):
    nat = period_matrix_direct(CurveSpec.hyperelliptic(2 * g + 1))
    l = reversal_L(g)
    assert schindler_tau(g).tau == l @ nat.tau @ l
    assert transform_schindler(nat).basis == "schindler"


def test_schindler_basis_direct(tau3):
    s = period_matrix_direct(CurveSpec.hyperelliptic(7), "schindler")
    assert s.tau == schindler_tau(3).tau


def test_schindler_sequence_start(zeta7):
    t = schindler_sequence(3)
    assert t[0] == -zeta7 ** 9
    assert len(t) == 3


@pytest.mark.parametrize("g", range(2, 6))
def test_symplectic_action_with_H(g):
    nat = period_matrix_direct(CurveSpec.hyperelliptic(2 * g + 1))
    cs = period_matrix_direct(CurveSpec.hyperelliptic(2 * g + 1), "chord_slide")
    assert symplectic_action(nat.tau, basis_change_H(g)) == cs.tau
    assert transform_cs(nat).tau == cs.tau


def _nonzero_scalars(q, n):
    coeff = st.integers(min_value=-3, max_value=3)
    elem = st.lists(coeff, min_size=q - 1, max_size=q - 1).map(lambda cs: CycloNum(q, cs))
    return st.lists(elem.filter(lambda x: not x.is_zero()), min_size=n, max_size=n)


@settings(max_examples=15, deadline=None)
@given(_nonzero_scalars(7, 3))
def test_normalization_invariance_klein(scales):
    spec = CurveSpec(7, 1, 2)
    oa, ob = period_blocks(spec, reduce_klein().T, scaling=scales)
    assert solve(oa, ob) == period_matrix_direct(spec, "klein").tau


def test_period_result_validation(tau3):
    with pytest.raises(ValueError):
        PeriodResult(tau3.tau, tau3.curve, "bogus", "direct")
    with pytest.raises(ValueError):
        PeriodResult(tau3.tau, tau3.curve, "natural", "guess")


def test_period_result_json(tau3):
    data = tau3.to_json(numeric_bits=64)
    text = json.dumps(data)
    back = json.loads(text)
    assert back["basis"] == "natural" and back["construction"] == "direct" and back["q"] == 7
    assert back["curve"] == {"p": 7, "l": 1, "m": 1}
    entry = CycloNum.from_json(back["tau"][2][2])
    assert entry == 1 + make_root(7, 2)
    re_, im_ = back["tau_numeric"][2][2]
    assert abs(complex(float(re_), float(im_)) - complex(entry)) < 1e-12
    assert "tau_numeric" not in tau3.to_json()


def test_period_result_text_and_latex(tau3):
    text = tau3.to_text()
    assert text.splitlines()[0] == "# q = 7, z = exp(2 pi i / 7)"
    assert "tau[3,3] = 1 + z^2" in text
    latex = tau3.to_latex()
    assert latex.startswith("\\left(") and "1+\\zeta^{2}" in latex


def test_numeric_values(tau3):
    num = tau3.numeric(128)
    assert abs(complex(num[2][2]) - complex(1 + make_root(7, 2))) < 1e-15
