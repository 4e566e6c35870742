"""Period matrices of y^p = x^l (1-x)^m over Q(zeta_p).

Each holomorphic form dx x^a (1-x)^b / y^n is an eigenvector of the deck
transformation, so its period over c_j is (1 - zeta^(e j)) times its integral
over I_0, with e = (p - n) mod p.  Dividing every form by that integral only
rescales rows of (Omega_A, Omega_B) and leaves Omega_A^-1 Omega_B unchanged,
so the beta-function values are never needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import DEFAULT_PRECISION, CycloNum, make_root
from .homology import (CurveSpec, natural_basis_K, reduce_Cq1, reduce_generic,
                       reduce_klein, intersection_matrix, reversal_L, schindler_basis)
from .linalg import ExactMatrix, SingularMatrixError, solve, sym_poly

BASES = ("natural", "chord_slide", "schindler", "klein", "generic")
CONSTRUCTIONS = ("direct", "closed_form", "recurrence", "transform")


@dataclass(frozen=True)
class FormDescriptor:
    """The form x^alpha_l (1-x)^alpha_m x^d dx / y^n on y^p = x^l (1-x)^m."""

    p: int
    n: int
    d: int
    alpha_l: int
    alpha_m: int

    @property
    def eigen_exponent(self) -> int:
        return (self.p - self.n) % self.p

    def __str__(self) -> str:
        num = []
        if self.alpha_l + self.d:
            num.append(f"x^{self.alpha_l + self.d}")
        if self.alpha_m:
            num.append(f"(1-x)^{self.alpha_m}")
        return f"{' '.join(num) or '1'} dx / y^{self.n}"


def holomorphic_basis(spec: CurveSpec) -> list[FormDescriptor]:
    """All (n, d) with 0 <= d <= d_n, in ascending order."""
    p, l, m = spec.p, spec.l, spec.m
    forms = []
    for n in range(1, p):
        al, am = n * l // p, n * m // p
        dn = n * (l + m) // p - al - am - 1
        for d in range(dn + 1):
            forms.append(FormDescriptor(p, n, d, al, am))
    if len(forms) != spec.genus:
        raise ArithmeticError(f"found {len(forms)} forms, expected genus {spec.genus}")
    return forms


def hyperelliptic_forms(q: int) -> list[FormDescriptor]:
    """dx / y^(q-i) for i = 1..g, the basis used for C_{q,1}."""
    return [FormDescriptor(q, q - i, 0, 0, 0) for i in range(1, (q - 1) // 2 + 1)]


def normalized_period(form: FormDescriptor, j: int) -> CycloNum:
    """Period over c_j of the form scaled to have integral 1 over I_0."""
    if j % form.p == 0:
        return CycloNum.zero(form.p)
    return 1 - make_root(form.p, form.eigen_exponent * j)


def loop_periods(spec: CurveSpec, forms: list[FormDescriptor] | None = None) -> ExactMatrix:
    """g x 2g matrix of normalized periods over c_1..c_{2g}.

    Rows are ordered by eigen-exponent unless ``forms`` is given.
    """
    if forms is None:
        forms = sorted(holomorphic_basis(spec), key=lambda f: f.eigen_exponent)
    return ExactMatrix([[normalized_period(f, j) for j in range(1, spec.p)] for f in forms])


def period_blocks(spec: CurveSpec, basis: ExactMatrix,
                  forms: list[FormDescriptor] | None = None,
                  scaling: list | None = None) -> tuple[ExactMatrix, ExactMatrix]:
    """(Omega_A, Omega_B) = (periods over c_j) . basis^T, split in half.

    ``scaling`` multiplies form i by scaling[i]; it exists to exercise the
    normalization invariance.
    """
    n = spec.p - 1
    if basis.shape != (n, n):
        raise ValueError(f"basis must be {n}x{n}, got {basis.shape}")
    raw = loop_periods(spec, forms)
    if scaling is not None:
        raw = ExactMatrix.diagonal(scaling) @ raw
    return (raw @ basis.T).hsplit()


@dataclass(frozen=True)
class PeriodResult:
    tau: ExactMatrix
    curve: CurveSpec
    basis: str
    construction: str

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.construction not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction {self.construction!r}")

    @property
    def q(self) -> int:
        return self.curve.p

    @property
    def genus(self) -> int:
        return self.tau.rows

    def numeric(self, precision_bits: int = DEFAULT_PRECISION):
        return [[x.embed(precision_bits) for x in r] for r in self.tau.tolist()]

    def to_json(self, numeric_bits: int | None = None) -> dict:
        data = {
            "curve": self.curve.to_json(),
            "basis": self.basis,
            "construction": self.construction,
            "q": self.q,
            "tau": [[x.to_json() for x in r] for r in self.tau.tolist()],
        }
        if numeric_bits:
            data["tau_numeric"] = [[[str(z.re), str(z.im)] for z in r]
                                   for r in self.numeric(numeric_bits)]
        return data

    def to_latex(self) -> str:
        return self.tau.to_latex()

    def to_text(self) -> str:
        lines = [f"# q = {self.q}, z = exp(2 pi i / {self.q})",
                 f"# curve {self.curve}; basis {self.basis}; construction {self.construction}"]
        for i, r in enumerate(self.tau.tolist(), 1):
            for j, x in enumerate(r, 1):
                lines.append(f"tau[{i},{j}] = {x}")
        return "\n".join(lines)


def basis_matrix(spec: CurveSpec, basis: str) -> ExactMatrix:
    if basis in ("natural", "chord_slide", "schindler"):
        if not spec.is_hyperelliptic:
            raise ValueError(f"basis {basis!r} is only defined for C_{{q,1}}")
        g = spec.genus
        if basis == "natural":
            return natural_basis_K(g)
        if basis == "schindler":
            return schindler_basis(g)
        return reduce_Cq1(g)[0]
    if basis == "klein":
        if not spec.is_klein:
            raise ValueError("basis 'klein' is only defined for (p, l, m) = (7, 1, 2)")
        return reduce_klein().T
    if basis == "generic":
        return reduce_generic(intersection_matrix(spec))
    raise ValueError(f"unknown basis {basis!r}")


def forms_for(spec: CurveSpec):
    """Form ordering used for period matrices: dx/y^(q-i) on C_{q,1}, else by eigen-exponent."""
    if spec.is_hyperelliptic:
        return hyperelliptic_forms(spec.p)
    return None


def period_matrix_direct(spec: CurveSpec, basis: str = "natural") -> PeriodResult:
    """tau = Omega_A^-1 Omega_B for the named symplectic basis."""
    oa, ob = period_blocks(spec, basis_matrix(spec, basis), forms_for(spec))
    try:
        tau = solve(oa, ob)
    except SingularMatrixError as exc:
        raise SingularMatrixError(exc.column, f"Omega_A is singular for {spec} in basis {basis}") from exc
    res = PeriodResult(tau, spec, basis, "direct")
    _assert_symmetric(res)
    return res


def _assert_symmetric(res: PeriodResult) -> None:
    bad = res.tau.first_asymmetry()
    if bad is not None:
        raise ArithmeticError(f"period matrix is not symmetric at {bad}")


class _ClosedForm:
    """Shared factors of the closed-form tau_g, computed once per genus."""

    def __init__(self, g: int):
        q = 2 * g + 1
        self.g, self.q = g, q
        self.z = [make_root(q, e) for e in range(q)]
        self.z2 = [self.z[(2 * t) % q] for t in range(1, g + 1)]
        self.prods = [None]
        for k in range(1, g + 1):
            prod = CycloNum.one(q)
            for m in range(g - k + 1, 2 * g - k + 1):
                prod = prod * (1 - self.z[(2 * m) % q])
            self.prods.append(prod)
        self._sym = {}

    def sym(self, i: int, drop: int) -> CycloNum:
        key = (i, drop)
        if key not in self._sym:
            rest = self.z2[:drop - 1] + self.z2[drop:]
            self._sym[key] = sym_poly(self.g - i, rest)
        return self._sym[key]

    def entry(self, i: int, j: int, hat: str) -> CycloNum:
        g, q = self.g, self.q
        total = CycloNum.zero(q)
        for k in range(1, g + 1):
            drop = k if hat == "k" else j
            total = total + (1 - self.z[(2 * k * j) % q]) * self.sym(i, drop) * self.prods[k]
        return total * Fraction((-1) ** (i + g), q)


def closed_form_entry(g: int, i: int, j: int, hat: str = "k") -> CycloNum:
    """Entry (i, j) of the closed-form tau_g.

    ``hat='k'`` deletes zeta^(2k) inside the sum over k, as the
    Vandermonde inverse requires; ``hat='j'`` deletes zeta^(2j) for every k.
    """
    return _ClosedForm(g).entry(i, j, hat)


def period_matrix_closed_form(g: int, hat: str = "k") -> PeriodResult:
    """tau_g of C_{2g+1,1} in the natural basis without any elimination."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    if hat not in ("k", "j"):
        raise ValueError("hat must be 'k' or 'j'")
    cf = _ClosedForm(g)
    tau = ExactMatrix.from_function(g, g, lambda i, j: cf.entry(i, j, hat))
    return PeriodResult(tau, CurveSpec.hyperelliptic(2 * g + 1), "natural", "closed_form")


def first_difference(a: ExactMatrix, b: ExactMatrix):
    """First 1-based (i, j, a_ij, b_ij) where a and b differ, or None."""
    for i in range(a.rows):
        for j in range(a.cols):
            if a[i, j] != b[i, j]:
                return (i + 1, j + 1, a[i, j], b[i, j])
    return None


def schindler_sequence(g: int) -> list[CycloNum]:
    """t_1..t_g of the Schindler recurrence in Q(zeta_{2g+1})."""
    q = 2 * g + 1
    z = make_root(q)
    t = [None, (-1) ** g * z ** (g * g)]
    t.append(t[1] * (1 - 1 / (1 + z)))
    for i in range(2, g):
        s = CycloNum.zero(q)
        for k in range(2, i + 1):
            s = s + z ** (g - i + k - 1) * t[k] * t[i - k + 2]
        t.append(t[1] * (1 - s) / (1 + z ** (-i)))
    return t[1:g + 1]


def schindler_tau(g: int) -> PeriodResult:
    """Period matrix from the Schindler recurrence."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    t = [None] + schindler_sequence(g)
    inv_t1 = 1 / t[1]

    def s(i, j):
        if i > j:
            i, j = j, i
        acc = CycloNum.zero(2 * g + 1)
        for k in range(1, i + 1):
            acc = acc + t[k] * t[j - i + k]
        return 1 - inv_t1 * acc

    tau = ExactMatrix.from_function(g, g, s)
    return PeriodResult(tau, CurveSpec.hyperelliptic(2 * g + 1), "schindler", "recurrence")


def symplectic_action(tau: ExactMatrix, m: ExactMatrix) -> ExactMatrix:
    """(P + tau R)^-1 (Q + tau S) for m = [[P, Q], [R, S]]."""
    g = tau.rows
    p, qq = m.submatrix(0, g, 0, g), m.submatrix(0, g, g, 2 * g)
    r, s = m.submatrix(g, 2 * g, 0, g), m.submatrix(g, 2 * g, g, 2 * g)
    return solve(p + tau @ r, qq + tau @ s)


def transform_cs(res: PeriodResult) -> PeriodResult:
    """Natural-basis tau to chord-slide-basis tau: -tau^-1 + I."""
    g = res.genus
    tau = solve(res.tau, -ExactMatrix.identity(g)) + ExactMatrix.identity(g)
    return PeriodResult(tau, res.curve, "chord_slide", "transform")


def transform_schindler(res: PeriodResult) -> PeriodResult:
    """L tau L; an involution swapping the natural and Schindler orderings."""
    l = reversal_L(res.genus)
    other = {"natural": "schindler", "schindler": "natural"}.get(res.basis, res.basis)
    return PeriodResult(l @ res.tau @ l, res.curve, other, "transform")
