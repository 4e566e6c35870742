"""Riemann-relation checks and the end-to-end cross-check report.

Reports are plain dicts ready for ``json.dumps``.
"""

from __future__ import annotations

import time

import mpmath

from .cyclo import DEFAULT_PRECISION, CycloNum, make_root
from .homology import (CurveSpec, ReductionError, basis_change_H, block_J, intersection_matrix,
                       natural_basis_K, reduce_Cq1_full, reversal_L)
from .linalg import ExactMatrix, congruence, is_symplectic_Z, standard_symplectic
from .periods import (PeriodResult, first_difference, period_matrix_closed_form,
                      period_matrix_direct, schindler_tau, symplectic_action,
                      transform_cs, transform_schindler)


def _matrix(tau) -> ExactMatrix:
    return tau.tau if isinstance(tau, PeriodResult) else tau


def check_riemann(tau, precision_bits: int = DEFAULT_PRECISION) -> dict:
    """Exact symmetry plus numerical positive definiteness of Im(tau).

    Im(tau) is judged by its smallest eigenvalue at ``precision_bits``; a
    margin below 2^(-precision_bits/2) is reported as inconclusive.
    """
    m = _matrix(tau)
    bad = m.first_asymmetry()
    report = {"symmetric": bad is None}
    if bad is not None:
        report["asymmetric_at"] = list(bad)
    threshold = mpmath.mpf(2) ** (-precision_bits // 2)
    with mpmath.workprec(precision_bits):
        im = mpmath.matrix(m.rows, m.cols)
        for i in range(m.rows):
            for j in range(m.cols):
                x = m[i, j]
                im[i, j] = x.embed(precision_bits).im if isinstance(x, CycloNum) else 0
        sym = (im + im.T) / 2
        eigs = mpmath.eigsy(sym, eigvals_only=True)
        margin = min(eigs)
    report["min_eigenvalue"] = mpmath.nstr(margin, 15)
    report["margin"] = float(margin)
    report["threshold"] = float(threshold)
    if margin > threshold:
        report["posdef"] = "pass"
    elif margin < -threshold:
        report["posdef"] = "fail"
    else:
        report["posdef"] = "inconclusive, raise precision"
    report["pass"] = report["symmetric"] and report["posdef"] == "pass"
    return report


def cyclotomic_product_identity(q: int) -> bool:
    """prod_{l=1}^{q-1} (1 - zeta^l) == q."""
    acc = CycloNum.one(q)
    for l in range(1, q):
        acc = acc * (1 - make_root(q, l))
    return acc == q


def _check(name: str, fn) -> dict:
    t0 = time.perf_counter()
    try:
        entry = fn()
        if isinstance(entry, bool):
            entry = {"pass": entry}
    except (ArithmeticError, ReductionError, ValueError) as exc:
        entry = {"pass": False, "error": f"{type(exc).__name__}: {exc}"}
    entry = {"name": name, **entry}
    entry["seconds"] = round(time.perf_counter() - t0, 4)
    return entry


def cross_check(g: int, precision_bits: int = DEFAULT_PRECISION) -> dict:
    """Run every identity for C_{2g+1,1} and collect pass/fail entries."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    q = 2 * g + 1
    spec = CurveSpec.hyperelliptic(q)
    a = intersection_matrix(spec)
    checks = []
    cache = {}

    def reduction():
        r = reduce_Cq1_full(g)
        cache["T"] = r.T
        return {"pass": r.stages["final"] == block_J(g)
                and congruence(r.T, a) == standard_symplectic(g)}

    checks.append(_check("cq1_reduction_symplectic", reduction))
    checks.append(_check("natural_basis_symplectic",
                         lambda: congruence(natural_basis_K(g), a) == standard_symplectic(g)))

    def h_structure():
        h = basis_change_H(g)
        i, o = ExactMatrix.identity(g), ExactMatrix.zeros(g)
        expected = ExactMatrix.block([[o, i], [-i, -i]])
        cache["H"] = h
        return {"pass": h == expected and is_symplectic_Z(h)}

    checks.append(_check("H_structure", h_structure))

    def bases_differ():
        t = cache["T"] if "T" in cache else reduce_Cq1_full(g).T
        rows_t = {tuple(r) for r in t.tolist()}
        rows_k = {tuple(r) for r in natural_basis_K(g).tolist()}
        return {"pass": rows_t != rows_k}

    checks.append(_check("bases_differ", bases_differ))

    def direct():
        cache["direct"] = period_matrix_direct(spec, "natural")
        return True

    checks.append(_check("direct_period_matrix", direct))

    def closed_form():
        d = cache["direct"].tau
        c = period_matrix_closed_form(g, "k")
        cache["closed"] = c
        entry = {"pass": c.tau == d}
        diff = first_difference(period_matrix_closed_form(g, "j").tau, d)
        entry["j_hat_variant_matches"] = diff is None
        if diff is not None:
            entry["j_hat_first_difference"] = [diff[0], diff[1]]
        return entry

    checks.append(_check("closed_form_eq_direct", closed_form))

    def cs_relation():
        nat = cache["direct"]
        cs = period_matrix_direct(spec, "chord_slide")
        cache["cs"] = cs
        via = transform_cs(nat)
        h = cache["H"] if "H" in cache else basis_change_H(g)
        action = symplectic_action(nat.tau, h)
        return {"pass": via.tau == cs.tau and action == cs.tau}

    checks.append(_check("tau_cs_relation", cs_relation))

    def schindler():
        s = schindler_tau(g)
        cache["schindler"] = s
        expected = transform_schindler(cache["direct"]).tau
        diff = first_difference(s.tau, expected)
        entry = {"pass": diff is None}
        if diff is not None:
            entry["first_difference"] = [diff[0], diff[1]]
        return entry

    checks.append(_check("schindler_eq_LtauL", schindler))
    checks.append(_check("cyclotomic_product_identity", lambda: cyclotomic_product_identity(q)))
    checks.append(_check("L_involution", lambda: reversal_L(g) @ reversal_L(g) == ExactMatrix.identity(g)))

    for key in ("direct", "closed", "cs", "schindler"):
        if key in cache:
            res = cache[key]

            def riemann(res=res):
                r = check_riemann(res, precision_bits)
                return {"pass": r["pass"], "margin": f"{r['margin']:.3e}"}

            checks.append(_check(f"riemann_{res.basis}_{res.construction}", riemann))

    return {"g": g, "q": q, "precision_bits": precision_bits,
            "pass": all(c["pass"] for c in checks), "checks": checks}
