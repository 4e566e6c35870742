import re
from fractions import Fraction

from chordslide import CycloNum, ExactMatrix, make_root

# criterion number -> PASS/FAIL line, filled by test_acceptance
ACCEPTANCE = {}

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(z|xi)?(?:\^\{?(\d+)\}?)?")


def cyc(text: str, q: int = 7) -> CycloNum:
    """Parse '4+z+2z^2-z^{10}' or '2+3xi' into Q(zeta_q).

    xi means z + z^2 + z^4 and is only meaningful for q = 7.
    """
    xi = make_root(q, 1) + make_root(q, 2) + make_root(q, 4)
    total = CycloNum.zero(q)
    text = text.replace(" ", "")
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        sign, coef, sym, exp = m.groups()
        c = Fraction(int(coef) if coef else 1) * (-1 if sign == "-" else 1)
        if sym is None:
            term = CycloNum.constant(q, c)
        else:
            base = make_root(q) if sym == "z" else xi
            term = base ** (int(exp) if exp else 1) * c
        total = total + term
        pos = m.end()
    return total


def cmat(rows, q: int = 7) -> ExactMatrix:
    return ExactMatrix([[cyc(x, q) for x in r] for r in rows])
