"""Dense exact matrices over Q or Q(zeta_q).

Entries are Python ints, Fractions or CycloNum values.  Integer and rational
matrices carry ``q = None`` and mix freely with cyclotomic ones; products
are promoted by the scalar types themselves.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .cyclo import CycloNum, as_cyclo


class SingularMatrixError(ZeroDivisionError):
    """Raised when elimination finds no pivot; ``column`` is the witness."""

    def __init__(self, column: int, message: str | None = None):
        self.column = column
        super().__init__(message or f"matrix is singular (no pivot in column {column})")


def _is_zero(x) -> bool:
    return x == 0


def _inv(x):
    if isinstance(x, CycloNum):
        return x.inverse()
    return Fraction(1) / x


def _clean(x):
    # demote integral Fractions so integer matrices stay integer
    if type(x) is int:
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _entry_q(x) -> int | None:
    return x.q if isinstance(x, CycloNum) else None


class ExactMatrix:
    """Immutable dense matrix with exact entries."""

    __slots__ = ("_rows", "rows", "cols", "q")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(_clean(x) for x in r) for r in rows)
        if not data or not data[0]:
            raise ValueError("matrix must be non-empty")
        ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        qs = {_entry_q(x) for r in data for x in r} - {None}
        if len(qs) > 1:
            raise ValueError(f"entries from different fields: q in {sorted(qs)}")
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "q", qs.pop() if qs else None)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def _trusted(cls, data: tuple, q: int | None) -> "ExactMatrix":
        # rows already cleaned and from a single field; skips validation
        m = object.__new__(cls)
        object.__setattr__(m, "_rows", data)
        object.__setattr__(m, "rows", len(data))
        object.__setattr__(m, "cols", len(data[0]))
        object.__setattr__(m, "q", q)
        return m

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_function(cls, rows: int, cols: int, f) -> "ExactMatrix":
        """Matrix with entry f(i, j), indices starting at 1."""
        return cls([[f(i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["ExactMatrix"]]) -> "ExactMatrix":
        out = []
        for brow in blocks:
            for r in range(brow[0].rows):
                row = []
                for b in brow:
                    row.extend(b._rows[r])
                out.append(row)
        return cls(out)

    @classmethod
    def permutation(cls, images: Sequence[int]) -> "ExactMatrix":
        """Row i of the result is e_{images[i]} (1-based)."""
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError("not a permutation of 1..n")
        return cls([[int(j + 1 == images[i]) for j in range(n)] for i in range(n)])

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def entry(self, i: int, j: int):
        """1-based access, matching matrix notation."""
        return self._rows[i - 1][j - 1]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._rows]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        return ExactMatrix([r[c0:c1] for r in self._rows[r0:r1]])

    def add_row(self, i: int, j: int, c) -> "ExactMatrix":
        """Row i += c * row j (1-based); the left action of a transvection."""
        rows = list(self._rows)
        ri, rj = rows[i - 1], rows[j - 1]
        rows[i - 1] = tuple(_clean(x + c * y) for x, y in zip(ri, rj))
        if isinstance(c, int):
            return ExactMatrix._trusted(tuple(rows), self.q)
        return ExactMatrix(rows)

    def add_col(self, i: int, j: int, c) -> "ExactMatrix":
        """Column i += c * column j (1-based)."""
        a, b = i - 1, j - 1
        rows = []
        for r in self._rows:
            r = list(r)
            r[a] = _clean(r[a] + c * r[b])
            rows.append(tuple(r))
        if isinstance(c, int):
            return ExactMatrix._trusted(tuple(rows), self.q)
        return ExactMatrix(rows)

    def hsplit(self) -> tuple["ExactMatrix", "ExactMatrix"]:
        h = self.cols // 2
        return self.submatrix(0, self.rows, 0, h), self.submatrix(0, self.rows, h, self.cols)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._trusted(tuple(zip(*self._rows)), self.q)

    def transpose(self) -> "ExactMatrix":
        return self.T

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_integer(self) -> bool:
        return all(isinstance(x, int) for r in self._rows for x in r)

    def is_symmetric(self) -> bool:
        return self.first_asymmetry() is None

    def first_asymmetry(self) -> tuple[int, int] | None:
        """First 1-based (i, j) with a_ij != a_ji, or None."""
        if not self.is_square():
            return (0, 0)
        for i in range(self.rows):
            for j in range(i + 1, self.cols):
                if self._rows[i][j] != self._rows[j][i]:
                    return (i + 1, j + 1)
        return None

    def is_skew_symmetric(self) -> bool:
        if not self.is_square():
            return False
        n = self.rows
        return all(self._rows[i][j] == -self._rows[j][i] for i in range(n) for j in range(i, n))

    def map(self, f) -> "ExactMatrix":
        return ExactMatrix([[f(x) for x in r] for r in self._rows])

    def to_field(self, q: int) -> "ExactMatrix":
        return self.map(lambda x: as_cyclo(x, q))

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self._rows, other._rows) for a, b in zip(ra, rb))

    def __hash__(self) -> int:
        return hash(self._rows)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return ExactMatrix([[a + b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self._rows, other._rows)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        return self.map(lambda x: -x)

    def scale(self, c) -> "ExactMatrix":
        return self.map(lambda x: c * x)

    def __mul__(self, c) -> "ExactMatrix":
        if isinstance(c, ExactMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def det(self):
        return mat_det(self)

    def inverse(self) -> "ExactMatrix":
        return mat_inverse(self)

    # -- output -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"ExactMatrix({[[str(x) for x in r] for r in self._rows]})"

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self._rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, CycloNum):
                return x.to_json()
            return str(x)
        return {"rows": self.rows, "cols": self.cols, "q": self.q,
                "entries": [[enc(x) for x in r] for r in self._rows]}

    @classmethod
    def from_json(cls, data: dict) -> "ExactMatrix":
        def dec(x):
            if isinstance(x, dict):
                return CycloNum.from_json(x)
            return Fraction(x)
        m = cls([[dec(x) for x in r] for r in data["entries"]])
        if m.shape != (data["rows"], data["cols"]):
            raise ValueError("shape metadata does not match entries")
        return m

    def int_rows(self) -> list[list[int]]:
        if not self.is_integer():
            raise ValueError("matrix has non-integer entries")
        return self.tolist()

    def to_latex(self) -> str:
        def cell(x):
            if isinstance(x, CycloNum):
                return x.to_latex()
            x = Fraction(x)
            if x.denominator == 1:
                return str(x.numerator)
            return r"\frac{%d}{%d}" % (x.numerator, x.denominator)
        body = " \\\\\n".join(" & ".join(cell(x) for x in r) for r in self._rows)
        return ("\\left(\n\\begin{array}{%s}\n%s\n\\end{array}\n\\right)"
                % ("c" * self.cols, body))


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    bt = b.T._rows
    out = []
    for ra in a._rows:
        nz = [(k, x) for k, x in enumerate(ra) if not _is_zero(x)]
        row = []
        for cb in bt:
            acc = 0
            for k, x in nz:
                y = cb[k]
                if not _is_zero(y):
                    acc = acc + x * y
            row.append(_clean(acc))
        out.append(tuple(row))
    if a.q is None and b.q is None:
        return ExactMatrix._trusted(tuple(out), None)
    return ExactMatrix(out)


def _find_pivot(m: list[list], col: int, start: int) -> int | None:
    for r in range(start, len(m)):
        if not _is_zero(m[r][col]):
            return r
    return None


def mat_det(a: ExactMatrix):
    """Determinant by elimination, pivoting on the first nonzero entry."""
    if not a.is_square():
        raise ValueError("determinant needs a square matrix")
    m = a.tolist()
    n = a.rows
    det = 1
    for c in range(n):
        p = _find_pivot(m, c, c)
        if p is None:
            return 0 if a.q is None else CycloNum.zero(a.q)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        piv = m[c][c]
        det = det * piv
        inv = _inv(piv)
        for r in range(c + 1, n):
            f = m[r][c]
            if _is_zero(f):
                continue
            f = f * inv
            m[r] = [x - f * y if not _is_zero(y) else x for x, y in zip(m[r], m[c])]
    return _clean(det)


def solve(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Return X with a @ X == b, by Gauss-Jordan elimination on [a | b]."""
    if not a.is_square():
        raise ValueError("coefficient matrix must be square")
    if a.rows != b.rows:
        raise ValueError(f"cannot solve {a.shape} system with {b.shape} right-hand side")
    n = a.rows
    m = [list(ra) + list(rb) for ra, rb in zip(a._rows, b._rows)]
    for c in range(n):
        p = _find_pivot(m, c, c)
        if p is None:
            raise SingularMatrixError(c + 1)
        m[c], m[p] = m[p], m[c]
        inv = _inv(m[c][c])
        m[c] = [x * inv if not _is_zero(x) else x for x in m[c]]
        pivot_row = m[c]
        for r in range(n):
            if r == c:
                continue
            f = m[r][c]
            if _is_zero(f):
                continue
            m[r] = [x - f * y if not _is_zero(y) else x for x, y in zip(m[r], pivot_row)]
    return ExactMatrix([row[n:] for row in m])


def mat_inverse(a: ExactMatrix) -> ExactMatrix:
    if not a.is_square():
        raise ValueError("inverse needs a square matrix")
    return solve(a, ExactMatrix.identity(a.rows))


def sym_poly(i: int, xs: Sequence):
    """Elementary symmetric polynomial sigma_i(xs); sigma_0 = 1."""
    n = len(xs)
    if not 0 <= i <= n:
        raise ValueError(f"index {i} out of range 0..{n}")
    # e[k] after processing a prefix is sigma_k of that prefix
    e = [1] + [0] * i
    for x in xs:
        for k in range(i, 0, -1):
            e[k] = e[k] + e[k - 1] * x
    return _clean(e[i])


def sym_poly_bruteforce(i: int, xs: Sequence):
    """Direct sum over i-subsets; kept as an independent check of sym_poly."""
    total = 0
    for combo in combinations(xs, i):
        prod = 1
        for x in combo:
            prod = prod * x
        total = total + prod
    return _clean(total)


def vandermonde(points: Sequence) -> ExactMatrix:
    """V with entry (i, j) = points[i] ** (j - 1)."""
    n = len(points)
    rows = []
    for a in points:
        row, p = [], 1
        for _ in range(n):
            row.append(p)
            p = p * a
        rows.append(row)
    return ExactMatrix(rows)


def vandermonde_inverse(points: Sequence) -> ExactMatrix:
    """Closed-form inverse of ``vandermonde(points)``.

    Entry (i, j) is (-1)^(i-1) sigma_{n-i}(points without a_j) divided by
    prod_{m != j} (a_m - a_j).
    """
    n = len(points)
    for s, t in combinations(range(n), 2):
        if points[s] == points[t]:
            raise ValueError(f"repeated point at positions {s + 1} and {t + 1}")
    cols = []
    for j in range(n):
        rest = [a for k, a in enumerate(points) if k != j]
        denom = 1
        for a in rest:
            denom = denom * (a - points[j])
        inv = _inv(denom)
        cols.append([(-1) ** i * sym_poly(n - 1 - i, rest) * inv for i in range(n)])
    return ExactMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


def standard_symplectic(g: int) -> ExactMatrix:
    """[[0, I_g], [-I_g, 0]]."""
    i, o = ExactMatrix.identity(g), ExactMatrix.zeros(g)
    return ExactMatrix.block([[o, i], [-i, o]])


def is_symplectic_Z(m: ExactMatrix) -> bool:
    """True iff m is an integer matrix with m J m^T = J."""
    if not m.is_square() or m.rows % 2:
        raise ValueError(f"symplectic test needs an even square matrix, got {m.shape}")
    if not m.is_integer():
        return False
    j = standard_symplectic(m.rows // 2)
    return m @ j @ m.T == j


def congruence(t: ExactMatrix, a: ExactMatrix) -> ExactMatrix:
    """t a t^T."""
    return t @ a @ t.T
