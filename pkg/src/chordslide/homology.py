"""Intersection matrices, chord slides and symplectic bases for y^p = x^l (1-x)^m.

Loops c_1..c_{2g} are the differences I_0 - sigma^i(I_0) of lifts of [0, 1].
A basis change is an integer matrix T whose rows express the new loops in
terms of the c_i, so the new intersection matrix is T A T^T.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .linalg import ExactMatrix, congruence, standard_symplectic

SAME = "same"
OPPOSITE = "opposite"


class ReductionError(RuntimeError):
    """An internal consistency check of a reduction failed."""


@dataclass(frozen=True)
class CurveSpec:
    """Parameters of the curve y^p = x^l (1 - x)^m.

    ``CurveSpec.hyperelliptic(q)`` builds C_{q,1}: y^q = x(1 - x), for any
    odd q >= 5.
    """

    p: int
    l: int = 1
    m: int = 1

    def __post_init__(self):
        p, l, m = self.p, self.l, self.m
        if p < 5 or p % 2 == 0:
            raise ValueError(f"p must be odd and >= 5, got {p}")
        if l < 1 or m < 1:
            raise ValueError("l and m must be positive")
        if gcd(l, m) != 1:
            raise ValueError(f"l={l} and m={m} must be coprime")
        if l + m >= p - 1:
            raise ValueError(f"need l + m < p - 1, got l + m = {l + m}")
        for name, v in (("l", l), ("m", m), ("l+m", l + m)):
            if gcd(v, p) != 1:
                raise ValueError(f"{name}={v} is not invertible mod p={p}")

    @classmethod
    def hyperelliptic(cls, q: int) -> "CurveSpec":
        return cls(q, 1, 1)

    @property
    def is_hyperelliptic(self) -> bool:
        return self.l == 1 and self.m == 1

    @property
    def is_klein(self) -> bool:
        return (self.p, self.l, self.m) == (7, 1, 2)

    @property
    def genus(self) -> int:
        return (self.p - 1) // 2

    def to_json(self) -> dict:
        return {"p": self.p, "l": self.l, "m": self.m}

    def __str__(self) -> str:
        if self.is_hyperelliptic:
            return f"C_{{{self.p},1}}: y^{self.p} = x(1-x)"
        return f"X_{{{self.p},{self.l},{self.m}}}: y^{self.p} = x^{self.l}(1-x)^{self.m}"


def intersection_matrix(spec: CurveSpec) -> ExactMatrix:
    """The (2g x 2g) matrix of intersection numbers c_i . c_j."""
    p = spec.p
    inv_l = pow(spec.l, -1, p)
    inv_m = pow(spec.m, -1, p)
    il = [None] + [(i * inv_l) % p for i in range(1, p)]
    im = [None] + [(i * inv_m) % p for i in range(1, p)]

    def entry(i, j):
        dl, dm = il[j] - il[i], im[j] - im[i]
        if dl > 0 and dm > 0:
            return 1
        if dl < 0 and dm < 0:
            return -1
        return 0

    return ExactMatrix.from_function(p - 1, p - 1, entry)


def transvection(n: int, i: int, j: int, position: str) -> ExactMatrix:
    """M_s(i, j) or M_o(i, j): the identity with -1 (same) or +1 (opposite) at (i, j)."""
    sign = _slide_sign(n, i, j, position)
    return ExactMatrix.from_function(n, n, lambda a, b: int(a == b) + (sign if (a, b) == (i, j) else 0))


def _slide_sign(n: int, i: int, j: int, position: str) -> int:
    if i == j:
        raise ValueError("a chord cannot slide along itself")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i}, {j}) out of range 1..{n}")
    if position == SAME:
        return -1
    if position == OPPOSITE:
        return 1
    raise ValueError(f"position must be 'same' or 'opposite', got {position!r}")


def apply_slide(a: ExactMatrix, i: int, j: int, position: str) -> ExactMatrix:
    """s_{i,j}(A) or o_{i,j}(A)."""
    if not a.is_skew_symmetric():
        raise ValueError("intersection matrix must be skew-symmetric")
    c = _slide_sign(a.rows, i, j, position)
    return a.add_row(i, j, c).add_col(i, j, c)


@dataclass(frozen=True)
class Move:
    chord: int
    along: int
    position: str
    notation: str | None = None

    def to_json(self) -> dict:
        d = {"move": self.chord, "along": self.along, "position": self.position}
        if self.notation:
            d["notation"] = self.notation
        return d


@dataclass
class SlideRecord:
    """Ordered chord slides with their accumulated basis change."""

    size: int
    moves: list[Move] = field(default_factory=list)
    transform: ExactMatrix = None

    def __post_init__(self):
        if self.transform is None:
            self.transform = ExactMatrix.identity(self.size)

    def push(self, move: Move) -> None:
        self.moves.append(move)
        c = _slide_sign(self.size, move.chord, move.along, move.position)
        self.transform = self.transform.add_row(move.chord, move.along, c)

    def permute(self, images: Sequence[int]) -> None:
        """Reorder the current basis: new loop k is old loop images[k-1]."""
        self.transform = ExactMatrix.permutation(images) @ self.transform

    def product_of_factors(self) -> ExactMatrix:
        acc = ExactMatrix.identity(self.size)
        for mv in self.moves:
            acc = transvection(self.size, mv.chord, mv.along, mv.position) @ acc
        return acc

    def to_json(self) -> list[dict]:
        return [mv.to_json() for mv in self.moves]


# -- linear chord diagrams ---------------------------------------------------

@dataclass(frozen=True, order=True)
class Endpoint:
    """Origin (``terminal=False``) or terminal end of chord ``chord``."""

    chord: int
    terminal: bool = False

    @property
    def other(self) -> "Endpoint":
        return Endpoint(self.chord, not self.terminal)

    def __str__(self) -> str:
        return f"{self.chord}̄" if self.terminal else str(self.chord)

    @classmethod
    def parse(cls, text: str) -> "Endpoint":
        """Accepts '3', '3̄' (combining macron), '~3' or '3bar'."""
        s = text.strip()
        m = re.fullmatch(r"(~?)(\d+)(̄|bar)?", s)
        if not m:
            raise ValueError(f"cannot parse endpoint {text!r}")
        terminal = bool(m.group(1) or m.group(3))
        return cls(int(m.group(2)), terminal)


def parse_slide(text: str) -> tuple[Endpoint, Endpoint]:
    """Parse 'x -> y' (or 'x → y'): endpoint x slides along the chord of y."""
    parts = re.split(r"\s*(?:->|→)\s*", text.strip())
    if len(parts) != 2:
        raise ValueError(f"cannot parse slide {text!r}")
    return Endpoint.parse(parts[0]), Endpoint.parse(parts[1])


class LinearChordDiagram:
    """Oriented chords on a line, tracked together with their homology classes.

    ``homology`` row k gives the current chord c_k in terms of the original
    chords; ``intersections`` is read off the endpoint order.
    """

    def __init__(self, endpoints: Sequence[Endpoint], initial: ExactMatrix | None = None,
                 homology: ExactMatrix | None = None):
        self.endpoints = tuple(endpoints)
        n = len(self.endpoints) // 2
        if sorted(self.endpoints) != sorted(Endpoint(c, t) for c in range(1, n + 1) for t in (False, True)):
            raise ValueError("every chord 1..n must appear exactly once at each end")
        self.n = n
        self.homology = ExactMatrix.identity(n) if homology is None else homology
        self.initial = self.intersections if initial is None else initial

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> "LinearChordDiagram":
        return cls([Endpoint.parse(s) for s in labels])

    @classmethod
    def hyperelliptic(cls, g: int) -> "LinearChordDiagram":
        """1, 2, ..., 2g, 1bar, ..., 2g bar."""
        n = 2 * g
        return cls([Endpoint(i) for i in range(1, n + 1)]
                   + [Endpoint(i, True) for i in range(1, n + 1)])

    @classmethod
    def klein(cls) -> "LinearChordDiagram":
        """The C_{7,2} chord diagram cut open at point 3."""
        return cls.from_labels("4 5 6 ~2 ~4 ~6 ~1 ~3 ~5 1 2 3".split())

    def labels(self) -> list[str]:
        return [str(e) for e in self.endpoints]

    def position(self, e: Endpoint) -> int:
        return self.endpoints.index(e)

    @property
    def intersections(self) -> ExactMatrix:
        pos = {e: k for k, e in enumerate(self.endpoints)}

        def entry(i, j):
            a, b = pos[Endpoint(i)], pos[Endpoint(i, True)]
            c, d = pos[Endpoint(j)], pos[Endpoint(j, True)]
            si = 1 if a < b else -1
            sj = 1 if c < d else -1
            li, ri = min(a, b), max(a, b)
            lj, rj = min(c, d), max(c, d)
            if li < lj < ri < rj:
                return si * sj
            if lj < li < rj < ri:
                return -si * sj
            return 0

        return ExactMatrix.from_function(self.n, self.n, entry)

    def slide(self, moving: Endpoint, along) -> tuple["LinearChordDiagram", Move]:
        """Slide endpoint ``moving`` along a neighbouring chord.

        ``along`` is either the adjacent Endpoint the slide starts from or a
        chord index (which must then be unambiguous).  The endpoint leaves
        one side of its neighbour and re-enters on the opposite side of the
        neighbour's partner.  The slide is in the same position, c_i -> c_i - c_j,
        exactly when the moving end and the arrival end are of different
        kinds (origin vs terminal).
        """
        k = self.position(moving)
        nbrs = [k + d for d in (-1, 1) if 0 <= k + d < len(self.endpoints)]
        if isinstance(along, Endpoint):
            start = along
            if start.chord == moving.chord or self.position(start) not in nbrs:
                raise ValueError(f"{moving} is not adjacent to {start}")
        else:
            cands = [self.endpoints[t] for t in nbrs if self.endpoints[t].chord == along]
            if moving.chord == along or not cands:
                raise ValueError(f"{moving} is not adjacent to chord {along}")
            if len(cands) > 1:
                raise ValueError(f"{moving} is adjacent to both ends of chord {along}")
            start = cands[0]
        arrive = start.other
        moving_left = self.position(start) == k + 1
        seq = [e for e in self.endpoints if e != moving]
        t = seq.index(arrive)
        seq.insert(t + 1 if moving_left else t, moving)

        i, j = moving.chord, start.chord
        position = SAME if moving.terminal != arrive.terminal else OPPOSITE
        move = Move(i, j, position, f"{moving}→{start}")
        h = transvection(self.n, i, j, position) @ self.homology
        return LinearChordDiagram(seq, self.initial, h), move

    def apply(self, notation: str) -> tuple["LinearChordDiagram", Move]:
        moving, start = parse_slide(notation)
        return self.slide(moving, start)

    def run(self, notations: Iterable[str]) -> tuple["LinearChordDiagram", SlideRecord]:
        d, rec = self, SlideRecord(self.n)
        for s in notations:
            d, mv = d.apply(s)
            rec.push(mv)
        return d, rec

    def is_consistent(self) -> bool:
        """Combinatorial intersections agree with homology . A0 . homology^T."""
        return self.intersections == congruence(self.homology, self.initial)


# -- the Klein quartic C_{7,2} ---------------------------------------------

# Slides in the order applied, i.e. the rightmost factor of
# M = M_s(6,4) M_o(6,2) M_o(5,2) M_s(5,3) M_o(5,1) M_s(2,1) comes first.
# The five-move list is s_{6,4} o o_{6,2} o o_{5,2} o o_{5,1} o s_{2,1}.
KLEIN_SIX_FACTORS = [(2, 1, SAME), (5, 1, OPPOSITE), (5, 3, SAME),
                     (5, 2, OPPOSITE), (6, 2, OPPOSITE), (6, 4, SAME)]
KLEIN_FIVE_MOVES = [(2, 1, SAME), (5, 1, OPPOSITE), (5, 2, OPPOSITE),
                    (6, 2, OPPOSITE), (6, 4, SAME)]
# c'_3 = c_5, c'_4 = c_3, c'_5 = c_4
KLEIN_PERMUTATION = [1, 2, 5, 3, 4, 6]
# Adjacent slides on the cut diagram whose product equals the six factors.
KLEIN_DIAGRAM_SLIDES = ["~6->~4", "~5->~3", "2->1", "6->~2", "5->~2", "~5->1"]


def _record_from_factors(n: int, factors) -> SlideRecord:
    rec = SlideRecord(n)
    for i, j, pos in factors:
        rec.push(Move(i, j, pos))
    return rec


@dataclass
class KleinReduction:
    T: ExactMatrix
    record: SlideRecord
    A: ExactMatrix
    slid: ExactMatrix            # intersection matrix after the slides
    five_move_slid: ExactMatrix  # what the five-move composition gives
    five_move_symplectic: bool
    chosen: str


def reduce_klein() -> KleinReduction:
    """Symplectic basis of C_{7,2} from the known slide sequence.

    Both the six-factor product and the five-move composition are tried;
    the six-factor one is kept because only it reaches the standard form
    after the permutation.
    """
    spec = CurveSpec(7, 1, 2)
    a = intersection_matrix(spec)
    target = standard_symplectic(3)
    results = {}
    for name, factors in (("six-factor", KLEIN_SIX_FACTORS), ("five-move", KLEIN_FIVE_MOVES)):
        rec = _record_from_factors(6, factors)
        slid = congruence(rec.transform, a)
        rec.permute(KLEIN_PERMUTATION)
        results[name] = (rec, slid, congruence(rec.transform, a) == target)
    good = [k for k, v in results.items() if v[2]]
    if not good:
        raise ReductionError("neither slide sequence reaches the standard form")
    chosen = "six-factor" if "six-factor" in good else good[0]
    rec, slid, _ = results[chosen]
    return KleinReduction(rec.transform, rec, a, slid, results["five-move"][1],
                          results["five-move"][2], chosen)


# -- the hyperelliptic family C_{q,1} ----------------------------------------

def cq1_moves(g: int, steps: int | None = None) -> list[Move]:
    """Moves of f_{steps} o ... o f_1, each h_{i,k} = o_{i,2k-1} o s_{i,2k}."""
    moves = []
    last = g - 1 if steps is None else steps
    for k in range(1, last + 1):
        for i in range(2 * k + 1, 2 * g + 1):
            moves.append(Move(i, 2 * k, SAME, f"{i}̄→{2 * k}̄"))
            moves.append(Move(i, 2 * k - 1, OPPOSITE, f"{i}̄→{2 * k - 1}"))
    return moves


def cq1_slide_notation(g: int, steps: int | None = None) -> list[str]:
    return [mv.notation for mv in cq1_moves(g, steps)]


def block_J(g: int) -> ExactMatrix:
    """Block diagonal of g copies of [[0, 1], [-1, 0]]."""
    def entry(i, j):
        if j == i + 1 and i % 2 == 1:
            return 1
        if i == j + 1 and j % 2 == 1:
            return -1
        return 0
    return ExactMatrix.from_function(2 * g, 2 * g, entry)


def odd_rows_first(n: int) -> list[int]:
    return list(range(1, n + 1, 2)) + list(range(2, n + 1, 2))


@dataclass
class Cq1Reduction:
    T: ExactMatrix
    T_prime: ExactMatrix
    record: SlideRecord
    stages: dict  # name -> intersection matrix


def reduce_Cq1_full(g: int) -> Cq1Reduction:
    if g < 2:
        raise ValueError("genus must be at least 2")
    n = 2 * g
    a = intersection_matrix(CurveSpec.hyperelliptic(n + 1))
    rec = SlideRecord(n)
    stages = {"A": a}
    cur = a
    for idx, mv in enumerate(cq1_moves(g)):
        rec.push(mv)
        cur = apply_slide(cur, mv.chord, mv.along, mv.position)
        if idx == 1:
            stages["h31"] = cur
        if idx == 2 * (n - 2) - 1:
            stages["f1"] = cur
    t_prime = rec.transform
    final = cur
    stages["final"] = final
    if final != block_J(g):
        raise ReductionError(f"f_(g-1) o ... o f_1(A) is not J_g for g={g}")
    rec.permute(odd_rows_first(n))
    t = rec.transform
    if congruence(t, a) != standard_symplectic(g):
        raise ReductionError(f"T A T^t is not standard for g={g}")
    return Cq1Reduction(t, t_prime, rec, stages)


def reduce_Cq1(g: int) -> tuple[ExactMatrix, SlideRecord]:
    """Chord-slide symplectic basis T of C_{2g+1,1}."""
    r = reduce_Cq1_full(g)
    return r.T, r.record


def natural_basis_K(g: int) -> ExactMatrix:
    """Rows give A_1..A_g, B_1..B_g in terms of c_1..c_{2g}."""
    n = 2 * g

    def entry(i, j):
        if i <= g:
            return -1 if j == 2 * i - 1 else (1 if j == 2 * i else 0)
        r = i - g
        return (-1) ** j if j <= 2 * r - 1 else 0

    return ExactMatrix.from_function(n, n, entry)


def reversal_L(g: int) -> ExactMatrix:
    return ExactMatrix.from_function(g, g, lambda i, j: int(i + j == g + 1))


def schindler_basis(g: int) -> ExactMatrix:
    """(A_g, ..., A_1, B_g, ..., B_1) in terms of c_1..c_{2g}."""
    images = list(range(g, 0, -1)) + list(range(2 * g, g, -1))
    return ExactMatrix.permutation(images) @ natural_basis_K(g)


def basis_change_H(g: int) -> ExactMatrix:
    """(K^T)^-1 T^T, relating the natural and chord-slide bases."""
    t, _ = reduce_Cq1(g)
    return natural_basis_K(g).T.inverse() @ t.T


# -- generic reduction --------------------------------------------------------

def reduce_generic(a: ExactMatrix) -> ExactMatrix:
    """Integer T with T A T^T = [[0, I], [-I, 0]] for skew unimodular A.

    Pivots on the smallest-index pair with minimal nonzero |pairing|, uses
    Euclid steps until that pairing is +-1, splits off the hyperbolic plane
    and repeats on its orthogonal complement.
    """
    if not a.is_square() or not a.is_skew_symmetric() or not a.is_integer():
        raise ValueError("need a skew-symmetric integer matrix")
    n = a.rows
    if n % 2:
        raise ValueError("skew-symmetric unimodular matrices have even size")
    A = a.int_rows()
    basis = [[int(i == j) for j in range(n)] for i in range(n)]

    def pair(u, v):
        return sum(u[s] * A[s][t] * v[t] for s in range(n) if u[s] for t in range(n) if v[t])

    active = list(range(n))
    es, fs = [], []
    while active:
        while True:
            best = None
            for x in range(len(active)):
                for y in range(x + 1, len(active)):
                    val = pair(basis[active[x]], basis[active[y]])
                    if val and (best is None or abs(val) < best[0]):
                        best = (abs(val), x, y, val)
            if best is None:
                raise ValueError("degenerate form: matrix is not unimodular")
            _, x, y, val = best
            i, j = active[x], active[y]
            if abs(val) == 1:
                break
            reduced = False
            for k in active:
                if k in (i, j):
                    continue
                r = pair(basis[i], basis[k])
                qt = r // val
                if qt:
                    basis[k] = [bk - qt * bj for bk, bj in zip(basis[k], basis[j])]
                    reduced = True
            if not reduced:
                raise ValueError("form is not unimodular")
        e = basis[i]
        f = basis[j] if val == 1 else [-c for c in basis[j]]
        rest = [k for k in active if k not in (i, j)]
        for k in rest:
            w = basis[k]
            we, wf = pair(w, e), pair(w, f)
            basis[k] = [wc - wf * ec + we * fc for wc, ec, fc in zip(w, e, f)]
        es.append(e)
        fs.append(f)
        active = rest
    t = ExactMatrix(es + fs)
    if congruence(t, a) != standard_symplectic(n // 2):
        raise ReductionError("generic reduction failed its defining identity")
    return t


def symplectic_basis(spec: CurveSpec, method: str = "generic") -> tuple[ExactMatrix, SlideRecord | None]:
    """Basis matrix for ``method`` in {'cq1', 'klein', 'generic'}."""
    if method == "cq1":
        if not spec.is_hyperelliptic:
            raise ValueError("method 'cq1' needs l = m = 1")
        return reduce_Cq1(spec.genus)
    if method == "klein":
        if not spec.is_klein:
            raise ValueError("method 'klein' needs (p, l, m) = (7, 1, 2)")
        r = reduce_klein()
        return r.T, r.record
    if method == "generic":
        return reduce_generic(intersection_matrix(spec)), None
    raise ValueError(f"unknown method {method!r}")
