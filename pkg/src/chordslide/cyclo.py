"""Exact arithmetic in the cyclotomic field Q(zeta_q) for odd q >= 5.

Elements are stored as integer numerators over a common positive
denominator, indexed by powers of zeta.  Exponents are taken mod q, and the
canonical representative is the remainder modulo the q-th cyclotomic
polynomial Phi_q.  For prime q that is the same as using
1 + zeta + ... + zeta^(q-1) = 0 to clear the top coefficient; for composite
q it is the only choice that gives a field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence, Union

import mpmath

DEFAULT_PRECISION = 128

Scalar = Union[int, Fraction, "CycloNum"]


def _check_order(q: int) -> None:
    if not isinstance(q, int) or q < 5 or q % 2 == 0:
        raise ValueError(f"q must be an odd integer >= 5, got {q!r}")


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; coefficients low -> high
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            out[k - dn] = c
            for t in range(dn + 1):
                num[k - dn + t] -= c * den[t]
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _units(q: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, q) if gcd(k, q) == 1)


def _reduce(q: int, cyc: list[int]) -> list[int]:
    """Reduce a length-q cyclic vector modulo Phi_q in place."""
    phi = cyclotomic_polynomial(q)
    d = len(phi) - 1
    for k in range(q - 1, d - 1, -1):
        c = cyc[k]
        if c:
            base = k - d
            for t in range(d + 1):
                cyc[base + t] -= c * phi[t]
    return cyc


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


@dataclass(frozen=True)
class ComplexApprox:
    """A complex number evaluated at a fixed binary precision."""

    re: mpmath.mpf
    im: mpmath.mpf
    precision: int

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(self.re, self.im)


class CycloNum:
    """An element of Q(zeta_q), immutable and hashable.

    ``CycloNum(7, [0, 1, 1, 0, 1])`` is zeta + zeta^2 + zeta^4.  Coefficient
    sequences may be any length; index k is the coefficient of zeta^k and
    exponents wrap mod q.
    """

    __slots__ = ("q", "_num", "_den", "_hash")

    def __init__(self, q: int, coeffs: Iterable = ()):
        _check_order(q)
        fracs = [_as_fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        cyc = [0] * q
        for k, f in enumerate(fracs):
            cyc[k % q] += f.numerator * (den // f.denominator)
        self._set(q, _reduce(q, cyc), den)

    def _set(self, q: int, num: list[int], den: int) -> None:
        g = den
        for c in num:
            if c:
                g = gcd(g, c)
                if g == 1:
                    break
        if not any(num):
            den = 1
        elif g != 1:
            num = [c // g for c in num]
            den //= g
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "_num", tuple(num))
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, q: int, num: list[int], den: int) -> "CycloNum":
        # num must already be canonical
        obj = cls.__new__(cls)
        if den < 0:
            num = [-c for c in num]
            den = -den
        obj._set(q, num, den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CycloNum is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, q: int, value) -> "CycloNum":
        f = _as_fraction(value)
        num = [0] * q
        num[0] = f.numerator
        return cls._raw(q, num, f.denominator)

    @classmethod
    def zero(cls, q: int) -> "CycloNum":
        return cls._raw(q, [0] * q, 1)

    @classmethod
    def one(cls, q: int) -> "CycloNum":
        return cls.constant(q, 1)

    # -- accessors --------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Canonical coefficients, length q, index k for zeta^k."""
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.q != self.q:
                raise ValueError(f"mismatched orders q={self.q} and q={other.q}")
            return other
        try:
            return CycloNum.constant(self.q, other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        da, db = self._den, other._den
        num = [a * db + b * da for a, b in zip(self._num, other._num)]
        return CycloNum._raw(self.q, num, da * db)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum._raw(self.q, [-c for c in self._num], self._den)

    def __pos__(self) -> "CycloNum":
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q = self.q
        a = [(i, c) for i, c in enumerate(self._num) if c]
        b = [(j, c) for j, c in enumerate(other._num) if c]
        cyc = [0] * q
        for i, ci in a:
            for j, cj in b:
                k = i + j
                if k >= q:
                    k -= q
                cyc[k] += ci * cj
        return CycloNum._raw(q, _reduce(q, cyc), self._den * other._den)

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycloNum":
        """Image under the substitution zeta -> zeta^k (gcd(k, q) = 1)."""
        q = self.q
        if gcd(k, q) != 1:
            raise ValueError(f"zeta -> zeta^{k} is not an automorphism for q={q}")
        cyc = [0] * q
        for i, c in enumerate(self._num):
            if c:
                cyc[(i * k) % q] += c
        return CycloNum._raw(q, _reduce(q, cyc), self._den)

    def conjugate(self) -> "CycloNum":
        """Complex conjugate."""
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        return (self * self._cofactor()).rational_value()

    def _cofactor(self) -> "CycloNum":
        # product of the non-identity conjugates; self * cofactor is rational
        acc = CycloNum.one(self.q)
        for k in _units(self.q)[1:]:
            acc = acc * self.galois(k)
        return acc

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse in Q(zeta)")
        if self.is_rational():
            return CycloNum.constant(self.q, 1 / self.rational_value())
        cof = self._cofactor()
        n = (self * cof).rational_value()
        return cof * (1 / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int) -> "CycloNum":
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        acc = CycloNum.one(self.q)
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            return (self.q == other.q and self._den == other._den
                    and self._num == other._num)
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(Fraction(self._num[0], self._den))
            else:
                h = hash((self.q, self._num, self._den))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- output -----------------------------------------------------------

    def embed(self, precision_bits: int = DEFAULT_PRECISION) -> ComplexApprox:
        """Evaluate at exp(2*pi*i/q).

        The absolute error is at most about sum(|c_k|) * 2**-precision_bits.
        """
        if precision_bits < 53:
            raise ValueError("precision_bits must be at least 53")
        with mpmath.workprec(precision_bits + 16):
            z = mpmath.expjpi(mpmath.mpf(2) / self.q)
            acc = mpmath.mpc(0)
            for c in reversed(self._num):
                acc = acc * z + c
            acc = acc / self._den
        with mpmath.workprec(precision_bits):
            return ComplexApprox(+acc.real, +acc.imag, precision_bits)

    def __complex__(self) -> complex:
        return complex(self.embed(53))

    def to_json(self) -> dict:
        return {"q": self.q, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CycloNum":
        coeffs = data["coeffs"]
        if len(coeffs) != data["q"]:
            raise ValueError("coefficient list must have length q")
        return cls(data["q"], coeffs)

    def _terms(self):
        for k, c in enumerate(self.coeffs):
            if c:
                yield k, c

    def to_latex(self) -> str:
        parts = []
        for k, c in self._terms():
            mag = abs(c)
            if k == 0:
                body = _latex_rational(mag)
            else:
                z = r"\zeta" if k == 1 else r"\zeta^{%d}" % k
                body = z if mag == 1 else _latex_rational(mag) + " " + z
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(sign + body)
        return "".join(parts) if parts else "0"

    def __str__(self) -> str:
        parts = []
        for k, c in self._terms():
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                z = "z" if k == 1 else f"z^{k}"
                body = z if mag == 1 else f"{mag}*{z}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"CycloNum({self.q}, {str(self)!r})"


def _latex_rational(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return r"\frac{%d}{%d}" % (f.numerator, f.denominator)


def make_root(q: int, k: int = 1) -> CycloNum:
    """Canonical representative of zeta_q**k."""
    _check_order(q)
    num = [0] * q
    num[k % q] = 1
    return CycloNum._raw(q, _reduce(q, num), 1)


def embed_complex(a: CycloNum, precision_bits: int = DEFAULT_PRECISION) -> ComplexApprox:
    return a.embed(precision_bits)


def as_cyclo(x: Scalar, q: int) -> CycloNum:
    if isinstance(x, CycloNum):
        if x.q != q:
            raise ValueError(f"mismatched orders q={x.q} and q={q}")
        return x
    return CycloNum.constant(q, x)
