"""Exact rational functions of a single formal parameter ``q``.

Every value is kept in a canonical form ``P(q)/Q(q)``: both sides are integer
polynomials, ``gcd(P, Q) = 1`` and ``Q`` has a positive leading coefficient.
Negative powers of ``q`` are cleared into the denominator, so ``q - q^-1`` is
stored as ``(q^2-1)/(q)``.  Canonical forms make equality a plain comparison of
coefficient lists.

The polynomial backend is ``flint.fmpz_poly`` (arbitrary precision integers).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

import flint

__all__ = [
    "QScalar",
    "QDivisionByZero",
    "ZERO",
    "ONE",
    "Q",
    "QINV",
    "qpow",
    "qint",
    "qfact",
    "qnum_z",
    "qfact_z",
    "schur_element",
    "as_qscalar",
]

_Poly = flint.fmpz_poly
_PZERO = _Poly([])
_PONE = _Poly([1])

Scalarlike = Union["QScalar", int, Fraction]


class QDivisionByZero(ZeroDivisionError):
    """Raised when dividing by the zero rational function."""


class QScalar:
    """An element of Q(q) in canonical form. Instances are immutable."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: _Poly | int = 0, den: _Poly | int = 1, *, _canonical: bool = False):
        if not isinstance(num, _Poly):
            num = _Poly([num])
        if not isinstance(den, _Poly):
            den = _Poly([den])
        if not _canonical:
            if den == 0:
                raise QDivisionByZero("zero denominator")
            if num == 0:
                den = _PONE
            elif den != 1:
                g = num.gcd(den)
                if g != 1:
                    num = num // g
                    den = den // g
                if den.coeffs()[-1] < 0:
                    num = -num
                    den = -den
        self._num = num
        self._den = den
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_laurent(cls, terms: Mapping[int, int]) -> "QScalar":
        """Build ``sum c * q^e`` from an exponent -> coefficient mapping."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return ZERO
        low = min(terms)
        shift = -low if low < 0 else 0
        coeffs = [0] * (max(terms) + shift + 1)
        for e, c in terms.items():
            coeffs[e + shift] += c
        den = _Poly([0] * shift + [1])
        return cls(_Poly(coeffs), den)

    @classmethod
    def parse(cls, text: str) -> "QScalar":
        """Parse the canonical textual form, e.g. ``"(q^2-1)/(q)"``."""
        return parse_qscalar(text)

    # -- accessors ------------------------------------------------------
    @property
    def numerator(self) -> _Poly:
        return self._num

    @property
    def denominator(self) -> _Poly:
        return self._den

    def is_zero(self) -> bool:
        return self._num == 0

    def is_one(self) -> bool:
        return self._den == 1 and self._num == 1

    def is_laurent(self) -> bool:
        """True when the denominator is a monomial ``c q^k``."""
        cs = self._den.coeffs()
        return all(c == 0 for c in cs[:-1])

    def laurent_terms(self) -> dict[int, Fraction]:
        """Exponent -> coefficient map; only defined for Laurent values."""
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        dc = self._den.coeffs()
        shift = len(dc) - 1
        lead = dc[-1]
        out = {}
        for e, c in enumerate(self._num.coeffs()):
            if c:
                v = Fraction(int(c), int(lead))
                out[e - shift] = v.numerator if v.denominator == 1 else v
        return out

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: Scalarlike) -> "QScalar":
        other = as_qscalar(other)
        if other._num == 0:
            return self
        if self._num == 0:
            return other
        if self._den == other._den:
            if self._den == 1:
                return QScalar(self._num + other._num, _PONE, _canonical=True)
            return QScalar(self._num + other._num, self._den)
        return QScalar(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> "QScalar":
        return QScalar(-self._num, self._den, _canonical=True)

    def __sub__(self, other: Scalarlike) -> "QScalar":
        return self + (-as_qscalar(other))

    def __rsub__(self, other: Scalarlike) -> "QScalar":
        return as_qscalar(other) + (-self)

    def __mul__(self, other: Scalarlike) -> "QScalar":
        other = as_qscalar(other)
        if self._num == 0 or other._num == 0:
            return ZERO
        if self._den == 1 and other._den == 1:
            return QScalar(self._num * other._num, _PONE, _canonical=True)
        return QScalar(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self._num == 0:
            raise QDivisionByZero("inverse of zero")
        return QScalar(self._den, self._num)

    def __truediv__(self, other: Scalarlike) -> "QScalar":
        other = as_qscalar(other)
        if other._num == 0:
            raise QDivisionByZero(f"division of {self} by zero")
        return self * other.inverse()

    def __rtruediv__(self, other: Scalarlike) -> "QScalar":
        return as_qscalar(other) / self

    def __pow__(self, k: int) -> "QScalar":
        if k < 0:
            return self.inverse() ** (-k)
        return QScalar(self._num ** k, self._den ** k, _canonical=True)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = as_qscalar(other)
        if not isinstance(other, QScalar):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(int(c) for c in self._num.coeffs()),
                               tuple(int(c) for c in self._den.coeffs())))
        return self._hash

    def __bool__(self) -> bool:
        return self._num != 0

    # -- evaluation and substitution ------------------------------------
    def subs(self, value: Fraction | int) -> Fraction:
        """Evaluate at a rational value of ``q``."""
        value = Fraction(value)
        num = _eval_poly(self._num, value)
        den = _eval_poly(self._den, value)
        if den == 0:
            raise QDivisionByZero(f"{self} has a pole at q={value}")
        return num / den

    def invert_q(self) -> "QScalar":
        """The image under ``q -> q^-1``."""
        dn = max(self._num.degree(), self._den.degree(), 0)
        num = _reverse(self._num, dn)
        den = _reverse(self._den, dn)
        return QScalar(num, den)

    # -- printing -------------------------------------------------------
    def __str__(self) -> str:
        if self._den == 1:
            return _poly_str(self._num)
        return f"({_poly_str(self._num)})/({_poly_str(self._den)})"

    def __repr__(self) -> str:
        return f"QScalar('{self}')"

    def is_integer(self) -> bool:
        return self._den == 1 and self._num.degree() <= 0

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        cs = self._num.coeffs()
        return int(cs[0]) if cs else 0


def _reverse(p: _Poly, deg: int) -> _Poly:
    cs = [int(c) for c in p.coeffs()]
    cs = cs + [0] * (deg + 1 - len(cs))
    return _Poly(cs[::-1])


def _eval_poly(p: _Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs()):
        acc = acc * x + int(c)
    return acc


def _poly_str(p: _Poly) -> str:
    cs = [int(c) for c in p.coeffs()]
    if not cs:
        return "0"
    parts = []
    for e in range(len(cs) - 1, -1, -1):
        c = cs[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


_TERM = re.compile(r"([+-]?)(\d*)\*?(q(?:\^(-?\d+))?)?")


def _parse_laurent(text: str) -> QScalar:
    s = text.replace(" ", "")
    if s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
        s = s[1:-1]
    if not s:
        raise ValueError("empty polynomial")
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        sign, digits, qpart, exp = m.groups()
        if not digits and not qpart:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = 0
        if qpart:
            e = int(exp) if exp is not None else 1
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return QScalar.from_laurent(terms)


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


def _split_top_level(s: str, ch: str) -> list[str]:
    out, depth, start = [], 0, 0
    for i, c in enumerate(s):
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        elif c == ch and depth == 0:
            out.append(s[start:i])
            start = i + 1
    out.append(s[start:])
    return out


def parse_qscalar(text: str) -> QScalar:
    parts = _split_top_level(text.strip(), "/")
    if len(parts) > 2:
        raise ValueError(f"too many '/' in {text!r}")
    value = _parse_laurent(parts[0])
    if len(parts) == 2:
        value = value / _parse_laurent(parts[1])
    return value


def as_qscalar(x: Scalarlike) -> QScalar:
    if isinstance(x, QScalar):
        return x
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, int):
        return _small_int(x) if -64 <= x <= 64 else QScalar(x)
    if isinstance(x, Fraction):
        return QScalar(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_qscalar(x)
    raise TypeError(f"cannot convert {type(x).__name__} to QScalar")


@lru_cache(maxsize=None)
def _small_int(k: int) -> QScalar:
    return QScalar(_Poly([k]) if k else _PZERO, _PONE, _canonical=True)


ZERO = QScalar(_PZERO, _PONE, _canonical=True)
ONE = QScalar(_PONE, _PONE, _canonical=True)
Q = QScalar(_Poly([0, 1]), _PONE, _canonical=True)
QINV = QScalar(_PONE, _Poly([0, 1]), _canonical=True)


@lru_cache(maxsize=None)
def qpow(k: int) -> QScalar:
    """``q^k`` for any integer ``k``."""
    if k >= 0:
        return QScalar(_Poly([0] * k + [1]), _PONE, _canonical=True)
    return QScalar(_PONE, _Poly([0] * (-k) + [1]), _canonical=True)


@lru_cache(maxsize=None)
def qint(n: int) -> QScalar:
    """The balanced q-integer ``[n]_q = (q^n - q^-n)/(q - q^-1)``.

    Negative ``n`` is accepted and gives ``-[-n]_q``.
    """
    if n < 0:
        return -qint(-n)
    return QScalar.from_laurent({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def qfact(n: int) -> QScalar:
    if n < 0:
        raise ValueError("qfact needs n >= 0")
    out = ONE
    for k in range(1, n + 1):
        out = out * qint(k)
    return out


@lru_cache(maxsize=None)
def qnum_z(z: int, exponent: int) -> QScalar:
    """``(z)_{p} = (p^z - 1)/(p - 1)`` with ``p = q^exponent``."""
    if z < 0:
        raise ValueError("z must be non-negative")
    return QScalar.from_laurent({exponent * k: 1 for k in range(z)}) if z else ZERO


@lru_cache(maxsize=None)
def qfact_z(z: int, exponent: int) -> QScalar:
    """``(z)_{p}! = (1)_p (2)_p ... (z)_p`` with ``p = q^exponent``."""
    out = ONE
    for k in range(1, z + 1):
        out = out * qnum_z(k, exponent)
    return out


def schur_element(shape: Iterable[int]) -> QScalar:
    """Steinberg's product ``prod_cells q^content [hook]_q``."""
    shape = [p for p in shape if p]
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    out = ONE
    for i, row in enumerate(shape):
        for j in range(row):
            hook = (row - j - 1) + (conj[j] - i - 1) + 1
            out = out * qpow(j - i) * qint(hook)
    return out
