"""Commutative polynomials over Q(q) in x_1..x_m, y_1..y_n.

Holds the supersymmetric Schur polynomials and the commutative image of the
Bethe subalgebra under the diagonal specialisation ``phi_specialize``.
Monomials are ordered graded-lexicographically with x_1 > ... > x_m > y_1 > ... > y_n.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Mapping, Sequence

from . import combinat as cb
from .qscalar import ONE, ZERO, QScalar, Scalarlike, as_qscalar

__all__ = [
    "SPoly",
    "SRat",
    "SingularSystemError",
    "super_schur",
    "super_power_sum",
    "substitute_neg_y",
    "substitute",
    "phi_specialize",
    "solve_linear",
    "determinant",
    "parse_spoly",
    "exact_divide",
    "elementary",
    "jacobi_trudi_e",
]

Exps = tuple[int, ...]


class SPoly:
    """Sparse commutative polynomial; ``terms`` maps exponent vectors to QScalar."""

    __slots__ = ("m", "n", "terms", "_hash")

    def __init__(self, m: int, n: int, terms: Mapping[Exps, Scalarlike] | None = None):
        self.m, self.n = m, n
        clean: dict[Exps, QScalar] = {}
        for e, c in (terms or {}).items():
            if len(e) != m + n:
                raise ValueError(f"exponent vector {e} has wrong length")
            c = as_qscalar(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    # -- constructors --------------------------------------------------
    @classmethod
    def constant(cls, m: int, n: int, c: Scalarlike = 1) -> "SPoly":
        return cls(m, n, {(0,) * (m + n): c})

    @classmethod
    def var(cls, m: int, n: int, name: str) -> "SPoly":
        """``var(m, n, "x2")`` or ``"y1"``."""
        k = _var_index(name, m, n)
        e = [0] * (m + n)
        e[k] = 1
        return cls(m, n, {tuple(e): 1})

    def zero_like(self) -> "SPoly":
        return SPoly(self.m, self.n)

    def _lift(self, other) -> "SPoly":
        if isinstance(other, SPoly):
            if (other.m, other.n) != (self.m, self.n):
                raise ValueError("polynomials in different variable sets")
            return other
        return SPoly.constant(self.m, self.n, other)

    # -- ring operations -----------------------------------------------
    def __add__(self, other) -> "SPoly":
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return SPoly(self.m, self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "SPoly":
        return SPoly(self.m, self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "SPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "SPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "SPoly":
        if not isinstance(other, SPoly):
            c = as_qscalar(other)
            return SPoly(self.m, self.n, {e: v * c for e, v in self.terms.items()})
        other = self._lift(other)
        out: dict[Exps, QScalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return SPoly(self.m, self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SPoly":
        if k < 0:
            raise ValueError("negative power")
        out = SPoly.constant(self.m, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SPoly):
            return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms
        if isinstance(other, (int, QScalar)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.m, self.n, frozenset(self.terms.items())))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection ----------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exps, QScalar]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def leading(self) -> tuple[Exps, QScalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def var_names(self) -> list[str]:
        return [f"x{i + 1}" for i in range(self.m)] + [f"y{j + 1}" for j in range(self.n)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.var_names()
        out = ""
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                names[i] if p == 1 else f"{names[i]}^{p}" for i, p in enumerate(e) if p
            )
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            elif c.is_integer():
                body = f"{c.to_int()}*{mono}"
            else:
                body = f"({c})*{mono}"
            if k == 0:
                out = body
            elif body.startswith("-"):
                out += " - " + body[1:]
            else:
                out += " + " + body
        return out

    def __repr__(self) -> str:
        return f"SPoly({self})"

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "terms": [{"exps": list(e), "coeff": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SPoly":
        return cls(
            data["m"],
            data["n"],
            {tuple(t["exps"]): QScalar.parse(t["coeff"]) for t in data["terms"]},
        )

    # -- substitution --------------------------------------------------
    def evaluate(self, values: Sequence["SPoly"]) -> "SPoly":
        """Substitute ``values[k]`` for the k-th variable (values share a ring)."""
        if len(values) != self.m + self.n:
            raise ValueError("need one value per variable")
        ring = values[0] if values else self
        total = ring.zero_like()
        powers: dict[tuple[int, int], SPoly] = {}
        for e, c in self.terms.items():
            term = SPoly.constant(ring.m, ring.n, c)
            for k, p in enumerate(e):
                if p:
                    key = (k, p)
                    if key not in powers:
                        powers[key] = values[k] ** p
                    term = term * powers[key]
            total = total + term
        return total

    def map_coeffs(self, fn) -> "SPoly":
        return SPoly(self.m, self.n, {e: fn(c) for e, c in self.terms.items()})


def _var_index(name: str, m: int, n: int) -> int:
    mt = re.fullmatch(r"([xy])(\d+)", name)
    if not mt:
        raise ValueError(f"bad variable name {name!r}")
    k = int(mt.group(2))
    if mt.group(1) == "x":
        if not 1 <= k <= m:
            raise ValueError(f"{name} out of range for m={m}")
        return k - 1
    if not 1 <= k <= n:
        raise ValueError(f"{name} out of range for n={n}")
    return m + k - 1


_TOKEN = re.compile(r"\s*([+-])?\s*(?:\(([^()]*(?:\([^()]*\)[^()]*)*)\)\*?|(\d+)\*?)?([xy]\d+(?:\^\d+)?(?:\*[xy]\d+(?:\^\d+)?)*)?")


def parse_spoly(text: str, m: int, n: int) -> SPoly:
    """Inverse of ``str(SPoly)``: e.g. ``"x1^2*y1 + (q^2)*x1 - 3"``."""
    text = text.strip()
    out = SPoly(m, n)
    if text == "0":
        return out
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        sign, paren, integer, mono = mt.groups()
        if paren is None and integer is None and mono is None:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        c = QScalar.parse(paren) if paren is not None else as_qscalar(int(integer or 1))
        if sign == "-":
            c = -c
        e = [0] * (m + n)
        for factor in (mono.split("*") if mono else []):
            name, _, p = factor.partition("^")
            e[_var_index(name, m, n)] += int(p or 1)
        out = out + SPoly(m, n, {tuple(e): c})
        pos = mt.end()
    return out


# ----------------------------------------------------------------------
# fractions
# ----------------------------------------------------------------------


def exact_divide(a: SPoly, b: SPoly) -> SPoly:
    """``a / b`` when ``b`` divides ``a``; raises ``ArithmeticError`` otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    be, bc = b.leading()
    quotient = a.zero_like()
    rem = a
    while rem:
        re_, rc = rem.leading()
        diff = tuple(x - y for x, y in zip(re_, be))
        if any(d < 0 for d in diff):
            raise ArithmeticError("polynomial division is not exact")
        t = SPoly(a.m, a.n, {diff: rc / bc})
        quotient = quotient + t
        rem = rem - t * b
    return quotient


def _monomial_gcd(p: SPoly) -> Exps:
    es = list(p.terms)
    return tuple(min(col) for col in zip(*es)) if es else (0,) * (p.m + p.n)


class SRat:
    """Fraction ``num/den`` of SPolys; equality is decided by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: SPoly, den: SPoly | None = None):
        if den is None:
            den = SPoly.constant(num.m, num.n)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = SPoly.constant(num.m, num.n)
        else:
            g = tuple(min(a, b) for a, b in zip(_monomial_gcd(num), _monomial_gcd(den)))
            if any(g):
                mono = SPoly(num.m, num.n, {g: 1})
                num, den = exact_divide(num, mono), exact_divide(den, mono)
            if len(den.terms) > 1:
                try:
                    num, den = exact_divide(num, den), SPoly.constant(num.m, num.n)
                except ArithmeticError:
                    pass
        lc = den.leading()[1]
        if lc != 1:
            num, den = num * lc.inverse(), den * lc.inverse()
        self.num, self.den = num, den

    @classmethod
    def lift(cls, x, like: SPoly | None = None) -> "SRat":
        if isinstance(x, SRat):
            return x
        if isinstance(x, SPoly):
            return cls(x)
        if like is None:
            raise TypeError("need a ring to lift a scalar")
        return cls(SPoly.constant(like.m, like.n, x))

    def __add__(self, other) -> "SRat":
        o = SRat.lift(other, self.num)
        if self.den == o.den:
            return SRat(self.num + o.num, self.den)
        return SRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "SRat":
        return SRat(-self.num, self.den)

    def __sub__(self, other) -> "SRat":
        return self + (-SRat.lift(other, self.num))

    def __rsub__(self, other) -> "SRat":
        return SRat.lift(other, self.num) - self

    def __mul__(self, other) -> "SRat":
        o = SRat.lift(other, self.num)
        return SRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "SRat":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return SRat(self.den, self.num)

    def __truediv__(self, other) -> "SRat":
        return self * SRat.lift(other, self.num).inverse()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (SRat, SPoly, int, QScalar)):
            o = SRat.lift(other, self.num)
            return self.num * o.den == o.num * self.den
        return NotImplemented

    def __hash__(self) -> int:
        raise TypeError("SRat is unhashable; equality is by cross-multiplication")

    def as_poly(self) -> SPoly:
        """The polynomial value, if the fraction reduces to one."""
        return exact_divide(self.num, self.den)

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


# ----------------------------------------------------------------------
# linear algebra
# ----------------------------------------------------------------------


class SingularSystemError(ArithmeticError):
    pass


def determinant(rows: Sequence[Sequence[SPoly]]) -> SPoly:
    """Fraction-free (Bareiss) determinant of a square SPoly matrix."""
    k = len(rows)
    if k == 0:
        raise ValueError("empty matrix")
    a = [list(r) for r in rows]
    if any(len(r) != k for r in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = SPoly.constant(a[0][0].m, a[0][0].n)
    for p in range(k - 1):
        if a[p][p].is_zero():
            swap = next((i for i in range(p + 1, k) if a[i][p]), None)
            if swap is None:
                return a[0][0].zero_like()
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                a[i][j] = exact_divide(a[i][j] * a[p][p] - a[i][p] * a[p][j], prev)
        prev = a[p][p]
    det = a[k - 1][k - 1]
    return -det if sign < 0 else det


def solve_linear(system: Sequence[Sequence], rhs: Sequence) -> list[SRat]:
    """Solve ``system * x = rhs`` exactly (entries SRat, SPoly or scalars).

    Rows are cleared of denominators, then Cramer's rule is applied with
    Bareiss determinants.
    """
    k = len(system)
    if k == 0 or len(rhs) != k or any(len(r) != k for r in system):
        raise ValueError("need a square system with matching right-hand side")
    like = _first_poly(system, rhs)
    rows: list[list[SPoly]] = []
    for row, b in zip(system, rhs):
        fr = [SRat.lift(x, like) for x in list(row) + [b]]
        den = SPoly.constant(like.m, like.n)
        for f in fr:
            if f.den != den:
                den = den * f.den
        rows.append([exact_divide(f.num * den, f.den) for f in fr])
    a = [r[:k] for r in rows]
    b = [r[k] for r in rows]
    d = determinant(a)
    if d.is_zero():
        raise SingularSystemError("singular linear system")
    out = []
    for i in range(k):
        ai = [r[:i] + [bb] + r[i + 1:] for r, bb in zip(a, b)]
        out.append(SRat(determinant(ai), d))
    return out


def _first_poly(system, rhs) -> SPoly:
    for x in [y for r in system for y in r] + list(rhs):
        if isinstance(x, SPoly):
            return x
        if isinstance(x, SRat):
            return x.num
    raise TypeError("system has no polynomial entries to fix the ring")


# ----------------------------------------------------------------------
# supersymmetric Schur polynomials and the diagonal specialisation
# ----------------------------------------------------------------------


def super_schur(la: Sequence[int], m: int, n: int) -> SPoly:
    """Sum over semistandard supertableaux: entry i <= m gives x_i, entry m+j gives y_j."""
    la = cb.as_partition(la)
    out: dict[Exps, QScalar] = {}
    for t in cb.super_tableaux(la, m, n):
        cnt = Counter(v for row in t for v in row)
        e = tuple(cnt.get(k + 1, 0) for k in range(m + n))
        out[e] = out.get(e, ZERO) + ONE
    return SPoly(m, n, out)


def substitute(p: SPoly, xs: Sequence[SPoly], ys: Sequence[SPoly]) -> SPoly:
    """``p(xs, ys)``: x_i -> xs[i], y_j -> ys[j]."""
    if len(xs) != p.m or len(ys) != p.n:
        raise ValueError("wrong number of substitution values")
    return p.evaluate(list(xs) + list(ys))


def substitute_neg_y(p: SPoly) -> SPoly:
    """y_j -> -y_j."""
    out = {}
    for e, c in p.terms.items():
        odd = sum(e[p.m:]) % 2
        out[e] = -c if odd else c
    return SPoly(p.m, p.n, out)


def phi_specialize(p, m: int | None = None, n: int | None = None) -> SPoly:
    """Kill off-diagonal generators; x_ii -> x_i (i <= m), x_{m+j,m+j} -> -y_j."""
    alg = p.alg
    m = alg.m if m is None else m
    n = alg.n if n is None else n
    if (m, n) != (alg.m, alg.n):
        raise ValueError("(m, n) does not match the algebra of the polynomial")
    out: dict[Exps, QScalar] = {}
    for word, c in p.terms.items():
        e = [0] * (m + n)
        for g in word:
            i, j = alg.indices(g)
            if i != j:
                break
            e[i - 1] += 1
        else:
            if sum(e[m:]) % 2:
                c = -c
            key = tuple(e)
            out[key] = out.get(key, ZERO) + c
    return SPoly(m, n, out)


def elementary(k: int, values: Sequence[SPoly], like: SPoly) -> SPoly:
    """Elementary symmetric polynomial e_k of the given values."""
    acc = [SPoly.constant(like.m, like.n)] + [like.zero_like()] * k
    for v in values:
        for j in range(k, 0, -1):
            acc[j] = acc[j] + acc[j - 1] * v
    return acc[k] if k >= 0 else like.zero_like()


def jacobi_trudi_e(la: Sequence[int], e: Iterable | Mapping, like: SPoly):
    """``det(e_{la'_i - i + j})`` expanded by permutations (entries may be SRat)."""
    from itertools import permutations

    lt = cb.conjugate(la)
    k = len(lt)
    get = e if callable(e) else (lambda j, _e=e: _e[j] if 0 <= j < len(_e) else 0)

    def entry(i, j):
        idx = lt[i] - i + j
        if idx < 0:
            return 0
        return get(idx)

    total = SRat(like.zero_like())
    for perm in permutations(range(k)):
        term = SRat(SPoly.constant(like.m, like.n))
        for i, j in enumerate(perm):
            v = entry(i, j)
            if isinstance(v, int) and v == 0:
                term = None
                break
            term = term * SRat.lift(v, like)
            if term.is_zero():
                break
        if term is None or term.is_zero():
            continue
        total = total + term if cb._perm_sign(perm) > 0 else total - term
    return total


def super_power_sum(k: int, m: int, n: int) -> SPoly:
    """Power sum defined through Newton's recursion on ``e_j = S_(1^j)``:
    ``p_k = sum_{j<k} (-1)^{j-1} e_j p_{k-j} + (-1)^{k-1} k e_k``."""
    if k < 1:
        raise ValueError("k must be positive")
    e = [super_schur((1,) * j, m, n) if j else SPoly.constant(m, n) for j in range(k + 1)]
    p: list[SPoly] = [SPoly(m, n)]
    for r in range(1, k + 1):
        acc = e[r] * SPoly.constant(m, n, r)
        if r % 2 == 0:
            acc = -acc
        for j in range(1, r):
            term = e[j] * p[r - j]
            acc = acc + (term if j % 2 else -term)
        p.append(acc)
    return p[k]
