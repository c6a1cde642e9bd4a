"""The Iwahori-Hecke algebra H_r with quadratic relation (T - q)(T + q^-1) = 0.

Elements are sparse maps from permutations (one-line notation, values 1..r)
to ``QScalar`` coefficients in the ``T_sigma`` basis.  Permutations compose as
functions: ``(s t)(k) = s(t(k))``.  Irreducible representations use a
square-root-free seminormal form whose diagonal agrees with Young's
orthogonal form.
"""

from __future__ import annotations

import itertools
import json
import threading
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import combinat as cb
from .qscalar import ONE, ZERO, Q, QINV, QScalar, as_qscalar, qint, qpow, schur_element
from .report import Report

__all__ = [
    "Perm",
    "HeckeElt",
    "identity_perm",
    "compose",
    "inverse_perm",
    "length",
    "reduced_word",
    "all_perms",
    "generator",
    "hecke_mul",
    "jm_element",
    "SeminormalRep",
    "seminormal",
    "rep_matrix",
    "character",
    "primitive_idempotent",
    "idempotent_from_rep",
    "character_element",
    "induced_character",
    "parabolic_idempotent",
    "trace_on",
    "verify_idempotents",
    "character_independence",
]

Perm = tuple[int, ...]
QQ = Q - QINV


# ----------------------------------------------------------------------
# permutations

def identity_perm(r: int) -> Perm:
    return tuple(range(1, r + 1))


def compose(s: Perm, t: Perm) -> Perm:
    return tuple(s[t[k] - 1] for k in range(len(t)))


def inverse_perm(s: Perm) -> Perm:
    out = [0] * len(s)
    for k, v in enumerate(s):
        out[v - 1] = k + 1
    return tuple(out)


def length(s: Perm) -> int:
    return sum(1 for a in range(len(s)) for b in range(a + 1, len(s)) if s[a] > s[b])


@lru_cache(maxsize=None)
def reduced_word(s: Perm) -> tuple[int, ...]:
    """A reduced word ``(i_1, ..., i_l)`` with ``s = s_{i_1} ... s_{i_l}``."""
    pos = inverse_perm(s)
    for i in range(1, len(s)):
        if pos[i] < pos[i - 1]:   # i+1 precedes i: left descent at i
            rest = _swap_values(s, i)
            return (i,) + reduced_word(rest)
    return ()


def _swap_values(s: Perm, i: int) -> Perm:
    """``s_i * s``: exchange the values ``i`` and ``i+1``."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in s)


def _swap_positions(s: Perm, i: int) -> Perm:
    """``s * s_i``: exchange positions ``i`` and ``i+1``."""
    out = list(s)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


@lru_cache(maxsize=None)
def all_perms(r: int) -> tuple[Perm, ...]:
    return tuple(itertools.permutations(range(1, r + 1)))


def _embed(s: Perm, r: int, offset: int = 0) -> Perm:
    """Let ``s`` act on positions ``offset+1 .. offset+len(s)`` inside S_r."""
    out = list(range(1, r + 1))
    for k, v in enumerate(s):
        out[offset + k] = offset + v
    return tuple(out)


# ----------------------------------------------------------------------
# Hecke elements

class HeckeElt:
    """A linear combination of ``T_sigma`` with ``QScalar`` coefficients."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs: Mapping[Perm, QScalar] | None = None):
        self.r = r
        self.coeffs: dict[Perm, QScalar] = {}
        for s, c in (coeffs or {}).items():
            c = as_qscalar(c)
            if c:
                if len(s) != r:
                    raise ValueError(f"permutation {s} not in S_{r}")
                self.coeffs[tuple(s)] = c

    @classmethod
    def one(cls, r: int) -> "HeckeElt":
        return cls(r, {identity_perm(r): ONE})

    @classmethod
    def basis(cls, s: Perm) -> "HeckeElt":
        return cls(len(s), {tuple(s): ONE})

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        self._check(other)
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, ZERO) + c
        return HeckeElt(self.r, out)

    def __neg__(self) -> "HeckeElt":
        return HeckeElt(self.r, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + (-other)

    def scale(self, c) -> "HeckeElt":
        c = as_qscalar(c)
        return HeckeElt(self.r, {s: c * v for s, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return hecke_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HeckeElt) and self.r == other.r and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.r, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, s: Perm) -> QScalar:
        return self.coeffs.get(tuple(s), ZERO)

    def star(self) -> "HeckeElt":
        """The anti-involution ``T_sigma -> T_{sigma^-1}``."""
        return HeckeElt(self.r, {inverse_perm(s): c for s, c in self.coeffs.items()})

    def embed(self, r: int, offset: int = 0) -> "HeckeElt":
        return HeckeElt(r, {_embed(s, r, offset): c for s, c in self.coeffs.items()})

    def _check(self, other: "HeckeElt") -> None:
        if self.r != other.r:
            raise ValueError(f"H_{self.r} and H_{other.r} do not mix")

    def to_json(self) -> str:
        return json.dumps([{"perm": list(s), "coeff": str(c)} for s, c in sorted(self.coeffs.items())])

    @classmethod
    def from_json(cls, text: str) -> "HeckeElt":
        data = json.loads(text)
        if not data:
            raise ValueError("empty element carries no degree; use HeckeElt(r)")
        r = len(data[0]["perm"])
        return cls(r, {tuple(d["perm"]): QScalar.parse(d["coeff"]) for d in data})

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"HeckeElt({self.r}, 0)"
        terms = " + ".join(f"({c})*T{list(s)}" for s, c in sorted(self.coeffs.items()))
        return f"HeckeElt({self.r}, {terms})"


def generator(i: int, r: int) -> HeckeElt:
    return HeckeElt.basis(_swap_values(identity_perm(r), i))


def _left_gen(i: int, coeffs: Mapping[Perm, QScalar]) -> dict[Perm, QScalar]:
    out: dict[Perm, QScalar] = {}
    for s, c in coeffs.items():
        t = _swap_values(s, i)
        out[t] = out.get(t, ZERO) + c
        if s.index(i) > s.index(i + 1):   # length drops
            out[s] = out.get(s, ZERO) + QQ * c
    return out


@lru_cache(maxsize=None)
def _basis_product(s: Perm, t: Perm) -> tuple[tuple[Perm, QScalar], ...]:
    coeffs = {t: ONE}
    for i in reversed(reduced_word(s)):
        coeffs = _left_gen(i, coeffs)
    return tuple((p, c) for p, c in coeffs.items() if c)


def hecke_mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    a._check(b)
    out: dict[Perm, QScalar] = {}
    for s, c in a.coeffs.items():
        for t, d in b.coeffs.items():
            cd = c * d
            for p, e in _basis_product(s, t):
                out[p] = out.get(p, ZERO) + cd * e
    return HeckeElt(a.r, out)


def transposition(i: int, k: int, r: int) -> Perm:
    s = list(range(1, r + 1))
    s[i - 1], s[k - 1] = k, i
    return tuple(s)


@lru_cache(maxsize=None)
def jm_element(k: int, r: int) -> HeckeElt:
    """``y_k = 1 + (q - q^-1) * sum_{i<k} T_{(i,k)}``."""
    coeffs = {identity_perm(r): ONE}
    for i in range(1, k):
        coeffs[transposition(i, k, r)] = QQ
    return HeckeElt(r, coeffs)


# ----------------------------------------------------------------------
# matrices over Q(q)

Matrix = list[list[QScalar]]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, p = len(a), len(b), len(b[0]) if b else 0
    return [[sum((a[i][j] * b[j][l] for j in range(k) if a[i][j] and b[j][l]), ZERO)
             for l in range(p)] for i in range(n)]


def _identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


# ----------------------------------------------------------------------
# seminormal representations

class SeminormalRep:
    """Generator matrices of the irreducible H_r-module indexed by ``shape``.

    ``gens[i-1][row][col]`` is the coefficient of ``v_row`` in ``T_i v_col``,
    rows and columns indexed by ``tableaux``.
    """

    def __init__(self, shape: cb.Partition):
        self.shape = cb.as_partition(shape)
        self.r = sum(self.shape)
        self.tableaux = cb.standard_tableaux(self.shape)
        self.index = {t: k for k, t in enumerate(self.tableaux)}
        self.gens = [self._generator(i) for i in range(1, self.r)]
        self._cache: dict[Perm, Matrix] = {}
        self._lock = threading.Lock()

    @property
    def dim(self) -> int:
        return len(self.tableaux)

    def axial_distance(self, t: cb.Tableau, i: int) -> int:
        return cb.content_of(t, i + 1) - cb.content_of(t, i)

    def _generator(self, i: int) -> Matrix:
        n = self.dim
        mat = [[ZERO] * n for _ in range(n)]
        for t, col in self.index.items():
            d = self.axial_distance(t, i)
            mat[col][col] = qpow(d) / qint(d)
            s = cb.swap_entries(t, i)
            if s is None:
                continue
            row = self.index[s]
            # d > 0 sends v_t to v_s with coefficient one; the partner carries
            # the product [d+1][d-1]/[d]^2 forced by the quadratic relation
            if d > 0:
                mat[row][col] = ONE
            else:
                e = -d
                mat[row][col] = qint(e + 1) * qint(e - 1) / (qint(e) * qint(e))
        return mat

    def matrix(self, s: Perm) -> Matrix:
        with self._lock:
            hit = self._cache.get(s)
        if hit is not None:
            return hit
        mat = _identity(self.dim)
        for i in reduced_word(s):
            mat = _matmul(mat, self.gens[i - 1])
        with self._lock:
            self._cache[s] = mat
        return mat

    def of(self, h: HeckeElt) -> Matrix:
        n = self.dim
        out = [[ZERO] * n for _ in range(n)]
        for s, c in h.coeffs.items():
            m = self.matrix(s)
            for i in range(n):
                for j in range(n):
                    if m[i][j]:
                        out[i][j] = out[i][j] + c * m[i][j]
        return out


_REPS: dict[cb.Partition, SeminormalRep] = {}
_REPS_LOCK = threading.Lock()


def seminormal(shape: Sequence[int]) -> SeminormalRep:
    shape = cb.as_partition(shape)
    with _REPS_LOCK:
        rep = _REPS.get(shape)
        if rep is None:
            rep = _REPS[shape] = SeminormalRep(shape)
    return rep


def rep_matrix(shape: Sequence[int], h: HeckeElt) -> Matrix:
    return seminormal(shape).of(h)


def trace_on(shape: Sequence[int], h: HeckeElt) -> QScalar:
    m = rep_matrix(shape, h)
    return sum((m[i][i] for i in range(len(m))), ZERO)


def character(shape: Sequence[int], s: Perm) -> QScalar:
    """Trace of ``T_s`` on the seminormal module of ``shape``."""
    m = seminormal(shape).matrix(tuple(s))
    return sum((m[i][i] for i in range(len(m))), ZERO)


# ----------------------------------------------------------------------
# idempotents

def _addable_contents(shape: cb.Partition) -> list[int]:
    out = []
    for i in range(len(shape) + 1):
        if cb.part(shape, i) < cb.part(shape, i - 1) or i == 0:
            out.append(cb.part(shape, i) - i)
    return out


@lru_cache(maxsize=None)
def primitive_idempotent(t: cb.Tableau) -> HeckeElt:
    """``E_t`` by the Jucys-Murphy recurrence on the largest entry."""
    t = tuple(tuple(row) for row in t)
    r = sum(len(row) for row in t)
    if r == 0:
        raise ValueError("empty tableau")
    if r == 1:
        return HeckeElt.one(1)
    smaller = cb.remove_largest(t)
    out = primitive_idempotent(smaller).embed(r)
    c = cb.content_of(t, r)
    y = jm_element(r, r)
    for a in _addable_contents(cb.tableau_shape(smaller)):
        if a == c:
            continue
        factor = (y - HeckeElt.one(r).scale(qpow(2 * a))).scale(ONE / (qpow(2 * c) - qpow(2 * a)))
        out = out * factor
    return out


def idempotent_from_rep(t: cb.Tableau) -> HeckeElt:
    """``(1/c_la) sum_s <T_{s^-1} v_t, v_t> T_s`` from the seminormal diagonal."""
    shape = cb.tableau_shape(t)
    rep = seminormal(shape)
    k = rep.index[tuple(tuple(row) for row in t)]
    c = schur_element(shape)
    out = {}
    for s in all_perms(rep.r):
        out[s] = rep.matrix(inverse_perm(s))[k][k] / c
    return HeckeElt(rep.r, out)


def conjugation_sum(e: HeckeElt) -> HeckeElt:
    """``sum_s T_s e T_{s^-1}``."""
    out = HeckeElt(e.r)
    for s in all_perms(e.r):
        out = out + HeckeElt.basis(s) * e * HeckeElt.basis(inverse_perm(s))
    return out


@lru_cache(maxsize=None)
def character_element(shape: Sequence[int], tableau: cb.Tableau | None = None) -> HeckeElt:
    """``chi_q^la = sum_s T_s E_t T_{s^-1}``; ``t`` defaults to the row tableau."""
    shape = cb.as_partition(shape)
    t = cb.row_tableau(shape) if tableau is None else tableau
    return conjugation_sum(primitive_idempotent(t))


@lru_cache(maxsize=None)
def parabolic_idempotent(mu: Sequence[int], kind: str) -> HeckeElt:
    """Product of one-block idempotents ``E^{(1^{mu_i})}`` (sign) or
    ``E^{(mu_i)}`` (trivial) placed on consecutive position blocks."""
    if kind not in ("sign", "trivial"):
        raise ValueError("kind must be 'sign' or 'trivial'")
    mu = tuple(p for p in mu if p)
    r = sum(mu)
    out = HeckeElt.one(r)
    offset = 0
    for p in mu:
        block = cb.row_tableau((p,)) if kind == "trivial" else cb.column_tableau((1,) * p)
        out = out * primitive_idempotent(block).embed(r, offset)
        offset += p
    return out


@lru_cache(maxsize=None)
def induced_character(mu: Sequence[int], kind: str) -> HeckeElt:
    """``psi_q^mu`` (kind ``sign``) or ``phi_q^mu`` (kind ``trivial``)."""
    return conjugation_sum(parabolic_idempotent(tuple(mu), kind))


def from_terms(r: int, terms: Iterable[tuple[Perm, QScalar]]) -> HeckeElt:
    return HeckeElt(r, dict(terms))


# ----------------------------------------------------------------------
# checks


def verify_idempotents(r: int) -> Report:
    """Idempotent calculus of ``H_r``: ``E^2 = E``, orthogonality, completeness,
    Jucys-Murphy eigenvalues and the swap relation
    ``E_t (T_a - q^d/[d]) = E_t T_a E_{s_a t}``."""
    rep = Report("idempotents", {"r": r})
    one = HeckeElt.one(r)
    tabs = [t for la in cb.partitions(r) for t in cb.standard_tableaux(la)]
    es = {t: primitive_idempotent(t) for t in tabs}
    total = HeckeElt(r)
    for t in tabs:
        e = es[t]
        total = total + e
        if e * e != e:
            rep.fail({"check": "square", "tableau": cb.format_tableau(t)})
        for u in tabs:
            if u != t and not (e * es[u]).is_zero():
                rep.fail({"check": "orthogonal", "tableau": cb.format_tableau(t),
                          "other": cb.format_tableau(u)})
        for k in range(1, r + 1):
            y = jm_element(k, r)
            target = e.scale(qpow(2 * cb.content_of(t, k)))
            if y * e != target or e * y != target:
                rep.fail({"check": "jm", "tableau": cb.format_tableau(t), "k": k})
        for a in range(1, r):
            d = cb.content_of(t, a + 1) - cb.content_of(t, a)
            s = cb.swap_entries(t, a)
            es_ = es[s] if s is not None else HeckeElt(r)
            ta = generator(a, r)
            if e * (ta - one.scale(qpow(d) / qint(d))) != e * ta * es_:
                rep.fail({"check": "swap", "tableau": cb.format_tableau(t), "a": a})
        if not rep.ok:
            return rep
    if total != one:
        rep.fail({"check": "complete"})
    return rep


def character_independence(shape: Sequence[int]) -> Report:
    """Whether ``sum_s T_s E_t T_{s^-1}`` depends on the tableau ``t``."""
    shape = cb.as_partition(shape)
    rep = Report("character_independence", {"lambda": list(shape)})
    ref = character_element(shape)
    for t in cb.standard_tableaux(shape):
        if character_element(shape, t) != ref:
            rep.fail({"tableau": cb.format_tableau(t)})
            break
    return rep
