"""Tensor powers of the natural super vector space C^{m|n}.

Operators are stored as bra-ket tables: ``op.entry(I, J)`` is the
coefficient of ``e_I`` in ``op(e_J)``.  Composition is therefore the plain
matrix product.  Super signs enter only when an operator is assembled from
elementary tensors ``x_1 (x) ... (x) x_r``; such a tensor acts on
``v_1 (x) ... (x) v_r`` with the Koszul sign
``(-1)^{sum_{a > b} |x_a| |v_b|}``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from . import combinat as cb
from .hecke import HeckeElt, Perm, reduced_word, _swap_values
from .qscalar import ONE, ZERO, Q, QINV, QScalar, as_qscalar, qpow
from .report import Report

__all__ = [
    "SuperSpace",
    "Ket",
    "TensorVector",
    "SuperOp",
    "ElemTerm",
    "op_from_terms",
    "build_r_matrices",
    "rcheck_on_ket",
    "rcheck_op",
    "hecke_action",
    "uq_action",
    "uq_qh",
    "supertrace",
    "weight_projector",
    "bilinear",
    "gamma_exponent",
    "bar_I",
    "bar_I_sigma",
    "verify_ybe",
    "verify_hecke_quotient",
]

Ket = tuple[int, ...]
QQ = Q - QINV


@dataclass(frozen=True)
class SuperSpace:
    """C^{m|n} with basis e_1..e_{m+n}; e_i is odd when i > m."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError("need m, n >= 0 and m + n >= 1")

    @property
    def dim(self) -> int:
        return self.m + self.n

    def parity(self, i: int) -> int:
        return 0 if i <= self.m else 1

    def qi(self, i: int) -> QScalar:
        return qpow(1 - 2 * self.parity(i))

    def kets(self, r: int) -> list[Ket]:
        return list(itertools.product(range(1, self.dim + 1), repeat=r))

    def ket_parity(self, ket: Sequence[int]) -> int:
        return sum(self.parity(i) for i in ket) % 2


def bar_I(I: Sequence[int], cfg: SuperSpace) -> int:
    """``bar I = sum_k bar i_k``."""
    return sum(cfg.parity(i) for i in I)


def bar_I_sigma(I: Sequence[int], s: Perm, cfg: SuperSpace) -> int:
    """``sum_{k<t, s(k)>s(t)} bar i_k bar i_t``."""
    r = len(I)
    return sum(cfg.parity(I[k]) * cfg.parity(I[t])
               for k in range(r) for t in range(k + 1, r) if s[k] > s[t])


def gamma_exponent(I: Sequence[int], J: Sequence[int], cfg: SuperSpace) -> int:
    """``gamma(I,J) = sum_a i_a (j_a + 1) + sum_{a<b} j_b (i_a + j_a)`` (parities)."""
    p = cfg.parity
    r = len(I)
    g = sum(p(I[a]) * (p(J[a]) + 1) for a in range(r))
    g += sum(p(J[b]) * (p(I[a]) + p(J[a])) for a in range(r) for b in range(a + 1, r))
    return g


# ----------------------------------------------------------------------
# vectors

class TensorVector:
    """A finite linear combination of kets over Q(q)."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs: Mapping[Ket, QScalar] | None = None):
        self.r = r
        self.coeffs: dict[Ket, QScalar] = {}
        for k, c in (coeffs or {}).items():
            c = as_qscalar(c)
            if c:
                self.coeffs[tuple(k)] = c

    @classmethod
    def basis(cls, ket: Sequence[int]) -> "TensorVector":
        return cls(len(ket), {tuple(ket): ONE})

    def __add__(self, other: "TensorVector") -> "TensorVector":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, ZERO) + c
        return TensorVector(self.r, out)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + other.scale(-1)

    def scale(self, c) -> "TensorVector":
        c = as_qscalar(c)
        return TensorVector(self.r, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TensorVector) and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        body = " + ".join(f"({c})|{','.join(map(str, k))}>" for k, c in sorted(self.coeffs.items()))
        return f"TensorVector({body or '0'})"


def bilinear(u: TensorVector, v: TensorVector) -> QScalar:
    """The symmetric form with orthonormal kets."""
    small, big = (u, v) if len(u.coeffs) <= len(v.coeffs) else (v, u)
    return sum((c * big.coeffs[k] for k, c in small.coeffs.items() if k in big.coeffs), ZERO)


# ----------------------------------------------------------------------
# operators

class SuperOp:
    """A linear operator on (C^{m|n})^{(x) r}, stored column by column."""

    __slots__ = ("cfg", "r", "cols", "_rows")

    def __init__(self, cfg: SuperSpace, r: int, cols: Mapping[Ket, Mapping[Ket, QScalar]] | None = None):
        self.cfg = cfg
        self.r = r
        self._rows = None
        self.cols: dict[Ket, dict[Ket, QScalar]] = {}
        for J, col in (cols or {}).items():
            clean = {I: c for I, c in col.items() if c}
            if clean:
                self.cols[tuple(J)] = clean

    @classmethod
    def identity(cls, cfg: SuperSpace, r: int) -> "SuperOp":
        return cls(cfg, r, {J: {J: ONE} for J in cfg.kets(r)})

    @classmethod
    def zero(cls, cfg: SuperSpace, r: int) -> "SuperOp":
        return cls(cfg, r)

    @classmethod
    def from_columns(cls, cfg: SuperSpace, r: int, fn) -> "SuperOp":
        return cls(cfg, r, {J: fn(J).coeffs for J in cfg.kets(r)})

    def entry(self, I: Sequence[int], J: Sequence[int]) -> QScalar:
        return self.cols.get(tuple(J), {}).get(tuple(I), ZERO)

    def coefficient(self, I: Sequence[int], J: Sequence[int]) -> QScalar:
        """Signed matrix coefficient ``(-1)^{gamma(I,J)} <I|A|J>``."""
        v = self.entry(I, J)
        return -v if gamma_exponent(I, J, self.cfg) % 2 else v

    def row(self, I: Sequence[int]) -> dict[Ket, QScalar]:
        """``{J: <I|A|J>}`` for the bra ``I``."""
        if self._rows is None:
            rows: dict[Ket, dict[Ket, QScalar]] = {}
            for J, col in self.cols.items():
                for K, c in col.items():
                    rows.setdefault(K, {})[J] = c
            self._rows = rows
        return self._rows.get(tuple(I), {})

    def column(self, J: Sequence[int]) -> TensorVector:
        return TensorVector(self.r, self.cols.get(tuple(J), {}))

    def entries(self) -> Iterator[tuple[Ket, Ket, QScalar]]:
        for J, col in self.cols.items():
            for I, c in col.items():
                yield I, J, c

    def apply(self, v: TensorVector) -> TensorVector:
        out: dict[Ket, QScalar] = {}
        for J, c in v.coeffs.items():
            for I, a in self.cols.get(J, {}).items():
                out[I] = out.get(I, ZERO) + a * c
        return TensorVector(self.r, out)

    def __matmul__(self, other: "SuperOp") -> "SuperOp":
        """Composition ``self o other``."""
        self._check(other)
        cols = {}
        for J, col in other.cols.items():
            out: dict[Ket, QScalar] = {}
            for K, b in col.items():
                for I, a in self.cols.get(K, {}).items():
                    out[I] = out.get(I, ZERO) + a * b
            cols[J] = out
        return SuperOp(self.cfg, self.r, cols)

    def __add__(self, other: "SuperOp") -> "SuperOp":
        self._check(other)
        cols = {J: dict(col) for J, col in self.cols.items()}
        for J, col in other.cols.items():
            tgt = cols.setdefault(J, {})
            for I, c in col.items():
                tgt[I] = tgt.get(I, ZERO) + c
        return SuperOp(self.cfg, self.r, cols)

    def __sub__(self, other: "SuperOp") -> "SuperOp":
        return self + other.scale(-1)

    def scale(self, c) -> "SuperOp":
        c = as_qscalar(c)
        return SuperOp(self.cfg, self.r, {J: {I: c * v for I, v in col.items()} for J, col in self.cols.items()})

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SuperOp) and self.cfg == other.cfg and self.r == other.r
                and self.cols == other.cols)

    def is_zero(self) -> bool:
        return not self.cols

    def transpose(self) -> "SuperOp":
        cols: dict[Ket, dict[Ket, QScalar]] = {}
        for I, J, c in self.entries():
            cols.setdefault(I, {})[J] = c
        return SuperOp(self.cfg, self.r, cols)

    def _check(self, other: "SuperOp") -> None:
        if self.cfg != other.cfg or self.r != other.r:
            raise ValueError("operators act on different spaces")

    def to_json(self) -> str:
        data = [{"bra": list(I), "ket": list(J), "coeff": str(c)} for I, J, c in sorted(self.entries())]
        return json.dumps({"r": self.r, "m": self.cfg.m, "n": self.cfg.n, "entries": data})

    @classmethod
    def from_json(cls, text: str) -> "SuperOp":
        d = json.loads(text)
        cols: dict[Ket, dict[Ket, QScalar]] = {}
        for e in d["entries"]:
            cols.setdefault(tuple(e["ket"]), {})[tuple(e["bra"])] = QScalar.parse(e["coeff"])
        return cls(SuperSpace(d["m"], d["n"]), d["r"], cols)

    def __repr__(self) -> str:
        return f"SuperOp(m={self.cfg.m}, n={self.cfg.n}, r={self.r}, nnz={sum(len(c) for c in self.cols.values())})"


# ----------------------------------------------------------------------
# operators from elementary tensors

# one elementary tensor: coefficient and, per slot, a matrix unit (i, j) or None
ElemTerm = tuple[QScalar, tuple[tuple[int, int] | None, ...]]


def op_from_terms(cfg: SuperSpace, r: int, terms: Iterable[ElemTerm]) -> SuperOp:
    """Assemble ``sum c * x_1 (x) ... (x) x_r`` with Koszul signs."""
    terms = list(terms)
    p = cfg.parity
    cols: dict[Ket, dict[Ket, QScalar]] = {}
    for J in cfg.kets(r):
        out: dict[Ket, QScalar] = {}
        for c, units in terms:
            I = list(J)
            sign = 0
            ok = True
            for a, u in enumerate(units):
                if u is None:
                    continue
                i, j = u
                if J[a] != j:
                    ok = False
                    break
                I[a] = i
                xa = p(i) + p(j)
                sign += xa * sum(p(J[b]) for b in range(a))
            if not ok:
                continue
            I = tuple(I)
            v = -c if sign % 2 else c
            out[I] = out.get(I, ZERO) + v
        cols[J] = out
    return SuperOp(cfg, r, cols)


def _eps(d: int) -> int:
    return (d > 0) - (d < 0)


def r_matrix_terms(cfg: SuperSpace, kind: str) -> list[tuple[QScalar, tuple[int, int], tuple[int, int]]]:
    N = cfg.dim
    p = cfg.parity
    out = []
    if kind in ("R", "R+", "R-"):
        for i in range(1, N + 1):
            qi = cfg.qi(i)
            out.append((qi.inverse() if kind == "R-" else qi, (i, i), (i, i)))
            for j in range(1, N + 1):
                if i != j:
                    out.append((ONE, (i, i), (j, j)))
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                sgn = -1 if p(j) else 1
                if kind == "R" and i < j:
                    out.append((QQ * sgn, (i, j), (j, i)))
                elif kind == "R+" and i > j:
                    out.append((QQ * sgn, (i, j), (j, i)))
                elif kind == "R-" and i < j:
                    out.append((QQ * (-sgn), (i, j), (j, i)))
    elif kind == "P":
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                out.append((as_qscalar(-1 if p(j) else 1), (i, j), (j, i)))
    elif kind == "Pq":
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                out.append((qpow(_eps(i - j)) * (-1 if p(j) else 1), (i, j), (j, i)))
    elif kind == "Rcheck":
        # the displayed closed form of P R
        for i in range(1, N + 1):
            out.append((cfg.qi(i) * (-1 if p(i) else 1), (i, i), (i, i)))
            for j in range(1, N + 1):
                if i != j:
                    out.append((as_qscalar(-1 if p(j) else 1), (i, j), (j, i)))
                if i > j:
                    out.append((QQ, (i, i), (j, j)))
    else:
        raise ValueError(kind)
    return out


def two_slot_op(cfg: SuperSpace, kind: str, r: int = 2, slots: tuple[int, int] = (1, 2)) -> SuperOp:
    """An R-type matrix placed on tensor slots ``slots`` of an ``r``-fold product."""
    terms = []
    for c, u, v in r_matrix_terms(cfg, kind):
        units: list[tuple[int, int] | None] = [None] * r
        units[slots[0] - 1] = u
        units[slots[1] - 1] = v
        terms.append((c, tuple(units)))
    return op_from_terms(cfg, r, terms)


def build_r_matrices(cfg: SuperSpace) -> dict[str, SuperOp]:
    """``R``, ``R+``, ``R-``, ``P``, ``Rcheck`` (= P o R) and ``Pq`` on two slots."""
    ops = {k: two_slot_op(cfg, k) for k in ("R", "R+", "R-", "P", "Pq")}
    ops["Rcheck"] = ops["P"] @ ops["R"]
    return ops


def rcheck_on_ket(ket: Ket, k: int, cfg: SuperSpace) -> list[tuple[Ket, QScalar]]:
    """``Rcheck`` on slots ``k, k+1`` (1-based) of a basis ket."""
    a, b = ket[k - 1], ket[k]
    p = cfg.parity
    if a == b:
        return [(ket, -cfg.qi(a) if p(a) else cfg.qi(a))]
    flipped = ket[:k - 1] + (b, a) + ket[k + 1:]
    sgn = -ONE if p(a) * p(b) else ONE
    if a < b:
        return [(flipped, sgn)]
    return [(flipped, sgn), (ket, QQ)]


def _apply_rcheck(col: Mapping[Ket, QScalar], k: int, cfg: SuperSpace) -> dict[Ket, QScalar]:
    out: dict[Ket, QScalar] = {}
    for ket, c in col.items():
        for kk, v in rcheck_on_ket(ket, k, cfg):
            out[kk] = out.get(kk, ZERO) + c * v
    return out


def rcheck_op(cfg: SuperSpace, r: int, k: int) -> SuperOp:
    return SuperOp(cfg, r, {J: _apply_rcheck({J: ONE}, k, cfg) for J in cfg.kets(r)})


@lru_cache(maxsize=None)
def _basis_action(s: Perm, cfg: SuperSpace) -> SuperOp:
    r = len(s)
    word = reduced_word(s)
    if not word:
        return SuperOp.identity(cfg, r)
    i = word[0]
    prev = _basis_action(_swap_values(s, i), cfg)
    return SuperOp(cfg, r, {J: _apply_rcheck(col, i, cfg) for J, col in prev.cols.items()})


_ACTIONS: dict[tuple[HeckeElt, SuperSpace], SuperOp] = {}


def hecke_action(h: HeckeElt, cfg: SuperSpace, r: int | None = None) -> SuperOp:
    """Image of ``h`` under ``T_k -> Rcheck_{k,k+1}``."""
    if r is not None and r != h.r:
        raise ValueError("degree mismatch")
    key = (h, cfg)
    hit = _ACTIONS.get(key)
    if hit is not None:
        return hit
    cols: dict[Ket, dict[Ket, QScalar]] = {}
    for s, c in h.coeffs.items():
        for J, col in _basis_action(s, cfg).cols.items():
            tgt = cols.setdefault(J, {})
            for I, v in col.items():
                tgt[I] = tgt.get(I, ZERO) + c * v
    if not h.coeffs and h.r:
        cols = {}
    op = SuperOp(cfg, h.r, cols)
    _ACTIONS[key] = op
    return op


# ----------------------------------------------------------------------
# U_q(gl_{m|n})

def _h_value(h: Sequence[int], i: int) -> int:
    return h[i - 1] if i - 1 < len(h) else 0


def big_h(cfg: SuperSpace, i: int) -> tuple[int, ...]:
    """``H_i = eps_i - eps_{i+1}`` for ``i != m`` and ``eps_m + eps_{m+1}``."""
    h = [0] * cfg.dim
    h[i - 1] = 1
    h[i] = 1 if i == cfg.m else -1
    return tuple(h)


def _k_exponent(cfg: SuperSpace, i: int, a: int) -> int:
    """Exponent of q in ``k_i = q_i^{H_i}`` on ``e_a``."""
    return (1 - 2 * cfg.parity(i)) * _h_value(big_h(cfg, i), a)


def uq_qh(cfg: SuperSpace, r: int, h: Sequence[int]) -> SuperOp:
    """``q^h`` acting diagonally (group-like)."""
    cols = {}
    for J in cfg.kets(r):
        cols[J] = {J: qpow(sum(_h_value(h, a) for a in J))}
    return SuperOp(cfg, r, cols)


COPRODUCTS = ("commuting", "literal")


def uq_action(gen: tuple, cfg: SuperSpace, r: int, coproduct: str = "commuting") -> SuperOp:
    """``("E", k)``, ``("F", k)`` or ``("qh", h)`` through the iterated coproduct.

    ``literal`` uses ``Delta(E) = E (x) 1 + k (x) E``, ``Delta(F) = F (x) k^-1 + 1 (x) F``.
    ``commuting`` (the default) replaces ``k`` by ``k^-1`` in both; this is the
    variant whose tensor action commutes with ``T_k -> Rcheck_k``.
    """
    if coproduct not in COPRODUCTS:
        raise ValueError(f"coproduct must be one of {COPRODUCTS}")
    flip = -1 if coproduct == "commuting" else 1
    kind = gen[0]
    if kind == "qh":
        return uq_qh(cfg, r, gen[1])
    k = gen[1]
    if not 1 <= k < cfg.dim:
        raise ValueError(f"generator index {k} out of range")
    p = cfg.parity
    odd = int(k == cfg.m)
    cols = {}
    for J in cfg.kets(r):
        out: dict[Ket, QScalar] = {}
        for pos in range(r):
            a = J[pos]
            if kind == "E" and a == k + 1:
                new = k
            elif kind == "F" and a == k:
                new = k + 1
            elif kind in ("E", "F"):
                continue
            else:
                raise ValueError(f"unknown generator {gen}")
            if kind == "E":
                expo = flip * sum(_k_exponent(cfg, k, J[b]) for b in range(pos))
            else:
                expo = -flip * sum(_k_exponent(cfg, k, J[b]) for b in range(pos + 1, r))
            sign = odd * sum(p(J[b]) for b in range(pos))
            I = J[:pos] + (new,) + J[pos + 1:]
            v = qpow(expo)
            out[I] = out.get(I, ZERO) + (-v if sign % 2 else v)
        cols[J] = out
    return SuperOp(cfg, r, cols)


# ----------------------------------------------------------------------
# traces and projectors

def supertrace(a: SuperOp, positions: Iterable[int] | None = None):
    """Partial supertrace over ``positions`` (1-based); full trace gives a scalar."""
    r = a.r
    pos = sorted(set(range(1, r + 1) if positions is None else positions))
    if any(not 1 <= k <= r for k in pos):
        raise ValueError("positions out of range")
    keep = [k for k in range(1, r + 1) if k not in pos]
    cfg = a.cfg
    if not keep:
        total = ZERO
        for J, col in a.cols.items():
            v = col.get(J)
            if v:
                total = total - v if bar_I(J, cfg) % 2 else total + v
        return total
    cols: dict[Ket, dict[Ket, QScalar]] = {}
    for J, col in a.cols.items():
        traced = tuple(J[k - 1] for k in pos)
        sgn = bar_I(traced, cfg) % 2
        Jk = tuple(J[k - 1] for k in keep)
        for I, v in col.items():
            if tuple(I[k - 1] for k in pos) != traced:
                continue
            Ik = tuple(I[k - 1] for k in keep)
            tgt = cols.setdefault(Jk, {})
            tgt[Ik] = tgt.get(Ik, ZERO) + (-v if sgn else v)
    return SuperOp(cfg, len(keep), cols)


def weight_projector(mu: Sequence[int], cfg: SuperSpace, r: int) -> SuperOp:
    """Diagonal projector onto kets whose content has multiplicities ``mu``."""
    mu = tuple(mu) + (0,) * (cfg.dim - len(mu))
    if len(mu) != cfg.dim or any(x < 0 for x in mu):
        raise ValueError("weight must be a weak (m+n)-composition")
    if sum(mu) != r:
        raise ValueError(f"weight {mu} does not sum to r={r}")
    cols = {J: {J: ONE} for J in cfg.kets(r) if cb.composition_of(J, cfg.dim) == mu}
    return SuperOp(cfg, r, cols)


# ----------------------------------------------------------------------
# checks


def verify_ybe(cfg: SuperSpace) -> Report:
    """``R12 R13 R23 = R23 R13 R12`` on three tensor factors, plus
    ``R R^- = 1`` and ``P R P = R^+``."""
    rep = Report("ybe", {"m": cfg.m, "n": cfg.n})
    ops = build_r_matrices(cfg)
    if ops["R"] @ ops["R-"] != SuperOp.identity(cfg, 2):
        rep.fail("R R^- != 1")
    if ops["P"] @ ops["R"] @ ops["P"] != ops["R+"]:
        rep.fail("P R P != R^+")
    R12, R13, R23 = (two_slot_op(cfg, "R", 3, s) for s in ((1, 2), (1, 3), (2, 3)))
    lhs, rhs = R12 @ R13 @ R23, R23 @ R13 @ R12
    if lhs != rhs:
        bad = next((I, J) for I, J, c in (lhs - rhs).entries() if c)
        rep.fail({"bra": list(bad[0]), "ket": list(bad[1])})
    return rep


def verify_hecke_quotient(cfg: SuperSpace, r: int = 3) -> Report:
    """``(Rcheck_k - q)(Rcheck_k + q^-1) = 0`` and the braid relations on ``r`` factors."""
    rep = Report("hecke", {"m": cfg.m, "n": cfg.n, "r": r})
    one = SuperOp.identity(cfg, r)
    gens = [rcheck_op(cfg, r, k) for k in range(1, r)]
    for k, a in enumerate(gens, start=1):
        if not ((a - one.scale(Q)) @ (a + one.scale(QINV))).is_zero():
            rep.fail({"quadratic": k})
    for k in range(len(gens) - 1):
        a, b = gens[k], gens[k + 1]
        if a @ b @ a != b @ a @ b:
            rep.fail({"braid": k + 1})
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            if gens[i] @ gens[j] != gens[j] @ gens[i]:
                rep.fail({"commute": [i + 1, j + 1]})
    return rep
