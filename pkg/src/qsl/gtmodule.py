"""Covariant modules of U_q(gl_{m|n}) in Gelfand-Tsetlin form.

A pattern is stored as a tuple of rows, ``rows[p-1]`` being row ``p``
(``p`` entries, ``p = 1..m+n``).  Row ``m+n`` is the covariant highest weight.
The action formulas are evaluated with a bracket convention: ``"q"`` turns
each factor ``(a - b)`` into the q-integer ``[a - b]_q``; ``"integer"`` keeps
plain integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterator, Sequence

from . import combinat as cb
from .aqmat import AqAlgebra, compose_right, x_operator
from .hecke import primitive_idempotent
from .report import Report
from .immanant import normalized_immanant
from .qscalar import ONE, ZERO, QScalar, qint, qpow, schur_element
from .superlinear import SuperSpace, TensorVector, bar_I, bilinear, hecke_action, weight_projector

__all__ = [
    "Pattern",
    "GTVector",
    "CONVENTIONS",
    "covariant_weight",
    "is_valid_pattern",
    "enumerate_patterns",
    "pattern_from_tableau",
    "pattern_weight",
    "verify_patterns",
    "gt_action",
    "check_relations",
    "adjudicate_convention",
    "SchurWeylVector",
    "schur_weyl_basis",
    "kostant_supertrace_check",
]

Pattern = tuple[tuple[int, ...], ...]
CONVENTIONS = ("q", "integer")


def covariant_weight(la: Sequence[int], m: int, n: int) -> tuple[int, ...]:
    """``(la_1..la_m | max(0, la'_1 - m) .. max(0, la'_n - m))``."""
    la = cb.as_partition(la)
    if not cb.in_hmn(la, m, n):
        raise ValueError(f"{la} is not an (m|n)-hook partition for m={m}, n={n}")
    lt = cb.conjugate(la)
    return tuple(cb.part(la, i) for i in range(m)) + tuple(
        max(0, cb.part(lt, j) - m) for j in range(n)
    )


# ----------------------------------------------------------------------
# patterns
# ----------------------------------------------------------------------


def is_valid_pattern(rows: Pattern, m: int, n: int) -> bool:
    N = m + n
    if len(rows) != N or any(len(rows[p - 1]) != p for p in range(1, N + 1)):
        return False
    lam = lambda p, i: rows[p - 1][i - 1]  # noqa: E731
    if any(v < 0 for row in rows for v in row):
        return False
    for p in range(m + 1, N + 1):
        for i in range(1, m + 1):
            if lam(p, i) - lam(p - 1, i) not in (0, 1):
                return False
        if lam(p, m) < sum(1 for i in range(m + 1, p + 1) if lam(p, i) > 0):
            return False
    if m + 1 <= N and lam(m + 1, m) == 0 and lam(m + 1, m) - lam(m, m) != 0:
        return False
    for p in range(m + 1, N):
        for i in range(1, m):
            if lam(p, i) < lam(p, i + 1):
                return False
    for i in range(2, N + 1):
        for j in range(1, i):
            if (j <= m and i <= m) or (j >= m + 1):
                if lam(i, j) < lam(i - 1, j) or lam(i - 1, j) < lam(i, j + 1):
                    return False
    return True


def _candidate_rows(top: tuple[int, ...], p: int, m: int) -> Iterator[tuple[int, ...]]:
    """Rows ``p-1`` compatible with row ``p`` (coarse bounds; validity is
    checked on the full pattern)."""
    choices = []
    for i in range(1, p):
        if p > m and i <= m:
            opts = [v for v in (top[i - 1], top[i - 1] - 1) if v >= 0]
        else:
            opts = list(range(top[i], top[i - 1] + 1))
        choices.append(opts)

    def rec(k: int, acc: tuple[int, ...]):
        if k == len(choices):
            yield acc
            return
        for v in choices[k]:
            yield from rec(k + 1, acc + (v,))

    yield from rec(0, ())


@lru_cache(maxsize=None)
def enumerate_patterns(weight: tuple[int, ...], m: int, n: int) -> tuple[Pattern, ...]:
    """All patterns with top row ``weight`` satisfying the basis conditions."""
    weight = tuple(weight)
    if len(weight) != m + n:
        raise ValueError("weight must have m+n entries")
    if m < 1:
        raise ValueError("GT patterns need m >= 1")
    partial: list[tuple[tuple[int, ...], ...]] = [(weight,)]
    for p in range(m + n, 1, -1):
        nxt = []
        for part in partial:
            for row in _candidate_rows(part[0], p, m):
                nxt.append((row,) + part)
        partial = nxt
    out = [pat for pat in partial if is_valid_pattern(pat, m, n)]
    return tuple(sorted(out))


def pattern_weight(rows: Pattern) -> tuple[int, ...]:
    """Exponents of the ``q^{eps_k}`` eigenvalue: row-sum differences."""
    sums = [0] + [sum(r) for r in rows]
    return tuple(sums[k] - sums[k - 1] for k in range(1, len(rows) + 1))


def pattern_from_tableau(t: Sequence[Sequence[int]], m: int, n: int) -> Pattern:
    """Row ``k`` is the covariant weight of the subtableau of entries <= k."""
    rows = []
    for k in range(1, m + n + 1):
        shape = cb.as_partition([sum(1 for v in row if v <= k) for row in t])
        mk, nk = min(k, m), max(0, k - m)
        if k <= m:
            rows.append(tuple(cb.part(shape, i) for i in range(k)))
        else:
            rows.append(covariant_weight(shape, mk, nk))
    return tuple(rows)


def verify_patterns(la: Sequence[int], m: int, n: int) -> Report:
    """Patterns biject with supertableaux of shape ``la``, weights included."""
    la = cb.as_partition(la)
    rep = Report("gt_patterns", {"m": m, "n": n, "la": list(la)})
    pats = enumerate_patterns(covariant_weight(la, m, n), m, n)
    tabs = cb.super_tableaux(la, m, n)
    rep.details["count"] = len(pats)
    if len(pats) != len(tabs):
        rep.fail({"patterns": len(pats), "tableaux": len(tabs)})
        return rep
    images = {pattern_from_tableau(t, m, n) for t in tabs}
    if images != set(pats):
        rep.fail({"unmatched": [[list(r) for r in p] for p in sorted(images ^ set(pats))][:1]})
        return rep
    tab_weights = Counter(cb.composition_of(sorted(v for row in t for v in row), m + n) for t in tabs)
    if Counter(pattern_weight(p) for p in pats) != tab_weights:
        rep.fail({"weights": "multisets differ"})
    return rep


# ----------------------------------------------------------------------
# the action
# ----------------------------------------------------------------------


@dataclass
class GTVector:
    """Linear combination of pattern symbols ``zeta_Lambda``."""

    m: int
    n: int
    coeffs: dict[Pattern, QScalar] = field(default_factory=dict)

    @classmethod
    def basis(cls, pat: Pattern, m: int, n: int) -> "GTVector":
        return cls(m, n, {pat: ONE})

    def add(self, pat: Pattern, c: QScalar) -> None:
        v = self.coeffs.get(pat, ZERO) + c
        if v:
            self.coeffs[pat] = v
        else:
            self.coeffs.pop(pat, None)

    def __add__(self, other: "GTVector") -> "GTVector":
        out = GTVector(self.m, self.n, dict(self.coeffs))
        for p, c in other.coeffs.items():
            out.add(p, c)
        return out

    def __sub__(self, other: "GTVector") -> "GTVector":
        return self + other.scale(-1)

    def scale(self, c) -> "GTVector":
        return GTVector(self.m, self.n, {p: v * c for p, v in self.coeffs.items() if v * c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GTVector) and self.coeffs == other.coeffs

    def to_json(self) -> list:
        return [{"pattern": [list(r) for r in p], "coeff": str(c)} for p, c in sorted(self.coeffs.items())]


def _shift(rows: Pattern, k: int, i: int, d: int) -> Pattern:
    out = [list(r) for r in rows]
    out[k - 1][i - 1] += d
    return tuple(tuple(r) for r in out)


class _Formula:
    """Evaluates products of factors ``(a - b)`` under one bracket convention."""

    def __init__(self, rows: Pattern, m: int, convention: str):
        self.rows, self.m, self.conv = rows, m, convention

    def lam(self, k: int, j: int) -> int:
        return self.rows[k - 1][j - 1]

    def l(self, k: int, j: int) -> int:
        lam = self.lam(k, j)
        return lam - j + 1 if j <= self.m else -lam + j - 2 * self.m

    def theta(self, k: int, i: int) -> int:
        return self.lam(k + 1, i) - self.lam(k, i)

    def f(self, x: int) -> QScalar:
        return qint(x) if self.conv == "q" else QScalar(x)

    def ratio(self, num: list[int], den: list[int]) -> QScalar:
        # equal factors cancel first, so coinciding zeros read as 0/0 -> 1
        common = Counter(num) & Counter(den)
        num = list((Counter(num) - common).elements())
        den = list((Counter(den) - common).elements())
        top = ONE
        for x in num:
            top = top * self.f(x)
        if not top:
            return ZERO
        bottom = ONE
        for x in den:
            bottom = bottom * self.f(x)
        if not bottom:
            raise ZeroDivisionError("vanishing denominator in a GT coefficient")
        return top / bottom


def _terms(gen: tuple, rows: Pattern, m: int, n: int, conv: str) -> list[tuple[Pattern, QScalar]]:
    F = _Formula(rows, m, conv)
    l, th = F.l, F.theta
    kind, k = gen
    out: list[tuple[Pattern, QScalar]] = []

    def push(target: Pattern, coeff_fn):
        if is_valid_pattern(target, m, n):
            c = coeff_fn()
            if c:
                out.append((target, c))

    if k < m:
        for i in range(1, k + 1):
            if kind == "E":
                push(_shift(rows, k, i, 1), lambda i=i: -F.ratio(
                    [l(k + 1, j) - l(k, i) for j in range(1, k + 2)],
                    [l(k, j) - l(k, i) for j in range(1, k + 1) if j != i]))
            else:
                push(_shift(rows, k, i, -1), lambda i=i: F.ratio(
                    [l(k - 1, j) - l(k, i) for j in range(1, k)],
                    [l(k, j) - l(k, i) for j in range(1, k + 1) if j != i]))
    elif k == m:
        for i in range(1, m + 1):
            sign = (-1) ** (i - 1 + sum(th(m, j) for j in range(1, i)))
            if kind == "E":
                if th(m, i) == 0:
                    continue
                push(_shift(rows, m, i, 1), lambda i=i, sign=sign: F.ratio(
                    [l(m, j) - l(m, i) - 1 for j in range(1, i)],
                    [l(m, j) - l(m, i) for j in range(i + 1, m + 1)]
                    + [l(m + 1, j) - l(m, i) - 1 for j in range(1, m + 1) if j != i]) * sign)
            else:
                if th(m, i) == 1:
                    continue
                push(_shift(rows, m, i, -1), lambda i=i, sign=sign: F.ratio(
                    [l(m, i) - l(m + 1, m + 1)]
                    + [l(m, j) - l(m, i) + 1 for j in range(i + 1, m + 1)]
                    + [l(m - 1, j) - l(m, i) for j in range(1, m)],
                    [l(m, j) - l(m, i) for j in range(1, i)]) * sign)
    else:
        def vartheta(i: int) -> int:
            return sum(th(k, j) for j in range(1, i)) + sum(th(k - 1, j) for j in range(i + 1, m + 1))

        for i in range(1, m + 1):
            sign = (-1) ** vartheta(i)
            if kind == "E":
                if not (th(k, i) == 1 and th(k - 1, i) == 0):
                    continue
                push(_shift(rows, k, i, 1), lambda i=i, sign=sign: F.ratio(
                    [l(k, j) - l(k, i) - 1 for j in range(1, m + 1) if j != i],
                    [l(k + 1, j) - l(k, i) - 1 for j in range(1, m + 1) if j != i]) * sign)
            else:
                if not (th(k - 1, i) == 1 and th(k, i) == 0):
                    continue
                push(_shift(rows, k, i, -1), lambda i=i, sign=sign: F.ratio(
                    [l(k + 1, j) - l(k, i) for j in range(m + 1, k + 2)]
                    + [l(k - 1, j) - l(k, i) + 1 for j in range(m + 1, k)]
                    + [l(k, j) - l(k, i) + 1 for j in range(1, m + 1) if j != i],
                    [l(k, j) - l(k, i) for j in range(m + 1, k + 1)]
                    + [l(k, j) - l(k, i) + 1 for j in range(m + 1, k + 1)]
                    + [l(k - 1, j) - l(k, i) + 1 for j in range(1, m + 1) if j != i]) * sign)
        for i in range(m + 1, k + 1):
            if kind == "E":
                push(_shift(rows, k, i, 1), lambda i=i: -F.ratio(
                    [x for j in range(1, m + 1) for x in (l(k, j) - l(k, i), l(k, j) - l(k, i) + 1)]
                    + [l(k + 1, j) - l(k, i) for j in range(m + 1, k + 2)],
                    [x for j in range(1, m + 1) for x in (l(k + 1, j) - l(k, i), l(k - 1, j) - l(k, i) + 1)]
                    + [l(k, j) - l(k, i) for j in range(m + 1, k + 1) if j != i]))
            else:
                push(_shift(rows, k, i, -1), lambda i=i: F.ratio(
                    [l(k - 1, j) - l(k, i) for j in range(m + 1, k)],
                    [l(k, j) - l(k, i) for j in range(m + 1, k + 1) if j != i]))
    return out


def gt_action(gen: tuple, v: GTVector, convention: str = "q") -> GTVector:
    """``("qe", k)`` for ``q^{eps_k}``, ``("E", k)`` or ``("F", k)``; invalid
    target patterns contribute nothing."""
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    m, n = v.m, v.n
    kind, k = gen
    out = GTVector(m, n)
    if kind == "qe":
        if not 1 <= k <= m + n:
            raise ValueError("k out of range")
        for pat, c in v.coeffs.items():
            out.add(pat, c * qpow(pattern_weight(pat)[k - 1]))
        return out
    if kind not in ("E", "F") or not 1 <= k < m + n:
        raise ValueError(f"unknown generator {gen}")
    for pat, c in v.coeffs.items():
        for target, d in _terms(gen, pat, m, n, convention):
            out.add(target, c * d)
    return out


def _h_eigen(weight: Sequence[int], k: int, m: int) -> int:
    return weight[k - 1] + weight[k] if k == m else weight[k - 1] - weight[k]


def check_relations(la: Sequence[int], m: int, n: int, convention: str = "q") -> Report:
    """``E_k F_l -+ F_l E_k = delta_kl [H_k]_q`` on every basis vector, and
    ``E_m^2 = F_m^2 = 0``."""
    rep = Report("gt_relations", {"m": m, "n": n, "la": list(la), "convention": convention})
    w = covariant_weight(la, m, n)
    N = m + n
    for pat in enumerate_patterns(w, m, n):
        z = GTVector.basis(pat, m, n)
        wt = pattern_weight(pat)
        for k in range(1, N):
            for l in range(1, N):
                ef = gt_action(("E", k), gt_action(("F", l), z, convention), convention)
                fe = gt_action(("F", l), gt_action(("E", k), z, convention), convention)
                lhs = ef + fe if k == l == m else ef - fe
                rhs = z.scale(qint(_h_eigen(wt, k, m))) if k == l else GTVector(m, n)
                if lhs != rhs:
                    rep.fail({"pattern": [list(r) for r in pat], "k": k, "l": l})
                    return rep
        if m < N:
            for g in ("E", "F"):
                sq = gt_action((g, m), gt_action((g, m), z, convention), convention)
                if not sq.is_zero():
                    rep.fail({"pattern": [list(r) for r in pat], "square": g})
                    return rep
    return rep


def adjudicate_convention(m: int, n: int, rmax: int = 3) -> Report:
    """Run the relation checks under both bracket conventions."""
    rep = Report("gt_convention", {"m": m, "n": n, "rmax": rmax})
    passing = []
    for conv in CONVENTIONS:
        ok = True
        for r in range(1, rmax + 1):
            for la in cb.hook_partitions(r, m, n):
                try:
                    if not check_relations(la, m, n, conv).ok:
                        ok = False
                except ZeroDivisionError:
                    ok = False
                if not ok:
                    break
            if not ok:
                break
        if ok:
            passing.append(conv)
    rep.details["passing"] = passing
    if len(passing) != 1:
        rep.fail({"passing": passing})
    return rep


# ----------------------------------------------------------------------
# Schur-Weyl basis and the weight-space supertrace
# ----------------------------------------------------------------------


@dataclass
class SchurWeylVector:
    tableau: cb.Tableau
    vector: TensorVector
    image: cb.Tableau
    in_ssyt: bool
    norm: QScalar   # c_la / alpha_{q^2}(I) * <e_I, E_T e_I>
    extra: dict[str, Any] = field(default_factory=dict)


def schur_weyl_basis(la: Sequence[int], I: Sequence[int], cfg: SuperSpace) -> list[SchurWeylVector]:
    """``E_T e_I`` for every standard tableau ``T`` of shape ``la`` (no square
    roots are taken)."""
    la = cb.as_partition(la)
    I = tuple(I)
    if sum(la) != len(I) or list(I) != sorted(I):
        raise ValueError("I must be a non-decreasing multiset of size |la|")
    if not cb.in_hmn(la, cfg.m, cfg.n):
        raise ValueError("la is not an (m|n)-hook partition")
    mu = cb.composition_of(I, cfg.dim)
    _, aq = cb.alpha_factors(I, cfg.m, cfg.n)
    c_la = schur_element(la)
    e_I = TensorVector.basis(I)
    out = []
    for t in cb.standard_tableaux(la):
        op = hecke_action(primitive_idempotent(t), cfg)
        vec = op.apply(e_I)
        image, valid = cb.theta_map(t, mu, cfg.m)
        norm = c_la / aq * bilinear(e_I, vec)
        out.append(SchurWeylVector(t, vec, image, valid, norm))
    return out


def kostant_supertrace_check(la: Sequence[int], mu: Sequence[int], alg: AqAlgebra) -> Report:
    """``Imm(X_I)/alpha_{q^2}(I)`` against
    ``(-1)^{bar I} c_la / alpha_{q^2}(I) sum_T <(P_mu (x) 1) Pi_r (E_T e_I), e_I>``,
    the coaction ``Pi_r`` being read off the operator ``X_1 ... X_r``."""
    la = cb.as_partition(la)
    mu = tuple(mu)
    cfg = alg.cfg
    I = cb.multiset_from_composition(mu)
    r = len(I)
    if sum(la) != r:
        raise ValueError("|la| must equal |mu|")
    rep = Report("kostant", {"m": alg.m, "n": alg.n, "la": list(la), "mu": list(mu)})
    lhs = normalized_immanant(la, I, alg=alg)
    proj = weight_projector(mu, cfg, r)
    X = x_operator(alg, r)
    total = alg.zero()
    for t in cb.standard_tableaux(la):
        coact = compose_right(X, hecke_action(primitive_idempotent(t), cfg))
        # (P_mu (x) 1) keeps the kets J of weight mu; pairing with e_I keeps J = I
        for J in proj.cols:
            if J == I:
                total = total + coact.entry(J, I)
    _, aq = cb.alpha_factors(I, alg.m, alg.n)
    scale = schur_element(la) / aq
    if bar_I(I, cfg) % 2:
        scale = -scale
    rhs = total.scale(scale)
    if lhs != rhs:
        rep.fail({"lhs": lhs.latex(), "rhs": rhs.latex()})
    rep.details["value"] = lhs.latex()
    return rep
