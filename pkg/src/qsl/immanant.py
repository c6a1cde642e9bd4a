"""Quantum super immanants of the generator matrix of A_q(Mat_{m|n}).

``Imm_chi(X^I_J) = (-1)^{sum i_k j_k} <I| chi X_1 ... X_r |J>`` where ``chi``
acts on tensor space through ``T_k -> Rcheck_k``.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from . import combinat as cb
from .aqmat import AqAlgebra, AqOp, NCPoly, compose, x_operator
from .hecke import HeckeElt, character_element, primitive_idempotent
from .qscalar import ONE
from .report import Report
from .superlinear import bar_I, hecke_action

__all__ = [
    "acting_op",
    "immanant",
    "immanant_via_idempotent",
    "normalized_immanant",
    "immanant_sum",
    "character_of",
    "verify_paths",
    "verify_vanishing",
]

_OPS: dict[tuple, AqOp] = {}


def character_of(shape_or_elt, tableau: cb.Tableau | None = None) -> HeckeElt:
    if isinstance(shape_or_elt, HeckeElt):
        return shape_or_elt
    return character_element(cb.as_partition(shape_or_elt), tableau)


def acting_op(h: HeckeElt, alg: AqAlgebra) -> AqOp:
    """The ``A_q``-valued operator ``h X_1 ... X_r`` (memoised)."""
    key = (h, alg.m, alg.n)
    op = _OPS.get(key)
    if op is None:
        op = _OPS[key] = compose(hecke_action(h, alg.cfg), x_operator(alg, h.r))
    return op


def _sign(I: Sequence[int], J: Sequence[int], alg: AqAlgebra) -> int:
    p = alg.cfg.parity
    return sum(p(i) * p(j) for i, j in zip(I, J)) % 2


def immanant(shape_or_elt, I: Sequence[int], J: Sequence[int] | None = None, *,
             alg: AqAlgebra, tableau: cb.Tableau | None = None) -> NCPoly:
    """``Imm_chi(X^I_J)`` for a partition (its character element) or any
    ``HeckeElt``; ``J`` defaults to ``I``."""
    I = tuple(I)
    J = I if J is None else tuple(J)
    chi = character_of(shape_or_elt, tableau)
    if not (len(I) == len(J) == chi.r):
        raise ValueError(f"|I|={len(I)}, |J|={len(J)} and r={chi.r} must agree")
    if any(not 1 <= i <= alg.N for i in I + J):
        raise ValueError("index out of range")
    val = acting_op(chi, alg).entry(I, J)
    return -val if _sign(I, J, alg) else val


def normalized_immanant(shape_or_elt, I: Sequence[int], *, alg: AqAlgebra,
                        tableau: cb.Tableau | None = None) -> NCPoly:
    """``Imm(X_I) / alpha_{q^2}(I)`` for a non-decreasing ``I``."""
    _, aq = cb.alpha_factors(I, alg.m, alg.n)
    return immanant(shape_or_elt, I, alg=alg, tableau=tableau).scale(ONE / aq)


def immanant_via_idempotent(shape: Sequence[int], I: Sequence[int], *, alg: AqAlgebra,
                            tableau: cb.Tableau | None = None) -> NCPoly:
    """``alpha_{q^2}(I) (-1)^{bar I} / alpha(I) * sum_s <I_s| E_t X |I_s>``."""
    I = tuple(I)
    if list(I) != sorted(I):
        raise ValueError("I must be non-decreasing")
    shape = cb.as_partition(shape)
    if sum(shape) != len(I):
        raise ValueError("size mismatch")
    t = cb.row_tableau(shape) if tableau is None else tableau
    op = acting_op(primitive_idempotent(t), alg)
    plain, aq = cb.alpha_factors(I, alg.m, alg.n)
    total = alg.zero()
    for s in itertools.permutations(range(len(I))):
        K = tuple(I[k] for k in s)
        total = total + op.entry(K, K)
    scale = aq / plain
    if bar_I(I, alg.cfg) % 2:
        scale = -scale
    return total.scale(scale)


def immanant_sum(shape_or_elt, alg: AqAlgebra, *, method: str = "minors",
                 tableau: cb.Tableau | None = None) -> NCPoly:
    """``sum_I Imm(X_I) / alpha_{q^2}(I)`` over non-decreasing ``I``.

    ``method="supertrace"`` evaluates ``str_{1..r}(E_t X_1 ... X_r)`` instead;
    it needs a partition.
    """
    if method == "minors":
        chi = character_of(shape_or_elt, tableau)
        total = alg.zero()
        for I in cb.multisets(alg.N, chi.r):
            total = total + normalized_immanant(chi, I, alg=alg)
        return total
    if method == "supertrace":
        shape = cb.as_partition(shape_or_elt)
        t = cb.row_tableau(shape) if tableau is None else tableau
        op = acting_op(primitive_idempotent(t), alg)
        total = alg.zero()
        for J in alg.cfg.kets(sum(shape)):
            e = op.entry(J, J)
            total = total - e if bar_I(J, alg.cfg) % 2 else total + e
        return total
    raise ValueError("method must be 'minors' or 'supertrace'")


def verify_paths(alg: AqAlgebra, r: int) -> Report:
    """The defining formula and the idempotent-sum formula agree on every
    sorted multiset ``I``; partitions outside the hook vanish."""
    rep = Report("immanant_paths", {"m": alg.m, "n": alg.n, "r": r})
    for la in cb.partitions(r):
        hook = cb.in_hmn(la, alg.m, alg.n)
        for I in cb.multisets(alg.N, r):
            a = immanant(la, I, alg=alg)
            if a != immanant_via_idempotent(la, I, alg=alg):
                rep.fail({"lambda": list(la), "I": list(I), "imm": a.latex()})
                return rep
            if not hook and not a.is_zero():
                rep.fail({"lambda": list(la), "I": list(I), "nonzero": a.latex()})
                return rep
    return rep


def verify_vanishing(alg: AqAlgebra, r: int) -> Report:
    """``Imm_la(X_I) = 0`` for every ``la`` outside the hook and every ``I``."""
    rep = Report("vanishing", {"m": alg.m, "n": alg.n, "r": r})
    for la in cb.partitions(r):
        if cb.in_hmn(la, alg.m, alg.n):
            continue
        for I in cb.multisets(alg.N, r):
            a = immanant(la, I, alg=alg)
            if not a.is_zero():
                rep.fail({"lambda": list(la), "I": list(I), "imm": a.latex()})
                return rep
    return rep
