from collections import defaultdict

import pytest

from qsl import combinat as cb
from qsl.gtmodule import (
    GTVector,
    adjudicate_convention,
    check_relations,
    covariant_weight,
    enumerate_patterns,
    gt_action,
    is_valid_pattern,
    kostant_supertrace_check,
    pattern_weight,
    schur_weyl_basis,
    verify_patterns,
)
from qsl.qscalar import ONE, ZERO, qpow
from qsl.superlinear import SuperSpace, uq_action


def test_covariant_weights():
    assert covariant_weight((2, 1), 1, 1) == (2, 1)
    assert covariant_weight((1,), 2, 1) == (1, 0, 0)
    assert covariant_weight((1, 1, 1), 1, 1) == (1, 2)


def test_pattern_examples():
    assert len(enumerate_patterns(covariant_weight((1,), 1, 1), 1, 1)) == 2
    assert len(enumerate_patterns(covariant_weight((2,), 1, 1), 1, 1)) == 2
    assert len(cb.super_tableaux((2, 2), 1, 1)) == 0
    for p in enumerate_patterns(covariant_weight((2, 1), 2, 1), 2, 1):
        assert is_valid_pattern(p, 2, 1)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_patterns_match_supertableaux(m, n):
    for r in range(1, 5):
        for la in cb.hook_partitions(r, m, n):
            rep = verify_patterns(la, m, n)
            assert rep.ok, rep.witness


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_relations_q_convention(m, n):
    for r in range(1, 4):
        for la in cb.hook_partitions(r, m, n):
            rep = check_relations(la, m, n, "q")
            assert rep.ok, rep.witness


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_adjudication_picks_one_convention(m, n):
    rep = adjudicate_convention(m, n, 3)
    assert rep.ok, rep.witness
    assert rep.details["passing"] == ["q"]


def test_weight_action():
    m, n = 2, 1
    for p in enumerate_patterns(covariant_weight((2, 1), m, n), m, n):
        z = GTVector.basis(p, m, n)
        wt = pattern_weight(p)
        for k in range(1, m + n + 1):
            assert gt_action(("qe", k), z) == z.scale(qpow(wt[k - 1]))


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
def test_highest_pattern_is_killed_by_raising(m, n):
    for r in range(1, 4):
        for la in cb.hook_partitions(r, m, n):
            pats = enumerate_patterns(covariant_weight(la, m, n), m, n)
            top = max(pats, key=pattern_weight)
            z = GTVector.basis(top, m, n)
            for k in range(1, m + n):
                assert gt_action(("E", k), z).is_zero()


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
def test_schur_weyl_basis(m, n):
    cfg = SuperSpace(m, n)
    for r in range(1, 4):
        for la in cb.hook_partitions(r, m, n):
            for I in cb.multisets(m + n, r):
                mu = cb.composition_of(I, m + n)
                groups = defaultdict(list)
                for b in schur_weyl_basis(la, I, cfg):
                    if not b.in_ssyt:
                        assert b.vector.is_zero()
                        continue
                    groups[b.image].append(b)
                    for k in range(1, m + n + 1):
                        h = [0] * (m + n)
                        h[k - 1] = 1
                        qh = uq_action(("qh", tuple(h)), cfg, r)
                        assert qh.apply(b.vector) == b.vector.scale(qpow(mu[k - 1]))
                for g in groups.values():
                    assert sum((b.norm for b in g), start=ZERO) == ONE
                    if len(g) == 1:
                        assert g[0].norm == ONE


def test_unit_norm_for_distinct_indices():
    cfg = SuperSpace(2, 1)
    for la in cb.partitions(3):
        for b in schur_weyl_basis(la, (1, 2, 3), cfg):
            assert b.norm == ONE


def test_kostant_examples(alg11):
    assert kostant_supertrace_check((1,), (1, 0), alg11).ok
    assert kostant_supertrace_check((1,), (0, 1), alg11).ok
    assert kostant_supertrace_check((2, 1), (2, 1), alg11).ok


def test_kostant_full_11(alg11):
    for r in range(1, 4):
        for la in cb.hook_partitions(r, 1, 1):
            for mu in cb.weak_compositions(2, r):
                rep = kostant_supertrace_check(la, mu, alg11)
                assert rep.ok, rep.witness


def test_kostant_21_degree_three(alg21):
    for la in cb.hook_partitions(3, 2, 1):
        for mu in cb.weak_compositions(3, 3):
            rep = kostant_supertrace_check(la, mu, alg21)
            assert rep.ok, rep.witness


def test_errors():
    with pytest.raises(ValueError):
        enumerate_patterns((1, 0), 0, 2)
    with pytest.raises(ValueError):
        schur_weyl_basis((2, 2), (1, 1, 2, 2), SuperSpace(1, 1))
