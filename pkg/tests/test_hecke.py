import itertools

import pytest

from qsl import combinat as cb
from qsl.hecke import (
    HeckeElt,
    all_perms,
    character,
    character_element,
    character_independence,
    generator,
    idempotent_from_rep,
    inverse_perm,
    induced_character,
    jm_element,
    length,
    primitive_idempotent,
    reduced_word,
    rep_matrix,
    verify_idempotents,
)
from qsl.qscalar import ONE, Q, QINV, qint


def _one(r):
    return HeckeElt.one(r)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_defining_relations(r):
    T = [generator(i, r) for i in range(1, r)]
    for t in T:
        assert (t - _one(r).scale(Q)) * (t + _one(r).scale(QINV)) == HeckeElt(r)
    for a, b in itertools.combinations(range(r - 1), 2):
        if b == a + 1:
            assert T[a] * T[b] * T[a] == T[b] * T[a] * T[b]
        else:
            assert T[a] * T[b] == T[b] * T[a]


def test_basis_products_follow_reduced_words():
    for s in all_perms(4):
        w = reduced_word(s)
        assert len(w) == length(s)
        prod = _one(4)
        for i in w:
            prod = prod * generator(i, 4)
        assert prod == HeckeElt.basis(s)


def test_idempotent_examples():
    row = primitive_idempotent(cb.row_tableau((2,)))
    col = primitive_idempotent(cb.column_tableau((1, 1)))
    T1 = generator(1, 2)
    denom = ONE / qint(2)
    assert row == (T1 + _one(2).scale(QINV)).scale(denom)
    assert col == (_one(2).scale(Q) - T1).scale(denom)
    assert primitive_idempotent(((1,),)) == _one(1)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_idempotent_calculus(r):
    rep = verify_idempotents(r)
    assert rep.ok, rep.witness


@pytest.mark.slow
def test_idempotent_calculus_r4():
    rep = verify_idempotents(4)
    assert rep.ok, rep.witness


@pytest.mark.parametrize("r", [2, 3])
def test_idempotent_from_seminormal_diagonal(r):
    for la in cb.partitions(r):
        for t in cb.standard_tableaux(la):
            assert idempotent_from_rep(t) == primitive_idempotent(t)


@pytest.mark.parametrize("la", [(2, 1), (3, 1), (2, 2), (2, 1, 1)])
def test_seminormal_is_a_representation(la):
    r = sum(la)
    T = [generator(i, r) for i in range(1, r)]
    for a, b in itertools.product(T, repeat=2):
        lhs = rep_matrix(la, a * b)
        A, B = rep_matrix(la, a), rep_matrix(la, b)
        n = len(A)
        prod = [[sum((A[i][k] * B[k][j] for k in range(n)), start=ONE - ONE) for j in range(n)]
                for i in range(n)]
        assert lhs == prod


@pytest.mark.parametrize("r", [2, 3, 4])
def test_characters_specialise_to_symmetric_group(r):
    for la in cb.partitions(r):
        for s in all_perms(r):
            assert character(la, s).subs(1) == cb.sn_character(la, cb.cycle_type(s))


def test_jm_elements_commute():
    r = 4
    ys = [jm_element(k, r) for k in range(1, r + 1)]
    for a, b in itertools.combinations(ys, 2):
        assert a * b == b * a


@pytest.mark.parametrize("r", [2, 3])
def test_induced_characters_kostka(r):
    for mu in cb.partitions(r):
        for kind, transpose in (("sign", True), ("trivial", False)):
            rhs = HeckeElt(r)
            for la in cb.partitions(r):
                k = cb.kostka(cb.conjugate(la) if transpose else la, mu)
                rhs = rhs + character_element(la).scale(k)
            assert induced_character(mu, kind) == rhs


def test_induced_character_extremes():
    assert induced_character((3,), "trivial") == character_element((3,))
    total = HeckeElt(3)
    for s in all_perms(3):
        total = total + HeckeElt.basis(s) * HeckeElt.basis(inverse_perm(s))
    assert induced_character((1, 1, 1), "sign") == total


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_character_independent_of_tableau(r):
    for la in cb.partitions(r):
        assert character_independence(la).ok


def test_json_round_trip():
    e = primitive_idempotent(cb.row_tableau((2, 1)))
    assert HeckeElt.from_json(e.to_json()) == e
