import pytest

from qsl import combinat as cb
from qsl.aqmat import algebra
from qsl.hecke import HeckeElt
from qsl.identities import alpha
from qsl.immanant import (
    immanant,
    immanant_sum,
    immanant_via_idempotent,
    normalized_immanant,
    verify_paths,
    verify_vanishing,
)


def test_examples(alg11):
    assert immanant((1,), (1,), alg=alg11) == alg11.x(1, 1)
    assert immanant((1,), (2,), alg=alg11) == -alg11.x(2, 2)
    assert immanant((2, 2), (1, 1, 2, 2), alg=alg11).is_zero()
    assert immanant_via_idempotent((1,), (1,), alg=alg11) == alg11.x(1, 1)


def test_trivial_character_is_a_plain_bra_ket(alg11):
    # chi = 1 picks the coaction entry; the prefix sign is (-1)^{0*0 + 1*1}
    assert immanant(HeckeElt.one(2), (1, 2), (1, 2), alg=alg11) == -(alg11.x(1, 1) * alg11.x(2, 2))


def test_non_principal_minor(alg11):
    p = immanant((1,), (1,), (2,), alg=alg11)
    assert p == alg11.x(1, 2)


def test_sums(alg11):
    assert immanant_sum((1,), alg11) == alg11.x(1, 1) - alg11.x(2, 2)
    assert immanant_sum((1, 1), alg11) == alpha(alg11, 2)
    assert immanant_sum((2, 2), alg11).is_zero()


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_path_equality(m, n, r):
    rep = verify_paths(algebra(m, n), r)
    assert rep.ok, rep.witness


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_vanishing_through_r4(m, n):
    rep = verify_vanishing(algebra(m, n), 4)
    assert rep.ok, rep.witness


@pytest.mark.parametrize("m,n,rmax", [(1, 1, 4), (2, 1, 3)])
def test_sum_paths_and_tableau_independence(m, n, rmax):
    alg = algebra(m, n)
    for r in range(1, rmax + 1):
        for la in cb.partitions(r):
            ref = immanant_sum(la, alg)
            for t in cb.standard_tableaux(la):
                assert immanant_sum(la, alg, method="supertrace", tableau=t) == ref


def test_normalized_immanant_weights(alg11):
    # (1,1) over I=(1,1): Imm / (1 + q^2)
    p = normalized_immanant((2,), (1, 1), alg=alg11)
    assert p == immanant((2,), (1, 1), alg=alg11).scale(1 / cb.alpha_factors((1, 1), 1, 1)[1])


def test_errors(alg11):
    with pytest.raises(ValueError):
        immanant((2,), (1,), alg=alg11)
    with pytest.raises(ValueError):
        immanant((1,), (3,), alg=alg11)
    with pytest.raises(ValueError):
        immanant_via_idempotent((2,), (2, 1), alg=alg11)
    with pytest.raises(ValueError):
        immanant_sum((1,), alg11, method="other")
