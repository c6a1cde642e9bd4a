import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsl.aqmat import (
    STRATEGIES,
    AqMatrix,
    NCPoly,
    algebra,
    coaction_sign,
    compose,
    confluence_fuzz,
    matrix_supertrace,
    nc_mul,
    star_product,
    verify_rtt,
    x_operator,
    x_power,
)
from qsl.qscalar import Q, QINV
from qsl.superlinear import SuperOp, weight_projector


def test_relation_examples(alg11):
    x = alg11.x
    assert (x(1, 2) * x(1, 2)).is_zero()
    assert x(1, 2) * x(1, 1) == (x(1, 1) * x(1, 2)).scale(Q)
    assert x(2, 2) * x(1, 1) == x(1, 1) * x(2, 2) + (x(1, 2) * x(2, 1)).scale(Q - QINV)


def test_even_block_is_quantum_matrix():
    # m=2, n=0: the usual quantum matrix relations
    alg = algebra(2, 0)
    a, b, c, d = alg.x(1, 1), alg.x(1, 2), alg.x(2, 1), alg.x(2, 2)
    assert b * a == (a * b).scale(Q)
    assert c * a == (a * c).scale(Q)
    assert c * b == b * c
    assert d * a == a * d + (b * c).scale(Q - QINV)
    # the quantum determinant is central (b a = q a b orientation)
    det = a * d - (b * c).scale(QINV)
    for g in (a, b, c, d):
        assert det * g == g * det


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_rtt(m, n):
    rep = verify_rtt(algebra(m, n))
    assert rep.ok, rep.witness


def test_display_sign_breaks_rtt(alg11):
    assert not verify_rtt(alg11, "display").ok


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
def test_confluence_fuzz(m, n):
    rep = confluence_fuzz(algebra(m, n), count=250, seed=7)
    assert rep.ok, rep.witness


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=1, max_size=5))
def test_strategies_agree(word):
    alg = algebra(2, 1)
    forms = [alg.normal_form(tuple(word), s) for s in STRATEGIES]
    assert forms[0] == forms[1] == forms[2]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_associativity(codes):
    alg = algebra(1, 1)
    a, b, c = (alg.x(*alg.indices(g)) for g in codes)
    assert (a * b) * c == a * (b * c)


def test_parity_additive(alg21):
    rng = random.Random(3)
    gens = [alg21.x(i, j) for i in range(1, 4) for j in range(1, 4)]
    for _ in range(50):
        a, b = rng.choice(gens), rng.choice(gens)
        prod = nc_mul(a, b)
        if not prod.is_zero():
            assert prod.parity() == (a.parity() + b.parity()) % 2


def test_x_operator_signs(alg11):
    X2 = x_operator(alg11, 2)
    assert X2.entry((2, 2), (2, 2)) == alg11.x(2, 2) * alg11.x(2, 2)
    # intertwining sign: bar i_1 (bar i_2 + bar j_2) = 0 here
    assert X2.entry((1, 2), (2, 1)) == alg11.word_poly([(1, 2), (2, 1)])
    X2d = x_operator(alg11, 2, "display")
    assert X2d.entry((1, 2), (2, 1)) == -alg11.word_poly([(1, 2), (2, 1)])


def test_x_operator_degree_three_entries(alg21):
    X3 = x_operator(alg21, 3)
    cfg = alg21.cfg
    for I in itertools.islice(cfg.kets(3), 0, None, 5):
        for J in itertools.islice(cfg.kets(3), 0, None, 7):
            w = alg21.word_poly(list(zip(I, J)))
            expect = -w if coaction_sign(I, J, cfg) else w
            assert X3.entry(I, J) == expect


def test_compose_identity_and_projector(alg11):
    X = x_operator(alg11, 2)
    cfg = alg11.cfg
    assert compose(SuperOp.identity(cfg, 2), X) == X
    P = compose(weight_projector((2, 0), cfg, 2), X)
    assert P.entry((1, 1), (1, 2)) == X.entry((1, 1), (1, 2))
    assert P.entry((1, 2), (1, 2)).is_zero()


def test_star_powers(alg11):
    X = alg11.generator_matrix()
    assert x_power(alg11, 1) == X
    # the identity is a left unit; on the right it picks up q^{eps(l-i)}
    assert star_product(AqMatrix.identity(alg11), X) == X
    right = star_product(X, AqMatrix.identity(alg11))
    assert right[1, 2] == X[1, 2].scale(Q) and right[2, 1] == X[2, 1].scale(QINV)
    assert matrix_supertrace(X) == alg11.x(1, 1) - alg11.x(2, 2)


def test_ncpoly_json(alg21):
    p = alg21.x(1, 3) * alg21.x(2, 1) + alg21.x(3, 3).scale(Q)
    assert NCPoly.from_json(p.to_json()) == p
    assert p.latex()


def test_generator_bounds(alg11):
    with pytest.raises(ValueError):
        alg11.x(3, 1)
