import itertools
import math
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsl import combinat as cb
from qsl.qscalar import ONE, qpow

# partition numbers p(1..8)
P = [1, 2, 3, 5, 7, 11, 15, 22]


@pytest.mark.parametrize("r", range(1, 9))
def test_partition_counts(r):
    parts = cb.partitions(r)
    assert len(parts) == P[r - 1]
    assert all(sum(la) == r and list(la) == sorted(la, reverse=True) for la in parts)


@pytest.mark.parametrize("r", range(1, 7))
def test_hook_length_formula_and_burnside(r):
    # sum f_la^2 = r!
    total = 0
    for la in cb.partitions(r):
        f = cb.num_syt(la)
        assert f == len(cb.standard_tableaux(la))
        total += f * f
    assert total == math.factorial(r)


def test_conjugate_involution():
    for r in range(1, 8):
        for la in cb.partitions(r):
            assert cb.conjugate(cb.conjugate(la)) == la


def test_hook_set():
    assert cb.hook_partitions(3, 1, 1) == [(3,), (2, 1), (1, 1, 1)]
    assert not cb.in_hmn((2, 2), 1, 1)
    assert cb.in_hmn((2, 2), 2, 0)
    assert not cb.in_hmn((1, 1, 1), 2, 0)


def test_contents_and_swaps():
    t = cb.row_tableau((2, 1))
    assert t == ((1, 2), (3,))
    assert [cb.content_of(t, k) for k in (1, 2, 3)] == [0, 1, -1]
    assert cb.swap_entries(t, 1) is None
    assert cb.swap_entries(t, 2) == ((1, 3), (2,))


def test_kostka_inverse():
    # h_mu = sum K_{nu mu} s_nu and s_la = sum K^{-1}(la, mu) h_mu
    for r in range(1, 6):
        shapes, K = cb.kostka_matrix(r)
        for la in shapes:
            for j, nu in enumerate(shapes):
                s = sum(cb.inverse_kostka(la, mu) * K[j][k] for k, mu in enumerate(shapes))
                assert s == (1 if la == nu else 0)


def test_lr_small():
    assert cb.lr_coefficient((1,), (1,), (2,)) == 1
    assert cb.lr_coefficient((1,), (1,), (1, 1)) == 1
    assert cb.lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert cb.lr_coefficient((2,), (1,), (1, 1, 1)) == 0
    with pytest.raises(ValueError):
        cb.lr_coefficient((2,), (2,), (3, 2))


@pytest.mark.parametrize("r", range(2, 6))
def test_lr_dimension_count(r):
    # f_mu f_nu binom(r, |mu|) = sum_la c f_la
    for a in range(1, r):
        for mu in cb.partitions(a):
            for nu in cb.partitions(r - a):
                lhs = cb.num_syt(mu) * cb.num_syt(nu) * math.comb(r, a)
                rhs = sum(cb.lr_coefficient(mu, nu, la) * cb.num_syt(la) for la in cb.partitions(r))
                assert lhs == rhs


@pytest.mark.parametrize("r", range(1, 7))
def test_character_orthogonality(r):
    shapes = cb.partitions(r)
    # class sizes from cycle types
    sizes = Counter(cb.cycle_type(p) for p in itertools.permutations(range(1, r + 1)))
    for la in shapes:
        assert cb.sn_character(la, (1,) * r) == cb.num_syt(la)
        for mu in shapes:
            s = sum(sizes[rho] * cb.sn_character(la, rho) * cb.sn_character(mu, rho) for rho in sizes)
            assert s == (math.factorial(r) if la == mu else 0)


def test_cycle_type_is_one_based():
    assert cb.cycle_type((2, 1, 3)) == (2, 1)
    assert cb.cycle_type((2, 3, 1)) == (3,)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_super_tableaux_vanish_off_hook(m, n):
    for r in range(1, 5):
        for la in cb.partitions(r):
            tabs = cb.super_tableaux(la, m, n)
            assert bool(tabs) == cb.in_hmn(la, m, n)
            assert all(cb.is_super_semistandard(t, m) for t in tabs)


def test_multisets_and_splits():
    assert cb.multisets(2, 2) == [(1, 1), (1, 2), (2, 2)]
    assert cb.multiset_splits((1, 1, 2), (1, 2)) == [((1,), (1, 2)), ((2,), (1, 1))]
    assert cb.composition_of((1, 1, 2), 2) == (2, 1)
    assert cb.multiset_from_composition((2, 1)) == (1, 1, 2)


def test_alpha_factors():
    plain, aq = cb.alpha_factors((1, 1, 2), 1, 1)
    assert plain == 2
    assert str(aq) == "q^2+1"
    # odd indices use q^-2
    plain, aq = cb.alpha_factors((2, 2), 1, 1)
    assert plain == 2
    assert aq == ONE + qpow(-2)


def test_theta_map():
    assert cb.theta_map(cb.row_tableau((2, 1)), (2, 1), 1) == (((1, 1), (2,)), True)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_parse_format_round_trip(parts):
    la = cb.as_partition(sorted(parts, reverse=True))
    assert cb.parse_partition(cb.format_partition(la)) == la
    t = cb.row_tableau(la)
    assert cb.parse_tableau(cb.format_tableau(t)) == t
