import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsl import combinat as cb
from qsl.immanant import immanant_sum
from qsl.qscalar import Q
from qsl.symfun import (
    SingularSystemError,
    SPoly,
    SRat,
    determinant,
    elementary,
    exact_divide,
    jacobi_trudi_e,
    parse_spoly,
    phi_specialize,
    solve_linear,
    substitute,
    substitute_neg_y,
    super_power_sum,
    super_schur,
)


def v(name, m=1, n=1):
    return SPoly.var(m, n, name)


def test_examples():
    assert str(super_schur((1,), 1, 1)) == "x1 + y1"
    assert super_schur((2, 2), 1, 1) == SPoly(1, 1)
    assert str(SPoly.constant(1, 1) * 0) == "0"


def test_text_format():
    x, y = v("x1"), v("y1")
    p = x * x * y + x * SPoly.constant(1, 1, Q * Q)
    assert str(p) == "x1^2*y1 + (q^2)*x1"
    assert parse_spoly(str(p), 1, 1) == p
    assert str(x - y) == "x1 - y1"
    assert str(x * 2) == "2*x1"


@st.composite
def spolys(draw, m=2, n=1):
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, 2)] * (m + n)), st.integers(-3, 3),
                                 max_size=4))
    return SPoly(m, n, terms)


@settings(max_examples=60, deadline=None)
@given(spolys(), spolys(), spolys())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == SPoly(2, 1)
    assert SPoly.from_json(a.to_json()) == a
    assert parse_spoly(str(a), 2, 1) == a
    if b.terms:
        assert exact_divide(a * b, b) == a


def _bialternant(la, m):
    xs = [SPoly.var(m, 0, f"x{i + 1}") for i in range(m)]
    la = list(la) + [0] * (m - len(la))
    num = determinant([[xs[i] ** (la[j] + m - 1 - j) for j in range(m)] for i in range(m)])
    den = determinant([[xs[i] ** (m - 1 - j) for j in range(m)] for i in range(m)])
    return exact_divide(num, den)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_schur_matches_bialternant(m):
    for r in range(1, 5):
        for la in cb.partitions(r):
            if len(la) <= m:
                assert super_schur(la, m, 0) == _bialternant(la, m)
            else:
                assert super_schur(la, m, 0) == SPoly(m, 0)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_cancellation_property(m, n):
    # S(x/y) does not depend on x1 once y1 = -x1
    xs = [SPoly.var(m, n, f"x{i + 1}") for i in range(m)]
    ys = [SPoly.var(m, n, f"y{j + 1}") for j in range(n)]
    ys[0] = -xs[0]
    for r in range(1, 5):
        for la in cb.partitions(r):
            p = substitute(super_schur(la, m, n), xs, ys)
            assert all(e[0] == 0 for e in p.terms)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 2)])
def test_jacobi_trudi(m, n):
    one = SPoly.constant(m, n)
    for r in range(1, 5):
        e = [super_schur((1,) * k, m, n) if k else one for k in range(r + 1)]
        for la in cb.partitions(r):
            assert jacobi_trudi_e(la, e, one) == super_schur(la, m, n)


def test_elementary():
    xs = [SPoly.var(3, 0, f"x{i}") for i in (1, 2, 3)]
    like = SPoly.constant(3, 0)
    assert elementary(2, xs, like) == xs[0] * xs[1] + xs[0] * xs[2] + xs[1] * xs[2]
    assert elementary(0, xs, like) == like
    assert elementary(4, xs, like) == SPoly(3, 0)


def test_substitute_neg_y():
    x, y = v("x1"), v("y1")
    assert substitute_neg_y(x + y) == x - y
    assert substitute_neg_y(x * y * y) == x * y * y


def test_phi_specialize(alg11):
    x = alg11.x
    assert phi_specialize(x(1, 1) - x(2, 2)) == v("x1") + v("y1")
    assert phi_specialize(x(1, 1) * x(2, 2)) == -(v("x1") * v("y1"))
    assert phi_specialize(x(1, 2) * x(2, 1)) == SPoly(1, 1)


@pytest.mark.parametrize("la", [(1,), (2,), (1, 1), (2, 1)])
def test_phi_of_immanant_sum_is_super_schur(alg11, la):
    assert phi_specialize(immanant_sum(la, alg11)) == super_schur(la, 1, 1)


def test_linear_solve_and_rationals():
    x, y = v("x1"), v("y1")
    sol = solve_linear([[x + y, x], [y, x * x]], [x, y])
    # check by substitution
    assert sol[0] * SRat(x + y) + sol[1] * SRat(x) == SRat(x)
    assert sol[0] * SRat(y) + sol[1] * SRat(x * x) == SRat(y)
    with pytest.raises(SingularSystemError):
        solve_linear([[x, x], [x, x]], [x, y])
    r = SRat(x * y, y * y)
    assert r == SRat(x, y)
    assert SRat(x * x - y * y, x - y).as_poly() == x + y


def test_determinant_small():
    x, y = v("x1"), v("y1")
    assert determinant([[x, y], [y, x]]) == x * x - y * y
    perm3 = [[x ** (i + j) for j in range(3)] for i in range(3)]
    assert determinant(perm3) == SPoly(1, 1)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_power_sums_closed_form(m, n):
    for k in range(1, 6):
        closed = SPoly(m, n)
        for i in range(m):
            closed = closed + SPoly.var(m, n, f"x{i + 1}") ** k
        for j in range(n):
            t = SPoly.var(m, n, f"y{j + 1}") ** k
            closed = closed + t if k % 2 else closed - t
        assert super_power_sum(k, m, n) == closed


def test_supersymmetry_and_cancellation_two_two():
    m = n = 2
    xs = [SPoly.var(m, n, f"x{i}") for i in (1, 2)]
    ys = [SPoly.var(m, n, f"y{j}") for j in (1, 2)]
    for r in range(1, 5):
        for la in cb.partitions(r):
            s = super_schur(la, m, n)
            assert substitute(s, xs[::-1], ys) == s
            assert substitute(s, xs, ys[::-1]) == s
            # x_m = t, y_n = -t: nothing depends on t any more
            cut = substitute(s, [xs[0], xs[1]], [ys[0], -xs[1]])
            assert all(e[1] == 0 for e in cut.terms)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 3), st.integers(1, 3)), min_size=1, max_size=3),
       st.lists(st.tuples(st.integers(1, 3), st.integers(1, 3)), min_size=1, max_size=3))
def test_phi_is_multiplicative(w1, w2):
    from qsl.aqmat import algebra
    alg = algebra(2, 1)
    a = alg.word_poly(w1) + alg.x(1, 1)
    b = alg.word_poly(w2) - alg.x(3, 3)
    assert phi_specialize(a * b) == phi_specialize(a) * phi_specialize(b)


def test_roots_system_one_one(alg11):
    from qsl.identities import alpha
    a1, a2 = phi_specialize(alpha(alg11, 1)), phi_specialize(alpha(alg11, 2))
    # one unknown: alpha_1 ebar_1 = -alpha_2
    (ebar1,) = solve_linear([[a1]], [-a2])
    assert ebar1 == SRat(-v("y1"))
