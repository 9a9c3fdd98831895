from collections import Counter

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bbwcalc.bundles import (
    O,
    Q,
    U,
    End0,
    GrassmannianContext,
    IrrSummand,
    Schur,
    Sym,
    Tensor,
    Wedge,
    dual,
    dual_summand,
    normalize,
    rank,
    summand_expr,
    total_rank,
)
from bbwcalc.errors import InvalidInput, StructuralError

from .strategies import expressions

G26 = GrassmannianContext(2, 6)
F = Wedge(2, Q())
K = Wedge(2, F)


def S(alpha, beta, m=1):
    return IrrSummand(alpha, beta, m)


def normal(alpha, beta):
    return IrrSummand(alpha, beta).normal()


def test_end_of_wedge2():
    assert normalize(F * dual(F), G26) == [S((0,) * 4, (0, 0)), S((2, 1, 1, 0), (1, 1)), S((2, 2, 0, 0), (1, 1))]


def test_end_of_K_six_types():
    got = normalize(K * dual(K), G26)
    expected = {
        normal((4, 2, 2, 0), (2, 2)): 1,
        normal((3, 1, 0, 0), (1, 1)): 1,
        normal((3, 3, 2, 0), (2, 2)): 1,
        normal((2, 2, 0, 0), (1, 1)): 1,
        normal((2, 1, 1, 0), (1, 1)): 2,
        normal((0, 0, 0, 0), (0, 0)): 1,
    }
    assert {IrrSummand(s.alpha, s.beta): s.multiplicity for s in got} == expected
    assert total_rank(got) == 225


def test_wedge2_of_K():
    got = normalize(Wedge(2, K), G26)
    expected = [normal(a, (0, 0)) for a in [(4, 2, 1, 1), (3, 3, 2, 0), (3, 2, 2, 1)]]
    assert sorted(got) == sorted(expected)


def test_leaves():
    assert normalize(U(), G26) == [S((0, 0, 0, 0), (1, 0))]
    assert normalize(O(-1), G26) == [S((0, 0, 0, 0), (1, 1))]
    assert normalize(Q(), G26) == [S((1, 0, 0, 0), (0, 0))]


@pytest.mark.parametrize("expr,r", [(F, 6), (K, 15), (O(5), 1), (End0(F), 35), (Schur((2, 1), Q()), 20)])
def test_rank_examples(expr, r):
    assert rank(expr, G26) == r


def test_dual_summand_examples():
    assert dual_summand(S((2, 2, 0, 0), (1, 1))) == S((0, 0, -2, -2), (-1, -1))
    s = S((2, 1, 1, 0), (1, 1))
    assert dual_summand(s).normal() == s
    triv = S((0,) * 4, (0, 0))
    assert dual_summand(triv) == triv


def test_end0_requires_simple_argument():
    with pytest.raises(StructuralError, match="4 times"):
        normalize(End0(F + F), G26)
    with pytest.raises(StructuralError, match="2 times"):
        normalize(End0(F + O(1)), G26)


def test_invalid_summand():
    with pytest.raises(InvalidInput):
        IrrSummand((0, 1), (0,))
    with pytest.raises(InvalidInput):
        GrassmannianContext(3, 3)


def test_pretty_printing():
    assert str(F * dual(F)) == "wedge(2,Q)*wedge(2,dual(Q))"
    assert str(Tensor(F, F + O(1))) == "wedge(2,Q)*(wedge(2,Q)+O(1))"
    assert str(Schur((2, 2), Q())) == "schur([2,2],Q)"


def _image(summands, f):
    out = Counter()
    for s in summands:
        t = f(s).normal()
        out[(t.alpha, t.beta)] += s.multiplicity
    return out


def _multiset(summands):
    return Counter({(s.alpha, s.beta): s.multiplicity for s in summands})


@given(expressions)
def test_rank_preservation(e):
    assume(rank(e, G26) <= 80)
    assert total_rank(normalize(e, G26)) == rank(e, G26)


@given(expressions)
def test_dual_commutes_with_normalize(e):
    assume(rank(e, G26) <= 80)
    assert _multiset(normalize(dual(e), G26)) == _image(normalize(e, G26), dual_summand)


@given(expressions, st.integers(-3, 3))
def test_twist_shifts_beta(e, t):
    assume(rank(e, G26) <= 80)
    assert _multiset(normalize(e * O(t), G26)) == _image(normalize(e, G26), lambda s: s.twisted(t))


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4), st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_dual_summand_involution_and_summand_expr(a, b):
    s = S(sorted(a, reverse=True), sorted(b, reverse=True))
    assert dual_summand(dual_summand(s)) == s
    assert normalize(summand_expr(s), G26) == [s.normal()]


def test_dual_is_involution_on_trees():
    for e in [F, K, Sym(3, U()), O(2) * Q() + U()]:
        assert dual(dual(e)) == e
