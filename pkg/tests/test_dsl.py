import pytest
from hypothesis import given

from bbwcalc.bundles import O, Q, U, DirectSum, Dual, End0, Schur, Sym, Tensor, Wedge
from bbwcalc.dsl import ParseError, parse

from .strategies import expressions


@pytest.mark.parametrize("text,tree", [
    ("wedge(2, Q)", Wedge(2, Q())),
    ("sym(3, dual(U))", Sym(3, Dual(U()))),
    ("wedge(2, wedge(2, Q))", Wedge(2, Wedge(2, Q()))),
    ("schur([2,1,1],Q)*O(-1)", Tensor(Schur((2, 1, 1), Q()), O(-1))),
    ("end0(wedge(2,Q))", End0(Wedge(2, Q()))),
    ("U + Q * O(1)", DirectSum(U(), Tensor(Q(), O(1)))),
    ("(U + Q) * O(1)", Tensor(DirectSum(U(), Q()), O(1))),
    ("  wedge ( 2 ,Q ) ", Wedge(2, Q())),
])
def test_parse_examples(text, tree):
    assert parse(text) == tree
    assert parse(str(tree)) == tree


def test_precedence_and_associativity():
    assert parse("U*Q*U") == Tensor(Tensor(U(), Q()), U())
    assert parse("U+Q+U") == DirectSum(DirectSum(U(), Q()), U())
    assert str(Tensor(U(), Tensor(Q(), U()))) == "U*(Q*U)"


@given(expressions)
def test_round_trip(e):
    assert parse(str(e)) == e
    assert str(parse(str(e))) == str(e)


@pytest.mark.parametrize("text,offset,kind", [
    ("wedge(2 Q)", 8, "arity"),
    ("wedge(Q)", 6, "syntax"),
    ("wedge(-1,Q)", 6, "arity"),
    ("schur([1,2],Q)", 6, "partition"),
    ("U +", 3, "syntax"),
    ("U # Q", 2, "syntax"),
    ("dual(U", 6, "arity"),
    ("V", 0, "syntax"),
    ("U Q", 2, "syntax"),
    ("", 0, "syntax"),
])
def test_errors_carry_offsets(text, offset, kind):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset
    assert info.value.kind == kind
    assert info.value.expected


def test_expected_set_lists_atoms():
    with pytest.raises(ParseError) as info:
        parse("U+")
    assert {"U", "Q", "wedge", "schur"} <= set(info.value.expected)
