import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkforge.errors import MalformedPermutation
from gkforge.perm import Permutation


def perms(degree):
    return st.permutations(range(degree)).map(lambda p: Permutation(tuple(p)))


def test_parse_is_one_based():
    p = Permutation.parse("(1 2 3)(4 5)", 5)
    assert p.images == (1, 2, 0, 4, 3)
    assert str(p) == "(1 2 3)(4 5)"


def test_parse_identity():
    assert Permutation.parse("()", 3).is_identity()


@pytest.mark.parametrize("text", ["(1 2 4)", "(1 1 2)", "(1 x)", "1 2", ""])
def test_parse_rejects_bad_text(text):
    with pytest.raises(MalformedPermutation):
        Permutation.parse(text, 3)


def test_non_bijection_rejected():
    with pytest.raises(MalformedPermutation):
        Permutation((0, 0, 1))


def test_product_applies_left_factor_first():
    a = Permutation.parse("(1 2)", 3)
    b = Permutation.parse("(2 3)", 3)
    # 1 -a-> 2 -b-> 3
    assert (a * b)(0) == 2


@given(st.integers(1, 7).flatmap(lambda d: st.tuples(perms(d), perms(d), perms(d))))
def test_group_axioms(triple):
    a, b, c = triple
    e = Permutation.identity(a.degree)
    assert (a * b) * c == a * (b * c)
    assert a * e == a == e * a
    assert (a * a.inverse()).is_identity()
    assert Permutation.parse(str(a), a.degree) == a


@given(st.integers(1, 8).flatmap(perms))
def test_order_kills(p):
    q = Permutation.identity(p.degree)
    for _ in range(p.order()):
        q = q * p
    assert q.is_identity()
