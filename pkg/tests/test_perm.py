import pytest
from hypothesis import given
from hypothesis import strategies as st

from unimax.perm import (
    conj,
    cycle_str,
    cycles,
    from_cycles,
    identity,
    is_identity,
    order,
    parse_cycles,
    pinv,
    pmul,
    ppow,
    r_element_power,
    restrict,
    support,
)

perms = st.permutations(range(8)).map(tuple)


def test_basic_ops():
    p = from_cycles(5, (0, 1, 2))
    q = from_cycles(5, (0, 1))
    # apply p first: 0 -> 1, then q: 1 -> 0
    assert pmul(p, q)[0] == 0
    assert pmul(p, q) == tuple(q[p[i]] for i in range(5))
    assert pmul(p, pinv(p)) == identity(5)
    assert order(p) == 3
    assert order(identity(4)) == 1
    assert ppow(p, 3) == identity(5)
    assert ppow(p, -1) == pinv(p)


def test_cycles_roundtrip():
    p = from_cycles(7, (0, 3, 5), (1, 2))
    assert cycles(p) == [(0, 3, 5), (1, 2)]
    assert cycle_str(p) == "(0 3 5)(1 2)"
    assert parse_cycles("(0 3 5)(1 2)", 7) == p
    assert parse_cycles("()", 4) == identity(4)
    with pytest.raises(ValueError):
        from_cycles(4, (0, 1), (1, 2))


@given(perms, perms, perms)
def test_associativity(p, q, r):
    assert pmul(pmul(p, q), r) == pmul(p, pmul(q, r))


@given(perms)
def test_inverse(p):
    assert pmul(p, pinv(p)) == identity(8)
    assert pinv(pinv(p)) == p


@given(perms)
def test_order_annihilates(p):
    assert ppow(p, order(p)) == identity(8)


@given(perms, perms)
def test_conjugation_preserves_cycle_type(p, g):
    ct = sorted(len(c) for c in cycles(p))
    assert sorted(len(c) for c in cycles(conj(p, g))) == ct


def test_support_restrict():
    p = from_cycles(6, (1, 4), (2, 3))
    assert support(p) == (1, 2, 3, 4)
    r = restrict(p, [1, 2, 3, 4])
    assert r == (3, 2, 1, 0)


def test_r_element_power():
    p = from_cycles(10, tuple(range(6)))  # order 6
    y = r_element_power(p, 3)
    assert order(y) == 3
    z = r_element_power(p, 2)
    assert order(z) == 2
    w = r_element_power(p, 5)
    assert is_identity(w)
