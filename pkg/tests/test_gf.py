import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unimax.gf import GF, least_irreducible


FIELDS = [(2, 1), (2, 3), (2, 6), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (2, 5)]


@pytest.mark.parametrize("p,f", FIELDS)
def test_field_axiom_samples(p, f):
    F = GF(p, f)
    sample = list(F.elements())[: min(F.q, 12)]
    for a, b, c in itertools.product(sample, repeat=3):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in sample:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("p,f", FIELDS)
def test_multiplicative_group_cyclic(p, f):
    F = GF(p, f)
    g = F.primitive_element
    assert F.element_order(g) == F.q - 1
    powers = set()
    x = 1
    for _ in range(F.q - 1):
        powers.add(x)
        x = F.mul(x, g)
    assert len(powers) == F.q - 1


def test_least_irreducible_known():
    # x^2 + 1 is reducible mod 2 ((x+1)^2); least is x^2 + x + 1
    assert least_irreducible(2, 2) == (1, 1, 1)
    # mod 3: x^2 + 1 is irreducible and least
    assert least_irreducible(3, 2) == (1, 0, 1)


def test_frobenius_is_field_automorphism():
    F = GF(3, 2)
    for a in F.elements():
        for b in F.elements():
            assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
            assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
    # order of frobenius = f
    assert all(F.frobenius(F.frobenius(a)) == a for a in F.elements())


def test_squares():
    F = GF(7, 1)
    squares = {F.mul(a, a) for a in F.elements()}
    for a in F.elements():
        assert F.is_square(a) == (a in squares)
    F2 = GF(2, 3)
    assert all(F2.is_square(a) for a in F2.elements())


def test_pow_and_div():
    F = GF(5, 2)
    for a in list(F.elements())[1:8]:
        assert F.mul(F.pow(a, 3), F.pow(a, -3)) == 1
        assert F.div(F.mul(a, 7 % F.q), a) == 7 % F.q if a else True


@given(st.sampled_from(FIELDS), st.data())
@settings(max_examples=60)
def test_random_inverses(pf, data):
    F = GF(*pf)
    a = data.draw(st.integers(1, F.q - 1))
    assert F.mul(a, F.inv(a)) == 1
