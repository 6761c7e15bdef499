import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from sqfchar.cyclotomic import (
    CyclotomicValue,
    canonical,
    cyclotomic_poly,
    format_value,
    mobius,
    reduction_matrix,
)
from sqfchar.orders import cyclotomic_poly_eval


@pytest.mark.parametrize("n", list(range(1, 61)) + [105, 210, 1155])
def test_cyclotomic_poly_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs())]
    assert list(cyclotomic_poly(n)) == expected


def test_mobius_small_values():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


@settings(max_examples=80)
@given(st.integers(1, 40), st.integers(2, 50))
def test_product_of_cyclotomic_values_is_q_to_the_n_minus_one(n, q):
    prod = math.prod(cyclotomic_poly_eval(d, q) for d in range(1, n + 1) if n % d == 0)
    assert prod == q**n - 1


def test_sum_of_all_roots_of_unity_vanishes():
    for e in (1, 2, 3, 4, 6, 12, 30):
        assert not canonical(np.ones(e, dtype=np.int64)).any() or e == 1


def test_reduction_matrix_shape_and_identity_block():
    for e in (5, 12, 60):
        red = reduction_matrix(e)
        k = sympy.totient(e)
        assert red.shape == (e, k)
        assert np.array_equal(red[:k], np.eye(k, dtype=red.dtype))


@settings(max_examples=60)
@given(st.sampled_from([4, 5, 7, 8, 9, 12, 15, 20]), st.data())
def test_canonical_agrees_with_complex_evaluation(e, data):
    m = np.array(data.draw(st.lists(st.integers(-5, 5), min_size=e, max_size=e)), dtype=np.int64)
    zeta = np.exp(2j * np.pi / e)
    direct = sum(int(m[j]) * zeta**j for j in range(e))
    c = canonical(m)
    via_basis = sum(int(c[j]) * zeta**j for j in range(len(c)))
    assert abs(direct - via_basis) < 1e-8


@settings(max_examples=40)
@given(st.sampled_from([3, 6, 8, 10]), st.data())
def test_value_arithmetic(e, data):
    draw = lambda: CyclotomicValue(e, tuple(data.draw(st.lists(st.integers(0, 3), min_size=e, max_size=e))))
    a, b = draw(), draw()
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.embed(2 * e) == a


def test_integer_values_and_formatting():
    # 1 + zeta_3 + zeta_3^2 = 0, and -zeta_3 - zeta_3^2 = 1
    assert CyclotomicValue(3, (1, 1, 1)).as_integer() == 0
    assert CyclotomicValue(3, (0, -1, -1)).as_integer() == 1
    assert CyclotomicValue.rational(7, 5).as_integer() == 7
    assert CyclotomicValue(4, (0, 1, 0, 0)).as_integer() is None
    assert format_value(np.array([2, 0, 0, 0])) == "2"
