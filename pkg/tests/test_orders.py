import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from sqfchar.orders import OrderError, fourth_power_free, lie_group_order, simple_group_order


@pytest.mark.parametrize("ident,order", [
    ("J1", 175560),
    ("Alt(5)", 60),
    ("Alt(8)", 20160),
    ("PSL2(7)", 168),
    ("PSL2(8)", 504),
    ("Sz(8)", 29120),
    ("Sz(32)", 32537600),
    ("A(2,3)", 5616),
    ("A(2,4)", 20160),
    ("A(3,2)", 20160),
    ("B(2,3)", 25920),
    ("2A(2,3)", 6048),
    ("D(4,2)", 174182400),
    ("2D(4,2)", 197406720),
    ("G2(3)", 4245696),
    ("G2(4)", 251596800),
    ("3D4(2)", 211341312),
    ("2F4(2)'", 17971200),
    ("2G2(27)", 10073444472),
    ("F4(2)", 3311126603366400),
])
def test_known_orders(ident, order):
    assert simple_group_order(ident) == order


@pytest.mark.parametrize("bad", ["Alt(4)", "PSL2(3)", "PSL2(6)", "Sz(2)", "Sz(4)", "2G2(3)", "2G2(9)", "B(1,3)", "Foo(3)", "Alt5"])
def test_rejected(bad):
    with pytest.raises(OrderError):
        simple_group_order(bad)


def test_b_and_c_have_equal_orders():
    for n in (2, 3, 4):
        for q in (3, 4, 5):
            assert lie_group_order("B", n, q) == lie_group_order("C", n, q)


@given(st.integers(1, 10**9))
def test_fourth_power_free_against_factorisation(n):
    assert fourth_power_free(n) == all(e < 4 for e in sympy.factorint(n).values())


def test_fourth_power_free_examples():
    assert fourth_power_free(175560)
    assert fourth_power_free(math.factorial(7) // 2)
    assert not fourth_power_free(20160)
    assert not fourth_power_free(29120)  # 2^6 * 5 * 7 * 13
