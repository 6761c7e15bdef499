import json
import math

import numpy as np
import pytest
from conftest import table_of

from sqfchar.chartab import (
    CHARTAB_FORMAT,
    NotNormalError,
    character_table,
    dumps_table,
    format_table,
    restrict_to_normal,
    restriction_matrix,
    verify_table,
)
from sqfchar.constructors import construct
from sqfchar.families import partition_degree, partitions

SMALL = ["Sym(3)", "Sym(4)", "Alt(4)", "Alt(5)", "Sym(5)", "Alt(6)", "PSL2(7)", "PSL2(8)", "named:M10", "PGL2(9)"]


@pytest.mark.parametrize("spec", SMALL)
def test_orthogonality_and_degree_sum(spec):
    t = table_of(spec)
    ok, diags = verify_table(t)
    assert ok, diags
    assert sum(d * d for d in t.degrees) == t.order
    assert len(t) == len(t.classes)
    assert t.degrees[0] == 1 and all(t.order % d == 0 for d in t.degrees)


def test_a5_table_known_degrees_and_irrationalities():
    t = table_of("Alt(5)")
    assert t.degree_multiset() == [1, 3, 3, 4, 5]
    # the two degree-3 characters take the golden-ratio values (1 +- sqrt 5)/2 on 5-elements
    fives = [c for c, o in enumerate(t.classes.orders) if o == 5]
    threes = [i for i, d in enumerate(t.degrees) if d == 3]
    zeta = np.exp(2j * np.pi / t.e)
    vals = {round(complex(t.values[i, c] @ zeta ** np.arange(t.e)).real, 6) for i in threes for c in fives}
    golden = (1 + 5**0.5) / 2
    assert vals == {round(golden, 6), round(1 - golden, 6)}


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_symmetric_group_degrees_are_hook_degrees(n):
    expected = sorted(partition_degree(lam) for lam in partitions(n))
    assert table_of(f"Sym({n})").degree_multiset() == expected


@pytest.mark.parametrize("spec,degrees", [
    ("PSL2(7)", [1, 3, 3, 6, 7, 8]),
    ("PSL2(8)", [1, 7, 7, 7, 7, 8, 9, 9, 9]),
    ("named:M10", [1, 1, 9, 9, 10, 10, 10, 16]),
    ("Alt(7)", [1, 6, 10, 10, 14, 14, 15, 21, 35]),
])
def test_known_degree_multisets(spec, degrees):
    assert table_of(spec).degree_multiset() == degrees


def test_direct_product_table_is_tensor_product():
    t = table_of("prod(Alt(5),Alt(5))")
    a = table_of("Alt(5)").degrees
    assert t.degree_multiset() == sorted(x * y for x in a for y in a)


def test_restriction_to_normal_subgroup():
    s5, a5 = table_of("Sym(5)"), table_of("Alt(5)")
    m = restriction_matrix(s5, construct("Alt(5)"), a5)
    # each S5 character restricts to a sum of A5 characters of total degree chi(1)
    for i, d in enumerate(s5.degrees):
        assert sum(int(m[i, j]) * a5.degrees[j] for j in range(len(a5))) == d
    six = s5.degrees.index(6)
    parts = restrict_to_normal(s5, construct("Alt(5)"), a5, six)
    assert sorted(a5.degrees[j] for j, _ in parts) == [3, 3]


def test_restriction_requires_normality():
    with pytest.raises(NotNormalError):
        restriction_matrix(table_of("Sym(4)"), construct("perm:deg=4;gens=(1 2)"), table_of("Sym(3)"))


def test_structured_output_round_trips():
    t = table_of("Sym(4)")
    doc = json.loads(dumps_table(t, "Sym(4)"))
    assert doc["chartab-format"] == CHARTAB_FORMAT
    assert doc["order"] == 24 and doc["group"] == "Sym(4)"
    assert [r["degree"] for r in doc["rows"]] == list(t.degrees)
    back = np.array([r["values"] for r in doc["rows"]])
    assert np.array_equal(back, t.canonical_values)
    assert sum(c["repSize"] for c in doc["classes"]) == 24


def test_text_table_has_one_line_per_character():
    text = format_table(table_of("Alt(4)"))
    assert text.count("X.") == 4


def test_deterministic():
    a = dumps_table(character_table(construct("PSL2(7)")))
    b = dumps_table(character_table(construct("PSL2(7)")))
    assert a == b


def test_bound_respected():
    from sqfchar.group import OrderBoundExceeded

    with pytest.raises(OrderBoundExceeded):
        character_table(construct("Alt(7)"), bound=100)
