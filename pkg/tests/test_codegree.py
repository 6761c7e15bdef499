import json
import math

import pytest
from conftest import table_of
from hypothesis import given
from hypothesis import strategies as st

from sqfchar.codegree import (
    REPORT_COLUMNS,
    clifford_divisibility_check,
    codegree,
    format_report,
    gcd_report,
    kernel,
    quotient_codegree_pairs,
    report_to_dicts,
    smallest_square_prime,
    square_free_hypothesis,
)
from sqfchar.constructors import construct
from sqfchar.group import PermutationGroup
from sqfchar.perm import Permutation


def _kernel_order_oracle(t, row):
    # values as complex numbers: chi(g) = chi(1) exactly when every eigenvalue is 1
    return sum(size for c, size in enumerate(t.classes.sizes) if t.values[row, c, 0] == t.degrees[row])


@given(st.integers(1, 10**6))
def test_smallest_square_prime_against_trial_factorisation(n):
    squares = [p for p in range(2, math.isqrt(n) + 1) if n % (p * p) == 0 and all(p % r for r in range(2, p))]
    assert smallest_square_prime(n) == (squares[0] if squares else None)


@pytest.mark.parametrize("spec", ["Sym(4)", "Alt(4)", "Sym(5)", "named:M10", "PGL2(9)"])
def test_kernel_matches_eigenvalue_oracle(spec):
    t = table_of(spec)
    for i in range(len(t)):
        k = kernel(t, i)
        assert k.order == _kernel_order_oracle(t, i)
        assert 0 in k.class_indices
        assert t.order % k.order == 0
        assert codegree(t, i) * t.degrees[i] == t.order // k.order


def test_sym4_codegrees():
    t = table_of("Sym(4)")
    by_degree = sorted((t.degrees[i], codegree(t, i)) for i in range(len(t)))
    # sign has kernel A4, the 2-dim character kernel V4, faithful 3-dims
    assert by_degree == [(1, 1), (1, 2), (2, 3), (3, 8), (3, 8)]


def test_a8_witness_row():
    t = table_of("Alt(8)")
    rows = [r for r in gcd_report(t).rows if r.degree == 20]
    assert len(rows) == 1
    r = rows[0]
    assert (r.codegree, r.gcd, r.square_free, r.offending_prime) == (1008, 4, False, 2)


@pytest.mark.parametrize("spec,witness", [
    ("Alt(8)", (20, 1008, 2)),
    ("Sym(7)", (20, 252, 2)),
    ("named:Aut(PSL2(9))", (20, 72, 2)),
])
def test_failing_groups_report_first_witness(spec, witness):
    v = square_free_hypothesis(table_of(spec), spec)
    assert not v.satisfies
    assert v.witness == witness


@pytest.mark.parametrize("spec", ["Alt(5)", "Alt(7)", "Sym(5)", "named:M10", "PSL2(8)", "Sym(3)"])
def test_satisfying_groups(spec):
    v = square_free_hypothesis(table_of(spec))
    assert v.satisfies and v.witness is None


def test_sym4_satisfies_despite_codegree_8():
    # degree 3, codegree 8: gcd 1, so Sym(4) actually satisfies
    assert square_free_hypothesis(table_of("Sym(4)")).satisfies


def test_codegrees_multiplicative_on_direct_product():
    t = table_of("prod(Alt(5),Alt(5))")
    a = table_of("Alt(5)")
    pairs = sorted((t.degrees[i], codegree(t, i)) for i in range(len(t)))
    single = [(a.degrees[i], codegree(a, i)) for i in range(len(a))]
    expected = sorted((d1 * d2, c1 * c2) for d1, c1 in single for d2, c2 in single)
    assert pairs == expected


def test_report_formats():
    report = gcd_report(table_of("Sym(4)"))
    text = format_report(report)
    assert text.splitlines()[0].split() == list(REPORT_COLUMNS)
    doc = json.loads(format_report(report, structured=True, spec="Sym(4)"))
    assert doc["group"] == "Sym(4)" and doc["order"] == 24
    assert doc["rows"] == report_to_dicts(report)
    assert doc["rows"][0]["degree"] == 1 and doc["rows"][0]["codegree"] == 1


def test_clifford_divisibility():
    assert clifford_divisibility_check(construct("Sym(5)"), construct("Alt(5)")).holds
    assert clifford_divisibility_check(construct("Sym(4)"), construct("Alt(4)")).holds


def _v4():
    return PermutationGroup(4, [Permutation.from_cycles("(1 2)(3 4)", 4), Permutation.from_cycles("(1 3)(2 4)", 4)])


def test_quotient_codegrees_agree():
    pairs = quotient_codegree_pairs(construct("Sym(4)"), _v4())
    assert pairs == [(0, 1, 1), (1, 2, 2), (2, 3, 3)]
    assert all(a == b for _, a, b in quotient_codegree_pairs(construct("Alt(4)"), _v4()))
