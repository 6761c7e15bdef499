import math

import pytest
from conftest import table_of
from hypothesis import given, settings
from hypothesis import strategies as st

from sqfchar.chartab import character_table
from sqfchar.codegree import square_free_hypothesis
from sqfchar.families import (
    COSET_TYPES,
    OTHER,
    PLAIN,
    TWISTED,
    UNTWISTED,
    ConfigError,
    Partition,
    an_witness,
    conjugate_partition,
    hook_length_product,
    is_self_conjugate,
    partition_degree,
    partitions,
    psl2_config_group,
    psl2_enumerate_subgroups,
    psl2_order,
    psl2_squarefree_conditions,
    white_degree_set,
    Psl2Config,
)
from sqfchar.fields import prime_power

# -- partitions -------------------------------------------------------------------

PARTITION_COUNTS = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


@pytest.mark.parametrize("n", range(1, 13))
def test_partition_counts(n):
    lams = list(partitions(n))
    assert len(lams) == PARTITION_COUNTS[n - 1]
    assert len(set(lams)) == len(lams)
    assert lams[0] == Partition((n,)) and lams[-1] == Partition((1,) * n)


@pytest.mark.parametrize("n", range(1, 9))
def test_sum_of_squared_degrees_is_n_factorial(n):
    assert sum(partition_degree(lam) ** 2 for lam in partitions(n)) == math.factorial(n)


def test_hook_examples():
    assert hook_length_product(Partition((2, 1))) == 3
    assert partition_degree(Partition((3, 2))) == 5
    assert partition_degree(Partition((6, 2))) == 20
    assert conjugate_partition(Partition((3, 1))) == Partition((2, 1, 1))
    assert is_self_conjugate(Partition((2, 1)))


@pytest.mark.parametrize("bad", [(), (1, 2), (2, 0), (3, -1)])
def test_invalid_partitions(bad):
    with pytest.raises(ValueError):
        Partition(bad)


@st.composite
def random_partition(draw):
    n = draw(st.integers(1, 18))
    parts, left = [], n
    while left:
        part = draw(st.integers(1, min(left, parts[-1] if parts else left)))
        parts.append(part)
        left -= part
    return Partition(tuple(parts))


@settings(max_examples=150)
@given(random_partition())
def test_conjugation_is_an_involution_preserving_degree(lam):
    mu = conjugate_partition(lam)
    assert conjugate_partition(mu) == lam
    assert mu.n == lam.n
    assert partition_degree(mu) == partition_degree(lam)
    assert math.factorial(lam.n) % partition_degree(lam) == 0


# -- Alt(n) witnesses -------------------------------------------------------------


def test_an_witness_n8():
    w = an_witness(8)
    assert [x.degree for x in w] == [64, 35, 20]
    assert w[2].codegree == 1008 and math.gcd(20, 1008) == 4
    assert w[0].codegree_closed_form == 315


@pytest.mark.parametrize("n", range(9, 41))
def test_an_witness_closed_forms(n):
    w = an_witness(n)
    half = math.factorial(n) // 2
    if n % 2:
        chosen = w[1]
        assert chosen.codegree == 3 * n * math.factorial(n - 4) == half // chosen.degree
    else:
        chosen = w[0]
        assert 2 * chosen.codegree == 3 * (n - 1) * (n - 3) * math.factorial(n - 5)
    assert math.gcd(chosen.degree, chosen.codegree) % 4 == 0


def test_an_witness_below_range():
    with pytest.raises(ValueError):
        an_witness(7)


def test_alt_degrees_match_computed_table():
    # Alt(8): every non-self-conjugate partition pair gives one degree, self-conjugate ones split
    degs = set()
    for lam in partitions(8):
        d = partition_degree(lam)
        degs.add(d // 2 if is_self_conjugate(lam) else d)
    assert degs == table_of("Alt(8)").degree_set()


# -- PSL2 configurations ----------------------------------------------------------


def test_enumeration_q9():
    cfgs = psl2_enumerate_subgroups(3, 2)
    assert [c.label() for c in cfgs] == [
        "PSL2(9)",
        "PSL2(9).<phi^1>",
        "PSL2(9).<delta*phi^1>",
        "PGL2(9)",
        "PGL2(9).<phi^1>",
    ]
    assert [c.coset_type for c in cfgs] == [PLAIN, UNTWISTED, TWISTED, PLAIN, OTHER]


def test_enumeration_characteristic_two():
    cfgs = psl2_enumerate_subgroups(2, 4)
    assert [c.d for c in cfgs] == [1, 2, 4]
    assert all(c.contains_delta for c in cfgs)


@pytest.mark.parametrize("args", [
    (3, 2, False, 3, UNTWISTED),  # d must divide f
    (3, 3, False, 3, TWISTED),  # twist needs even d
    (2, 2, False, 1, PLAIN),  # delta is inner in characteristic two
    (3, 2, True, 2, UNTWISTED),
    (3, 2, False, 2, "bogus"),
])
def test_invalid_configs(args):
    with pytest.raises(ConfigError):
        Psl2Config(*args)


def test_config_groups_have_the_right_order():
    for q in (4, 5, 8, 9, 16, 25):
        p, f = prime_power(q)
        for cfg in psl2_enumerate_subgroups(p, f):
            factor = cfg.d * (2 if cfg.contains_delta and p != 2 else 1)
            assert psl2_config_group(cfg).order == psl2_order(q) * factor, cfg.label()


def test_white_psl2_5_has_no_degree_6():
    res = white_degree_set(psl2_enumerate_subgroups(5, 1)[0])
    assert res.degrees == {1, 3, 4, 5}
    assert 6 not in res.degrees
    assert (6, 4) in res.suppressed


def test_white_provenance_and_p2_half_degree():
    res = white_degree_set(psl2_enumerate_subgroups(2, 3)[0])
    assert (None, 1) in res.suppressed
    assert res.degrees == {1, 7, 8, 9}
    assert res.provenance[8] == ("q",)


WHITE_QS = [4, 5, 7, 8, 9, 11, 13, 16, 25]


@pytest.mark.parametrize("q", WHITE_QS)
def test_white_matches_computed_tables_for_every_config(q):
    p, f = prime_power(q)
    for cfg in psl2_enumerate_subgroups(p, f):
        computed = character_table(psl2_config_group(cfg)).degree_set()
        assert white_degree_set(cfg).degrees == computed, cfg.label()


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16, 25])
def test_conditions_match_brute_force(q):
    p, f = prime_power(q)
    for cfg in psl2_enumerate_subgroups(p, f):
        verdict = psl2_squarefree_conditions(cfg)
        brute = square_free_hypothesis(character_table(psl2_config_group(cfg)))
        assert verdict.satisfies == brute.satisfies, cfg.label()


@pytest.mark.slow
def test_white_and_conditions_q27():
    for cfg in psl2_enumerate_subgroups(3, 3):
        t = character_table(psl2_config_group(cfg))
        assert white_degree_set(cfg).degrees == t.degree_set(), cfg.label()
        assert psl2_squarefree_conditions(cfg).satisfies == square_free_hypothesis(t).satisfies


def test_exceptional_pair():
    cfgs = psl2_enumerate_subgroups(3, 2)
    flagged = [c.label() for c in cfgs if psl2_squarefree_conditions(c).exceptional]
    assert flagged == ["PSL2(9).<phi^1>", "PSL2(9).<delta*phi^1>"]
    for c in cfgs[1:3]:
        v = psl2_squarefree_conditions(c)
        assert v.satisfies and v.failed_condition == 3


@settings(max_examples=200)
@given(st.sampled_from([(p, f) for p in (2, 3, 5, 7, 11, 13) for f in range(1, 9) if p**f > 3]))
def test_condition_predicate_is_total(pf):
    p, f = pf
    for cfg in psl2_enumerate_subgroups(p, f):
        v = psl2_squarefree_conditions(cfg)
        assert v.satisfies == (v.failed_condition is None or v.exceptional)
        assert cfg.coset_type in COSET_TYPES
        assert 1 in white_degree_set(cfg).degrees
