from fractions import Fraction
from math import comb

import pytest
from sympy.functions.combinatorial.numbers import partition

from lgw import degeneration as dg
from lgw import tropical

F = Fraction


def test_partitions_examples():
    assert dg.partitions(1) == [(1,)]
    assert dg.partitions(2) == [(2, 0), (0, 1)]
    assert [len(dg.partitions(d)) for d in range(1, 7)] == [1, 2, 3, 5, 7, 11]
    assert [dg.partition_count(d) for d in range(1, 7)] == [1, 2, 3, 5, 7, 11]
    with pytest.raises(ValueError):
        dg.partitions(0)


def test_partitions_valid_and_distinct():
    for d in range(1, 9):
        ps = dg.partitions(d)
        assert len(set(ps)) == len(ps) == partition(d)
        assert all(dg.partition_degree(m) == d and len(m) == d for m in ps)


def test_degeneration_sum_examples():
    assert dg.degeneration_sum(1, dg.closed_form_f2) == 2
    assert dg.degeneration_weight((2, 0)) == F(1, 2)
    assert dg.degeneration_weight((0, 1)) == F(-1, 2)
    assert dg.degeneration_sum(2, dg.closed_form_f2) == F(1, 2) * 16 - F(1, 2) * 4 == 6
    assert dg.degeneration_sum(4, lambda m: 0) == 0


@pytest.mark.parametrize("d", range(1, 13))
def test_line_conic_three_way(d):
    assert dg.line_conic_invariant(d) == comb(2 * d, d) == dg.binomial_series_coefficient(d)


def test_line_conic_examples():
    assert dg.line_conic_invariants(3) == [2, 6, 20]
    assert dg.line_conic_invariant(6) == 924


def test_cross_module_with_tropical_counts():
    for d in (1, 2, 3):
        value = dg.line_conic_invariant(d, lambda m, d=d: tropical.count_f2(d, m, seed=4))
        assert value == comb(2 * d, d)
