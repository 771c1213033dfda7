"""Runs all nine acceptance criteria exactly (tolerance 0) and prints one line each.

The lines are printed by ``test_summary`` even without ``-s``.
"""
import pytest

from lgw import acceptance
from lgw.tropical import DEFAULT_SEED


@pytest.fixture(scope="module")
def results():
    return {r.id: r for r in acceptance.run_all(seed=DEFAULT_SEED, order=8)}


@pytest.mark.parametrize("cid", range(1, 10))
def test_criterion(results, cid):
    r = results[cid]
    assert r.passed, r.detail


def test_summary(results, capsys):
    with capsys.disabled():
        print("\nacceptance summary:")
        for cid in sorted(results):
            print("  " + results[cid].line())
    assert len(results) == 9


def test_nodal_rhs_values():
    assert acceptance.nodal_cubic_rhs(4)[:3] == [3, acceptance.Fraction(21, 2), 55]


def test_reduced_order_only_reaches_degree_one():
    r = acceptance.criterion_nodal_cubic(order=2)
    assert not r.passed and r.detail["verified_through"] == 1
    assert r.detail["degrees"][1]["N_d"] == 3
