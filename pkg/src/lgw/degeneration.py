"""Partition sums for the plane relative to a line plus a conic."""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable

from .series import Series, exp, log1p

Partition = tuple[int, ...]


def partitions(d: int) -> list[Partition]:
    """Exponent vectors (m_1, ..., m_d) with sum(l * m_l) = d.

    Ordered lexicographically descending, so ``(d, 0, ..., 0)`` comes first.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    out: list[Partition] = []

    def rec(l: int, remaining: int, acc: list[int]):
        if l == 0:
            if remaining == 0:
                out.append(tuple(reversed(acc)))
            return
        for ml in range(remaining // l, -1, -1):
            rec(l - 1, remaining - l * ml, acc + [ml])

    # build from the largest part down, then reverse into (m_1, ..., m_d)
    rec(d, d, [])
    return sorted(out, reverse=True)


def partition_degree(m: Partition) -> int:
    return sum(l * ml for l, ml in enumerate(m, start=1))


def closed_form_f2(m: Partition) -> Fraction:
    """N_m(F_2) = prod_l (2d)^(m_l)."""
    d = partition_degree(m)
    return Fraction((2 * d) ** sum(m))


def degeneration_weight(m: Partition) -> Fraction:
    """prod_l  l^m_l / m_l!  *  ((-1)^(l-1) / l^2)^m_l."""
    w = Fraction(1)
    for l, ml in enumerate(m, start=1):
        w *= Fraction(l ** ml, factorial(ml)) * Fraction((-1) ** (l - 1), l * l) ** ml
    return w


def degeneration_sum(d: int, n_f2: Callable[[Partition], Fraction]) -> Fraction:
    return sum((degeneration_weight(m) * Fraction(n_f2(m)) for m in partitions(d)),
               Fraction(0))


def line_conic_invariant(d: int, n_f2: Callable[[Partition], Fraction] | None = None) -> Fraction:
    """N_d of the plane relative to a line and a conic.

    With the closed form for the F_2 counts this is checked against C(2d, d);
    pass ``n_f2`` to route the F_2 counts through another computation.
    """
    value = degeneration_sum(d, n_f2 or closed_form_f2)
    if n_f2 is None and value != comb(2 * d, d):
        raise AssertionError(f"degeneration sum {value} != C({2 * d}, {d})")
    return value


def binomial_series_coefficient(d: int) -> Fraction:
    """[x^d] exp(2d log(1 + x)), with x embedded as t1."""
    f = Series({(0, 0, 0, 0): 1, (0, 0, 1, 0): 1}, d)
    return exp(log1p(f) * (2 * d)).coefficient(((0, 0), (d, 0)))


def line_conic_invariants(max_degree: int, n_f2=None) -> list[Fraction]:
    return [line_conic_invariant(d, n_f2) for d in range(1, max_degree + 1)]


def partition_count(d: int) -> int:
    return len(partitions(d))
