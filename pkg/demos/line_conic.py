# The plane relative to a line plus a conic.
#
# Degenerate to F_2 glued to a blow-up of P^1 x P^1.  On F_2 the curves
# meet the fibre F2 in points of contact order l, m_l of each, and the
# answer is a weighted sum over partitions m of d.

from math import comb

from lgw import degeneration, tropical

# Partitions as exponent vectors (m_1, ..., m_d).
for d in (1, 2, 3, 4):
    print(d, degeneration.partitions(d))

# The F_2 counts come from tropical curves with a weight-2d leaf down, a
# weight-d leaf along (1,2), and fixed leaves of weight l to the left.
for m in degeneration.partitions(3):
    print(m, tropical.count_f2(3, m, seed=1), "closed form", degeneration.closed_form_f2(m))

# The weights of the sum: symmetric factors, covers of Y, contact orders.
for m in degeneration.partitions(3):
    print(m, degeneration.degeneration_weight(m))

# Put it together.  The closed form is fast, the tropical route is slow
# but independent.
for d in range(1, 8):
    print(d, degeneration.line_conic_invariant(d), comb(2 * d, d),
          degeneration.binomial_series_coefficient(d))

print("tropical route:", [str(degeneration.degeneration_sum(d, lambda m, d=d: tropical.count_f2(d, m)))
                          for d in (1, 2, 3)])
