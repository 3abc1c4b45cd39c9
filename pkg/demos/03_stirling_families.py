"""
Ore-Stirling, Ore-Lah and their recurrences
===========================================
"""

from qweyl.numbers import (
    check_recurrences,
    ore_lah,
    ore_stirling,
    ore_stirling_factorization,
    poly_stirling,
)

# the nonzero entries of one row of the Ore-Stirling triangle
for j in range(4):
    for k in range(j + 1):
        value = ore_stirling(3, j, k)
        if value:
            print(3, j, k, value.pretty())

# at q = 1 the polynomials factor into a product of a number and a monomial in a0, a1
print(ore_stirling_factorization(4, 2, 2).pretty())

# Ore-Lah numbers come from the word (Y^2X)^n
print(ore_lah(2, 4, 1).pretty())

# the degree-2 polynomial version of the Stirling family
print(poly_stirling(2, 3, 4, 2).pretty())

# each table satisfies its triangular recurrence exactly
for family in ("ore-stirling", "ore-lah", "q-lah"):
    print(check_recurrences(family, 5).summary())
