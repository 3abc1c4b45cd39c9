"""
Normal ordering by rewriting and by counting
============================================

Put a word in X and Y into the form sum c Y^j X^k using the relation
XY = qYX + alpha_0 + alpha_1 Y, first by brute-force rewriting and then by
counting placements on the word's board.
"""

from qweyl import combinatorial_normal_form, normal_order

# the word (YX)^3 over the s = 1 ring, where a0 and a1 play the roles of mu and nu
nf = normal_order("(YX)^3", 1)
print(nf.pretty())

# the placement count gives the same polynomial coefficient by coefficient
print(combinatorial_normal_form("(YX)^3", 1) == nf)

# one coefficient, looked up by (power of Y, power of X)
print(nf[(2, 1)].pretty())

# q = 1 collapses the q-deformation; a0 = 1, a1 = 0 gives Stirling numbers of the second kind
print(nf.substitute(q=1, alphas={0: 1, 1: 0}).pretty())

# higher degree: XY - qYX = a0 + a1 Y + a2 Y^2
print(normal_order("X^2Y", 2).pretty())
