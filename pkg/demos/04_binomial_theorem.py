"""
Expanding (X + Y)^m
===================

Young diagrams in a box index the words of (X + Y)^m, so the binomial
coefficients come straight out of placement numbers.
"""

from qweyl.coeffring import q_binomial
from qweyl.numbers import binomial_normal_form
from qweyl.rewriter import binomial_expansion, normal_order_expression

nf = binomial_normal_form(3, 1)
print(nf.pretty())

# rewriting all eight words of (X + Y)^3 one at a time agrees
print(nf == normal_order_expression(binomial_expansion(3), 1))

# with every alpha set to zero only the quantum plane remains, and the coefficients are Gaussian binomials
plane = binomial_normal_form(5, 0).substitute(alphas={0: 0})
for k in range(6):
    print(k, plane[(5 - k, k)].pretty(), plane[(5 - k, k)] == q_binomial(5, k))
