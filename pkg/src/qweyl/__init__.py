"""Normal ordering in the q-deformed polynomial Weyl algebra XY - qYX = f(Y).

Coefficients are computed two ways: as q-weighted mixed rook placements on
Ferrers boards (:mod:`qweyl.placements`, :mod:`qweyl.numbers`) and by brute
force rewriting (:mod:`qweyl.rewriter`).
"""

from .boards import Board, board_from_word, jump_board, lah_board, rectangle, staircase
from .coeffring import CoeffRing, Poly, RingMismatchError, q_binomial, q_int
from .numbers import (
    binomial_normal_form,
    combinatorial_normal_form,
    ore_lah,
    ore_scherk,
    ore_stirling,
    poly_lah,
    poly_scherk,
    poly_stirling,
)
from .placements import (
    mixed_number_dp,
    mixed_number_sequential,
    mixed_number_static,
    rook_numbers,
)
from .rewriter import NormalForm, equal_normal_forms, normal_order, normal_order_expression
from .words import Word, parse_word

__version__ = "0.1.0"
