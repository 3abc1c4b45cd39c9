"""
Rooks and files on Ferrers boards
=================================

Every word determines a Ferrers board.  Rooks and files placed on it, with
the leftover empty boxes counted by powers of q, are the terms of the
normal form.
"""

from qweyl.boards import board_from_word, staircase
from qweyl.placements import StaticPlacement, classify_static, iter_static_placements, static_numbers

board = board_from_word("X^2YXYX^2Y")
print(board.heights)
print(board.render())

# columns count from 0 on the right, rows from 1 at the top
placement = StaticPlacement(rooks=[(1, 1), (3, 3)], files=[])
boxes = classify_static(board, placement)
print(boxes.count("cancelled"), boxes.count("empty"))
print(boxes.weight.pretty())
print(board.render(boxes.tokens()))

# the staircase J_3 has 13 placements in all
print(sum(1 for _ in iter_static_placements(staircase(3))))

# grouped by (rooks, files) they give the mixed placement numbers
for (k, ell), value in sorted(static_numbers(staircase(3)).items()):
    print(k, ell, value.pretty())
