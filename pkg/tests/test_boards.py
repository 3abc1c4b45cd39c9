from __future__ import annotations

import pytest

from qweyl.boards import (
    Board,
    abel_board,
    adjoin_column,
    board_from_word,
    from_partition,
    jump_board,
    laguerre_board,
    lah_board,
    rectangle,
    staircase,
)
from qweyl.words import Word, all_words


def test_board_from_word_figures():
    assert board_from_word("(YX)^4").heights == (0, 1, 2, 3)
    assert board_from_word("(YX)^4") == staircase(4)
    assert board_from_word("X^2YXYX^2Y").heights == (1, 1, 2, 3, 3)
    assert board_from_word("X^3Y^2") == rectangle(3, 2)


def test_named_boards():
    assert lah_board(3).heights == (0, 2, 4)
    assert jump_board(4, 1) == staircase(4)
    assert rectangle(2, 3).heights == (3, 3)
    assert abel_board(3) == rectangle(2, 3)
    assert laguerre_board(3) == rectangle(3, 2)
    assert laguerre_board(3, 2) == rectangle(4, 1)


def test_adjoin_column():
    assert adjoin_column(staircase(3), 3) == staircase(4)
    assert adjoin_column(lah_board(2), 4) == lah_board(3)
    assert adjoin_column(Board(()), 0).heights == (0,)


def test_non_ferrers_is_flagged():
    b = from_partition((3, 1))
    assert not b.is_ferrers
    assert from_partition((1, 3)).is_ferrers
    with pytest.raises(ValueError):
        Board((-1,))


def test_staircase_cells():
    for n in range(31):
        assert staircase(n).cell_count == n * (n - 1) // 2


def test_jump_boards_from_words():
    for r in range(1, 5):
        for n in range(9):
            assert board_from_word(Word("Y" * r + "X") * n) == jump_board(n, r)


def test_appending_y_raises_every_column():
    for length in range(10):
        for w in all_words(length):
            before = board_from_word(w).heights
            after = board_from_word(w + Word("Y")).heights
            assert after == tuple(h + 1 for h in before)


def test_render_and_json():
    b = board_from_word("X^2YXYX^2Y")
    assert b.render().splitlines() == [".  .  .  .  .", ".  .  .", ".  ."]
    assert b.render({(1, 1): "R0"}).splitlines()[0] == ".  .  .  R0 ."
    assert Board.from_json(b.to_json()) == b
    assert b.to_json() == '{"heights": [1, 1, 2, 3, 3]}'
