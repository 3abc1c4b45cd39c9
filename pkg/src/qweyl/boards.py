"""Ferrers boards attached to words, named board families, and ASCII rendering.

Heights are stored right to left: ``heights[0]`` is the rightmost column.  Columns
are top-aligned, so row ``i`` (counted from the top, starting at 1) exists in
every column of height ``>= i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .words import Word

__all__ = [
    "Board",
    "board_from_word",
    "staircase",
    "jump_board",
    "lah_board",
    "rectangle",
    "from_partition",
    "adjoin_column",
    "abel_board",
    "laguerre_board",
]


@dataclass(frozen=True)
class Board:
    heights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(int(h) for h in self.heights))
        if any(h < 0 for h in self.heights):
            raise ValueError(f"negative column height in {self.heights}")

    @property
    def ncols(self) -> int:
        return len(self.heights)

    @property
    def cell_count(self) -> int:
        return sum(self.heights)

    def __len__(self):
        return self.cell_count

    @property
    def is_ferrers(self) -> bool:
        """Heights weakly increase right to left."""
        h = self.heights
        return all(a <= b for a, b in zip(h, h[1:]))

    @property
    def left_to_right(self) -> tuple[int, ...]:
        return self.heights[::-1]

    def cells(self):
        """All ``(column, row)`` cells, column right-to-left from 0, row from 1 at top."""
        return [(c, r) for c, h in enumerate(self.heights) for r in range(1, h + 1)]

    def __contains__(self, cell) -> bool:
        c, r = cell
        return 0 <= c < self.ncols and 1 <= r <= self.heights[c]

    def peel(self) -> Board:
        """Drop the leftmost column."""
        return Board(self.heights[:-1])

    def render(self, labels: Mapping[tuple[int, int], str] | None = None) -> str:
        """Rows top-down, columns left to right, one 2-char token per cell.

        ``labels`` maps cells to tokens (``"R0"``, ``"x"``, ``"."``...);
        unlabelled cells print as ``.``.
        """
        labels = labels or {}
        top = max(self.heights, default=0)
        lines = []
        for r in range(1, top + 1):
            tokens = []
            for c in reversed(range(self.ncols)):
                if self.heights[c] >= r:
                    tokens.append(labels.get((c, r), ".").ljust(2))
            lines.append(" ".join(tokens).rstrip())
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({"heights": list(self.heights)})

    @classmethod
    def from_json(cls, text: str) -> Board:
        return cls(tuple(json.loads(text)["heights"]))


def board_from_word(w) -> Board:
    """One column per X; its height is the number of Ys to the right of that X."""
    w = Word.coerce(w)
    heights = []
    ys = 0
    for c in reversed(w.letters):
        if c == "Y":
            ys += 1
        else:
            heights.append(ys)
    return Board(tuple(heights))


def jump_board(n: int, m: int) -> Board:
    """Heights ``(0, m, 2m, ..., m(n-1))`` right to left."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    return Board(tuple(m * i for i in range(n)))


def staircase(n: int) -> Board:
    return jump_board(n, 1)


def lah_board(n: int) -> Board:
    return jump_board(n, 2)


def rectangle(m: int, n: int) -> Board:
    """``m`` columns of height ``n`` (the board of ``X^m Y^n``)."""
    if n < 0 or m < 0:
        raise ValueError("m and n must be nonnegative")
    return Board((n,) * m)


def from_partition(heights) -> Board:
    """Arbitrary right-to-left height sequence; check ``is_ferrers`` before use."""
    return Board(tuple(heights))


def adjoin_column(b: Board, h: int) -> Board:
    return Board(b.heights + (h,))


def abel_board(n: int, r: int = 1) -> Board:
    """r-restricted Abel board ``R_{n-r, n}``; ``r = 1`` is the Abel board."""
    return rectangle(n - r, n)


def laguerre_board(n: int, r: int = 1) -> Board:
    """r-restricted Laguerre board ``R_{n+r-1, n-r}``; ``r = 1`` is ``R_{n, n-1}``."""
    return rectangle(n + r - 1, n - r)
