"""Words in X and Y: parsing, block form, and the Young-diagram bijection."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "Word",
    "WordSyntaxError",
    "BlockForm",
    "YoungDiagram",
    "parse_word",
    "block_form",
    "word_from_blocks",
    "word_from_diagram",
    "diagram_from_word",
    "enumerate_diagrams",
    "all_words",
]


class WordSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True, order=True)
class Word:
    """A finite word over {X, Y}, read left to right.  The empty word is the unit."""

    letters: str = ""

    def __post_init__(self):
        bad = set(self.letters) - {"X", "Y"}
        if bad:
            raise ValueError(f"words use only X and Y, found {sorted(bad)}")

    @classmethod
    def coerce(cls, w) -> Word:
        if isinstance(w, Word):
            return w
        return parse_word(w)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + Word.coerce(other).letters)

    def __mul__(self, n: int) -> Word:
        return Word(self.letters * n)

    @property
    def count_x(self) -> int:
        return self.letters.count("X")

    @property
    def count_y(self) -> int:
        return self.letters.count("Y")

    def render(self) -> str:
        """Caret form with maximal run-length compression, e.g. ``X^2Y^2``."""
        out = []
        for letter, run in itertools.groupby(self.letters):
            n = len(list(run))
            out.append(letter if n == 1 else f"{letter}^{n}")
        return "".join(out)

    def __str__(self):
        return self.render()


class _Parser:
    # word := factor+ ; factor := atom ('^' uint)? ; atom := 'X' | 'Y' | '(' word ')'

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def word(self) -> str:
        parts = [self.factor()]
        while self.peek() in ("X", "Y", "("):
            parts.append(self.factor())
        return "".join(parts)

    def factor(self) -> str:
        body = self.atom()
        if self.peek() == "^":
            self.pos += 1
            body = body * self.uint()
        return body

    def atom(self) -> str:
        c = self.peek()
        if c in ("X", "Y"):
            self.pos += 1
            return c
        if c == "(":
            self.pos += 1
            inner = self.word()
            if self.peek() != ")":
                raise WordSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return inner
        if not c:
            raise WordSyntaxError("unexpected end of input", self.pos)
        raise WordSyntaxError(f"unexpected character {c!r}", self.pos)

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise WordSyntaxError("expected exponent", start)
        n = int(self.text[start : self.pos])
        if n == 0:
            raise WordSyntaxError("exponent 0 is not allowed", start)
        return n


def parse_word(text: str) -> Word:
    """Parse ``"(YX)^3"``-style text into a fully expanded ``Word``.

    Blank input gives the empty word.

    >>> parse_word("X^2YXYX^2Y").letters
    'XXYXYXXY'
    """
    p = _Parser(text)
    if not p.peek():
        return Word("")
    letters = p.word()
    if p.peek():
        raise WordSyntaxError(f"unexpected character {p.peek()!r}", p.pos)
    return Word(letters)


@dataclass(frozen=True)
class BlockForm:
    """``Y^{n_r} X^{m_r} ... Y^{n_1} X^{m_1}``.

    ``blocks`` is stored left to right, so ``blocks[0] == (n_r, m_r)`` and
    ``blocks[-1] == (n_1, m_1)``.
    """

    blocks: tuple[tuple[int, int], ...]

    @property
    def n_total(self) -> int:
        return sum(n for n, _ in self.blocks)

    @property
    def m_total(self) -> int:
        return sum(m for _, m in self.blocks)

    @property
    def m1(self) -> int:
        """Length of the rightmost X block (0 for the empty word)."""
        return self.blocks[-1][1] if self.blocks else 0

    def word(self) -> Word:
        return word_from_blocks(self.blocks)


def block_form(w) -> BlockForm:
    w = Word.coerce(w)
    blocks = []
    for letter, run in itertools.groupby(w.letters):
        n = len(list(run))
        if letter == "Y":
            blocks.append([n, 0])
        elif blocks and blocks[-1][1] == 0:
            blocks[-1][1] = n
        else:
            blocks.append([0, n])
    return BlockForm(tuple((n, m) for n, m in blocks))


def word_from_blocks(blocks) -> Word:
    return Word("".join("Y" * n + "X" * m for n, m in blocks))


@dataclass(frozen=True)
class YoungDiagram:
    """Partition ``lambda_1 >= ... >= lambda_l >= 0`` inside the ``(m - l) x l`` box."""

    parts: tuple[int, ...]
    width: int  # m - l, the bound on lambda_1

    def __post_init__(self):
        parts = self.parts
        if any(p < 0 for p in parts):
            raise ValueError("parts must be nonnegative")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {parts} are not weakly decreasing")
        if parts and parts[0] > self.width:
            raise ValueError(f"diagram {parts} does not fit width {self.width}")

    @property
    def ell(self) -> int:
        return len(self.parts)

    @property
    def m(self) -> int:
        return self.width + self.ell

    @property
    def size(self) -> int:
        return sum(self.parts)


def word_from_diagram(lam, m: int, ell: int) -> Word:
    """``Y^{m-l-lam_1} X Y^{lam_1-lam_2} ... X Y^{lam_l}``."""
    parts = tuple(lam.parts if isinstance(lam, YoungDiagram) else lam)
    if len(parts) != ell:
        raise ValueError(f"need {ell} parts, got {len(parts)}")
    YoungDiagram(parts, m - ell)
    if ell == 0:
        return Word("Y" * m)
    pieces = ["Y" * (m - ell - parts[0])]
    for i in range(ell):
        nxt = parts[i + 1] if i + 1 < ell else 0
        pieces.append("X" + "Y" * (parts[i] - nxt))
    return Word("".join(pieces))


def diagram_from_word(w) -> YoungDiagram:
    """Inverse of :func:`word_from_diagram`: ``lam_i`` counts Ys after the i-th X."""
    w = Word.coerce(w)
    parts = []
    ys_after = w.count_y
    for c in w.letters:
        if c == "Y":
            ys_after -= 1
        else:
            parts.append(ys_after)
    return YoungDiagram(tuple(parts), w.count_y)


def enumerate_diagrams(m: int, ell: int) -> list[YoungDiagram]:
    if not 0 <= ell <= m:
        raise ValueError(f"need 0 <= ell <= m, got m={m}, ell={ell}")
    width = m - ell
    out = []
    # weakly decreasing tuples == multisets of {0..width}, listed descending
    for combo in itertools.combinations_with_replacement(range(width, -1, -1), ell):
        out.append(YoungDiagram(combo, width))
    return out


def all_words(length: int) -> Iterator[Word]:
    for letters in itertools.product("XY", repeat=length):
        yield Word("".join(letters))
