"""q-weighted mixed placements on Ferrers boards.

Three ways to get the same numbers:

* ``static``: rooks and files as cells of the fixed board, boxes classified
  geometrically (rook/file/cancelled/empty).  Only rook weights 0 and 1.
* ``sequential``: columns are processed right to left; a rook of weight ``r``
  changes the number of usable rows in every column further left by ``r - 1``.
* ``dp``: the column-peeling recurrence on ``(columns used, type)``.

Placement types are plain tuples ``(k_0, ..., k_s)``.  Values returned by the
``mixed_number_*`` functions include the factor ``alpha^k``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .boards import Board
from .coeffring import CoeffRing, Poly, q_int

__all__ = [
    "NotFerrersError",
    "PlacementError",
    "InvariantViolation",
    "OutOfModelWarning",
    "creation_sum",
    "weak_compositions",
    "StaticPlacement",
    "BoxClassification",
    "SequentialPlacement",
    "classify_static",
    "iter_static_placements",
    "static_numbers",
    "mixed_number_static",
    "iter_sequential_placements",
    "sequential_numbers",
    "mixed_number_sequential",
    "mixed_number_dp",
    "dp_numbers",
    "rook_numbers",
    "as_ore",
]


class NotFerrersError(ValueError):
    """Placement semantics are only defined on Ferrers boards."""


class PlacementError(ValueError):
    """A static placement breaks one of the non-attacking rules."""


class InvariantViolation(AssertionError):
    """An effective column height went negative on a Ferrers board."""


class OutOfModelWarning(UserWarning):
    """The recurrence was evaluated on a board that is not a Ferrers board."""


def creation_sum(ktype: Sequence[int]) -> int:
    """sum_j (j - 1) k_j: net change in the number of Ys."""
    return sum((j - 1) * k for j, k in enumerate(ktype))


def weak_compositions(total: int, parts: int, t: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts.

    With ``t`` given, keep only those with ``creation_sum == t``.
    """
    if total < 0 or parts <= 0:
        if total == 0 and parts == 0 and (t is None or t == 0):
            yield ()
        return

    def rec(i, left, acc):
        if i == parts - 1:
            comp = acc + (left,)
            if t is None or creation_sum(comp) == t:
                yield comp
            return
        for v in range(left, -1, -1):
            yield from rec(i + 1, left - v, acc + (v,))

    yield from rec(0, total, ())


def _require_ferrers(board: Board):
    if not board.is_ferrers:
        raise NotFerrersError(f"board {board.heights} is not a Ferrers board")


# --------------------------------------------------------------------------
# static rook/file placements (weights 0 and 1 only)


@dataclass(frozen=True)
class StaticPlacement:
    """Rook and file cells as ``(column, row)`` pairs, column 0 rightmost, row 1 top."""

    rooks: frozenset = field(default_factory=frozenset)
    files: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "rooks", frozenset(self.rooks))
        object.__setattr__(self, "files", frozenset(self.files))

    @property
    def k(self) -> int:
        return len(self.rooks)

    @property
    def ell(self) -> int:
        return len(self.files)

    def validate(self, board: Board) -> None:
        for cell in self.rooks | self.files:
            if cell not in board:
                raise PlacementError(f"cell {cell} lies outside the board")
        if self.rooks & self.files:
            raise PlacementError("a cell holds both a rook and a file")
        rook_cols = [c for c, _ in self.rooks]
        rook_rows = [r for _, r in self.rooks]
        if len(set(rook_cols)) < len(rook_cols) or len(set(rook_rows)) < len(rook_rows):
            raise PlacementError("two rooks share a row or column")
        file_cols = [c for c, _ in self.files]
        if len(set(file_cols)) < len(file_cols):
            raise PlacementError("two files share a column")
        if set(file_cols) & set(rook_cols):
            raise PlacementError("a file shares a column with a rook")
        for fc, fr in self.files:
            for rc, rr in self.rooks:
                if rr == fr and fc > rc:
                    raise PlacementError(
                        f"file at {(fc, fr)} lies to the left of rook at {(rc, rr)}"
                    )


@dataclass(frozen=True)
class BoxClassification:
    labels: dict  # cell -> "rook" | "file" | "cancelled" | "empty"
    empty_count: int
    weight: Poly

    def count(self, label: str) -> int:
        return sum(1 for v in self.labels.values() if v == label)

    def tokens(self) -> dict:
        """Rendering tokens for :meth:`Board.render` (files are rooks of weight 1)."""
        sym = {"rook": "R0", "file": "R1", "cancelled": "x", "empty": "."}
        return {cell: sym[v] for cell, v in self.labels.items()}


_ORE = CoeffRing(1)


def classify_static(board: Board, p: StaticPlacement) -> BoxClassification:
    """Label every box and compute the weight ``mu^k nu^l q^{#empty}``."""
    _require_ferrers(board)
    p.validate(board)
    labels = {}
    for c, r in board.cells():
        if (c, r) in p.rooks:
            labels[(c, r)] = "rook"
        elif (c, r) in p.files:
            labels[(c, r)] = "file"
        elif any(rc == c and r < rr for rc, rr in p.rooks | p.files):
            labels[(c, r)] = "cancelled"  # above a rook or file in its column
        elif any(rr == r and c > rc for rc, rr in p.rooks):
            labels[(c, r)] = "cancelled"  # left of a rook in its row
        else:
            labels[(c, r)] = "empty"
    empty = sum(1 for v in labels.values() if v == "empty")
    weight = _ORE.monomial(q_exp=empty, alpha_exps=(p.k, p.ell))
    return BoxClassification(labels, empty, weight)


def iter_static_placements(board: Board) -> Iterator[StaticPlacement]:
    """Every non-attacking placement of rooks and files, including the empty one."""
    _require_ferrers(board)
    heights = board.heights

    def rec(c, rook_rows, rooks, files):
        if c == len(heights):
            yield StaticPlacement(rooks, files)
            return
        yield from rec(c + 1, rook_rows, rooks, files)
        for r in range(1, heights[c] + 1):
            if r in rook_rows:
                continue  # both rooks and files are barred left of a rook
            yield from rec(c + 1, rook_rows | {r}, rooks + ((c, r),), files)
            yield from rec(c + 1, rook_rows, rooks, files + ((c, r),))

    yield from rec(0, frozenset(), (), ())


def static_numbers(board: Board) -> dict[tuple[int, int], Poly]:
    """``{(k, l): m_{k,l}(B; q)}`` over all nonzero ``(k, l)`` by full enumeration."""
    out: dict = {}
    for p in iter_static_placements(board):
        w = classify_static(board, p).weight
        key = (p.k, p.ell)
        out[key] = out[key] + w if key in out else w
    return out


def mixed_number_static(board: Board, k: int, ell: int) -> Poly:
    return static_numbers(board).get((k, ell), _ORE.zero)


# --------------------------------------------------------------------------
# sequential (row-creation) semantics


@dataclass(frozen=True)
class SequentialPlacement:
    """Per column, right to left: ``None`` (empty) or ``(weight, position)``.

    ``position`` counts from the top of the column's effective height.
    """

    decisions: tuple
    s: int

    @property
    def ktype(self) -> tuple[int, ...]:
        k = [0] * (self.s + 1)
        for d in self.decisions:
            if d is not None:
                k[d[0]] += 1
        return tuple(k)

    def empty_boxes(self, board: Board) -> int:
        total = 0
        offset = 0
        for h, d in zip(board.heights, self.decisions):
            eff = h + offset
            if d is None:
                total += eff
            else:
                r, p = d
                total += eff - p
                offset += r - 1
        return total

    def weight(self, board: Board) -> Poly:
        ring = CoeffRing(self.s)
        return ring.monomial(q_exp=self.empty_boxes(board), alpha_exps=self.ktype)


def iter_sequential_placements(board: Board, s: int) -> Iterator[SequentialPlacement]:
    """Walk the full decision tree (exponential; meant for small boards)."""
    _require_ferrers(board)
    heights = board.heights

    def rec(c, offset, acc):
        if c == len(heights):
            yield SequentialPlacement(acc, s)
            return
        eff = heights[c] + offset
        if eff < 0:
            raise InvariantViolation(f"effective height {eff} at column {c}")
        yield from rec(c + 1, offset, acc + (None,))
        for r in range(s + 1):
            for p in range(1, eff + 1):
                yield from rec(c + 1, offset + r - 1, acc + ((r, p),))

    yield from rec(0, 0, ())


def sequential_numbers(board: Board, s: int) -> dict[tuple[int, ...], Poly]:
    """``{k: m_k(B; q)}`` for every type with a nonzero value.

    Same sum as :func:`iter_sequential_placements`, but subtrees are shared
    between identical ``(column, row offset)`` states.
    """
    _require_ferrers(board)
    ring = CoeffRing(s)
    heights = board.heights
    unit = [0] * (s + 1)

    @lru_cache(maxsize=None)
    def walk(c, offset):
        # suffix type -> Z[q] weight, for columns c..end
        if c == len(heights):
            return {tuple(unit): ring.one}
        eff = heights[c] + offset
        if eff < 0:
            raise InvariantViolation(f"effective height {eff} at column {c}")
        out: dict = {}

        def add(key, val):
            prev = out.get(key)
            out[key] = val if prev is None else prev + val

        for key, val in walk(c + 1, offset).items():
            add(key, val.shift_q(eff))
        if eff > 0:
            for r in range(s + 1):
                sub = walk(c + 1, offset + r - 1)
                positions = ring.zero
                for p in range(1, eff + 1):
                    positions = positions + ring.q_pow(eff - p)
                for key, val in sub.items():
                    k = list(key)
                    k[r] += 1
                    add(tuple(k), val * positions)
        return out

    return {k: v * ring.alpha_power(k) for k, v in walk(0, 0).items() if v}


def mixed_number_sequential(board: Board, ktype: Sequence[int]) -> Poly:
    ktype = tuple(ktype)
    s = len(ktype) - 1
    return sequential_numbers(board, s).get(ktype, CoeffRing(s).zero)


# --------------------------------------------------------------------------
# column-peeling recurrence


def _dp_table(heights: tuple[int, ...], s: int, strict: bool):
    ring = CoeffRing(s)

    @lru_cache(maxsize=None)
    def m(n: int, k: tuple[int, ...]) -> Poly:
        # Z[q] part of m_k for the rightmost n columns
        if n == 0:
            return ring.one if not any(k) else ring.zero
        if not any(k):
            return ring.q_pow(sum(heights[:n]))
        lam = heights[n - 1]
        t = creation_sum(k)
        out = ring.zero
        sub = m(n - 1, k)
        if sub:
            eff = lam + t
            if eff >= 0:
                out = out + sub.shift_q(eff)
            elif strict:
                raise InvariantViolation(f"q exponent {eff} with nonzero term, k={k}")
        for r in range(s + 1):
            if k[r] == 0:
                continue
            kr = k[:r] + (k[r] - 1,) + k[r + 1 :]
            sub = m(n - 1, kr)
            if not sub:
                continue
            eff = lam + t - (r - 1)
            if eff >= 0:
                out = out + q_int(eff, s) * sub
            elif strict:
                raise InvariantViolation(f"[{eff}]_q with nonzero term, k={k}")
        return out

    return m


def mixed_number_dp(board: Board, ktype: Sequence[int]) -> Poly:
    """m_k(B; q) by the recurrence, memoised on ``(columns, type)``.

    Non-Ferrers boards are accepted with an :class:`OutOfModelWarning`; columns
    whose effective height goes negative then contribute nothing.
    """
    ktype = tuple(ktype)
    s = len(ktype) - 1
    strict = board.is_ferrers
    if not strict:
        warnings.warn(
            f"board {board.heights} is not a Ferrers board; result is out of model",
            OutOfModelWarning,
            stacklevel=2,
        )
    m = _dp_table(board.heights, s, strict)
    return m(board.ncols, ktype) * CoeffRing(s).alpha_power(ktype)


def dp_numbers(board: Board, s: int) -> dict[tuple[int, ...], Poly]:
    """All nonzero ``m_k(B; q)`` at once, running the recurrence column by column."""
    if not board.is_ferrers:
        warnings.warn(
            f"board {board.heights} is not a Ferrers board; result is out of model",
            OutOfModelWarning,
            stacklevel=2,
        )
    ring = CoeffRing(s)
    level: dict = {(0,) * (s + 1): ring.one}
    for lam in board.heights:
        nxt: dict = {}
        for k, val in level.items():
            eff = lam + creation_sum(k)
            if eff < 0:
                if board.is_ferrers:
                    raise InvariantViolation(f"effective height {eff} for k={k}")
                continue
            prev = nxt.get(k)
            nxt[k] = val.shift_q(eff) if prev is None else prev + val.shift_q(eff)
            if eff == 0:
                continue
            w = q_int(eff, s) * val
            for r in range(s + 1):
                kr = k[:r] + (k[r] + 1,) + k[r + 1 :]
                prev = nxt.get(kr)
                nxt[kr] = w if prev is None else prev + w
        level = nxt
    return {k: v * ring.alpha_power(k) for k, v in level.items() if v}


def rook_numbers(board: Board, weight: int) -> list[Poly]:
    """``[r_k^{(weight)}(B; q) for k = 0, 1, ...]`` as pure-type placement numbers.

    Values live in ``CoeffRing(weight)`` and carry ``alpha_weight^k``.
    """
    _require_ferrers(board)
    out = []
    for k in range(board.ncols + 1):
        ktype = [0] * (weight + 1)
        ktype[weight] = k
        out.append(mixed_number_dp(board, ktype))
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return out


def as_ore(values: Mapping[tuple[int, ...], Poly]) -> dict[tuple[int, int], Poly]:
    """Restrict an s=1 type table to ``{(k, l): ...}`` keys."""
    return {(k[0], k[1]): v for k, v in values.items()}
