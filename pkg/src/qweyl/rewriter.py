"""Normal ordering by brute-force rewriting with XY -> qYX + sum_j alpha_j Y^j.

This module deliberately knows nothing about boards or placements; it is the
referee the combinatorial formulas are checked against.

A pending expression is a ``{letters: Poly}`` dict.  Every rewrite strictly
lowers ``(number of X, number of XY inversions)`` lexicographically, so popping
the word with the largest measure first means each word is rewritten exactly
once, after all of its contributions have been merged.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .coeffring import CoeffRing, Poly, RingMismatchError
from .words import Word

__all__ = [
    "NormalForm",
    "Comparison",
    "normal_order",
    "normal_order_expression",
    "equal_normal_forms",
    "inversions",
    "binomial_expansion",
]


class NormalForm:
    """``sum c_{j,k} Y^j X^k`` stored as ``{(j, k): Poly}`` with no zero entries."""

    __slots__ = ("s", "_terms")

    def __init__(self, s: int, terms: Mapping[tuple[int, int], Poly] | None = None):
        self.s = s
        ring = CoeffRing(s)
        clean = {}
        for key, c in (terms or {}).items():
            if c.ring != ring:
                raise RingMismatchError(f"coefficient over s={c.s} in normal form over s={s}")
            if c:
                clean[tuple(key)] = c
        self._terms = clean

    @property
    def ring(self) -> CoeffRing:
        return CoeffRing(self.s)

    def __getitem__(self, key) -> Poly:
        return self._terms.get(tuple(key), self.ring.zero)

    def __contains__(self, key):
        return tuple(key) in self._terms

    def __iter__(self):
        return iter(self.keys())

    def __len__(self):
        return len(self._terms)

    def keys(self) -> list[tuple[int, int]]:
        """Keys sorted by (y desc, x desc)."""
        return sorted(self._terms, reverse=True)

    def items(self):
        return [(k, self._terms[k]) for k in self.keys()]

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.s == other.s and self._terms == other._terms

    def __add__(self, other: NormalForm) -> NormalForm:
        if other.s != self.s:
            raise RingMismatchError("normal forms over different rings")
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return NormalForm(self.s, out)

    def scale(self, c: Poly) -> NormalForm:
        return NormalForm(self.s, {k: v * c for k, v in self._terms.items()})

    def shift_y(self, n: int) -> NormalForm:
        """Left-multiply by ``Y^n`` (Ys on the left stay normal ordered)."""
        return NormalForm(self.s, {(j + n, k): v for (j, k), v in self._terms.items()})

    def project(self, s: int) -> NormalForm:
        return NormalForm(s, {k: v.project(s) for k, v in self._terms.items()})

    def specialize(self, q, alphas) -> dict[tuple[int, int], Fraction]:
        out = {}
        for k, v in self.items():
            val = v.evaluate(q, alphas)
            if val:
                out[k] = val
        return out

    def substitute(self, q=None, alphas=None) -> NormalForm:
        return NormalForm(self.s, {k: v.substitute(q, alphas) for k, v in self._terms.items()})

    def pretty(self, names=None) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (j, k), c in self.items():
            mono = "".join(
                [f"Y^{j}" if j > 1 else "Y" * j, f"X^{k}" if k > 1 else "X" * k]
            ) or "I"
            coeff = c.pretty(names)
            if coeff == "1":
                parts.append(mono)
            elif len(c) == 1 and "+" not in coeff:
                parts.append(f"{coeff} {mono}")
            else:
                parts.append(f"({coeff}) {mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"NormalForm(s={self.s}, {self.pretty()})"

    def to_json(self, word: str = "") -> dict:
        return {
            "word": word,
            "s": self.s,
            "terms": [{"y": j, "x": k, "coeff": c.to_json()} for (j, k), c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> NormalForm:
        s = int(data["s"])
        terms = {}
        for t in data["terms"]:
            terms[(int(t["y"]), int(t["x"]))] = Poly.from_json(t["coeff"], s)
        return cls(s, terms)


def inversions(letters: str) -> int:
    """Number of (X, Y) pairs with the X to the left."""
    xs = inv = 0
    for c in letters:
        if c == "X":
            xs += 1
        else:
            inv += xs
    return inv


def _measure(letters: str):
    return (letters.count("X"), inversions(letters))


def _rightmost(letters: str, rng) -> int:
    return letters.rfind("XY")


def _leftmost(letters: str, rng) -> int:
    return letters.find("XY")


def _random_redex(letters: str, rng) -> int:
    spots = [i for i in range(len(letters) - 1) if letters[i : i + 2] == "XY"]
    return rng.choice(spots) if spots else -1


_STRATEGIES = {"rightmost": _rightmost, "leftmost": _leftmost, "random": _random_redex}


def normal_order_expression(
    expr: Mapping,
    s: int,
    strategy: str | Callable = "rightmost",
    seed: int | None = None,
    shuffle: bool = False,
    check_measure: bool = True,
) -> NormalForm:
    """Normal order a linear combination ``{word: coefficient}``.

    ``strategy`` picks the redex inside a word (``"rightmost"``, ``"leftmost"``,
    ``"random"`` or a callable ``(letters, rng) -> index``).  With ``shuffle``
    the pending words are processed in random order instead of by measure,
    so a word may be rewritten more than once.
    """
    ring = CoeffRing(s)
    rng = random.Random(seed)
    pick = _STRATEGIES[strategy] if isinstance(strategy, str) else strategy
    q = ring.q
    alphas = [ring.alpha(j) for j in range(s + 1)]

    pending: dict[str, Poly] = {}
    heap: list = []
    result: dict[tuple[int, int], Poly] = {}

    def push(letters: str, c: Poly):
        if c.ring != ring:
            raise RingMismatchError(f"coefficient over s={c.s}, expected s={s}")
        if "XY" not in letters:
            key = (letters.count("Y"), letters.count("X"))
            v = result[key] + c if key in result else c
            if v:
                result[key] = v
            else:
                result.pop(key, None)
            return
        if letters in pending:
            pending[letters] = pending[letters] + c
        else:
            pending[letters] = c
            if not shuffle:
                x, inv = _measure(letters)
                heapq.heappush(heap, (-x, -inv, letters))

    for w, c in expr.items():
        letters = Word.coerce(w).letters
        if isinstance(c, int):
            c = ring.const(c)
        push(letters, c)

    while pending:
        if shuffle:
            letters = rng.choice(sorted(pending))
        else:
            letters = heapq.heappop(heap)[2]
        c = pending.pop(letters)
        if not c:
            continue
        i = pick(letters, rng)
        if i < 0 or letters[i : i + 2] != "XY":
            raise ValueError(f"strategy returned no XY redex in {letters!r}")
        head, tail = letters[:i], letters[i + 2 :]
        children = [(head + "YX" + tail, c * q)]
        children += [(head + "Y" * j + tail, c * alphas[j]) for j in range(s + 1)]
        if check_measure:
            before = _measure(letters)
            for child, _ in children:
                assert _measure(child) < before, (letters, child)
        for child, cc in children:
            if cc:
                push(child, cc)
    return NormalForm(s, result)


def normal_order(w, s: int, **kwargs) -> NormalForm:
    """Normal form of a single word under ``XY = qYX + alpha_0 + ... + alpha_s Y^s``."""
    return normal_order_expression({Word.coerce(w): CoeffRing(s).one}, s, **kwargs)


@dataclass(frozen=True)
class Comparison:
    equal: bool
    key: tuple[int, int] | None = None
    left: Poly | None = None
    right: Poly | None = None

    def __bool__(self):
        return self.equal

    def report(self) -> str:
        if self.equal:
            return "equal"
        return f"differ at Y^{self.key[0]} X^{self.key[1]}: {self.left} != {self.right}"


def equal_normal_forms(a: NormalForm, b: NormalForm) -> Comparison:
    """Exact comparison; on mismatch, reports the first differing ``(y, x)`` key."""
    if a.s != b.s:
        raise RingMismatchError(f"normal forms over s={a.s} and s={b.s}")
    for key in sorted(set(a.keys()) | set(b.keys()), reverse=True):
        if a[key] != b[key]:
            return Comparison(False, key, a[key], b[key])
    return Comparison(True)


def binomial_expansion(m: int) -> dict[str, int]:
    """``(X + Y)^m`` as ``{word: 1}`` over all ``2^m`` words."""
    from .words import all_words

    return {w.letters: 1 for w in all_words(m)}
