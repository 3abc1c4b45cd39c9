"""Number families, closed forms and recurrence checks built on mixed placements.

Everything here is computed from placement numbers (or from standard integer
recurrences for the classical anchors); the rewriting oracle in
:mod:`qweyl.rewriter` is what the tests compare against.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from .boards import (
    Board,
    abel_board,
    board_from_word,
    jump_board,
    laguerre_board,
)
from .coeffring import CoeffRing, Poly, q_binomial, q_int
from .placements import (
    creation_sum,
    dp_numbers,
    rook_numbers,
    sequential_numbers,
    static_numbers,
    weak_compositions,
)
from .rewriter import NormalForm
from .words import Word, block_form, enumerate_diagrams, word_from_diagram

__all__ = [
    "stirling2",
    "stirling1",
    "lah",
    "eulerian",
    "combinatorial_normal_form",
    "family_row",
    "ore_stirling",
    "ore_lah",
    "ore_scherk",
    "poly_stirling",
    "poly_lah",
    "poly_scherk",
    "ore_stirling_factorization",
    "Violation",
    "RecurrenceReport",
    "check_recurrences",
    "random_ferrers_board",
    "FAMILIES",
    "RectangleCounts",
    "rectangle_closed_forms",
    "rectangle_mixed_count",
    "q_alt",
    "composition_sum",
    "basic_word_ore_formula",
    "EulerianEntry",
    "eulerian_report",
    "eulerian_closed_form",
    "binomial_M",
    "binomial_O",
    "binomial_normal_form",
    "quantum_plane_binomial",
    "NamedBoardCheck",
    "named_board_specializations",
]


# --------------------------------------------------------------------------
# classical triangles, from their recurrences


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """S(n, k) via S(n+1, k) = S(n, k-1) + k S(n, k)."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return int(k == 0)
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Unsigned |s(n, k)| via |s(n, k)| = |s(n-1, k-1)| + (n-1)|s(n-1, k)|."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return int(k == 0)
    return stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k)


@lru_cache(maxsize=None)
def lah(n: int, k: int) -> int:
    """Unsigned Lah numbers via L(n+1, k) = L(n, k-1) + (n+k) L(n, k)."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return int(k == 0)
    return lah(n - 1, k - 1) + (n - 1 + k) * lah(n - 1, k)


@lru_cache(maxsize=None)
def eulerian(n: int, d: int) -> int:
    """Permutations of {1..n} with exactly d descents; A(0, 0) = 1."""
    if n < 0 or d < 0:
        return 0
    if n == 0:
        return int(d == 0)
    return (d + 1) * eulerian(n - 1, d) + (n - d) * eulerian(n - 1, d - 1)


def _binom(n: int, k: int) -> int:
    # zero outside 0 <= k <= n, including a negative top index
    return comb(n, k) if 0 <= k <= n else 0


# --------------------------------------------------------------------------
# normal forms from placements


_ENGINES = {"dp": dp_numbers, "sequential": sequential_numbers}


@lru_cache(maxsize=None)
def _type_table(heights: tuple[int, ...], s: int, engine: str = "dp"):
    return _ENGINES[engine](Board(heights), s)


def combinatorial_normal_form(w, s: int, engine: str = "dp") -> NormalForm:
    """``sum_k m_k(B_w; q) Y^{|n| + t(k)} X^{|m| - |k|}``.

    ``engine`` is ``"dp"`` (default), ``"sequential"``, or ``"static"``
    (the rook/file model, s = 1 only).
    """
    w = Word.coerce(w)
    bf = block_form(w)
    n, m = bf.n_total, bf.m_total
    board = board_from_word(w)
    terms: dict = {}
    if engine == "static":
        if s != 1:
            raise ValueError("the static engine only covers s = 1")
        for (k, ell), val in static_numbers(board).items():
            key = (n - k, m - k - ell)
            terms[key] = terms[key] + val if key in terms else val
        return NormalForm(1, terms)
    for ktype, val in _type_table(board.heights, s, engine).items():
        key = (n + creation_sum(ktype), m - sum(ktype))
        terms[key] = terms[key] + val if key in terms else val
    return NormalForm(s, terms)


@lru_cache(maxsize=None)
def family_row(r: int, s: int, n: int) -> dict[tuple[int, int], Poly]:
    """Coefficients of ``(Y^r X)^n`` as ``{(j, k): sum over WC_{s+1}(n-k | j-rn) of m_k(J_{n,r})}``."""
    table = _type_table(jump_board(n, r).heights, s)
    out: dict = {}
    for ktype, val in table.items():
        key = (r * n + creation_sum(ktype), n - sum(ktype))
        out[key] = out[key] + val if key in out else val
    return out


def poly_scherk(r: int, s: int, n: int, j: int, k: int) -> Poly:
    if n < 0 or r < 0 or s < 0:
        return CoeffRing(max(s, 0)).zero
    return family_row(r, s, n).get((j, k), CoeffRing(s).zero)


def poly_stirling(s: int, n: int, j: int, k: int) -> Poly:
    return poly_scherk(1, s, n, j, k)


def poly_lah(s: int, n: int, j: int, k: int) -> Poly:
    return poly_scherk(2, s, n, j, k)


def ore_scherk(r: int, n: int, j: int, k: int) -> Poly:
    """``m_{rn-j, j-(r-1)n-k}(J_{n,r}; q)``; zero outside the support."""
    zero = CoeffRing(1).zero
    a, b = r * n - j, j - (r - 1) * n - k
    if n < 0 or a < 0 or b < 0 or k < 0:
        return zero
    return _type_table(jump_board(n, r).heights, 1).get((a, b), zero)


def ore_stirling(n: int, j: int, k: int) -> Poly:
    return ore_scherk(1, n, j, k)


def ore_lah(n: int, j: int, k: int) -> Poly:
    return ore_scherk(2, n, j, k)


def ore_stirling_factorization(n: int, j: int, k: int) -> Poly:
    """The q = 1 closed form ``mu^{n-j} nu^{j-k} S(n, j) |s(j, k)|``."""
    ring = CoeffRing(1)
    if not 0 <= k <= j <= n:
        return ring.zero
    c = stirling2(n, j) * stirling1(j, k)
    return ring.monomial(c, alpha_exps=(n - j, j - k)) if c else ring.zero


# --------------------------------------------------------------------------
# recurrences


@dataclass(frozen=True)
class Violation:
    where: tuple
    lhs: Poly
    rhs: Poly

    def __str__(self):
        return f"{self.where}: {self.lhs} != {self.rhs}"


@dataclass
class RecurrenceReport:
    family: str
    params: dict
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and self.checked > 0

    def summary(self) -> str:
        p = ", ".join(f"{k}={v}" for k, v in self.params.items())
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        head = f"{self.family} ({p}): {self.checked} identities checked, {status}"
        if self.violations:
            head += f"; first {self.violations[0]}"
        return head


def _scaled(entry: Poly, kind: str, e: int, alpha: Poly | None, where, bad: list) -> Poly:
    # entries that vanish never need their factor, so [negative]_q cannot arise
    if not entry:
        return entry
    if e < 0:
        bad.append(where)
        return entry.ring.zero
    f = entry.shift_q(e) if kind == "pow" else q_int(e, entry.s) * entry
    return f * alpha if alpha is not None else f


def _check_scherk_rec(r: int, s: int, max_n: int, table, ring: CoeffRing, name: str, params):
    """S(n+1; j, k) = q^{j-r} S(n; j-r, k-1) + sum_l a_l [j-l-(r-1)] S(n; j-l-(r-1), k)."""
    report = RecurrenceReport(name, params)
    for n in range(max_n):
        jmax = (r + max(s - 1, 0)) * (n + 1) + 1
        for j in range(jmax + 1):
            for k in range(n + 2):
                lhs = table(n + 1, j, k)
                bad: list = []
                rhs = _scaled(table(n, j - r, k - 1), "pow", j - r, None, (n + 1, j, k), bad)
                for ell in range(s + 1):
                    jj = j - ell - (r - 1)
                    rhs = rhs + _scaled(
                        table(n, jj, k), "int", jj, ring.alpha(ell), (n + 1, j, k), bad
                    )
                report.checked += 1
                if lhs != rhs or bad:
                    report.violations.append(Violation((n + 1, j, k), lhs, rhs))
    return report


def _ore_table(r):
    def table(n, j, k):
        return ore_scherk(r, n, j, k)

    return table


def _poly_table(r, s):
    def table(n, j, k):
        if n < 0:
            return CoeffRing(s).zero
        return poly_scherk(r, s, n, j, k)

    return table


def _check_q_lah(max_n: int) -> RecurrenceReport:
    """L_q(n+1,k) = q^{n+k-1} L_q(n,k-1) + [n+k] L_q(n,k) (nu=0, mu=1), and the mu=0 variant."""
    report = RecurrenceReport("q-lah", {"max_n": max_n})
    ring = CoeffRing(1)

    def lq(n, k):  # L_{1,0;q}(n; n+k, k)
        return ore_lah(n, n + k, k).substitute(alphas={0: 1, 1: 0})

    def fq(n, k):  # L_{0,1;q}(n; 2n, k)
        return ore_lah(n, 2 * n, k).substitute(alphas={0: 0, 1: 1})

    for n in range(max_n):
        for k in range(n + 2):
            bad: list = []
            rhs = _scaled(lq(n, k - 1), "pow", n + k - 1, None, (n + 1, k), bad)
            rhs = rhs + _scaled(lq(n, k), "int", n + k, None, (n + 1, k), bad)
            report.checked += 1
            if lq(n + 1, k) != rhs or bad:
                report.violations.append(Violation(("mu=1", n + 1, k), lq(n + 1, k), rhs))
            rhs = _scaled(fq(n, k - 1), "pow", 2 * n, None, (n + 1, k), bad)
            rhs = rhs + _scaled(fq(n, k), "int", 2 * n, None, (n + 1, k), bad)
            report.checked += 1
            if fq(n + 1, k) != rhs or bad:
                report.violations.append(Violation(("mu=0", n + 1, k), fq(n + 1, k), rhs))
        # at q = 1 the nu = 0 slice is the classical Lah triangle
        for k in range(n + 2):
            report.checked += 1
            val = lq(n + 1, k).evaluate(1, [1, 1])
            if val != lah(n + 1, k):
                report.violations.append(Violation(("lah", n + 1, k), lq(n + 1, k), ring.const(lah(n + 1, k))))
    return report


def random_ferrers_board(rng: random.Random, max_cols: int = 10, max_height: int = 8) -> Board:
    ncols = rng.randint(1, max_cols)
    return Board(tuple(sorted(rng.randint(0, max_height) for _ in range(ncols))))


def _check_recurrence_main(boards: int, seed: int, max_k: int, max_s: int) -> RecurrenceReport:
    """The column-peeling recurrence, evaluated on sequential-engine values."""
    report = RecurrenceReport(
        "recurrence-main", {"boards": boards, "seed": seed, "max_k": max_k, "max_s": max_s}
    )
    rng = random.Random(seed)
    for _ in range(boards):
        board = random_ferrers_board(rng)
        s = rng.randint(0, max_s)
        ring = CoeffRing(s)
        full = sequential_numbers(board, s)
        rest = sequential_numbers(board.peel(), s)
        lam = board.heights[-1]
        zero = ring.zero
        report.checked += 1
        if full.get((0,) * (s + 1), zero) != ring.q_pow(board.cell_count):
            report.violations.append(Violation((board.heights, "base"), full.get((0,) * (s + 1), zero), ring.q_pow(board.cell_count)))
        for size in range(1, max_k + 1):
            for ktype in weak_compositions(size, s + 1):
                t = creation_sum(ktype)
                where = (board.heights, ktype)
                bad: list = []
                rhs = _scaled(rest.get(ktype, zero), "pow", lam + t, None, where, bad)
                for r in range(s + 1):
                    if ktype[r] == 0:
                        continue
                    kr = ktype[:r] + (ktype[r] - 1,) + ktype[r + 1 :]
                    rhs = rhs + _scaled(
                        rest.get(kr, zero), "int", lam + t - (r - 1), ring.alpha(r), where, bad
                    )
                lhs = full.get(ktype, zero)
                report.checked += 1
                if lhs != rhs or bad:
                    report.violations.append(Violation(where, lhs, rhs))
    return report


FAMILIES = (
    "ore-stirling",
    "ore-lah",
    "ore-scherk",
    "poly-stirling",
    "poly-lah",
    "poly-scherk",
    "q-lah",
    "recurrence-main",
)


def check_recurrences(
    family: str,
    max_n: int,
    s: int = 1,
    r: int = 1,
    boards: int = 50,
    seed: int = 0,
    max_k: int = 4,
) -> RecurrenceReport:
    """Check a family's recurrence for every row up to ``max_n``.

    ``s`` applies to the polynomial families, ``r`` to the Scherk families;
    ``recurrence-main`` uses ``boards`` seeded random Ferrers boards (``max_n``
    then bounds the degree ``s``).
    """
    if family == "ore-stirling":
        return _check_scherk_rec(1, 1, max_n, _ore_table(1), CoeffRing(1), family, {"max_n": max_n})
    if family == "ore-lah":
        return _check_scherk_rec(2, 1, max_n, _ore_table(2), CoeffRing(1), family, {"max_n": max_n})
    if family == "ore-scherk":
        return _check_scherk_rec(r, 1, max_n, _ore_table(r), CoeffRing(1), family, {"r": r, "max_n": max_n})
    if family in ("poly-stirling", "poly-lah", "poly-scherk"):
        rr = {"poly-stirling": 1, "poly-lah": 2}.get(family, r)
        params = {"s": s, "max_n": max_n} if family != "poly-scherk" else {"r": rr, "s": s, "max_n": max_n}
        return _check_scherk_rec(rr, s, max_n, _poly_table(rr, s), CoeffRing(s), family, params)
    if family == "q-lah":
        return _check_q_lah(max_n)
    if family == "recurrence-main":
        return _check_recurrence_main(boards, seed, max_k, max_n)
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


# --------------------------------------------------------------------------
# rectangle boards


@dataclass(frozen=True)
class RectangleCounts:
    rooks: int  # r_k(R_{m,n})
    files: int  # f_l(R_{m,n})
    mixed: int  # |M_{k,l}(R_{m,n})|


def rectangle_mixed_count(m: int, n: int, k: int, ell: int) -> int:
    """Double sum over rook columns pi and file distributions rho suiting pi."""
    if k < 0 or ell < 0:
        return 0
    total = 0
    lead = factorial(k) * _binom(n, k)
    if not lead:
        return 0
    for pi in itertools.combinations(range(1, m + 1), k):
        cuts = (0,) + pi
        blocks = [cuts[j] - cuts[j - 1] - 1 for j in range(1, k + 1)] + [m - (pi[-1] if pi else 0)]
        for rho in weak_compositions(ell, k + 1):
            if any(p > b for p, b in zip(rho, blocks)):
                continue
            term = lead
            for j, (p, b) in enumerate(zip(rho, blocks), start=1):
                term *= _binom(b, p) * (n + 1 - j) ** p
            total += term
    return total


def rectangle_closed_forms(m: int, n: int, k: int, ell: int) -> RectangleCounts:
    return RectangleCounts(
        rooks=factorial(k) * _binom(n, k) * _binom(m, k) if k >= 0 else 0,
        files=n**ell * _binom(m, ell) if ell >= 0 else 0,
        mixed=rectangle_mixed_count(m, n, k, ell),
    )


# --------------------------------------------------------------------------
# X^m Y^n in the Ore algebra with q = mu = nu = 1


def q_alt(n: int, r: int, t: int) -> int:
    """``sum_{k=n-t}^{n} (-1)^{n-k} C(t, n-k) k^r`` with ``0^0 = 1``."""
    return sum((-1) ** (n - k) * comb(t, n - k) * k**r for k in range(n - t, n + 1))


def composition_sum(m: int, n: int, r: int, t: int) -> int:
    """Rectangle coefficient of ``Y^{n-t} X^{m-r}`` without the ``t! C(n, t)`` factor."""
    if t < 0 or r < t:
        return 0
    lead = factorial(t) * _binom(n, t)
    if not lead:
        return 0
    return rectangle_mixed_count(m, n, t, r - t) // lead


def basic_word_ore_formula(m: int, n: int) -> NormalForm:
    """``X^m Y^n = sum C(n,t) C(m,r) q_n(r,t) Y^{n-t} X^{m-r}`` (integer coefficients, s = 1)."""
    ring = CoeffRing(1)
    terms = {}
    for r in range(m + 1):
        for t in range(n + 1):
            c = comb(n, t) * comb(m, r) * q_alt(n, r, t)
            if c:
                terms[(n - t, m - r)] = ring.const(c)
    return NormalForm(1, terms)


@dataclass(frozen=True)
class EulerianEntry:
    m: int
    n: int
    r: int
    t: int
    alternating: int
    closed_form: int

    @property
    def agrees(self) -> bool:
        return self.alternating == self.closed_form


def eulerian_closed_form(n: int, r: int, t: int) -> int:
    """``sum_{l=1}^{n} C(r-t+l, l) A(r, n-l)``; a negative top index gives 0."""
    return sum(_binom(r - t + ell, ell) * eulerian(r, n - ell) for ell in range(1, n + 1))


def eulerian_report(max_m: int, max_n: int) -> list[EulerianEntry]:
    """Compare ``q_n(r, t)`` with the Eulerian closed form over all indices.

    Informational only: the two are known to disagree at some indices.
    """
    out = []
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            for r in range(m + 1):
                for t in range(n + 1):
                    out.append(EulerianEntry(m, n, r, t, q_alt(n, r, t), eulerian_closed_form(n, r, t)))
    return out


# --------------------------------------------------------------------------
# binomial theorem


@lru_cache(maxsize=None)
def _diagram_tables(m: int, ell: int, s: int):
    # one type table per lambda in I_{m-l, l}; the leading Ys do not change the board
    out = []
    for lam in enumerate_diagrams(m, ell):
        board = board_from_word(word_from_diagram(lam, m, ell))
        out.append(_type_table(board.heights, s))
    return tuple(out)


def binomial_M(m: int, r: int, ell: int, t: int, s: int) -> Poly:
    """Coefficient of ``Y^{m-l+t} X^r`` contributed by words with ``l`` letters X."""
    ring = CoeffRing(s)
    if not 0 <= r <= ell <= m:
        return ring.zero
    total = ring.zero
    wanted = set(weak_compositions(ell - r, s + 1, t))
    for table in _diagram_tables(m, ell, s):
        for ktype in wanted:
            v = table.get(ktype)
            if v is not None:
                total = total + v
    return total


def binomial_O(m: int, k: int, ell: int, t: int) -> Poly:
    """Ore-algebra coefficient of ``Y^{m-l-t} X^k``: ``sum_lambda m_{t, l-k-t}(B_lambda)``."""
    ring = CoeffRing(1)
    if not 0 <= k <= ell <= m or t < 0 or ell - k - t < 0:
        return ring.zero
    total = ring.zero
    for table in _diagram_tables(m, ell, 1):
        v = table.get((t, ell - k - t))
        if v is not None:
            total = total + v
    return total


def binomial_normal_form(m: int, s: int) -> NormalForm:
    """Normal form of ``(X + Y)^m`` assembled from the coefficients :func:`binomial_M`.

    The X exponent ``r`` runs from 0, so the pure ``Y`` terms are included.
    """
    terms: dict = {}
    for r in range(m + 1):
        for ell in range(r, m + 1):
            for t in range(r - ell, (s - 1) * (ell - r) + 1):
                c = binomial_M(m, r, ell, t, s)
                if c:
                    key = (m - ell + t, r)
                    terms[key] = terms[key] + c if key in terms else c
    return NormalForm(s, terms)


def quantum_plane_binomial(m: int) -> dict[int, tuple[Poly, Poly]]:
    """``{k: (coefficient of Y^{m-k} X^k at alpha = 0, [m choose k]_q)}``."""
    nf = binomial_normal_form(m, 0).substitute(alphas={0: 0})
    return {k: (nf[(m - k, k)], q_binomial(m, k)) for k in range(m + 1)}


# --------------------------------------------------------------------------
# Abel and Laguerre boards


@dataclass(frozen=True)
class NamedBoardCheck:
    name: str
    n: int
    r: int
    k: int
    enumerated: int
    closed_form: int
    rectangle: int

    @property
    def ok(self) -> bool:
        return self.enumerated == self.closed_form == self.rectangle


def _counts_at_one(values: list[Poly]) -> list[int]:
    out = []
    for v in values:
        val = v.evaluate(1, [1] * (v.s + 1))
        out.append(int(val))
    return out


def named_board_specializations(max_n: int = 6, max_r: int = 2) -> list[NamedBoardCheck]:
    """Abel file numbers and Laguerre rook numbers against closed forms and enumeration."""
    out = []
    for r in range(1, max_r + 1):
        for n in range(r, max_n + 1):
            board = abel_board(n, r)
            files = _counts_at_one(rook_numbers(board, 1))
            cols = n - r
            for k in range(0, n + 1):
                j = n - k
                got = files[j] if j < len(files) else 0
                closed = n**j * _binom(n - r, k - r) if k >= r else 0
                rect = rectangle_closed_forms(cols, n, 0, j).files
                out.append(NamedBoardCheck("abel", n, r, k, got, closed, rect))
            board = laguerre_board(n, r)
            rooks = _counts_at_one(rook_numbers(board, 0))
            cols, height = n + r - 1, n - r
            for k in range(0, n + 1):
                j = n - k
                got = rooks[j] if j < len(rooks) else 0
                if k >= r:
                    closed = factorial(n + r - 1) // factorial(k + r - 1) * _binom(n - r, k - r)
                else:
                    closed = 0
                rect = rectangle_closed_forms(cols, height, j, 0).rooks
                out.append(NamedBoardCheck("laguerre", n, r, k, got, closed, rect))
                if r == 1:
                    out.append(NamedBoardCheck("lah", n, r, k, got, lah(n, k), rect))
    return out
