"""Verification suites shared by the ``verify`` command and the test-suite.

Each suite returns a :class:`SuiteResult`; nothing here prints.  Results are
deterministic for a given seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb, factorial

from .boards import Board, board_from_word, rectangle, staircase
from .numbers import (
    basic_word_ore_formula,
    binomial_normal_form,
    check_recurrences,
    combinatorial_normal_form,
    composition_sum,
    eulerian_report,
    lah,
    named_board_specializations,
    ore_stirling,
    ore_stirling_factorization,
    q_alt,
    quantum_plane_binomial,
    rectangle_closed_forms,
    stirling1,
    stirling2,
)
from .placements import (
    as_ore,
    dp_numbers,
    iter_static_placements,
    sequential_numbers,
    static_numbers,
)
from .rewriter import binomial_expansion, equal_normal_forms, normal_order, normal_order_expression
from .words import Word, all_words

__all__ = ["SuiteResult", "SUITES", "run_suite", "ferrers_boards", "random_words"]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failures: list = field(default_factory=list)
    info: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.passed > 0

    def check(self, cond: bool, detail) -> bool:
        if cond:
            self.passed += 1
        else:
            self.failures.append(detail)
        return cond

    def merge(self, other: SuiteResult):
        self.passed += other.passed
        self.failures += other.failures
        self.info += other.info

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"[{status}] {self.name}: {self.passed} passed, {len(self.failures)} failed"
        if self.failures:
            line += f"\n  first failure: {self.failures[0]}"
        return line


def random_words(count: int, max_len: int, seed: int, max_s: int = 3):
    """Seeded ``(word, s)`` pairs with lengths in ``0..max_len``."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, max_len)
        yield Word("".join(rng.choice("XY") for _ in range(n))), rng.randint(0, max_s)


def _partitions(total: int, largest: int):
    if total == 0:
        yield ()
        return
    for p in range(min(total, largest), 0, -1):
        for rest in _partitions(total - p, p):
            yield (p,) + rest


def ferrers_boards(max_cells: int) -> list[Board]:
    """Every Ferrers board with at most ``max_cells`` cells, with and without a zero column."""
    out = []
    for c in range(max_cells + 1):
        for p in _partitions(c, c):
            heights = tuple(reversed(p))
            out.append(Board(heights))
            out.append(Board((0,) + heights))
    return out


# --------------------------------------------------------------------------


def oracle_suite(max_len: int = 8, max_s: int = 3, random_count: int = 200,
                 random_len: int = 12, seed: int = 0) -> SuiteResult:
    res = SuiteResult("oracle")
    for s in range(max_s + 1):
        for w in all_words(max_len):
            cmp = equal_normal_forms(combinatorial_normal_form(w, s), normal_order(w, s))
            res.check(cmp.equal, f"{w.letters or '(empty)'} s={s}: {cmp.report()}")
    for w, s in random_words(random_count, random_len, seed, max_s):
        cmp = equal_normal_forms(combinatorial_normal_form(w, s), normal_order(w, s))
        res.check(cmp.equal, f"{w.letters or '(empty)'} s={s}: {cmp.report()}")
    return res


def engines_suite(max_cells: int = 12, max_len: int = 8, max_s: int = 3) -> SuiteResult:
    res = SuiteResult("engines")
    for b in ferrers_boards(max_cells):
        st = static_numbers(b)
        sq = as_ore(sequential_numbers(b, 1))
        dp = as_ore(dp_numbers(b, 1))
        res.check(st == sq == dp, f"s=1 engines differ on {b.heights}")
    seen = set()
    for w in all_words(max_len):
        b = board_from_word(w)
        if b.heights in seen:
            continue
        seen.add(b.heights)
        for s in range(max_s + 1):
            res.check(sequential_numbers(b, s) == dp_numbers(b, s),
                      f"sequential != dp on {b.heights}, s={s}")
    return res


def recurrences_suite(seed: int = 0) -> SuiteResult:
    res = SuiteResult("recurrences")
    reports = [
        check_recurrences("ore-stirling", 7),
        check_recurrences("ore-lah", 6),
        check_recurrences("q-lah", 6),
    ]
    for s in range(4):
        reports.append(check_recurrences("poly-stirling", 6, s=s))
        reports.append(check_recurrences("poly-lah", 6, s=s))
        for r in range(1, 4):
            reports.append(check_recurrences("poly-scherk", 5, s=s, r=r))
    for r in range(1, 4):
        reports.append(check_recurrences("ore-scherk", 5, r=r))
    reports.append(check_recurrences("recurrence-main", 3, boards=50, seed=seed, max_k=4))
    for rep in reports:
        res.check(rep.ok, rep.summary())
        res.info.append(rep.summary())
    return res


def closed_forms_suite() -> SuiteResult:
    res = SuiteResult("closed-forms")
    for m in range(6):
        for n in range(6):
            counts = {kl: int(v.evaluate(1, [1, 1])) for kl, v in static_numbers(rectangle(m, n)).items()}
            for k in range(m + 2):
                for ell in range(m + 2):
                    c = rectangle_closed_forms(m, n, k, ell)
                    res.check(c.mixed == counts.get((k, ell), 0), f"|M_{k},{ell}(R_{m},{n})|")
                    res.check(c.rooks == counts.get((k, 0), 0), f"r_{k}(R_{m},{n})")
                    res.check(c.files == counts.get((0, ell), 0), f"f_{ell}(R_{m},{n})")
    for m in range(1, 7):
        for n in range(1, 7):
            oracle = normal_order(Word("X" * m + "Y" * n), 1).substitute(q=1, alphas={0: 1, 1: 1})
            cmp = equal_normal_forms(basic_word_ore_formula(m, n), oracle)
            res.check(cmp.equal, f"X^{m}Y^{n}: {cmp.report()}")
    for m in range(1, 6):
        for n in range(1, 6):
            for r in range(m + 1):
                for t in range(min(n, r) + 1):
                    res.check(factorial(t) * composition_sum(m, n, r, t) == comb(m, r) * q_alt(n, r, t),
                              f"composition sum (m,n,r,t)=({m},{n},{r},{t})")
    for c in named_board_specializations():
        res.check(c.ok, f"{c.name} n={c.n} r={c.r} k={c.k}: {c.enumerated}, {c.closed_form}, {c.rectangle}")
    entries = eulerian_report(6, 6)
    bad = [e for e in entries if not e.agrees]
    res.info.append(
        f"Eulerian closed form vs alternating sum: {len(entries) - len(bad)} agree, "
        f"{len(bad)} disagree (informational)"
    )
    for e in bad[:10]:
        res.info.append(
            f"  (m,n,r,t)=({e.m},{e.n},{e.r},{e.t}): alternating {e.alternating}, closed form {e.closed_form}"
        )
    return res


def binomial_suite(max_m: int = 7, max_s: int = 2, max_qm: int = 10) -> SuiteResult:
    res = SuiteResult("binomial")
    for m in range(max_m + 1):
        for s in range(max_s + 1):
            oracle = normal_order_expression(binomial_expansion(m), s)
            cmp = equal_normal_forms(binomial_normal_form(m, s), oracle)
            res.check(cmp.equal, f"(X+Y)^{m} s={s}: {cmp.report()}")
    for m in range(max_qm + 1):
        for k, (got, want) in quantum_plane_binomial(m).items():
            res.check(got == want, f"quantum plane m={m} k={k}: {got} != {want}")
    return res


def classical_suite(max_n: int = 7, max_lah: int = 6) -> SuiteResult:
    res = SuiteResult("classical")
    for n in range(max_n + 1):
        w = Word("YX" * n)
        nf = combinatorial_normal_form(w, 1)
        for k in range(n + 1):
            res.check(nf[(k, k)].evaluate(1, [1, 0]) == stirling2(n, k), f"S({n},{k})")
            res.check(nf[(n, k)].evaluate(1, [0, 1]) == stirling1(n, k), f"|s({n},{k})|")
        for j in range(n + 1):
            for k in range(j + 1):
                lhs = ore_stirling(n, j, k).substitute(q=1)
                res.check(lhs == ore_stirling_factorization(n, j, k), f"factorization ({n},{j},{k})")
    for n in range(max_lah + 1):
        nf = combinatorial_normal_form(Word("YYX" * n), 1)
        for k in range(n + 1):
            res.check(nf[(n + k, k)].evaluate(1, [1, 0]) == lah(n, k), f"L({n},{k})")
    count = sum(1 for _ in iter_static_placements(staircase(3)))
    res.check(count == 13, f"placements on J_3: {count} != 13")
    return res


SUITES = {
    "oracle": oracle_suite,
    "engines": engines_suite,
    "recurrences": recurrences_suite,
    "closed-forms": closed_forms_suite,
    "binomial": binomial_suite,
    "classical": classical_suite,
}


def run_suite(name: str, **kwargs) -> list[SuiteResult]:
    """Run one suite (or ``"all"``); keyword arguments a suite doesn't take are ignored."""
    import inspect

    names = list(SUITES) if name == "all" else [name]
    out = []
    for n in names:
        if n not in SUITES:
            raise ValueError(f"unknown suite {n!r}")
        fn = SUITES[n]
        accepted = inspect.signature(fn).parameters
        out.append(fn(**{k: v for k, v in kwargs.items() if k in accepted and v is not None}))
    return out
