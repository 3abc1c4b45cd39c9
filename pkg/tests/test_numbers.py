from __future__ import annotations

from math import comb

import pytest

from qweyl.boards import lah_board
from qweyl.coeffring import CoeffRing, q_binomial
from qweyl.numbers import (
    basic_word_ore_formula,
    binomial_M,
    binomial_O,
    binomial_normal_form,
    check_recurrences,
    combinatorial_normal_form,
    eulerian,
    eulerian_closed_form,
    eulerian_report,
    lah,
    named_board_specializations,
    ore_lah,
    ore_scherk,
    ore_stirling,
    ore_stirling_factorization,
    poly_lah,
    poly_scherk,
    poly_stirling,
    q_alt,
    rectangle_closed_forms,
    stirling1,
    stirling2,
)
from qweyl.placements import rook_numbers
from qweyl.rewriter import NormalForm, binomial_expansion, normal_order, normal_order_expression
from qweyl.words import all_words

R1 = CoeffRing(1)
q, mu, nu = R1.q, R1.alpha(0), R1.alpha(1)


def test_classical_seed_values():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert [stirling1(4, k) for k in range(5)] == [0, 6, 11, 6, 1]
    assert [lah(3, k) for k in range(4)] == [0, 6, 6, 1]
    assert [eulerian(3, d) for d in range(3)] == [1, 4, 1]
    assert eulerian(0, 0) == 1


def test_combinatorial_examples():
    assert combinatorial_normal_form("(YX)^3", 1) == normal_order("(YX)^3", 1)
    assert combinatorial_normal_form("(YX)^3", 1, engine="static") == normal_order("(YX)^3", 1)
    nf = combinatorial_normal_form("X^2YXYX^2Y", 0)
    # the two-rook placement of weight mu^2 q^3 sits in the YX^3 coefficient
    assert nf[(1, 3)].coeff(3, (2,)) >= 1
    assert nf[(1, 3)] == normal_order("X^2YXYX^2Y", 0)[(1, 3)]
    with pytest.raises(ValueError):
        combinatorial_normal_form("XY", 2, engine="static")


def test_engines_agree_on_words():
    for w in all_words(6):
        for engine in ("dp", "sequential"):
            assert combinatorial_normal_form(w, 2, engine=engine) == normal_order(w, 2)


def test_ore_stirling_values():
    assert ore_stirling(3, 2, 1) == (2 + q) * mu * nu
    for n in range(6):
        assert ore_stirling(n, n, n) == q ** (n * (n - 1) // 2)
    for n in range(1, 6):
        assert ore_stirling(n, 1, 1) == mu ** (n - 1)
    assert ore_stirling(2, 1, 0) == R1.zero
    assert ore_stirling(2, 2, 1) == nu and ore_stirling(2, 1, 1) == mu
    assert ore_stirling(3, 4, 1) == R1.zero and ore_stirling(3, 1, 2) == R1.zero


def test_factorization():
    assert ore_stirling_factorization(3, 2, 1) == 3 * mu * nu
    assert ore_stirling_factorization(4, 2, 2) == 7 * mu**2
    assert ore_stirling_factorization(5, 5, 5) == R1.one
    for n in range(8):
        for j in range(n + 1):
            for k in range(j + 1):
                assert ore_stirling(n, j, k).substitute(q=1) == ore_stirling_factorization(n, j, k)


def test_family_relations():
    for n in range(5):
        for j in range(2 * n + 2):
            for k in range(n + 1):
                assert poly_stirling(1, n, j, k) == ore_stirling(n, j, k)
                assert poly_lah(1, n, j, k) == ore_lah(n, j, k)
                assert ore_scherk(1, n, j, k) == ore_stirling(n, j, k)
                assert ore_scherk(2, n, j, k) == ore_lah(n, j, k)
                assert poly_scherk(3, 1, n, j, k) == ore_scherk(3, n, j, k)


def test_ore_lah_lah_numbers():
    assert ore_lah(3, 4, 1).evaluate(1, [1, 0]) == 6
    for n in range(7):
        for k in range(n + 1):
            assert ore_lah(n, n + k, k).evaluate(1, [1, 0]) == lah(n, k)


def test_ore_lah_files():
    # L_{0,nu;q}(2; 4, k) = f_{2-k}(L_2; q)
    files = rook_numbers(lah_board(2), 1)
    files += [R1.zero] * (3 - len(files))
    for k in range(3):
        assert ore_lah(2, 4, k).substitute(alphas={0: 0}) == files[2 - k]


def test_poly_stirling_jordan_entry():
    r = CoeffRing(2)
    assert poly_stirling(2, 3, 4, 2) == r.alpha(2) * (r.q + r.q**2 + r.q**3)


def test_scherk_bridge():
    from qweyl.boards import jump_board

    for r in range(1, 4):
        for n in range(7):
            rooks = rook_numbers(jump_board(n, r), 0)
            for k in range(n + 1):
                want = rooks[n - k].evaluate(1, [1]) if n - k < len(rooks) else 0
                assert ore_scherk(r, n, (r - 1) * n + k, k).evaluate(1, [1, 0]) == want


@pytest.mark.parametrize(
    "family, n, kw",
    [
        ("ore-stirling", 6, {}),
        ("ore-lah", 5, {}),
        ("poly-stirling", 5, {"s": 2}),
        ("poly-lah", 4, {"s": 3}),
        ("poly-scherk", 4, {"s": 2, "r": 3}),
        ("ore-scherk", 4, {"r": 3}),
        ("q-lah", 5, {}),
    ],
)
def test_recurrences(family, n, kw):
    rep = check_recurrences(family, n, **kw)
    assert rep.ok, rep.summary()


def test_recurrence_main_small():
    rep = check_recurrences("recurrence-main", 2, boards=8, seed=5, max_k=3)
    assert rep.ok, rep.summary()


def test_recurrence_report_catches_a_wrong_table(monkeypatch):
    import qweyl.numbers as nb

    real = nb.ore_scherk

    def broken(r, n, j, k):
        v = real(r, n, j, k)
        return v + 1 if (n, j, k) == (3, 2, 1) else v

    monkeypatch.setattr(nb, "ore_scherk", broken)
    rep = check_recurrences("ore-stirling", 3)
    assert not rep.ok and rep.violations[0].where == (3, 2, 1)


def test_unknown_family():
    with pytest.raises(ValueError):
        check_recurrences("bell", 3)


def test_rectangle_examples():
    c = rectangle_closed_forms(2, 2, 1, 1)
    assert c.mixed == 6
    for m in range(5):
        for n in range(5):
            for k in range(5):
                assert rectangle_closed_forms(m, n, k, 0).mixed == rectangle_closed_forms(m, n, k, 0).rooks
                assert rectangle_closed_forms(m, n, 0, k).mixed == comb(m, k) * n**k


def test_basic_word_examples():
    r = R1
    assert basic_word_ore_formula(1, 1) == NormalForm(1, {(1, 1): r.one, (1, 0): r.one, (0, 0): r.one})
    assert (q_alt(1, 0, 0), q_alt(1, 1, 0), q_alt(1, 0, 1), q_alt(1, 1, 1)) == (1, 1, 0, 1)
    for n in range(1, 8):
        assert q_alt(n, 0, n) == 0


def test_eulerian_report_flags_known_index():
    entries = {(e.m, e.n, e.r, e.t): e for e in eulerian_report(2, 2)}
    e = entries[(1, 1, 1, 0)]
    assert (e.alternating, e.closed_form, e.agrees) == (1, 2, False)
    assert eulerian_closed_form(1, 1, 0) == 2


def test_binomial_examples():
    nf = binomial_normal_form(2, 1)
    assert nf == NormalForm(1, {(2, 0): R1.one, (1, 1): 1 + q, (0, 2): R1.one, (1, 0): nu, (0, 0): mu})
    assert binomial_normal_form(0, 2) == NormalForm(2, {(0, 0): CoeffRing(2).one})
    for m in range(6):
        for s in range(3):
            assert binomial_normal_form(m, s) == normal_order_expression(binomial_expansion(m), s)


def test_quantum_plane():
    for m in range(8):
        nf = binomial_normal_form(m, 0).substitute(alphas={0: 0})
        for k in range(m + 1):
            assert nf[(m - k, k)] == q_binomial(m, k)


def test_ore_binomial_coefficients_match():
    for m in range(6):
        for k in range(m + 1):
            for ell in range(k, m + 1):
                for tau in range(ell - k + 1):
                    assert binomial_M(m, k, ell, -tau, 1) == binomial_O(m, k, ell, tau)


def test_named_boards():
    checks = named_board_specializations()
    assert checks and all(c.ok for c in checks)
    by = {(c.name, c.n, c.r, c.k): c for c in checks}
    assert by[("abel", 3, 1, 1)].enumerated == 9
    assert by[("laguerre", 2, 1, 1)].enumerated == 2
    assert by[("abel", 1, 1, 1)].enumerated == 1
