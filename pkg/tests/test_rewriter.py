from __future__ import annotations

import random

import pytest

from qweyl.coeffring import CoeffRing, RingMismatchError
from qweyl.placements import weak_compositions
from qweyl.rewriter import (
    NormalForm,
    binomial_expansion,
    equal_normal_forms,
    normal_order,
    normal_order_expression,
)
from qweyl.suites import random_words
from qweyl.words import Word, all_words, block_form

R1 = CoeffRing(1)
q, mu, nu = R1.q, R1.alpha(0), R1.alpha(1)


def test_basic_relation():
    nf = normal_order("XY", 1)
    assert nf == NormalForm(1, {(1, 1): q, (1, 0): nu, (0, 0): mu})
    assert nf.substitute(q=1) == NormalForm(1, {(1, 1): R1.one, (1, 0): nu, (0, 0): mu})


def test_yx_cubed_ore():
    expected = NormalForm(1, {
        (3, 3): q**3,
        (3, 2): (q + 2 * q**2) * nu,
        (3, 1): (1 + q) * nu**2,
        (2, 2): (2 * q + q**2) * mu,
        (2, 1): (2 + q) * mu * nu,
        (1, 1): mu**2,
    })
    assert normal_order("(YX)^3", 1) == expected


def test_yx_cubed_jordan_part():
    r = CoeffRing(2)
    qq, a2 = r.q, r.alpha(2)
    nf = normal_order("(YX)^3", 2).substitute(alphas={0: 0, 1: 0})
    assert nf == NormalForm(2, {
        (3, 3): qq**3,
        (4, 2): (qq + qq**2 + qq**3) * a2,
        (5, 1): (1 + qq + qq**2) * a2**2,
    })


def test_expression_examples():
    nf = normal_order_expression({"YX": 1, "XY": 1}, 1)
    assert nf == NormalForm(1, {(1, 1): 1 + q, (1, 0): nu, (0, 0): mu})
    c = 7 * q * mu
    assert normal_order_expression({Word(""): c}, 1) == NormalForm(1, {(0, 0): c})
    sq = normal_order_expression(binomial_expansion(2), 1)
    assert sq == NormalForm(1, {(2, 0): R1.one, (1, 1): 1 + q, (0, 2): R1.one, (1, 0): nu, (0, 0): mu})


def test_empty_word_is_unit():
    for s in range(3):
        assert normal_order("", s) == NormalForm(s, {(0, 0): CoeffRing(s).one})


def test_compare_reports_first_difference():
    a = normal_order("(YX)^3", 1)
    assert equal_normal_forms(a, a).equal
    terms = dict(a.items())
    terms[(2, 1)] = terms[(2, 1)] + 1
    cmp = equal_normal_forms(a, NormalForm(1, terms))
    assert not cmp.equal and cmp.key == (2, 1)
    assert "Y^2 X^1" in cmp.report()
    with pytest.raises(RingMismatchError):
        equal_normal_forms(a, normal_order("XY", 2))


def test_confluence():
    for i, (w, s) in enumerate(random_words(120, 10, seed=7)):
        ref = normal_order(w, s)
        assert normal_order(w, s, strategy="random", seed=i) == ref
        assert normal_order(w, s, strategy="leftmost") == ref
        assert normal_order(w, s, strategy="random", seed=i, shuffle=True) == ref


def test_linearity():
    rng = random.Random(3)
    for _ in range(30):
        s = rng.randint(0, 3)
        ring = CoeffRing(s)
        words = [Word("".join(rng.choice("XY") for _ in range(rng.randint(0, 7)))) for _ in range(5)]
        coeffs = [ring.monomial(rng.randint(-5, 5) or 1, rng.randint(0, 2)) for _ in words]
        expr = {}
        for w, c in zip(words, coeffs):
            expr[w] = expr[w] + c if w in expr else c
        total = NormalForm(s)
        for w, c in expr.items():
            total = total + normal_order(w, s).scale(c)
        assert normal_order_expression(expr, s) == total


def test_specialization_to_q_weyl():
    for n in range(9):
        for w in all_words(n):
            full = normal_order(w, 3).project(0)
            assert full == normal_order(w, 0)


def test_exponent_bookkeeping():
    for n in range(8):
        for w in all_words(n):
            bf = block_form(w)
            for s in range(3):
                allowed = set()
                for k in range(bf.m_total + 1):
                    for kt in weak_compositions(k, s + 1):
                        t = sum((j - 1) * c for j, c in enumerate(kt))
                        allowed.add((bf.n_total + t, bf.m_total - k))
                assert set(normal_order(w, s).keys()) <= allowed


def test_json_round_trip():
    for w, s in random_words(40, 9, seed=11):
        nf = normal_order(w, s)
        data = nf.to_json(w.letters)
        assert data["word"] == w.letters and data["s"] == s
        assert NormalForm.from_json(data) == nf
        ys = [(t["y"], t["x"]) for t in data["terms"]]
        assert ys == sorted(ys, reverse=True)
