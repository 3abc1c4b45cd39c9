from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from qweyl.coeffring import CoeffRing, Poly, RingMismatchError, q_binomial, q_int

R1 = CoeffRing(1)


def polys(s=1, max_deg=6):
    exps = st.tuples(*[st.integers(0, max_deg)] * (s + 2))
    return st.dictionaries(exps, st.integers(-10**6, 10**6), max_size=6).map(
        lambda d: Poly(CoeffRing(s), d)
    )


def test_add_cancels(ore):
    ring, q, mu, nu = ore
    assert (q + 1) + (-1) == q
    assert ring.zero + q == q


def test_add_worked_coefficient(ore):
    ring, q, mu, nu = ore
    assert mu * nu + q * mu * nu == (1 + q) * mu * nu


def test_mul(ore):
    ring, q, mu, nu = ore
    assert q**2 * q**3 == q**5
    assert (1 + q) * (1 + q) == 1 + 2 * q + q**2
    assert mu * nu * q**8 * (mu * nu**2) == ring.monomial(q_exp=8, alpha_exps=(2, 3))


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        CoeffRing(1).q + CoeffRing(2).q
    with pytest.raises(RingMismatchError):
        CoeffRing(0).q * CoeffRing(1).q


def test_q_int():
    assert q_int(0) == CoeffRing(0).zero
    q = CoeffRing(0).q
    assert q_int(2) == 1 + q
    assert q_int(3) == 1 + q + q**2
    with pytest.raises(ValueError):
        q_int(-1)


def test_q_binomial_values():
    q = CoeffRing(0).q
    assert q_binomial(4, 0) == 1
    assert q_binomial(4, 2) == 1 + q + 2 * q**2 + q**3 + q**4
    assert q_binomial(3, 1) == 1 + q + q**2
    with pytest.raises(ValueError):
        q_binomial(2, 3)


def test_evaluate(ore):
    ring, q, mu, nu = ore
    assert ((2 + q) * mu * nu).evaluate(1, [1, 1]) == 3
    assert (q**3).evaluate(1, [0, 0]) == 1
    assert ((q + 2 * q**2) * nu).evaluate(2, [0, 3]) == 30
    assert (q * mu).evaluate(Fraction(1, 2), [3, 0]) == Fraction(3, 2)
    with pytest.raises(RingMismatchError):
        q.evaluate(1, [1])


def test_q_int_at_one():
    for n in range(51):
        assert q_int(n).evaluate(1, [0]) == n


def test_q_binomial_at_one():
    for m in range(21):
        for k in range(m + 1):
            assert q_binomial(m, k).evaluate(1, [0]) == comb(m, k)


def test_canonical_text(ore):
    ring, q, mu, nu = ore
    p = 3 * q**2 * mu + nu - 1
    assert str(p) == "-1 + 1 * alpha1^1 + 3 * q^2 * alpha0^1"
    assert str(ring.zero) == "0"


def test_project_and_lift():
    r3 = CoeffRing(3)
    p = r3.q * r3.alpha(0) + r3.alpha(2)
    assert p.project(1) == CoeffRing(1).q * CoeffRing(1).alpha(0)
    assert CoeffRing(1).alpha(1).lift(3) == r3.alpha(1)


def test_substitute_keeps_ring(ore):
    ring, q, mu, nu = ore
    p = (2 + q) * mu * nu
    assert p.substitute(q=1) == 3 * mu * nu
    assert p.substitute(alphas={1: 0}) == ring.zero


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + (b + c) == (a + b) + c
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@settings(max_examples=100, deadline=None)
@given(polys(s=2))
def test_text_round_trip(p):
    back = Poly.parse(str(p), 2)
    assert back == p and back.terms() == p.terms()


@settings(max_examples=100, deadline=None)
@given(polys(s=3))
def test_json_round_trip(p):
    assert Poly.from_json(p.to_json(), 3) == p
