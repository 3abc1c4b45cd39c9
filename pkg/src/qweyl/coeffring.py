"""Exact sparse polynomials in q and the relation coefficients alpha_0..alpha_s.

Every coefficient that shows up while normal ordering under

    XY - qYX = alpha_0 + alpha_1 Y + ... + alpha_s Y^s

lives in Z[q, alpha_0, ..., alpha_s].  ``mu`` and ``nu`` of the Ore relation are
just ``alpha_0`` and ``alpha_1`` of the ring with ``s = 1``.

A ring is identified by ``s`` alone, so ``CoeffRing(2) == CoeffRing(2)``.  A
polynomial maps exponent vectors ``(q_exp, a0_exp, ..., as_exp)`` to nonzero
Python ints.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

__all__ = [
    "CoeffRing",
    "Poly",
    "RingMismatchError",
    "q_int",
    "q_binomial",
    "q_factorial",
]

Exponent = tuple  # (q_exp, a0_exp, ..., as_exp)


class RingMismatchError(ValueError):
    """Raised when polynomials from rings with different ``s`` are combined."""


@dataclass(frozen=True)
class CoeffRing:
    """The ring Z[q, alpha_0, ..., alpha_s]."""

    s: int

    def __post_init__(self):
        if self.s < 0:
            raise ValueError(f"s must be nonnegative, got {self.s}")

    @property
    def nvars(self) -> int:
        return self.s + 2

    @property
    def zero(self) -> Poly:
        return Poly(self, {})

    @property
    def one(self) -> Poly:
        return self.const(1)

    @property
    def q(self) -> Poly:
        return self.monomial(q_exp=1)

    def const(self, c: int) -> Poly:
        return Poly(self, {(0,) * self.nvars: c})

    def alpha(self, j: int) -> Poly:
        if not 0 <= j <= self.s:
            raise IndexError(f"alpha{j} not in ring with s={self.s}")
        return self.monomial(alpha_exps={j: 1})

    def monomial(self, c: int = 1, q_exp: int = 0, alpha_exps=None) -> Poly:
        """``c * q**q_exp * prod(alpha_j**e_j)``.

        ``alpha_exps`` is either a full sequence of length ``s + 1`` or a
        ``{j: e}`` mapping.
        """
        exps = [0] * (self.s + 1)
        if alpha_exps is not None:
            if isinstance(alpha_exps, Mapping):
                for j, e in alpha_exps.items():
                    exps[j] += e
            else:
                if len(alpha_exps) != self.s + 1:
                    raise RingMismatchError(
                        f"expected {self.s + 1} alpha exponents, got {len(alpha_exps)}"
                    )
                exps = list(alpha_exps)
        if q_exp < 0 or any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        return Poly(self, {(q_exp, *exps): c})

    def alpha_power(self, ktype: Sequence[int]) -> Poly:
        """The multi-index power alpha^k for a placement type ``k``."""
        return self.monomial(alpha_exps=tuple(ktype))

    def q_pow(self, n: int) -> Poly:
        return self.monomial(q_exp=n)

    def q_int(self, n: int) -> Poly:
        return q_int(n, self.s)

    def q_binomial(self, m: int, k: int) -> Poly:
        return q_binomial(m, k, self.s)

    def q_factorial(self, n: int) -> Poly:
        return q_factorial(n, self.s)

    def parse(self, text: str) -> Poly:
        return Poly.parse(text, self.s)


def _order_key(exp):
    # graded lexicographic on (q, alpha0, ..., alphaS)
    return (sum(exp), exp)


class Poly:
    """Immutable sparse polynomial over the integers.

    Supports ``+ - *`` and integer powers with other ``Poly`` values from the same
    ring and with plain ints.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: CoeffRing, terms: Mapping[Exponent, int]):
        self.ring = ring
        n = ring.nvars
        clean = {}
        for exp, c in terms.items():
            if len(exp) != n:
                raise RingMismatchError(
                    f"exponent {exp} has wrong length for ring with s={ring.s}"
                )
            if c:
                clean[tuple(exp)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection ------------------------------------------------------
    @property
    def s(self) -> int:
        return self.ring.s

    def terms(self) -> list[tuple[Exponent, int]]:
        """Monomials in canonical (graded lexicographic, ascending) order."""
        return sorted(self._terms.items(), key=lambda t: _order_key(t[0]))

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, q_exp: int = 0, alpha_exps: Sequence[int] | None = None) -> int:
        if alpha_exps is None:
            alpha_exps = (0,) * (self.s + 1)
        return self._terms.get((q_exp, *alpha_exps), 0)

    def q_degree(self) -> int:
        return max((e[0] for e in self._terms), default=-1)

    def alpha_support(self) -> set[tuple[int, ...]]:
        return {e[1:] for e in self._terms}

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot combine polynomials over s={self.s} and s={other.s}"
                )
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_q(self, n: int) -> Poly:
        """Multiply by ``q**n`` (``n >= 0``) without a full product."""
        if n < 0:
            raise ValueError("negative q powers do not occur in this ring")
        return Poly._raw(
            self.ring, {(e[0] + n, *e[1:]): c for e, c in self._terms.items()}
        )

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.s, frozenset(self._terms.items())))
        return self._hash

    # -- specialisation --------------------------------------------------
    def evaluate(self, q, alphas: Sequence) -> Fraction:
        """Exact rational value at ``q`` and ``alphas = (alpha_0, ..., alpha_s)``."""
        if len(alphas) != self.s + 1:
            raise RingMismatchError(
                f"need {self.s + 1} alpha values, got {len(alphas)}"
            )
        qv = Fraction(q)
        av = [Fraction(a) for a in alphas]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c) * qv ** e[0]
            for a, k in zip(av, e[1:]):
                if k:
                    term *= a**k
            total += term
        return total

    def substitute(self, q=None, alphas: Mapping[int, int] | None = None) -> Poly:
        """Substitute integer values for ``q`` and/or some ``alpha_j``.

        Variables that are substituted get exponent zero in the result, which
        stays in the same ring.
        """
        alphas = dict(alphas or {})
        out: dict = {}
        for e, c in self._terms.items():
            e = list(e)
            if q is not None:
                c *= q ** e[0]
                e[0] = 0
            for j, v in alphas.items():
                c *= v ** e[j + 1]
                e[j + 1] = 0
            if c:
                key = tuple(e)
                out[key] = out.get(key, 0) + c
        return Poly(self.ring, out)

    def project(self, s: int) -> Poly:
        """Set ``alpha_j = 0`` for ``j > s`` and move into ``CoeffRing(s)``."""
        ring = CoeffRing(s)
        out = {}
        for e, c in self._terms.items():
            extra = e[s + 2 :]
            if any(extra):
                continue
            head = e[: s + 2]
            head = head + (0,) * (s + 2 - len(head))
            out[head] = out.get(head, 0) + c
        return Poly(ring, out)

    def lift(self, s: int) -> Poly:
        """Embed into a ring with more alphas."""
        if s < self.s:
            raise RingMismatchError("lift() can only add variables; use project()")
        pad = (0,) * (s - self.s)
        return Poly._raw(CoeffRing(s), {e + pad: c for e, c in self._terms.items()})

    # -- text ------------------------------------------------------------
    def __str__(self):
        """Canonical text: ``c * q^a * alpha0^e0`` monomials joined by `` + ``."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            factors = [str(c)]
            if e[0]:
                factors.append(f"q^{e[0]}")
            for j, k in enumerate(e[1:]):
                if k:
                    factors.append(f"alpha{j}^{k}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly(s={self.s}, {str(self)!r})"

    def pretty(self, names: Sequence[str] | None = None) -> str:
        """Compact human-readable form such as ``2*a0*a1 + q*a0*a1``."""
        if not self._terms:
            return "0"
        if names is None:
            names = [f"a{j}" for j in range(self.s + 1)]
        out = []
        for e, c in self.terms():
            syms = []
            if e[0] == 1:
                syms.append("q")
            elif e[0]:
                syms.append(f"q^{e[0]}")
            for name, k in zip(names, e[1:]):
                if k == 1:
                    syms.append(name)
                elif k:
                    syms.append(f"{name}^{k}")
            body = "*".join(syms)
            if not body:
                mono = str(c)
            elif c == 1:
                mono = body
            elif c == -1:
                mono = "-" + body
            else:
                mono = f"{c}*{body}"
            out.append(mono)
        return " + ".join(out).replace("+ -", "- ")

    _factor_re = re.compile(r"^(q|alpha(\d+))\^(\d+)$")

    @classmethod
    def parse(cls, text: str, s: int) -> Poly:
        """Inverse of ``str()``; also accepts exponent-free ``q``/``alphaJ`` factors."""
        ring = CoeffRing(s)
        text = text.strip()
        if text == "0":
            return ring.zero
        out: dict = {}
        for mono in text.split(" + "):
            factors = [f.strip() for f in mono.split("*")]
            try:
                c = int(factors[0])
            except ValueError:
                raise ValueError(f"monomial {mono!r} must start with an integer") from None
            exp = [0] * ring.nvars
            for f in factors[1:]:
                if f == "q":
                    f = "q^1"
                elif re.fullmatch(r"alpha\d+", f):
                    f += "^1"
                m = cls._factor_re.match(f)
                if not m:
                    raise ValueError(f"cannot parse factor {f!r}")
                k = int(m.group(3))
                if m.group(1) == "q":
                    exp[0] += k
                else:
                    j = int(m.group(2))
                    if j > s:
                        raise RingMismatchError(f"alpha{j} not in ring with s={s}")
                    exp[j + 1] += k
            key = tuple(exp)
            out[key] = out.get(key, 0) + c
        return Poly(ring, out)

    def to_json(self) -> list[dict]:
        return [{"q": e[0], "alpha": list(e[1:]), "c": str(c)} for e, c in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping], s: int) -> Poly:
        ring = CoeffRing(s)
        out: dict = {}
        for m in data:
            alpha = tuple(m["alpha"])
            if len(alpha) != s + 1:
                raise RingMismatchError(f"monomial {m} does not fit s={s}")
            key = (int(m["q"]), *alpha)
            out[key] = out.get(key, 0) + int(m["c"])
        return Poly(ring, out)


@lru_cache(maxsize=None)
def q_int(n: int, s: int = 0) -> Poly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError(f"[n]_q is only defined here for n >= 0, got {n}")
    ring = CoeffRing(s)
    zeros = (0,) * (s + 1)
    return Poly._raw(ring, {(i, *zeros): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int, s: int = 0) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = CoeffRing(s).one
    for i in range(2, n + 1):
        out = out * q_int(i, s)
    return out


@lru_cache(maxsize=None)
def q_binomial(m: int, k: int, s: int = 0) -> Poly:
    """Gaussian binomial via binom(m,k) = binom(m-1,k-1) + q^k binom(m-1,k)."""
    if m < 0 or k < 0 or k > m:
        raise ValueError(f"q_binomial needs 0 <= k <= m, got m={m}, k={k}")
    if k == 0 or k == m:
        return CoeffRing(s).one
    return q_binomial(m - 1, k - 1, s) + q_binomial(m - 1, k, s).shift_q(k)
