"""Sparse exact polynomials in the variables x, q, y.

Terms map exponent triples (ex, eq, ey) to exact coefficients (int or
Fraction).  Zero coefficients are never stored, so equality is structural.
Printing uses increasing x-degree, e.g. ``1 + 11*x + 4*x^2``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

VARS = ("x", "q", "y")
Exponents = tuple[int, int, int]
Scalar = Union[int, Fraction]


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """Immutable sparse polynomial over the rationals in x, q, y."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponents, Scalar] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[e] = _norm(c)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c: Scalar) -> "Poly":
        return Poly({(0, 0, 0): c})

    @staticmethod
    def var(name: str) -> "Poly":
        i = VARS.index(name)
        e = [0, 0, 0]
        e[i] = 1
        return Poly({tuple(e): 1})

    @staticmethod
    def from_x_coeffs(coeffs: Iterable[Scalar]) -> "Poly":
        return Poly({(i, 0, 0): c for i, c in enumerate(coeffs)})

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, Rational):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Exponents, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, scalar):
        if isinstance(scalar, Rational):
            inv = 1 / Fraction(scalar)
            return Poly({e: c * inv for e, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus and substitution -----------------------------------------

    def derivative(self, name: str = "x") -> "Poly":
        i = VARS.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                terms[tuple(ne)] = c * e[i]
        return Poly(terms)

    def subs(self, **values) -> "Poly":
        """Substitute polynomials or scalars for named variables."""
        for name in values:
            if name not in VARS:
                raise ValueError(f"unknown variable {name!r}")
        result = Poly()
        for e, c in self.terms.items():
            term = Poly.const(c)
            for i, name in enumerate(VARS):
                if e[i] == 0:
                    continue
                if name in values:
                    v = values[name]
                    v = v if isinstance(v, Poly) else Poly.const(v)
                    term = term * v ** e[i]
                else:
                    term = term * Poly.var(name) ** e[i]
            result = result + term
        return result

    def eval(self, **values) -> Scalar:
        """Evaluate with every occurring variable bound to a scalar."""
        total: Scalar = 0
        for e, c in self.terms.items():
            val = c
            for i, name in enumerate(VARS):
                if e[i]:
                    val = val * Fraction(values[name]) ** e[i]
            total += val
        return _norm(Fraction(total))

    # -- views -------------------------------------------------------------

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            for i, name in enumerate(VARS):
                if e[i]:
                    used.add(name)
        return used

    def degree(self, name: str = "x") -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = VARS.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def x_coeffs(self) -> list[Scalar]:
        """Coefficient list in x (requires a univariate-in-x polynomial)."""
        if self.variables() - {"x"}:
            raise ValueError(f"not univariate in x: {self}")
        n = max(self.degree("x"), 0)
        out: list[Scalar] = [0] * (n + 1)
        for e, c in self.terms.items():
            out[e[0]] = c
        return out

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.terms.values())

    def __repr__(self):
        return f"Poly({self.text()})"

    def text(self) -> str:
        """Canonical text, graded-lex by (x, q, y) exponents."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            factors = []
            for i, name in enumerate(VARS):
                if e[i] == 1:
                    factors.append(name)
                elif e[i] > 1:
                    factors.append(f"{name}^{e[i]}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


X = Poly.var("x")
Q = Poly.var("q")
Y = Poly.var("y")
ONE = Poly.const(1)
ZERO = Poly()


def mobius_compose(p: Poly, m: int, alpha: Scalar) -> Poly:
    """Return (1+x)^m * p(alpha*x / (1+x)) as a polynomial.

    Expands sum_k p_k (alpha*x)^k (1+x)^(m-k); requires deg p <= m.
    """
    coeffs = p.x_coeffs()
    if len(coeffs) - 1 > m:
        raise ValueError(f"deg p = {len(coeffs) - 1} exceeds m = {m}")
    one_plus_x = ONE + X
    result = ZERO
    for k, c in enumerate(coeffs):
        if c:
            result = result + Poly.const(c) * (Poly.const(alpha) * X) ** k * one_plus_x ** (m - k)
    return result
