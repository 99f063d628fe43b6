"""Recurrence engines for every polynomial family, plus closed forms.

Families (rows indexed by n, each row an exact polynomial):

- ``S``     descent polynomials of simsun permutations,
            S(n,k) = (k+1)S(n-1,k) + (n-2k+1)S(n-1,k-1), S(0,0) = 1
- ``What``  left-peak polynomials over all permutations,
            W^(n+1) = (1+nx)W^(n) + 2x(1-x)W^(n)', W^_0 = W^_1 = 1
- ``W``     interior-peak polynomials over all permutations,
            W(n+1) = (nx-x+2)W(n) + 2x(1-x)W(n)', W_1 = 1
- ``R``     alternating-run polynomials,
            R(n,k) = kR(n-1,k) + 2R(n-1,k-1) + (n-k)R(n-1,k-2), R(1,0) = 1
- ``T``     up-down-run polynomials of simsun permutations,
            T(n,k) = ceil(k/2)T(n-1,k) + T(n-1,k-1) + (n-k+1)T(n-1,k-2)
- ``P+``/``P-``/``P``  interior-peak polynomials of simsun permutations
            split by first step, coupled recurrences seeded at n = 2
- ``A``     orbit-count triangle, a_i(n+1) = i*a_i(n) + (n-2i+2)a_{i-1}(n)
- ``Sxq``   S(n+1)(x,q) = (q+nx)S(n)(x,q) + x(1-2x) d/dx S(n)(x,q)
- ``Sxyq``  trivariate rows via the binomial sum over Sxq rows
- ``D``     leaf polynomials of increasing 1-2 trees via D(n+1) = x*S(n)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .poly import ONE, Poly, Q, X, Y, ZERO

FAMILIES = ("S", "What", "W", "R", "T", "P+", "P-", "P", "A", "Sxq", "Sxyq", "D")


@dataclass
class Triangle:
    """Rows of exact coefficients for a univariate family."""

    family: str
    rows: list[list[int]] = field(default_factory=list)


def _grow(rows: list[Poly], n_max: int, step) -> list[Poly]:
    while len(rows) <= n_max:
        rows.append(step(rows[-1], len(rows) - 1))
    return rows[: n_max + 1]


def _family_S(n_max: int) -> list[Poly]:
    def step(prev: Poly, n: int) -> Poly:
        return (ONE + n * X) * prev + X * (ONE - 2 * X) * prev.derivative("x")

    return _grow([ONE], n_max, step)


def _family_What(n_max: int) -> list[Poly]:
    def step(prev: Poly, n: int) -> Poly:
        return (ONE + n * X) * prev + 2 * X * (ONE - X) * prev.derivative("x")

    return _grow([ONE, ONE], n_max, step) if n_max >= 1 else [ONE]


def _family_W(n_max: int) -> list[Poly]:
    def step(prev: Poly, n: int) -> Poly:
        return (n * X - X + 2 * ONE) * prev + 2 * X * (ONE - X) * prev.derivative("x")

    return _grow([ONE, ONE], n_max, step) if n_max >= 1 else [ONE]


def _family_R(n_max: int) -> list[Poly]:
    rows = [[1], [1]]  # R_0 := 1, R(1,0) = 1
    while len(rows) <= n_max:
        n = len(rows)
        prev = rows[-1]

        def at(k: int) -> int:
            return prev[k] if 0 <= k < len(prev) else 0

        rows.append([at(k) * k + 2 * at(k - 1) + (n - k) * at(k - 2)
                     for k in range(n)])
    return [Poly.from_x_coeffs(r) for r in rows[: n_max + 1]]


def _family_T(n_max: int) -> list[Poly]:
    rows = [[1]]
    while len(rows) <= n_max:
        n = len(rows)
        prev = rows[-1]

        def at(k: int) -> int:
            return prev[k] if 0 <= k < len(prev) else 0

        rows.append([-(-k // 2) * at(k) + at(k - 1) + (n - k + 1) * at(k - 2)
                     for k in range(n + 1)])
    return [Poly.from_x_coeffs(r) for r in rows[: n_max + 1]]


def _family_A(n_max: int) -> list[Poly]:
    # rows indexed from n = 1; row 0 is the zero polynomial
    rows = [[], [1]]
    while len(rows) <= n_max:
        n = len(rows) - 1
        prev = rows[-1]

        def at(i: int) -> int:
            return prev[i] if 0 <= i < len(prev) else 0

        row = [i * at(i) + (n - 2 * i + 2) * at(i - 1)
               for i in range((n + 1) // 2 + 1)]
        if n == 1:
            row[0] = 0  # a_0(n) = 0 for n > 1; the recurrence seeds a_1(2) = 1
        rows.append(row)
    return [Poly.from_x_coeffs(r) for r in rows[: n_max + 1]]


def _family_P_pair(n_max: int) -> tuple[list[Poly], list[Poly]]:
    # Seeded at n = 2 (the coupled recurrences hold for n >= 2); the n = 1
    # values are stored literals.
    plus = [ZERO, ONE, ONE]
    minus = [ZERO, ONE, ONE]
    for n in range(2, n_max):
        p, m = plus[-1], minus[-1]
        plus.append(((n - 2) * X + ONE) * p + X * (ONE - 2 * X) * p.derivative("x") + m)
        minus.append(((n - 1) * X + ONE) * m + X * (ONE - 2 * X) * m.derivative("x") + X * p)
    return plus[: n_max + 1], minus[: n_max + 1]


def _family_Sxq(n_max: int) -> list[Poly]:
    def step(prev: Poly, n: int) -> Poly:
        return (Q + n * X) * prev + X * (ONE - 2 * X) * prev.derivative("x")

    return _grow([ONE], n_max, step)


def _family_Sxyq(n_max: int) -> list[Poly]:
    sxq = _family_Sxq(n_max)
    rows = []
    for n in range(n_max + 1):
        row = ZERO
        for i in range(n + 1):
            row = row + comb(n, i) * (Y * Q - Q) ** i * sxq[n - i]
        rows.append(row)
    return rows


def family_polys(family: str, n_max: int) -> list[Poly]:
    """Rows 0..n_max of a named family as exact polynomials."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if family == "S":
        return _family_S(n_max)
    if family == "What":
        return _family_What(n_max)
    if family == "W":
        return _family_W(n_max)
    if family == "R":
        return _family_R(n_max)
    if family == "T":
        return _family_T(n_max)
    if family == "A":
        return _family_A(n_max)
    if family == "P+":
        return _family_P_pair(n_max)[0]
    if family == "P-":
        return _family_P_pair(n_max)[1]
    if family == "P":
        plus, minus = _family_P_pair(n_max)
        rows = [p + m for p, m in zip(plus, minus)]
        if n_max >= 0:
            rows[0] = ONE
        if n_max >= 1:
            rows[1] = ONE  # P_1 = 1 literal; the split rows both equal 1
        return rows
    if family == "Sxq":
        return _family_Sxq(n_max)
    if family == "Sxyq":
        return _family_Sxyq(n_max)
    if family == "D":
        return [ONE] + [X * s for s in _family_S(max(n_max - 1, 0))][: n_max]
    raise ValueError(f"unknown family {family!r}")


def triangle(family: str, n_max: int) -> Triangle:
    """Integer coefficient rows for a univariate family."""
    rows = []
    for p in family_polys(family, n_max):
        coeffs = p.x_coeffs()
        if not all(isinstance(c, int) for c in coeffs):
            raise ValueError(f"family {family} has non-integer coefficients")
        rows.append(coeffs)
    return Triangle(family, rows)


# -- Stirling route to the S polynomials ------------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int, i: int) -> int:
    """Stirling numbers of the second kind."""
    if n == 0:
        return 1 if i == 0 else 0
    if i <= 0 or i > n:
        return 0
    return i * stirling2(n - 1, i) + stirling2(n - 1, i - 1)


def p_coeff(n: int, k: int) -> int:
    """The integer p(n, n-2k+1) from the Stirling-number expansion."""

    def binom(a: int, b: int) -> int:
        return comb(a, b) if 0 <= b <= a else 0

    total = 0
    for i in range(1, n + 1):
        total += (
            _factorial(i)
            * stirling2(n, i)
            * (-2) ** (n - i)
            * (binom(i, n - 2 * k) - binom(i, n - 2 * k + 1))
        )
    return (-1) ** k * total


@lru_cache(maxsize=None)
def _factorial(i: int) -> int:
    return 1 if i <= 1 else i * _factorial(i - 1)


def s_from_stirling(n: int) -> Poly:
    """Reconstruct S_n(x) from the Stirling-number formula.

    Expands sum_k p(n+1, n-2k+2) (2x-1)^k, asserts exact divisibility by
    2^(n+1) * x, and returns the quotient.  The top summand is allowed to
    vanish rather than being truncated silently.
    """
    if n < 1:
        raise ValueError("defined for n >= 1")
    acc = ZERO
    for k in range(n // 2 + 2):
        acc = acc + p_coeff(n + 1, k) * (2 * X - ONE) ** k
    coeffs = acc.x_coeffs()
    if coeffs[0] != 0:
        raise ArithmeticError(f"expansion for n={n} is not divisible by x")
    out = []
    for c in coeffs[1:]:
        q = Fraction(c, 2 ** (n + 1))
        if q.denominator != 1:
            raise ArithmeticError(f"expansion for n={n} not divisible by 2^{n + 1}")
        out.append(int(q))
    return Poly.from_x_coeffs(out)


# -- closed forms ------------------------------------------------------------

CLOSED_FORM_IDS = ("P-from-S", "P+-from-S", "P--from-S", "T-from-S", "Sxq-at-minus1")


def closed_forms(form_id: str, n: int) -> Poly:
    """Evaluate a registered closed form at index n.

    ``P-from-S``      P_{n+1} = (n+1)S_n - x S_n'
    ``P+-from-S``     P+_{n+1} = n S_n - 2x S_n'
    ``P--from-S``     P-_{n+1} = S_n + x S_n'
    ``T-from-S``      T_{n+1} = x(1+nx)S_n(x^2) + (1/2)x^2(1-2x)S_n'(x^2)
    ``Sxq-at-minus1`` (1-x)(1-2x)^(m-1) for n = 2m, -(1-2x)^m for n = 2m+1
    """
    if form_id == "Sxq-at-minus1":
        if n < 1:
            raise ValueError("defined for n >= 1")
        m, odd = divmod(n, 2)
        if odd:
            return -((ONE - 2 * X) ** m)
        return (ONE - X) * (ONE - 2 * X) ** (m - 1)
    if n < 0:
        raise ValueError("n must be nonnegative")
    s = _family_S(n)[n]
    ds = s.derivative("x")
    if form_id == "P-from-S":
        return (n + 1) * s - X * ds
    if form_id == "P+-from-S":
        return n * s - 2 * X * ds
    if form_id == "P--from-S":
        return s + X * ds
    if form_id == "T-from-S":
        # the primed factor is d/dx of S_n(x^2), chain rule included
        s2 = s.subs(x=X * X)
        return X * (ONE + n * X) * s2 + X * X * (ONE - 2 * X) * s2.derivative("x") / 2
    raise ValueError(f"unknown closed form {form_id!r}")
