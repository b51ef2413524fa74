"""Exact counting: Stirling numbers, ball sizes, Denes counts, restricted Stirling numbers."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import ConsistencyError
from .perm import CycleType, enumerate_sphere, same_cycle

_TABLE: list = [[1]]  # _TABLE[n][k] = c(n, k), c(0, 0) = 1
DEFAULT_TABLE_SIZE = 64


def _grow(nmax: int) -> None:
    while len(_TABLE) <= nmax:
        m = len(_TABLE)
        prev = _TABLE[-1]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            row[k] = (prev[k - 1] if k - 1 < len(prev) else 0) + (m - 1) * (prev[k] if k < len(prev) else 0)
        _TABLE.append(row)


_grow(DEFAULT_TABLE_SIZE)


def stirling_first_signless(n: int, k: int) -> int:
    """c(n, k): permutations of n points with exactly k cycles (0 outside 0 <= k <= n)."""
    if n < 0 or k < 0 or k > n:
        return 0
    _grow(n)
    return _TABLE[n][k]


def sphere_size(n: int, i: int) -> int:
    """|S_i| in Sym_n(T), i.e. c(n, n - i)."""
    return stirling_first_signless(n, n - i)


def ball_size(n: int, r: int) -> int:
    if r < 0:
        raise ValueError("radius must be non-negative")
    return sum(sphere_size(n, i) for i in range(min(r, n - 1) + 1))


class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        terms = [f"{c}" if i == 0 else f"{c}t" if i == 1 else f"{c}t^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"


def poincare_polynomial(n: int) -> IntPolynomial:
    """(1 + t)(1 + 2t)...(1 + (n-1)t); the t^i coefficient is |S_i| of Sym_n(T)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    poly = IntPolynomial([1])
    for j in range(1, n):
        poly = poly * IntPolynomial([1, j])
    return poly


def denes_count(ct: CycleType, i: int) -> int:
    """Ordered factorizations of a permutation of type ``ct`` into i transpositions.

    Only minimal factorizations are covered by the product formula.  Lengths
    shorter than the minimum or of the wrong parity admit none and give 0.
    """
    minimal = ct.rank
    if i < minimal or (i - minimal) % 2:
        return 0
    if i > minimal:
        raise ValueError(f"i={i} exceeds the minimal length {minimal}; the product formula does not apply")
    value = Fraction(factorial(i))
    for j, mult in ct.h.items():
        value *= (Fraction(j) ** (j - 2) / factorial(j - 1)) ** mult
    if value.denominator != 1:
        raise ConsistencyError(f"non-integral factorization count {value} for {ct}")
    return value.numerator


# Restricted Stirling numbers.  ``kind`` is "3" for {1,2,3} in one cycle, "22" for
# {1,2} in one cycle and {3,4} in one cycle.
KINDS = ("3", "22")


def _check_kind(kind: str) -> str:
    k = {"3": "3", "3^1": "3", "31": "3", "22": "22", "2^2": "22", "2x2": "22"}.get(str(kind))
    if k is None:
        raise ValueError(f"unknown restricted kind {kind!r}; use '3' or '22'")
    return k


def restricted_brute(kind: str, n: int, i: int) -> int:
    kind = _check_kind(kind)
    need = 3 if kind == "3" else 4
    if n < need or not 0 <= i <= n - 1:
        return 0
    count = 0
    for p in enumerate_sphere(n, i):
        if kind == "3":
            count += same_cycle(p, (1, 2, 3))
        else:
            count += same_cycle(p, (1, 2)) and same_cycle(p, (3, 4))
    return count


def restricted_by_cycles(kind: str, n: int, i: int) -> int:
    """Exact count by choosing the cycle(s) through the marked points, then the rest."""
    kind = _check_kind(kind)
    k = n - i
    if i < 0 or k < 1:
        return 0
    c = stirling_first_signless
    if kind == "3":
        if n < 3:
            return 0
        return sum(comb(n - 3, L - 3) * factorial(L - 1) * c(n - L, k - 1) for L in range(3, n + 1))
    if n < 4:
        return 0
    one = sum(comb(n - 4, L - 4) * factorial(L - 1) * c(n - L, k - 1) for L in range(4, n + 1))
    two = 0
    for a in range(2, n - 1):
        for b in range(2, n - a + 1):
            ways = comb(n - 4, a - 2) * factorial(a - 1) * comb(n - 4 - (a - 2), b - 2) * factorial(b - 1)
            two += ways * c(n - a - b, k - 2)
    return one + two


def restricted_closed(kind: str, n: int, i: int) -> int:
    """Closed forms for i <= 4 (valid once n is large enough for the counted classes)."""
    kind = _check_kind(kind)
    if i in (0, 1):
        return 0
    if kind == "3":
        if i == 2:
            return 2
        if i == 3:
            return (n + 2) * (n - 3)
        if i == 4:
            return 24 * comb(n - 3, 2) + 22 * comb(n - 3, 3) + 6 * comb(n - 3, 4)
    else:
        if i == 2:
            return 1
        if i == 3:
            return comb(n, 2)
        if i == 4:
            # the 3^2 class contributes 4(n-4)(n-5), hence 13(n-4)(n-5) below
            return 24 * (n - 4) + 13 * (n - 4) * (n - 5) + 14 * comb(n - 4, 3) + 3 * comb(n - 4, 4)
    raise ValueError(f"no closed form for i={i}")


def restricted_stirling(kind: str, n: int, i: int, method: str = "cycles") -> int:
    """c_kind(n, n - i); method is 'cycles' (default), 'brute' or 'closed'."""
    if method == "brute":
        return restricted_brute(kind, n, i)
    if method == "closed":
        return restricted_closed(kind, n, i)
    if method == "cycles":
        return restricted_by_cycles(kind, n, i)
    raise ValueError(f"unknown method {method!r}")


# Exact interpolation helpers for the degree laws.

def forward_differences(values: Sequence, order: int) -> list:
    vals = [Fraction(v) for v in values]
    for _ in range(order):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return vals


def polynomial_degree(values: Sequence) -> int:
    """Degree of the polynomial sampled at consecutive integers (-1 for zero).

    Needs at least degree + 2 samples for the answer to be certified.
    """
    vals = [Fraction(v) for v in values]
    deg = -1
    order = 0
    while vals:
        if any(vals):
            deg = order
        vals = [b - a for a, b in zip(vals, vals[1:])]
        order += 1
    return deg


def leading_coefficient(values: Sequence, degree: int) -> Fraction:
    """For samples at consecutive integers, Delta^d f = d! * a_d."""
    return forward_differences(values, degree)[0] / factorial(degree)
