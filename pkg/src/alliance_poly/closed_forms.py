"""Closed-form alliance polynomials of cycles, wheels, ``E_1`` and ``K_n``.

The wheel ``W_n = E_1 + C_{n-1}`` splits its connected sets into those missing
the centre (they reproduce ``A(C_{n-1})``), the centre alone, and sets that
contain the centre and ``k - 1`` rim vertices.  Among the latter, the ones with
no isolated rim vertex are counted by ``b(n, k)`` and the rest by ``a(n, k)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .poly import AlliancePolynomial

ORACLE_MAX_N = 26


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is 0 whenever ``a < 0``, ``b < 0`` or ``b > a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _check_nk(n: int, k: int):
    if n < 4:
        raise ValueError(f"wheel order must be >= 4, got {n}")
    if not 2 <= k <= n - 1:
        raise ValueError(f"k must lie in 2..{n - 1}, got {k}")


def b_coeff(n: int, k: int) -> int:
    """Number of centre-containing ``k``-sets of ``W_n`` with no isolated rim vertex.

    Equivalently, labelled cyclic binary strings of length ``n-1`` with ``k-1``
    ones, none of them in a block of length one.
    """
    _check_nk(n, k)
    total = Fraction(0)
    for r in range(1, (k - 1) // 2 + 1):
        total += Fraction(binom(n - k - 1, r - 1) * binom(k - 1 - r, r), k - 1 - r)
    total *= n - 1
    if total.denominator != 1:
        raise ArithmeticError(f"b({n}, {k}) evaluated to non-integer {total}")
    return total.numerator


def a_coeff(n: int, k: int) -> int:
    value = binom(n - 1, k - 1) - b_coeff(n, k)
    if value < 0:
        raise ArithmeticError(f"a({n}, {k}) = {value} is negative")
    return value


def cyclic_string_oracle(n: int, k: int) -> int:
    """Brute-force count of ring strings of length ``n-1`` with ``k-1`` ones and no ``010``.

    Rotations are counted as distinct strings.
    """
    _check_nk(n, k)
    if n > ORACLE_MAX_N:
        raise ValueError(f"oracle scans 2**(n-1) strings; n={n} > {ORACLE_MAX_N}")
    length = n - 1
    full = (1 << length) - 1
    count = 0
    for s in range(1 << length):
        if s.bit_count() != k - 1:
            continue
        left = ((s << 1) | (s >> (length - 1))) & full
        right = ((s >> 1) | (s << (length - 1))) & full
        if s & ~left & ~right:
            continue
        count += 1
    return count


def case_counts(n: int, k: int, r: int) -> tuple[int, int, int, int]:
    """Counts of ``r``-block strings split by how the string starts and ends.

    I: starts with 0.  II: starts ``10``, so ends with 1.  III: starts ``11``
    and ends with 0.  IV: starts ``11`` and ends with 1.
    """
    return (
        binom(n - k, r) * binom(k - 2 - r, r - 1),
        binom(n - k - 1, r - 1) * binom(k - 2 - r, r - 1),
        binom(n - k - 1, r - 1) * binom(k - 2 - r, r - 1),
        binom(n - k - 1, r - 1) * binom(k - 2 - r, r),
    )


@dataclass(frozen=True)
class WheelCoefficientTable:
    n: int
    a: dict[int, int] = field(default_factory=dict)
    b: dict[int, int] = field(default_factory=dict)

    @property
    def xi(self) -> int:
        return self.n % 2


def wheel_table(n: int) -> WheelCoefficientTable:
    ks = range(2, n)
    return WheelCoefficientTable(n, {k: a_coeff(n, k) for k in ks},
                                 {k: b_coeff(n, k) for k in ks})


def cycle_polynomial(n: int) -> AlliancePolynomial:
    if n < 3:
        raise ValueError(f"cycle order must be >= 3, got {n}")
    return AlliancePolynomial({n - 2: n, n: n * (n - 2), n + 2: 1}, n)


def e1_polynomial() -> AlliancePolynomial:
    return AlliancePolynomial({1: 1}, 1)


def complete_polynomial(n: int) -> AlliancePolynomial:
    """``K_n``: each ``k``-set has index ``2k - 1 - n``."""
    if n < 1:
        raise ValueError(f"complete graph order must be >= 1, got {n}")
    return AlliancePolynomial({2 * k - 1: comb(n, k) for k in range(1, n + 1)}, n)


def wheel_polynomial(n: int) -> AlliancePolynomial:
    if n < 4:
        raise ValueError(f"wheel order must be >= 4, got {n}")
    table = wheel_table(n)
    coeffs: dict[int, int] = {}

    def add(e, c):
        coeffs[e] = coeffs.get(e, 0) + c

    for e, c in e1_polynomial().terms:
        add(e, c)
    for e, c in cycle_polynomial(n - 1).terms:
        add(e, c)
    for k in range(2, n // 2 + 1):
        add(2 * k - 1, binom(n - 1, k - 1))
    for k in range(n // 2 + 1, n):
        add(n - 1, table.a[k])
    if table.xi:
        add(n, table.b[(n + 1) // 2])
    for k in range(-(-n // 2) + 1, n):
        add(n + 1, table.b[k])
    add(n + 3, 1)
    return AlliancePolynomial(coeffs, n)
