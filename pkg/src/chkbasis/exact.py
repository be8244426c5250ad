"""Exact scalars and combinatorial primitives.

Rationals are plain :class:`fractions.Fraction` values. Quantities that are
rational combinations of 1 and pi (Beta values at half-integer arguments,
Chebyshev-weighted integrals) are carried by :class:`PiScalar`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

# Set by the test suite; every solve is then checked by substitution.
VERIFY_SOLUTIONS = False


def factorial(m: int) -> Fraction:
    if m < 0:
        raise ValueError(f"factorial of negative integer {m}")
    return Fraction(math.factorial(m))


def double_factorial(m: int) -> Fraction:
    """m!! via the closed forms 2^(m/2) (m/2)! and m! / (2^((m-1)/2) ((m-1)/2)!).

    0!! = (-1)!! = 1.
    """
    if m < -1:
        raise ValueError(f"double factorial undefined for {m}")
    if m == -1:
        return Fraction(1)
    if m % 2 == 0:
        h = m // 2
        return Fraction(2**h * math.factorial(h))
    h = (m - 1) // 2
    return Fraction(math.factorial(m), 2**h * math.factorial(h))


def reciprocal_factorial(m: int) -> Fraction:
    """1/m!, with 1/m! = 0 at negative integers (poles of Gamma)."""
    if m < 0:
        return Fraction(0)
    return Fraction(1, math.factorial(m))


def half_factorial(n: int) -> Fraction:
    """Rational c with (n - 1/2)! = c * sqrt(pi)."""
    if n < 0:
        raise ValueError(f"half_factorial needs n >= 0, got {n}")
    return factorial(n) * double_factorial(2 * n - 1) / double_factorial(2 * n)


def central_ratio(k: int) -> Fraction:
    """(2k-1)!!/(2k)!! = (2k)!/(2^(2k) (k!)^2) = C(2k,k)/4^k."""
    return double_factorial(2 * k - 1) / double_factorial(2 * k)


def binomial(a: int, b: int) -> Fraction:
    if b < 0 or b > a:
        return Fraction(0)
    return Fraction(math.comb(a, b))


def half_binomial(r: int, k: int) -> Fraction:
    """C(r - 1/2, k) as an exact rational."""
    if k < 0:
        return Fraction(0)
    top = Fraction(2 * r - 1, 2)
    out = Fraction(1)
    for j in range(k):
        out *= top - j
    return out / math.factorial(k)


@dataclass(frozen=True)
class PiScalar:
    """Exact value ``rational_part + pi_part * pi``."""

    rational_part: Fraction = Fraction(0)
    pi_part: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "rational_part", Fraction(self.rational_part))
        object.__setattr__(self, "pi_part", Fraction(self.pi_part))

    @classmethod
    def pi(cls, coefficient: RationalLike = 1) -> "PiScalar":
        return cls(Fraction(0), Fraction(coefficient))

    @property
    def is_zero(self) -> bool:
        return self.rational_part == 0 and self.pi_part == 0

    def __add__(self, other):
        if isinstance(other, PiScalar):
            return PiScalar(self.rational_part + other.rational_part, self.pi_part + other.pi_part)
        if isinstance(other, (int, Fraction)):
            return PiScalar(self.rational_part + other, self.pi_part)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return PiScalar(-self.rational_part, -self.pi_part)

    def __sub__(self, other):
        if isinstance(other, (PiScalar, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiScalar(self.rational_part * other, self.pi_part * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiScalar(self.rational_part / other, self.pi_part / other)
        if isinstance(other, PiScalar):
            return self.ratio(other)
        return NotImplemented

    def ratio(self, other: "PiScalar") -> Fraction:
        """Rational q with self == q * other; ValueError if none exists."""
        if other.is_zero:
            raise ZeroDivisionError("ratio with a zero PiScalar")
        if other.pi_part != 0:
            q = self.pi_part / other.pi_part
        else:
            q = self.rational_part / other.rational_part
        if self != other * q:
            raise ValueError(f"{self} is not a rational multiple of {other}")
        return q

    def divide_by_pi(self) -> Fraction:
        """Return x/pi; only defined for pure multiples of pi."""
        if self.rational_part != 0:
            raise ValueError(f"{self} has a nonzero rational part; pi does not cancel")
        return self.pi_part

    def __float__(self):
        return float(self.rational_part) + float(self.pi_part) * math.pi

    def __str__(self):
        if self.rational_part == 0:
            return f"{self.pi_part}*pi"
        if self.pi_part == 0:
            return str(self.rational_part)
        return f"{self.rational_part} + {self.pi_part}*pi"


PI = PiScalar.pi(1)


def beta_half(a: int, b: int) -> PiScalar:
    """B(a + 1/2, b + 1/2) = pi (2a-1)!! (2b-1)!! / (2^(a+b) (a+b)!)."""
    if a < 0 or b < 0:
        raise ValueError("beta_half needs nonnegative arguments")
    coef = double_factorial(2 * a - 1) * double_factorial(2 * b - 1)
    return PiScalar.pi(coef / (2 ** (a + b) * math.factorial(a + b)))


def wallis(m: int) -> PiScalar:
    """Integral of x^m (x - x^2)^(-1/2) over [0, 1]."""
    if m < 0:
        raise ValueError("wallis needs m >= 0")
    return PiScalar.pi(central_ratio(m))


# -- dense exact matrices -------------------------------------------------

Matrix = list  # list[list[Fraction]]


class SingularMatrixError(ArithmeticError):
    """Raised when elimination finds no nonzero pivot in a column."""

    def __init__(self, pivot: int, message: str | None = None):
        self.pivot = pivot
        super().__init__(message or f"matrix is singular: no nonzero pivot in column {pivot}")


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    if a and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {len(b)}x?")
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def solve_linear_exact(a, rhs, verify: bool | None = None):
    """Solve ``a @ x = rhs`` exactly.

    ``rhs`` is either a vector or a matrix of columns (list of rows); the
    result has the same shape. Rows are scaled to integers and reduced with
    Bareiss fraction-free elimination, so intermediate entries stay integral
    and the only divisions before back substitution are exact.
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("coefficient matrix must be square")
    vector_rhs = len(rhs) > 0 and not isinstance(rhs[0], (list, tuple))
    cols = [[Fraction(v)] for v in rhs] if vector_rhs else [[Fraction(v) for v in row] for row in rhs]
    if len(cols) != n:
        raise ValueError(f"rhs has {len(cols)} rows, expected {n}")
    m = len(cols[0]) if n else 0

    work = []
    for row, extra in zip(a, cols):
        full = [Fraction(v) for v in row] + extra
        scale = math.lcm(*(v.denominator for v in full))
        work.append([int(v * scale) for v in full])

    prev = 1
    for k in range(n):
        p = next((i for i in range(k, n) if work[i][k] != 0), None)
        if p is None:
            raise SingularMatrixError(k)
        if p != k:
            work[k], work[p] = work[p], work[k]
        pivot = work[k][k]
        for i in range(k + 1, n):
            lead = work[i][k]
            row_i, row_k = work[i], work[k]
            for j in range(k + 1, n + m):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot

    x = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n - 1, -1, -1):
        for c in range(m):
            s = Fraction(work[i][n + c])
            for j in range(i + 1, n):
                s -= work[i][j] * x[j][c]
            x[i][c] = s / work[i][i]

    if VERIFY_SOLUTIONS if verify is None else verify:
        lhs = matmul(a, x)
        expected = [[Fraction(v) for v in row] for row in cols]
        if lhs != expected:
            raise AssertionError("exact back-substitution check failed")

    if vector_rhs:
        return [row[0] for row in x]
    return x


def inverse(a) -> list[list[Fraction]]:
    return solve_linear_exact(a, identity(len(a)))
