"""Basis-tagged exact polynomials on [0, 1] and Bernstein-basis identities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

from .exact import binomial

if TYPE_CHECKING:
    from .chk import MassParams

MONOMIAL = "monomial"
BERNSTEIN = "bernstein"
CHK = "chk"


@dataclass(frozen=True)
class BasisTag:
    kind: str
    degree: int
    params: Optional["MassParams"] = None

    def __post_init__(self):
        if self.kind not in (MONOMIAL, BERNSTEIN, CHK):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if self.kind == CHK and self.params is None:
            raise ValueError("a ChK basis needs mass parameters")


@dataclass(frozen=True)
class Polynomial:
    """Coefficients in a fixed basis; length is always ``degree + 1``.

    Trailing zeros are kept: a Bernstein(5) polynomial stays degree 5 even if
    it is really quadratic. Use :meth:`equals` to compare functions across
    bases.
    """

    tag: BasisTag
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) != self.tag.degree + 1:
            raise ValueError(
                f"{len(coeffs)} coefficients for a degree-{self.tag.degree} basis"
            )
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def monomial(cls, coeffs: Iterable) -> "Polynomial":
        coeffs = tuple(coeffs) or (0,)
        return cls(BasisTag(MONOMIAL, len(coeffs) - 1), coeffs)

    @classmethod
    def bernstein(cls, coeffs: Iterable) -> "Polynomial":
        coeffs = tuple(coeffs)
        return cls(BasisTag(BERNSTEIN, len(coeffs) - 1), coeffs)

    @classmethod
    def chk(cls, coeffs: Iterable, params: "MassParams") -> "Polynomial":
        coeffs = tuple(coeffs)
        return cls(BasisTag(CHK, len(coeffs) - 1, params), coeffs)

    @property
    def degree(self) -> int:
        return self.tag.degree

    @property
    def kind(self) -> str:
        return self.tag.kind

    def __call__(self, x):
        return evaluate(self, x)

    def equals(self, other: "Polynomial") -> bool:
        return _trim(to_monomial(self).coefficients) == _trim(to_monomial(other).coefficients)


def _trim(coeffs: Sequence[Fraction]) -> tuple:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def true_degree(p: Polynomial) -> int:
    """Degree of the monomial form after dropping trailing zeros (0 for p = 0)."""
    return len(_trim(to_monomial(p).coefficients)) - 1


def bernstein_basis(k: int, n: int) -> Polynomial:
    """The single basis element B_k^n."""
    if not 0 <= k <= n:
        raise ValueError(f"B_{k}^{n} is not a basis element")
    return Polynomial.bernstein([int(i == k) for i in range(n + 1)])


# -- monomial arithmetic ----------------------------------------------------

def poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def poly_scale(a: Sequence[Fraction], s) -> list[Fraction]:
    return [c * s for c in a]


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def horner(coeffs: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def de_casteljau(coeffs: Sequence[Fraction], x) -> Fraction:
    x = Fraction(x)
    b = list(coeffs)
    for level in range(len(b) - 1, 0, -1):
        for i in range(level):
            b[i] = (1 - x) * b[i] + x * b[i + 1]
    return b[0]


# -- public operations ------------------------------------------------------

def evaluate(p: Polynomial, x) -> Fraction:
    x = Fraction(x)
    if p.kind == MONOMIAL:
        return horner(p.coefficients, x)
    if p.kind == BERNSTEIN:
        return de_casteljau(p.coefficients, x)
    return horner(to_monomial(p).coefficients, x)


def to_monomial(p: Polynomial) -> Polynomial:
    if p.kind == MONOMIAL:
        return p
    n = p.degree
    out = [Fraction(0)] * (n + 1)
    if p.kind == BERNSTEIN:
        # C(n,k) x^k (1-x)^(n-k) = C(n,k) sum_j C(n-k,j) (-1)^j x^(k+j)
        for k, c in enumerate(p.coefficients):
            if c == 0:
                continue
            lead = c * binomial(n, k)
            for j in range(n - k + 1):
                out[k + j] += lead * binomial(n - k, j) * (-1) ** j
        return Polynomial.monomial(out)

    from .chk import chk_polynomial

    for i, d in enumerate(p.coefficients):
        if d == 0:
            continue
        basis = chk_polynomial(i, p.tag.params).coefficients
        for j, c in enumerate(basis):
            out[j] += d * c
    return Polynomial.monomial(out)


def monomial_to_bernstein(p: Polynomial, n: int) -> Polynomial:
    """Bernstein(n) coefficients of p; accepts any basis, converted via monomials."""
    a = _trim(to_monomial(p).coefficients)
    if len(a) - 1 > n:
        raise ValueError(f"polynomial of degree {len(a) - 1} does not fit Bernstein({n})")
    # x^j = sum_{k>=j} C(k,j)/C(n,j) B_k^n
    out = []
    for k in range(n + 1):
        out.append(sum((a[j] * binomial(k, j) / binomial(n, j) for j in range(min(k, len(a) - 1) + 1)),
                       Fraction(0)))
    return Polynomial.bernstein(out)


def degree_elevate(p: Polynomial, n: int) -> Polynomial:
    """Rewrite a Bernstein(r) polynomial exactly in Bernstein(n), n >= r."""
    if p.kind != BERNSTEIN:
        raise ValueError("degree_elevate expects a Bernstein polynomial")
    r = p.degree
    if n < r:
        raise ValueError(f"cannot elevate degree {r} to lower degree {n}")
    out = [Fraction(0)] * (n + 1)
    for k, c in enumerate(p.coefficients):
        if c == 0:
            continue
        for i in range(k, n - r + k + 1):
            out[i] += c * binomial(r, k) * binomial(n - r, i - k) / binomial(n, i)
    return Polynomial.bernstein(out)


def bernstein_product(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.kind != BERNSTEIN or q.kind != BERNSTEIN:
        raise ValueError("bernstein_product expects Bernstein polynomials")
    n, m = p.degree, q.degree
    out = [Fraction(0)] * (n + m + 1)
    for i, a in enumerate(p.coefficients):
        if a == 0:
            continue
        for j, b in enumerate(q.coefficients):
            out[i + j] += a * b * binomial(n, i) * binomial(m, j) / binomial(n + m, i + j)
    return Polynomial.bernstein(out)


def bernstein_integral(k: int, n: int) -> Fraction:
    if not 0 <= k <= n:
        raise ValueError(f"B_{k}^{n} is not a basis element")
    return Fraction(1, n + 1)
