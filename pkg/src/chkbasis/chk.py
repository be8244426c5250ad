"""Generalized Chebyshev-Koornwinder polynomials of the first kind.

Everything lives on [0, 1]: the Chebyshev polynomials are the shifted
T*_n(x) = T_n(2x - 1), the continuous weight is (x - x^2)^(-1/2) and the
point masses sit at x = 0 (``mass_left``) and x = 1 (``mass_right``).

Functions suffixed ``_verbatim`` evaluate the published closed forms
exactly as printed, duplicated scalar prefactors included. The
``_canonical`` forms are the ones that agree with the defining combination

    T_n^(M,N) = c_n T*_n + sum_{k=0}^{n} c_k lambda_k T*_k,
    c_k = (2k-1)!!/(2k)!!,

and are what the rest of the package builds on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import (
    PI,
    PiScalar,
    beta_half,
    binomial,
    central_ratio,
    factorial,
    half_binomial,
    reciprocal_factorial,
    wallis,
)
from .poly import (
    Polynomial,
    degree_elevate,
    evaluate,
    poly_add,
    poly_mul,
    poly_scale,
    to_monomial,
)


@dataclass(frozen=True)
class MassParams:
    """Point masses at the left (x = 0) and right (x = 1) endpoints."""

    mass_left: Fraction = Fraction(0)
    mass_right: Fraction = Fraction(0)

    def __post_init__(self):
        left, right = Fraction(self.mass_left), Fraction(self.mass_right)
        if left < 0 or right < 0:
            raise ValueError(f"point masses must be nonnegative, got ({left}, {right})")
        object.__setattr__(self, "mass_left", left)
        object.__setattr__(self, "mass_right", right)

    @property
    def is_classical(self) -> bool:
        return self.mass_left == 0 and self.mass_right == 0


CLASSICAL = MassParams()


def lambda_k(k: int, params: MassParams) -> Fraction:
    """The published lambda_k; 1/m! is taken as 0 for negative m."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    m, n = params.mass_left, params.mass_right
    rf1 = reciprocal_factorial(k - 1)
    rf2 = reciprocal_factorial(k - 2)
    return (4 * m * rf1 / (2 * k - 3)
            + 4 * n * rf1 / (2 * k - 3)
            + 4 * m * n * rf1 * rf2)


def _printed_prefactor(k: int) -> Fraction:
    # (2k)! / (2^(2k) (k!)^2)
    return factorial(2 * k) / (2 ** (2 * k) * factorial(k) ** 2)


@lru_cache(maxsize=None)
def _shifted_chebyshev_coeffs(n: int) -> tuple:
    prev, cur = (Fraction(1),), (Fraction(-1), Fraction(2))
    if n == 0:
        return prev
    for _ in range(n - 1):
        nxt = poly_add(poly_mul((-2, 4), cur), poly_scale(prev, -1))
        prev, cur = cur, tuple(nxt)
    return cur


def chebyshev_shifted(n: int) -> Polynomial:
    """T*_n(x) = T_n(2x - 1) in monomial form.

    Built from T*_{n+1} = 2(2x - 1) T*_n - T*_{n-1}.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Polynomial.monomial(_shifted_chebyshev_coeffs(n))


@lru_cache(maxsize=None)
def chk_polynomial(n: int, params: MassParams = CLASSICAL) -> Polynomial:
    """Monomial form of T_n^(M,N); the canonical definition."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = poly_scale(_shifted_chebyshev_coeffs(n), central_ratio(n))
    for k in range(n + 1):
        lam = lambda_k(k, params)
        if lam:
            out = poly_add(out, poly_scale(_shifted_chebyshev_coeffs(k), central_ratio(k) * lam))
    return Polynomial.monomial(out)


# -- eta coefficients -------------------------------------------------------

def eta(i: int, r: int) -> Fraction:
    """Closed form C(2r,r) C(2r,2i) / (2^(2r) C(r,i))."""
    if not 0 <= i <= r:
        raise ValueError(f"eta index out of range: i={i}, r={r}")
    return binomial(2 * r, r) * binomial(2 * r, 2 * i) / (2 ** (2 * r) * binomial(r, i))


@dataclass(frozen=True)
class EtaTable:
    max_degree: int
    entries: tuple  # entries[r][i] = eta_{i,r}

    def __getitem__(self, key):
        i, r = key
        if not 0 <= i <= r <= self.max_degree:
            raise IndexError(f"eta_{{{i},{r}}} not in table of degree {self.max_degree}")
        return self.entries[r][i]


def eta_table(max_degree: int) -> EtaTable:
    """Triangular table filled with eta_{i,r} = (2r-2i+1)/(2i-1) eta_{i-1,r}."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    rows = []
    for r in range(max_degree + 1):
        row = [binomial(2 * r, r) / 2 ** (2 * r)]
        for i in range(1, r + 1):
            row.append(Fraction(2 * r - 2 * i + 1, 2 * i - 1) * row[-1])
        rows.append(tuple(row))
    return EtaTable(max_degree, tuple(rows))


# -- Bernstein representations ----------------------------------------------

def _signed_eta_row(k: int) -> list[Fraction]:
    # Bernstein(k) coefficients (-1)^(k-j) eta_{j,k}, i.e. c_k T*_k
    return [(-1) ** (k - j) * eta(j, k) for j in range(k + 1)]


def _combine(r: int, terms) -> list[Fraction]:
    out = [Fraction(0)] * (r + 1)
    for k, scale in terms:
        if scale == 0:
            continue
        row = degree_elevate(Polynomial.bernstein(_signed_eta_row(k)), r).coefficients
        for i, c in enumerate(row):
            out[i] += scale * c
    return out


def chk_bernstein_verbatim(r: int, params: MassParams = CLASSICAL, n: int | None = None) -> Polynomial:
    """Bernstein(r) form of the published representation, prefactors as printed.

    Optionally degree-elevated to Bernstein(n).
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    terms = [(r, _printed_prefactor(r))]
    terms += [(k, _printed_prefactor(k) * lambda_k(k, params)) for k in range(r + 1)]
    p = Polynomial.bernstein(_combine(r, terms))
    return p if n is None else degree_elevate(p, n)


def chk_bernstein_canonical(r: int, params: MassParams = CLASSICAL, n: int | None = None) -> Polynomial:
    """Bernstein(r) form of T_r^(M,N) without the duplicated prefactors."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    terms = [(r, Fraction(1))] + [(k, lambda_k(k, params)) for k in range(r + 1)]
    p = Polynomial.bernstein(_combine(r, terms))
    return p if n is None else degree_elevate(p, n)


# -- weighted inner products ------------------------------------------------

def _beta_sum(r: int, n: int, d: int) -> PiScalar:
    # sum_j (-1)^(d-j) C(d-1/2, j) C(d-1/2, d-j) B(r+j+1/2, n+d-r-j+1/2)
    total = PiScalar()
    for j in range(d + 1):
        w = (-1) ** (d - j) * half_binomial(d, j) * half_binomial(d, d - j)
        total = total + beta_half(r + j, n + d - r - j) * w
    return total


def inner_product_lemma(r: int, n: int, i: int, params: MassParams = CLASSICAL) -> PiScalar:
    """Published Beta-sum value of the weighted integral of B_r^n T_i, as printed."""
    if not 0 <= r <= n or i < 0:
        raise ValueError(f"invalid indices r={r}, n={n}, i={i}")
    c = binomial(n, r)
    total = _beta_sum(r, n, i) * (c * _printed_prefactor(i))
    for d in range(i + 1):
        lam = lambda_k(d, params)
        if lam:
            total = total + _beta_sum(r, n, d) * (lam * c * _printed_prefactor(d))
    return total


def inner_product_lemma_canonical(r: int, n: int, i: int, params: MassParams = CLASSICAL) -> PiScalar:
    """Beta-sum value of the weighted integral of B_r^n T_i for the canonical T_i."""
    if not 0 <= r <= n or i < 0:
        raise ValueError(f"invalid indices r={r}, n={n}, i={i}")
    c = binomial(n, r)
    total = _beta_sum(r, n, i) * c
    for d in range(i + 1):
        lam = lambda_k(d, params)
        if lam:
            total = total + _beta_sum(r, n, d) * (lam * c)
    return total


def inner_product_oracle(p: Polynomial, q: Polynomial, params: MassParams = CLASSICAL,
                         include_masses: bool = True) -> PiScalar:
    """Integral of p q (x - x^2)^(-1/2) over [0, 1] by termwise Wallis integrals.

    With ``include_masses`` the point masses contribute pi * (M p(0) q(0) + N p(1) q(1)),
    so that result / pi is the inner product for the normalized full measure.
    """
    prod = poly_mul(to_monomial(p).coefficients, to_monomial(q).coefficients)
    total = PiScalar()
    for m, a in enumerate(prod):
        if a:
            total = total + wallis(m) * a
    if include_masses:
        masses = (params.mass_left * evaluate(p, 0) * evaluate(q, 0)
                  + params.mass_right * evaluate(p, 1) * evaluate(q, 1))
        total = total + PI * masses
    return total
