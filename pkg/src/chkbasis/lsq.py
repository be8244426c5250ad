"""Least-squares approximation of exact polynomials on [0, 1].

Two routes: monomial normal equations (Hilbert matrix, unweighted L2) and
projection onto the ChK-1 family under the Chebyshev weight plus endpoint
masses, where the normal system is diagonal when the family is orthogonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .chk import CLASSICAL, MassParams, chk_polynomial, inner_product_oracle
from .exact import PiScalar, solve_linear_exact
from .poly import MONOMIAL, CHK, Polynomial, poly_add, poly_scale, to_monomial


class ZeroNormError(ArithmeticError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"basis element {index} has zero self inner product")


@dataclass(frozen=True)
class LsqResult:
    basis: str
    coefficients: tuple
    residual_norm_squared: Union[Fraction, PiScalar]
    params: MassParams | None = None

    @property
    def residual_is_nonnegative(self) -> bool:
        r = self.residual_norm_squared
        if isinstance(r, PiScalar):
            return r.rational_part == 0 and r.pi_part >= 0
        return r >= 0

    def polynomial(self) -> Polynomial:
        """Monomial form of the fitted polynomial."""
        if self.basis == MONOMIAL:
            return Polynomial.monomial(self.coefficients)
        return to_monomial(Polynomial.chk(self.coefficients, self.params))


def hilbert_matrix(n: int) -> list[list[Fraction]]:
    """n x n matrix with H[i][j] = 1/(i + j - 1), 1-based."""
    if n < 1:
        raise ValueError("Hilbert matrix needs n >= 1")
    return [[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)]


def _l2_norm_squared(coeffs) -> Fraction:
    return sum((a * b / (j + k + 1) for j, a in enumerate(coeffs) for k, b in enumerate(coeffs)),
               Fraction(0))


def lsq_monomial(f: Polynomial, n: int) -> LsqResult:
    """Best degree-n approximation of f in the unweighted L2 norm on [0, 1]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    fc = to_monomial(f).coefficients
    rhs = [sum((c / (i + j + 1) for j, c in enumerate(fc)), Fraction(0)) for i in range(n + 1)]
    a = solve_linear_exact(hilbert_matrix(n + 1), rhs)
    err = poly_add(fc, poly_scale(a, -1))
    return LsqResult(MONOMIAL, tuple(a), _l2_norm_squared(err))


def lsq_orthogonal(f: Polynomial, n: int, params: MassParams = CLASSICAL,
                   include_masses: bool = True) -> LsqResult:
    """Coefficients a_i = <f, T_i> / <T_i, T_i> against T_0..T_n.

    This is the least-squares solution only when the family is orthogonal
    for the chosen measure (always for zero masses).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    f = to_monomial(f)
    a = []
    for i in range(n + 1):
        t = chk_polynomial(i, params)
        norm = inner_product_oracle(t, t, params, include_masses)
        if norm.is_zero:
            raise ZeroNormError(i)
        a.append(inner_product_oracle(f, t, params, include_masses) / norm)
    fit = [Fraction(0)]
    for i, ai in enumerate(a):
        fit = poly_add(fit, poly_scale(chk_polynomial(i, params).coefficients, ai))
    err = Polynomial.monomial(poly_add(f.coefficients, poly_scale(fit, -1)))
    residual = inner_product_oracle(err, err, params, include_masses)
    return LsqResult(CHK, tuple(a), residual, params)
