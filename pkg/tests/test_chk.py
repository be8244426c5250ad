from fractions import Fraction as F
import math

import pytest

from chkbasis.chk import (
    CLASSICAL,
    MassParams,
    chebyshev_shifted,
    chk_bernstein_canonical,
    chk_bernstein_verbatim,
    chk_polynomial,
    eta,
    eta_table,
    inner_product_lemma,
    inner_product_lemma_canonical,
    inner_product_oracle,
    lambda_k,
)
from chkbasis.exact import PI, PiScalar, central_ratio, double_factorial
from chkbasis.poly import (
    Polynomial,
    bernstein_basis,
    degree_elevate,
    monomial_to_bernstein,
    poly_add,
    poly_mul,
    poly_scale,
    to_monomial,
)

from conftest import GRID


def chebyshev_explicit(n):
    """T_n(u) = (n/2) sum_k (-1)^k (n-k-1)!/(k!(n-2k)!) (2u)^(n-2k), then u = 2x - 1."""
    if n == 0:
        u_coeffs = [F(1)]
    else:
        u_coeffs = [F(0)] * (n + 1)
        for k in range(n // 2 + 1):
            c = F(n, 2) * (-1) ** k * math.factorial(n - k - 1) / (math.factorial(k) * math.factorial(n - 2 * k))
            u_coeffs[n - 2 * k] += c * 2 ** (n - 2 * k)
    out, power = [F(0)], [F(1)]
    for c in u_coeffs:
        out = poly_add(out, poly_scale(power, c))
        power = poly_mul(power, [F(-1), F(2)])
    return out


def test_mass_params_validation():
    with pytest.raises(ValueError):
        MassParams(F(-1), 0)
    assert MassParams().is_classical


def test_lambda_examples():
    assert all(lambda_k(k, CLASSICAL) == 0 for k in range(10))
    assert all(lambda_k(0, p) == 0 for p in GRID)
    # k = 2: (2k-3) = 1, (k-1)! = (k-2)! = 1, so 4M + 4N + 4MN
    assert lambda_k(2, MassParams(1, 2)) == 4 + 8 + 8
    assert lambda_k(3, MassParams(1, 0)) == F(4, 3 * 2)


@pytest.mark.parametrize("params", GRID)
def test_lambda_low_order(params):
    assert lambda_k(0, params) == 0
    assert lambda_k(1, params) == -4 * (params.mass_left + params.mass_right)


def test_chebyshev_shifted_examples():
    assert chebyshev_shifted(0).coefficients == (1,)
    assert chebyshev_shifted(1).coefficients == (-1, 2)
    assert chebyshev_shifted(2).coefficients == (1, -8, 8)


@pytest.mark.parametrize("n", range(13))
def test_chebyshev_shifted_matches_explicit_sum(n):
    t = chebyshev_shifted(n)
    assert list(t.coefficients) == chebyshev_explicit(n)
    assert t(1) == 1
    assert t(0) == (-1) ** n


def test_chk_polynomial_examples():
    for p in GRID:
        assert chk_polynomial(0, p).coefficients == (1,)
    assert chk_polynomial(1).coefficients == (F(-1, 2), 1)
    assert chk_polynomial(2).coefficients == (F(3, 8), -3, 3)


def test_eta_examples():
    assert eta(0, 2) == F(3, 8)
    assert eta(1, 2) == 3 * F(3, 8) == F(9, 8)
    assert eta(2, 2) == F(6 * 1, 16 * 1)
    with pytest.raises(ValueError):
        eta(3, 2)


def test_eta_table_matches_closed_form():
    table = eta_table(10)
    for r in range(11):
        assert table[0, r] == F(math.comb(2 * r, r), 4**r)
        for i in range(r + 1):
            assert table[i, r] == eta(i, r)
        for i in range(1, r + 1):
            assert table[i, r] == F(2 * r - 2 * i + 1, 2 * i - 1) * table[i - 1, r]
    with pytest.raises(IndexError):
        table[0, 11]


def test_chk_bernstein_verbatim_examples():
    assert chk_bernstein_verbatim(0).coefficients == (1,)
    assert chk_bernstein_verbatim(1).coefficients == (F(-1, 4), F(1, 4))
    assert chk_bernstein_verbatim(2).coefficients == (F(9, 64), F(-27, 64), F(9, 64))
    assert chk_bernstein_verbatim(2, n=3) == degree_elevate(chk_bernstein_verbatim(2), 3)


def test_chk_bernstein_canonical_examples():
    assert chk_bernstein_canonical(1).coefficients == (F(-1, 2), F(1, 2))
    assert chk_bernstein_canonical(2).coefficients == (F(3, 8), F(-9, 8), F(3, 8))
    for r in range(9):
        classical = Polynomial.monomial(poly_scale(chebyshev_explicit(r), central_ratio(r)))
        assert chk_bernstein_canonical(r) == monomial_to_bernstein(classical, r)


@pytest.mark.parametrize("params", GRID)
def test_canonical_bernstein_matches_definition(params):
    for r in range(9):
        assert to_monomial(chk_bernstein_canonical(r, params)) == chk_polynomial(r, params)


@pytest.mark.parametrize("r", range(7))
def test_verbatim_carries_duplicated_prefactor(r):
    factor = double_factorial(2 * r - 1) / double_factorial(2 * r)
    verb = chk_bernstein_verbatim(r).coefficients
    canon = chk_bernstein_canonical(r).coefficients
    assert list(verb) == [factor * c for c in canon]


def test_inner_product_lemma_examples():
    assert inner_product_lemma(0, 0, 0) == PI
    oracle = inner_product_oracle(bernstein_basis(0, 1), chk_polynomial(1), include_masses=False)
    # (1-x)(x-1/2) = -x^2 + 3x/2 - 1/2 against Wallis values pi, pi/2, 3pi/8
    assert oracle == PiScalar.pi(F(-3, 8) + F(3, 4) - F(1, 2)) == PiScalar.pi(F(-1, 8))
    assert inner_product_lemma_canonical(0, 1, 1) == oracle
    # as printed the Beta sum carries c_1 = 1/2 once more
    assert inner_product_lemma(0, 1, 1) == oracle * F(1, 2)
    # x -> 1 - x maps B_0^1 to B_1^1 and T_1 to -T_1
    assert inner_product_lemma(1, 1, 1) == -inner_product_lemma(0, 1, 1)


@pytest.mark.parametrize("params", GRID)
def test_canonical_lemma_matches_oracle(params):
    for n in range(5):
        for r in range(n + 1):
            b = bernstein_basis(r, n)
            for i in range(5):
                oracle = inner_product_oracle(b, chk_polynomial(i, params), params, include_masses=False)
                assert inner_product_lemma_canonical(r, n, i, params) == oracle


def test_inner_product_oracle_examples():
    one = Polynomial.monomial([1])
    assert inner_product_oracle(one, one, CLASSICAL) == PI
    assert inner_product_oracle(one, one, MassParams(1, 2)) == PiScalar.pi(4)
    assert inner_product_oracle(chebyshev_shifted(1), chebyshev_shifted(2)).is_zero
    # masses sit at x = 0 (left) and x = 1 (right)
    x = Polynomial.monomial([0, 1])
    assert inner_product_oracle(x, one, MassParams(5, 0)) == inner_product_oracle(x, one, CLASSICAL)
    assert inner_product_oracle(x, one, MassParams(0, 5)) == inner_product_oracle(x, one) + PI * 5


def test_chebyshev_norms():
    # continuous weight: <T*_0,T*_0> = pi, <T*_n,T*_n> = pi/2
    assert inner_product_oracle(chebyshev_shifted(0), chebyshev_shifted(0)) == PI
    for n in range(1, 8):
        assert inner_product_oracle(chebyshev_shifted(n), chebyshev_shifted(n)) == PiScalar.pi(F(1, 2))


def test_classical_orthogonality():
    for n in range(9):
        for m in range(n):
            ip = inner_product_oracle(chk_polynomial(m), chk_polynomial(n), include_masses=False)
            assert ip.is_zero
