"""Exact change of basis between generalized Chebyshev-Koornwinder (first kind)
polynomials and the Bernstein basis on [0, 1]."""

from .chk import (
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
from .convert import (
    ConversionMatrix,
    DegenerateNormError,
    DiscrepancyReport,
    apply,
    audit,
    build_M_verbatim,
    build_N_canonical,
    build_N_verbatim,
    build_Ninv_verbatim,
    invert_exact,
)
from .exact import PiScalar, SingularMatrixError, solve_linear_exact
from .lsq import LsqResult, ZeroNormError, hilbert_matrix, lsq_monomial, lsq_orthogonal
from .poly import (
    BasisTag,
    Polynomial,
    bernstein_integral,
    bernstein_product,
    degree_elevate,
    evaluate,
    monomial_to_bernstein,
    to_monomial,
)

__version__ = "0.1.0"
