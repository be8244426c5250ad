"""Change-of-basis matrices between ChK-1 and Bernstein(n), and the formula audit.

Matrices are stored in one of two layouts:

``basis``
    row r holds the expansion of the r-th source basis element in the target
    basis (T_r = sum_i N[r][i] B_i^n). This is the layout of N and N^-1.
``coefficient``
    entries map coefficient vectors directly, target = entries @ source
    (c = M d with M = N^T). This is the layout of M and M^-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import exact
from .chk import (
    CLASSICAL,
    MassParams,
    _printed_prefactor,
    chk_bernstein_canonical,
    chk_polynomial,
    inner_product_lemma,
    inner_product_lemma_canonical,
    inner_product_oracle,
    lambda_k,
)
from .exact import PiScalar, SingularMatrixError, beta_half, binomial, central_ratio, half_binomial
from .poly import bernstein_basis

CHK_TO_BERNSTEIN = "chk_to_bernstein"
BERNSTEIN_TO_CHK = "bernstein_to_chk"
VERBATIM = "verbatim"
CANONICAL = "canonical"
BASIS_LAYOUT = "basis"
COEFFICIENT_LAYOUT = "coefficient"

_OPPOSITE = {CHK_TO_BERNSTEIN: BERNSTEIN_TO_CHK, BERNSTEIN_TO_CHK: CHK_TO_BERNSTEIN}


class DegenerateNormError(ArithmeticError):
    """The published inverse divides by (1 + lambda_i)^2 and some factor is zero."""

    def __init__(self, indices):
        self.indices = list(indices)
        super().__init__(f"1 + lambda_i = 0 for i in {self.indices}")


@dataclass(frozen=True)
class ConversionMatrix:
    n: int
    params: MassParams
    direction: str
    mode: str
    entries: tuple
    layout: str = BASIS_LAYOUT

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        size = self.n + 1
        if len(rows) != size or any(len(row) != size for row in rows):
            raise ValueError(f"expected a {size}x{size} matrix")
        if self.direction not in _OPPOSITE:
            raise ValueError(f"unknown direction {self.direction!r}")
        if self.mode not in (VERBATIM, CANONICAL):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.layout not in (BASIS_LAYOUT, COEFFICIENT_LAYOUT):
            raise ValueError(f"unknown layout {self.layout!r}")
        object.__setattr__(self, "entries", rows)

    def rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    def transposed(self) -> "ConversionMatrix":
        other = COEFFICIENT_LAYOUT if self.layout == BASIS_LAYOUT else BASIS_LAYOUT
        return ConversionMatrix(self.n, self.params, self.direction, self.mode,
                                exact.transpose(self.entries), other)

    def with_layout(self, layout: str) -> "ConversionMatrix":
        return self if layout == self.layout else self.transposed()


def _check_degree(n: int):
    if n < 0:
        raise ValueError("n must be nonnegative")


def _mu(r: int, i: int, n: int) -> Fraction:
    # printed mu_{r,i}^n, leading (2r)!/(2^(2r)(r!)^2) included
    s = Fraction(0)
    for k in range(max(0, i + r - n), min(i, r) + 1):
        s += ((-1) ** (r - k) * binomial(n - r, i - k) * binomial(2 * r, r) * binomial(2 * r, 2 * k)
              / (2 ** (2 * r) * binomial(n, i)))
    return _printed_prefactor(r) * s


def n_verbatim_cell(r: int, i: int, n: int, params: MassParams) -> Fraction:
    value = _mu(r, i, n)
    for k in range(r + 1):
        lam = lambda_k(k, params)
        if lam:
            value += lam * _mu(k, i, n)
    return value


def build_N_verbatim(n: int, params: MassParams = CLASSICAL) -> ConversionMatrix:
    """N_{r,i} = mu_{r,i} + sum_k lambda_k mu_{k,i}, as published."""
    _check_degree(n)
    entries = [[n_verbatim_cell(r, i, n, params) for i in range(n + 1)] for r in range(n + 1)]
    return ConversionMatrix(n, params, CHK_TO_BERNSTEIN, VERBATIM, entries)


def _m_inner(i: int, r: int, n: int) -> Fraction:
    # sum_k (-1)^(r-k) C(n-r, i-k) C(r-1/2, k) C(r-1/2, r-k)
    s = Fraction(0)
    for k in range(max(0, i + r - n), min(i, r) + 1):
        s += (-1) ** (r - k) * binomial(n - r, i - k) * half_binomial(r, k) * half_binomial(r, r - k)
    return s


def m_verbatim_cell(i: int, r: int, n: int, params: MassParams, printed_denominator: bool = False):
    """One entry M_{i,r}^n of the published forward matrix.

    As printed, each inner sum is divided by C(r,i) (resp. C(k,i)), which
    vanishes for i > r and disagrees with the degree-elevation derivation;
    the default divides by C(n,i). With ``printed_denominator`` the printed
    divisor is used and ``None`` is returned where it is zero.
    """
    def term(deg):
        div = binomial(deg, i) if printed_denominator else binomial(n, i)
        inner = _m_inner(i, deg, n)
        if div == 0:
            return None
        return _printed_prefactor(deg) * inner / div

    value = term(r)
    if value is None:
        return None
    for k in range(r + 1):
        lam = lambda_k(k, params)
        if lam:
            t = term(k)
            if t is None:
                return None
            value += lam * t
    return value


def build_M_verbatim(n: int, params: MassParams = CLASSICAL) -> ConversionMatrix:
    """Forward coefficient map c = M d, evaluated from the half-binomial form."""
    _check_degree(n)
    entries = [[m_verbatim_cell(i, r, n, params) for r in range(n + 1)] for i in range(n + 1)]
    return ConversionMatrix(n, params, CHK_TO_BERNSTEIN, VERBATIM, entries, COEFFICIENT_LAYOUT)


def build_N_canonical(n: int, params: MassParams = CLASSICAL) -> ConversionMatrix:
    """Row r is T_r^(M,N) degree-elevated to Bernstein(n)."""
    _check_degree(n)
    entries = [chk_bernstein_canonical(r, params, n).coefficients for r in range(n + 1)]
    return ConversionMatrix(n, params, CHK_TO_BERNSTEIN, CANONICAL, entries)


def _psi(r: int, n: int, d: int) -> PiScalar:
    total = PiScalar()
    for k in range(d + 1):
        w = Fraction((-1) ** (d - k), 2 ** (2 * d)) * binomial(2 * d, d) * binomial(2 * d, 2 * k)
        total = total + beta_half(r + k, n + d - r - k) * w
    return total


def ninv_verbatim_cell(r: int, i: int, n: int, params: MassParams) -> Fraction:
    lam_i = lambda_k(i, params)
    if 1 + lam_i == 0:
        raise DegenerateNormError([i])
    # Phi_i = phi / pi
    phi = Fraction(2) if i == 0 else Fraction(1)
    inv_pref = 1 / _printed_prefactor(i)
    bracket = _psi(r, n, i) * inv_pref
    tail = PiScalar()
    for d in range(i + 1):
        lam = lambda_k(d, params)
        if lam:
            tail = tail + _psi(r, n, d) * (_printed_prefactor(d) * lam)
    bracket = bracket + tail * inv_pref ** 2
    return phi * binomial(n, r) / (1 + lam_i) ** 2 * bracket.divide_by_pi()


def build_Ninv_verbatim(n: int, params: MassParams = CLASSICAL) -> ConversionMatrix:
    """Published Bernstein-to-ChK matrix: B_r^n = sum_i Ninv[r][i] T_i."""
    _check_degree(n)
    bad = [i for i in range(n + 1) if 1 + lambda_k(i, params) == 0]
    if bad:
        raise DegenerateNormError(bad)
    entries = [[ninv_verbatim_cell(r, i, n, params) for i in range(n + 1)] for r in range(n + 1)]
    return ConversionMatrix(n, params, BERNSTEIN_TO_CHK, VERBATIM, entries)


def invert_exact(m: ConversionMatrix) -> ConversionMatrix:
    inv = exact.inverse(m.rows())
    return ConversionMatrix(m.n, m.params, _OPPOSITE[m.direction], m.mode, inv, m.layout)


def build(n: int, params: MassParams = CLASSICAL, direction: str = CHK_TO_BERNSTEIN,
          mode: str = CANONICAL) -> ConversionMatrix:
    """Dispatch to the matrix builders; result is in basis layout."""
    if direction == CHK_TO_BERNSTEIN:
        return build_N_canonical(n, params) if mode == CANONICAL else build_N_verbatim(n, params)
    if direction == BERNSTEIN_TO_CHK:
        if mode == CANONICAL:
            return invert_exact(build_N_canonical(n, params))
        return build_Ninv_verbatim(n, params)
    raise ValueError(f"unknown direction {direction!r}")


def apply(m: ConversionMatrix, coeffs) -> list[Fraction]:
    """Transform source-basis coefficients into target-basis coefficients."""
    coeffs = [Fraction(c) for c in coeffs]
    if len(coeffs) != m.n + 1:
        raise ValueError(f"expected {m.n + 1} coefficients, got {len(coeffs)}")
    if m.layout == COEFFICIENT_LAYOUT:
        return exact.matvec(m.entries, coeffs)
    return exact.matvec(exact.transpose(m.entries), coeffs)


# -- audit ------------------------------------------------------------------

def _cellwise(verbatim, canonical):
    size = len(canonical)
    diff = [[None] * size for _ in range(size)]
    ratio = [[None] * size for _ in range(size)]
    for a in range(size):
        for b in range(size):
            v, c = verbatim[a][b], canonical[a][b]
            if v is None:
                continue
            diff[a][b] = v - c
            if c != 0:
                ratio[a][b] = v / c
    return {"verbatim": verbatim, "canonical": canonical, "difference": diff, "ratio": ratio,
            "equal": all(d == 0 for row in diff for d in row)}


def _common_ratio(vs, cs) -> Optional[Fraction]:
    """q with vs == q * cs, if one exists."""
    q = None
    for v, c in zip(vs, cs):
        if c == 0:
            if v != 0:
                return None
            continue
        if q is None:
            q = v / c
        elif v != q * c:
            return None
    return q


def _off_diagonal(g):
    return [[a, b] for a in range(len(g)) for b in range(len(g)) if a != b and g[a][b] != 0]


def _deviation(product):
    ident = exact.identity(len(product))
    dev = [[p - e for p, e in zip(prow, erow)] for prow, erow in zip(product, ident)]
    return {"product": product, "deviation": dev,
            "is_identity": all(d == 0 for row in dev for d in row)}


@dataclass
class DiscrepancyReport:
    """Exact comparison of published formulas against oracle-built values.

    Every section is a plain dict of exact Fractions / PiScalars (or None
    where a value is undefined); ``flags`` summarizes pass/fail outcomes.
    """

    n: int
    params: MassParams
    n_matrix: dict = field(default_factory=dict)
    row_ratios: list = field(default_factory=list)
    m_matrix: dict = field(default_factory=dict)
    ninv_matrix: dict = field(default_factory=dict)
    inverse_composition: dict = field(default_factory=dict)
    gram: dict = field(default_factory=dict)
    inner_products: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    flags: dict = field(default_factory=dict)


def audit(n: int, params: MassParams = CLASSICAL) -> DiscrepancyReport:
    _check_degree(n)
    rep = DiscrepancyReport(n, params)
    size = n + 1

    # (a) N: published vs oracle-built
    n_can = build_N_canonical(n, params).rows()
    n_verb = build_N_verbatim(n, params).rows()
    rep.n_matrix = _cellwise(n_verb, n_can)

    # (d) per-row scalar relating published rows to canonical rows
    for r in range(size):
        q = _common_ratio(n_verb[r], n_can[r])
        expected = central_ratio(r)
        rep.row_ratios.append({"row": r, "ratio": q, "proportional": q is not None,
                               "expected": expected, "matches_expected": q == expected})
    rep.flags["n_rows_scaled_by_central_ratio"] = all(x["matches_expected"] for x in rep.row_ratios)
    rep.flags["n_verbatim_equals_canonical"] = rep.n_matrix["equal"]

    # M = N^T, both as derived and with the printed C(r,i) divisor
    m_verb = build_M_verbatim(n, params).rows()
    rep.m_matrix = _cellwise(m_verb, exact.transpose(n_can))
    rep.m_matrix["transpose_of_n_verbatim"] = exact.transpose(m_verb) == n_verb
    printed = [[m_verbatim_cell(i, r, n, params, printed_denominator=True) for r in range(size)]
               for i in range(size)]
    rep.m_matrix["printed_denominator"] = printed
    rep.m_matrix["printed_denominator_undefined"] = [
        [i, r] for i in range(size) for r in range(size) if printed[i][r] is None]
    rep.m_matrix["printed_denominator_matches"] = [
        [i, r] for i in range(size) for r in range(size)
        if printed[i][r] is not None and printed[i][r] == m_verb[i][r]]
    rep.flags["m_verbatim_is_transpose_of_n_verbatim"] = rep.m_matrix["transpose_of_n_verbatim"]

    # Inverse: published vs exact inverse of canonical N
    n_can_inv = None
    try:
        n_can_inv = exact.inverse(n_can)
    except SingularMatrixError as err:
        rep.findings.append(f"canonical N is singular (pivot {err.pivot})")
        rep.ninv_matrix["canonical_singular_pivot"] = err.pivot
    ninv_verb = None
    try:
        ninv_verb = build_Ninv_verbatim(n, params).rows()
    except DegenerateNormError as err:
        rep.findings.append(f"published inverse undefined: 1 + lambda_i = 0 at i = {err.indices}")
        rep.ninv_matrix["verbatim_degenerate_indices"] = err.indices
    if ninv_verb is not None and n_can_inv is not None:
        rep.ninv_matrix.update(_cellwise(ninv_verb, n_can_inv))
        rep.ninv_matrix["column_ratios"] = [
            _common_ratio([row[i] for row in ninv_verb], [row[i] for row in n_can_inv])
            for i in range(size)]
    rep.flags["ninv_verbatim_equals_exact_inverse"] = bool(rep.ninv_matrix.get("equal", False))

    if ninv_verb is not None:
        rep.inverse_composition["verbatim_inverse_times_verbatim"] = _deviation(exact.matmul(ninv_verb, n_verb))
        rep.inverse_composition["verbatim_inverse_times_canonical"] = _deviation(exact.matmul(ninv_verb, n_can))
    rep.flags["verbatim_composition_is_identity"] = bool(
        rep.inverse_composition.get("verbatim_inverse_times_verbatim", {}).get("is_identity", False))

    # (b) Gram matrices with and without the endpoint masses
    basis = [chk_polynomial(r, params) for r in range(size)]
    with_m = [[inner_product_oracle(p, q, params, True).divide_by_pi() for q in basis] for p in basis]
    without_m = [[inner_product_oracle(p, q, params, False).divide_by_pi() for q in basis] for p in basis]
    rep.gram = {
        "with_masses": with_m,
        "without_masses": without_m,
        "off_diagonal_nonzero_with_masses": _off_diagonal(with_m),
        "off_diagonal_nonzero_without_masses": _off_diagonal(without_m),
    }
    rep.flags["orthogonal_with_masses"] = not rep.gram["off_diagonal_nonzero_with_masses"]
    rep.flags["orthogonal_without_masses"] = not rep.gram["off_diagonal_nonzero_without_masses"]

    # (c) Beta-sum inner products vs Wallis oracle
    lemma_ok = canon_ok = True
    for r in range(size):
        b = bernstein_basis(r, n)
        for i in range(size):
            oracle = inner_product_oracle(b, basis[i], params, include_masses=False)
            verb = inner_product_lemma(r, n, i, params)
            canon = inner_product_lemma_canonical(r, n, i, params)
            try:
                ratio = verb.ratio(oracle)
            except (ValueError, ZeroDivisionError):
                ratio = None
            lemma_ok &= verb == oracle
            canon_ok &= canon == oracle
            rep.inner_products.append({"r": r, "i": i, "oracle": oracle, "verbatim": verb,
                                       "canonical": canon, "difference": verb - oracle,
                                       "ratio": ratio})
    rep.flags["inner_product_verbatim_matches_oracle"] = lemma_ok
    rep.flags["inner_product_canonical_matches_oracle"] = canon_ok
    return rep
