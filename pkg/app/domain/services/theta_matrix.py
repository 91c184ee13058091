"""
Double-series coefficients of ln θ₄ and ln η in x₁, x₂ with q = x₁x₂.

From the product form,

    −ln θ₄ = Σ_{n,m ≥ 1} (1/m)[(x₁x₂)^(mn) + x₁^(m(n−1))x₂^(mn) + x₁^(mn)x₂^(m(n−1))]

and (i/2)∂_χ multiplies x₁ᵃx₂ᵇ by (a − b), so the k-th matrix is the k = 0
one with entries scaled by (a − b)ᵏ. Divisor facts are checked against
sympy's number-theory routines.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import divisor_count, divisor_sigma, divisors, factorint

from app.domain.data.instanton import LOG_ETA_PRINTED, theta4_digest
from app.domain.model.reports import CheckReport
from app.domain.model.theta_matrix import Theta4Matrix
from app.domain.services import elliptic_numerics as numerics

_COMPLEX_STEP = 1e-20


def _product_terms(dim: int) -> Dict[Tuple[int, int], Fraction]:
    terms: Dict[Tuple[int, int], Fraction] = {}

    def add(i: int, j: int, value: Fraction) -> None:
        if i < dim and j < dim:
            terms[(i, j)] = terms.get((i, j), Fraction(0)) + value

    for m in range(1, dim):
        inv = Fraction(1, m)
        for n in range(1, (dim - 1) // m + 1):
            add(m * n, m * n, inv)
            add(m * n, m * (n - 1), inv)
            add(m * (n - 1), m * n, inv)
    return terms


@lru_cache(maxsize=32)
def log_theta4_matrix(k: int, dim: int) -> Theta4Matrix:
    """Coefficient matrix of −(i/2)ᵏ∂ᵏ_χ ln θ₄, rows/columns 0..dim−1."""
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for (i, j), value in _product_terms(dim).items():
        rows[i][j] = value * (i - j) ** k if k else value
    return Theta4Matrix(k=k, dim=dim, entries=tuple(tuple(r) for r in rows))


def log_eta_series(count: int) -> List[Fraction]:
    """Coefficients of (x₁x₂)ⁿ, n = 1..count, in −ln(η/(x₁x₂)^(1/24))."""
    coeffs = [Fraction(0)] * (count + 1)
    for m in range(1, count + 1):
        for mn in range(m, count + 1, m):
            coeffs[mn] += Fraction(1, m)
    return coeffs[1:]


def _sigma_minus_one(n: int) -> Fraction:
    return Fraction(int(divisor_sigma(n, 1)), n)


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def digest_check(printed: Optional[Sequence[Sequence[Fraction]]] = None) -> CheckReport:
    """The leading 22×22 block and the first −ln η coefficients against the printed ones."""
    table = [list(row) for row in (printed if printed is not None else theta4_digest())]
    size = len(table)
    matrix = log_theta4_matrix(0, size)
    failures = [
        f"Theta4[{i}][{j}] = {matrix[i, j]}, printed {table[i][j]}"
        for i in range(size)
        for j in range(size)
        if matrix[i, j] != table[i][j]
    ]
    eta = log_eta_series(len(LOG_ETA_PRINTED))
    failures += [
        f"ln eta coefficient {n}: {got}, printed {want}"
        for n, (got, want) in enumerate(zip(eta, LOG_ETA_PRINTED), start=1)
        if got != want
    ]
    return CheckReport(
        name="theta4-digest",
        checked=size * size + len(LOG_ETA_PRINTED),
        failures=tuple(failures),
        details={"dim": size},
    )


def divisor_checks(n_max: int, k_max: int, k_dim: Optional[int] = None) -> CheckReport:
    """
    Divisor structure of the matrices for 1 ≤ n ≤ n_max.

    Row n of the k = 0 matrix holds σ₋₁(n) on the diagonal and 1/d at column
    n − d for every divisor d; there are d(n) of them and they sum to the
    diagonal. For 1 ≤ k ≤ k_max the same positions carry ±d^(k−1).
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    dim = n_max + 1
    base = log_theta4_matrix(0, dim)
    failures: List[str] = []
    checked = 0

    if base[0, 0] != 0:
        failures.append(f"Theta4[0][0] = {base[0, 0]}")
    for i, j, value in base.nonzero():
        checked += 1
        if value < 0 or base[j, i] != value:
            failures.append(f"Theta4[{i}][{j}] = {value} breaks symmetry or sign")

    for n in range(1, n_max + 1):
        divs = [int(d) for d in divisors(n)]
        if base[n, n] != _sigma_minus_one(n):
            failures.append(f"diagonal {n}: {base[n, n]} != sigma_-1 = {_sigma_minus_one(n)}")
        support = base.row_support(n)
        expected = sorted(n - d for d in divs)
        if support != expected:
            failures.append(f"row {n}: nonzero columns {support}, divisors give {expected}")
        for d in divs:
            if base[n, n - d] != Fraction(1, d):
                failures.append(f"row {n}: column {n - d} holds {base[n, n - d]}, not 1/{d}")
        if sum(base[n, j] for j in support) != base[n, n]:
            failures.append(f"row {n}: reciprocals do not sum to the diagonal")
        count = prod(e + 1 for e in factorint(n).values())
        if len(support) != count or count != int(divisor_count(n)):
            failures.append(f"row {n}: {len(support)} entries, d({n}) = {count}")
        # rows of the divisors close under taking divisors
        for d in divs:
            if d > 1 and set(d - j for j in base.row_support(d)) - set(divs):
                failures.append(f"row {d} lists a divisor that does not divide {n}")
        checked += 1

    size = min(k_dim, dim) if k_dim is not None else dim
    positions = {(i, j) for i, j, _ in log_theta4_matrix(0, size).nonzero() if i != j}
    for k in range(1, k_max + 1):
        mk = log_theta4_matrix(k, size)
        found = {(i, j) for i, j, _ in mk.nonzero()}
        if found != positions:
            failures.append(f"k={k}: nonzero pattern differs from the off-diagonal family")
        for i, j, value in mk.nonzero():
            checked += 1
            if abs(value) != abs(i - j) ** (k - 1):
                failures.append(f"k={k}: |entry[{i}][{j}]| = {abs(value)}, expected {abs(i - j)}^{k - 1}")
            if mk[j, i] != (-1) ** k * value:
                failures.append(f"k={k}: entry[{j}][{i}] is not (-1)^k entry[{i}][{j}]")

    return CheckReport(
        name="divisors",
        checked=checked,
        failures=tuple(failures),
        details={"n_max": n_max, "k_max": k_max, "k_dim": size},
    )


def _q_log_eta_derivative(q: float) -> float:
    """q·d/dq Σ ln(1 − qⁿ) by a complex step."""
    return q * numerics.log_eta(complex(q, _COMPLEX_STEP)).imag / _COMPLEX_STEP


def e2_identity_check(n_max: int, q_samples: Sequence[float] = (0.02,), tol: float = 1e-10) -> CheckReport:
    """n·σ₋₁(n) = σ₁(n) exactly for n ≤ n_max, and E₂ = 24q∂_q ln η at real sample nomes."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    eta = log_eta_series(n_max)
    failures = [
        f"n={n}: n*sigma_-1 = {n * eta[n - 1]}, sigma_1 = {divisor_sigma(n, 1)}"
        for n in range(1, n_max + 1)
        if n * eta[n - 1] != int(divisor_sigma(n, 1))
    ]
    errors = {}
    for q in q_samples:
        q = float(q)
        lhs = numerics.eisenstein_E2(q)
        # ln η = ln(q)/24 + Σ ln(1 − qⁿ)
        rhs = 1 + 24 * _q_log_eta_derivative(q)
        errors[q] = abs(lhs - rhs)
        if errors[q] > tol:
            failures.append(f"q={q:g}: |E2 - 24 q d/dq ln eta| = {errors[q]:.3e}")
    return CheckReport(
        name="e2-identity",
        checked=n_max + len(q_samples),
        failures=tuple(failures),
        details={"numeric_errors": errors},
        budget=tol,
    )


def product_form_check(
    x1: complex = 0.03, x2: complex = 0.04, k_max: int = 2, dim: int = 22, tol: float = 1e-10
) -> CheckReport:
    """The matrices summed at (x₁, x₂) against −(i/2)ᵏ∂ᵏ ln θ₄(χ) with q = x₁x₂, χ = (i/4)ln(x₁/x₂)."""
    nome = cmath.sqrt(x1 * x2)
    chi = 0.25j * cmath.log(x1 / x2)
    failures = []
    errors = {}
    for k in range(k_max + 1):
        series = log_theta4_matrix(k, dim).evaluate(x1, x2)
        if k == 0:
            exact = -cmath.log(numerics.theta(4, chi, nome=nome))
        else:
            exact = -((0.5j) ** k) * numerics.log_theta_derivative(4, k, chi, nome)
        errors[k] = abs(series - exact)
        if errors[k] > tol:
            failures.append(f"k={k}: matrix sum {series} vs {exact}")
    return CheckReport(
        name="product-form",
        checked=k_max + 1,
        failures=tuple(failures),
        details={"errors": errors},
        budget=tol,
    )
