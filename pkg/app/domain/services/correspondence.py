"""
Lamé large-energy data against the surface-operator expansion at ε₂ = 0.

Parameter map: πa/ε₁ = ω₁ν, m/ε₁ = n, α = n(n − 1), x₁ = q^(1/2)e^(−2iχ),
x₂ = q^(1/2)e^(2iχ) with χ = πx/(2ω₁). The a-independent part of G/ε₁ and
its a⁻¹, a⁻² pieces resum into

    (n − 1)ln[θ₄(χ)q^(1/24)/η],   iα∂ₓln θ₄/(2ν),   −α∂ₓ²ln θ₄/(4ν²).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from sympy import divisor_sigma

from app.domain.data.instanton import F_ALPHA2_PRINTED, G_WINDOW, g_prefactor
from app.domain.exceptions import InvalidRunConfigError
from app.domain.model.reports import CheckReport
from app.domain.model.scalars import GaussianRational, I_G
from app.domain.services import elliptic_numerics as numerics
from app.domain.services.dispersion import floquet_phase, large_energy_expansion
from app.domain.services.func_rings import ring_eval
from app.domain.services.lame_limit import lattice_qseries
from app.domain.services.problem_catalog import lame_potential
from app.domain.services.theta_matrix import log_eta_series, log_theta4_matrix

_DEFAULT_SAMPLES: Tuple[Tuple[Fraction, Fraction, Fraction], ...] = (
    (Fraction(3), Fraction(1), Fraction(7, 2)),
    (Fraction(5, 2), Fraction(1, 3), Fraction(11)),
    (Fraction(-1, 4), Fraction(2), Fraction(-3, 5)),
)
_MAX_Q = 0.05
_MIN_NU = 8.0


def _n_from_alpha(alpha: float) -> float:
    """The root n ≥ 1/2 of n(n − 1) = α."""
    return (1 + math.sqrt(1 + 4 * alpha)) / 2


# ---------------------------------------------------------------------------
# Exact resummation of the G window
# ---------------------------------------------------------------------------


def _resummed_coefficient(
    line: int, i: int, j: int, theta0: Fraction, eta: Fraction, m: Fraction, eps1: Fraction, a: Fraction
) -> GaussianRational:
    """Coefficient of x₁ⁱx₂ʲ in closed form ``line`` at ω₁ = π/2 (so χ = x, ν = 2a/ε₁)."""
    n = m / eps1
    alpha = n * (n - 1)
    nu = 2 * a / eps1
    # ln θ₄ = −Σ Θ₄[i][j] x₁ⁱx₂ʲ and ∂_χ x₁ⁱx₂ʲ = 2i(j − i) x₁ⁱx₂ʲ
    log_theta = GaussianRational(-theta0)
    d_chi = GaussianRational(Fraction(0), Fraction(2 * (j - i)))
    if line == 0:
        return (log_theta + eta) * (n - 1)
    if line == 1:
        return I_G * alpha / (2 * nu) * d_chi * log_theta
    return GaussianRational(-alpha / (4 * nu * nu)) * d_chi * d_chi * log_theta


def g_resummation_check(
    max_degree: int = 3,
    max_a_power: int = 2,
    samples: Sequence[Tuple[Fraction, Fraction, Fraction]] = _DEFAULT_SAMPLES,
) -> CheckReport:
    """
    The three closed forms expanded in x₁, x₂ against the printed G lines, exactly.

    Each (m, ε₁, a) sample fixes the rational prefactors; monomials up to
    ``max_degree`` are compared for the lines a⁰..a^(−max_a_power). Pure
    (x₁x₂)ⁿ terms must vanish.
    """
    if not 1 <= max_degree <= 3 or not 0 <= max_a_power <= 2:
        raise InvalidRunConfigError("the printed G window covers degree <= 3 and a^-2")
    theta = log_theta4_matrix(0, max_degree + 1)
    eta = [Fraction(0)] + log_eta_series(max_degree)
    monomials = [(i, d - i) for d in range(1, max_degree + 1) for i in range(d, -1, -1)]
    failures: List[str] = []
    checked = 0
    for m, eps1, a in samples:
        for line in range(max_a_power + 1):
            prefactor = g_prefactor(line, m, eps1, a)
            for i, j in monomials:
                checked += 1
                got = _resummed_coefficient(line, i, j, theta[i, j], eta[i] if i == j else Fraction(0), m, eps1, a)
                want = GaussianRational(prefactor * G_WINDOW[line].get((i, j), Fraction(0)))
                if got != want:
                    failures.append(
                        f"a^-{line} x1^{i} x2^{j} at (m, eps1, a)=({m}, {eps1}, {a}): {got} != {want}"
                    )
                if i == j and got:
                    failures.append(f"a^-{line} (x1 x2)^{i} survives: {got}")
    return CheckReport(
        name="g-resummation",
        checked=checked,
        failures=tuple(failures),
        details={"max_degree": max_degree, "max_a_power": max_a_power, "samples": len(samples)},
    )


# ---------------------------------------------------------------------------
# Wave function against exp(G/ε₁)
# ---------------------------------------------------------------------------


def wavefunction_G_check(
    nu: float = 10.0,
    alpha: float = 6.0,
    q: float = 0.02,
    x_samples: Sequence[float] = (),
    omega1: float = math.pi / 2,
    order: int = 4,
    tol: float = 1e-9,
) -> CheckReport:
    """
    e^{−iν(x+ω₂)}ψ₊(x+ω₂)[θ₄q^(1/24)/η]^(n−1) against exp(G/ε₁) from the three closed forms.

    Both sides are normalized at x = 0. ψ₊ carries the regrouped exponent
    through ν^(−(order−1)); the closed forms stop at ν⁻², so the budget is
    twice the ν⁻³ term plus ``tol``. The ν⁻¹ and ν⁻² coefficients are also
    compared term by term.
    """
    if abs(q) > _MAX_Q:
        raise InvalidRunConfigError(f"|q| must be <= {_MAX_Q}, got {q}")
    if abs(nu) < _MIN_NU:
        raise InvalidRunConfigError(f"nu must be >= {_MIN_NU}, got {nu}")
    if order < 4:
        raise InvalidRunConfigError("order must be >= 4 to carry the nu^-3 term")
    ell = numerics.elliptic_params_from_q(q, omega1)
    c = ell.scale
    n = _n_from_alpha(alpha)
    xs = list(x_samples) or [t * omega1 for t in (0.1, 0.3, 0.5, 0.7, 0.9)]

    _, exponent = large_energy_expansion(lame_potential(), order)
    failures: List[str] = []
    if not floquet_phase(exponent) == I_G:
        failures.append(f"Floquet phase {floquet_phase(exponent)} is not i")
    params = {"alpha": alpha}
    powers = [p for p, _ in exponent.series.items() if 0 <= p < order]

    def coefficient(p: int, x: float) -> complex:
        return ring_eval(exponent.series.coefficient(p), x + ell.omega2, params, ell)

    def log_theta_d(k: int, x: float) -> complex:
        return c**k * numerics.log_theta_derivative(4, k, c * x, ell.nome)

    log_eta = numerics.log_eta(ell.q)

    def prefactor(x: float) -> complex:
        return (n - 1) * (cmath.log(numerics.theta(4, c * x, nome=ell.nome)) - log_eta)

    def left(x: float) -> complex:
        return sum(coefficient(p, x) * nu ** (-p) for p in powers) + prefactor(x)

    def right(x: float) -> complex:
        return (
            prefactor(x)
            + 1j * alpha * log_theta_d(1, x) / (2 * nu)
            - alpha * log_theta_d(2, x) / (4 * nu * nu)
        )

    l0, r0 = left(0.0), right(0.0)
    tail0 = coefficient(3, 0.0)
    errors: Dict[float, float] = {}
    budget = tol
    for x in xs:
        errors[x] = abs(cmath.exp((left(x) - l0) - (right(x) - r0)) - 1)
        budget = max(budget, 2 * abs(coefficient(3, x) - tail0) / abs(nu) ** 3 + tol)

        term1 = coefficient(1, x) - coefficient(1, 0.0)
        want1 = 1j * alpha * (log_theta_d(1, x) - log_theta_d(1, 0.0)) / 2
        term2 = coefficient(2, x) - coefficient(2, 0.0)
        want2 = -alpha * (log_theta_d(2, x) - log_theta_d(2, 0.0)) / 4
        for label, got, want in (("nu^-1", term1, want1), ("nu^-2", term2, want2)):
            if abs(got - want) > tol * max(1.0, abs(want)):
                failures.append(f"{label} coefficient at x={x:g}: {got} vs {want}")
    for x, err in errors.items():
        if err > budget:
            failures.append(f"x={x:g}: |ratio - 1| = {err:.3e} over budget {budget:.3e}")
    return CheckReport(
        name="wavefunction-G",
        checked=len(xs),
        failures=tuple(failures),
        details={"nu": nu, "alpha": alpha, "q": q, "errors": errors},
        budget=budget,
    )


# ---------------------------------------------------------------------------
# Eigenvalue from F
# ---------------------------------------------------------------------------


def _quasimodular_alpha2(count: int) -> List[Fraction]:
    """(12ζ₁² − g₂)/48 at π/(2ω₁) = 1 as a q-series, coefficients of q¹..q^count."""
    lattice = lattice_qseries(2 * count + 1)
    z1, g2 = lattice["zeta1"], lattice["g2"]
    out = []
    for n in range(1, count + 1):
        square = sum(
            (z1.coefficient(2 * i) * z1.coefficient(2 * (n - i)) for i in range(n + 1)),
            start=z1.coefficient(0) * 0,
        )
        coeff = (square * 12 - g2.coefficient(2 * n)) / 48
        out.append(coeff.constant_term().re)
    return out


def lambda_from_F_check(
    nu: float = 10.0,
    alpha: float = 6.0,
    q: float = 0.02,
    omega1: float = math.pi / 2,
    tol: float = 1e-12,
) -> CheckReport:
    """
    λ from q∂_q F at ε₂ = 0 against −ν² + α²(12ζ₁² − g₂)/(48ν²).

    Exact part: the α-linear terms 2α q∂_q ln(q^(1/24)/η) and −(α/12)(1 − E₂)
    cancel coefficient by coefficient, and q∂_q of the printed α² series
    equals the q-series of (12ζ₁² − g₂)/48 up to the factor −8. Numeric
    part: both sides at (ν, α, q) with the first omitted q⁴ term as budget.
    """
    if abs(q) > _MAX_Q:
        raise InvalidRunConfigError(f"|q| must be <= {_MAX_Q}, got {q}")
    count = len(F_ALPHA2_PRINTED)
    failures: List[str] = []

    eta = log_eta_series(count)
    for n in range(1, count + 1):
        linear = 2 * n * eta[n - 1] - Fraction(2 * int(divisor_sigma(n, 1)))
        if linear != 0:
            failures.append(f"alpha-linear q^{n} term {linear} does not cancel")

    derived = [n * s for n, s in enumerate(F_ALPHA2_PRINTED, start=1)]
    quasi = _quasimodular_alpha2(count)
    for n, (f_coeff, w_coeff) in enumerate(zip(derived, quasi), start=1):
        if -8 * f_coeff != w_coeff:
            failures.append(f"alpha^2 q^{n}: F gives {-8 * f_coeff}, quasimodular {w_coeff}")

    if q == 0:
        return CheckReport(
            name="lambda-from-F",
            checked=2 * count + 1,
            failures=tuple(failures),
            details={"f_side": -nu * nu, "quasimodular": -nu * nu, "error": 0.0},
            budget=tol,
        )

    ell = numerics.elliptic_params_from_q(q, omega1)
    c = ell.scale
    scale = 4 * c * c  # π²/ω₁²
    q_dlog_eta = q * numerics.log_eta(complex(q, 1e-20)).imag / 1e-20
    linear_part = 2 * alpha * (-q_dlog_eta) - alpha / 12 * (1 - numerics.eisenstein_E2(q))
    alpha2_part = -scale * alpha**2 * sum(float(d) * q**n for n, d in enumerate(derived, start=1)) / (2 * nu * nu)
    f_side = scale * (linear_part + alpha2_part)
    quasimodular = alpha**2 * (12 * ell.zeta1**2 - ell.g2) / (48 * nu * nu)
    error = abs(f_side - quasimodular)
    omitted = (count + 1) * int(divisor_sigma(count + 1, 1))
    budget = 2 * 8 * abs(c) ** 4 * alpha**2 * omitted * abs(q) ** (count + 1) / abs(nu) ** 2 + tol
    if error > budget:
        failures.append(f"|F side - quasimodular| = {error:.3e} over budget {budget:.3e}")
    return CheckReport(
        name="lambda-from-F",
        checked=2 * count + 1,
        failures=tuple(failures),
        details={
            "f_side": complex(-nu * nu + f_side),
            "quasimodular": complex(-nu * nu + quasimodular),
            "error": error,
        },
        budget=budget,
    )
