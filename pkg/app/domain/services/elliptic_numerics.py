"""
Theta, Weierstrass, Jacobi and Eisenstein numerics in double precision.

Every elliptic function is routed through theta series in the nome
Q = exp(iπτ) (the lattice nome is q = Q²). Series are summed with numpy over
an index range fixed in advance from the decay rate of the terms.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from app.domain.exceptions import (
    InvalidEllipticParametersError,
    PoleEvaluationError,
)
from app.domain.model.elliptic import EllipticParams
from app.domain.model.reports import CheckReport

_EPS_LOG = math.log(1e18)
_MAX_TERMS = 4000
_POLE_TOL = 1e-13

# Q(ε) with ε = (1 − √k′)/(2(1 + √k′)); starting point for the nome solve
_NOME_SERIES = (
    (1, 1),
    (5, 2),
    (9, 15),
    (13, 150),
    (17, 1707),
    (21, 20910),
    (25, 268616),
    (29, 3567400),
)


def _check_nome(nome: complex) -> None:
    if abs(nome) >= 1:
        raise InvalidEllipticParametersError(f"nome modulus must be < 1, got {abs(nome)}")


def _term_count(decay: float, growth: float = 0.0, derivative: int = 0) -> int:
    """Smallest n with exp(−decay·n² + growth·n) below 1e−18, padded for derivatives."""
    if decay <= 0:
        raise InvalidEllipticParametersError("series does not converge")
    n = (growth + math.sqrt(growth * growth + 4 * decay * _EPS_LOG)) / (2 * decay)
    return min(int(n) + 3 + 2 * derivative, _MAX_TERMS)


def _trig_derivative(kind: str, a: np.ndarray, z: complex, m: int) -> np.ndarray:
    # d^m/dz^m sin(az) = a^m sin(az + mπ/2), likewise for cos
    phase = a * z + m * np.pi / 2
    base = np.sin(phase) if kind == "sin" else np.cos(phase)
    return (a**m) * base


def theta(j: int, z: complex, q: complex | None = None, *, nome: complex | None = None, derivative: int = 0) -> complex:
    """
    Jacobi theta function θⱼ(z) or its z-derivative.

    Pass either the lattice nome ``q`` (the principal square root is taken)
    or the theta nome directly via ``nome``.
    """
    if nome is None:
        if q is None:
            raise InvalidEllipticParametersError("either q or nome is required")
        if abs(q) >= 1:
            raise InvalidEllipticParametersError(f"|q| must be < 1, got {abs(q)}")
        nome = cmath.sqrt(q)
    _check_nome(nome)
    if nome == 0:
        return _theta_at_zero_nome(j, z, derivative)
    log_q = cmath.log(nome)
    decay = -log_q.real
    growth = 2 * abs(complex(z).imag) + 2
    count = _term_count(decay, growth, derivative)
    m = derivative

    if j in (1, 2):
        n = np.arange(count, dtype=float)
        weights = np.exp(log_q * (n * n + n) + 0.25 * log_q)
        a = 2 * n + 1
        if j == 1:
            signs = np.where(n % 2 == 0, 1.0, -1.0)
            return complex(2 * np.sum(signs * weights * _trig_derivative("sin", a, z, m)))
        return complex(2 * np.sum(weights * _trig_derivative("cos", a, z, m)))
    if j in (3, 4):
        n = np.arange(1, count + 1, dtype=float)
        weights = np.exp(log_q * n * n)
        if j == 4:
            weights = weights * np.where(n % 2 == 0, 1.0, -1.0)
        total = 2 * np.sum(weights * _trig_derivative("cos", 2 * n, z, m))
        return complex(total + (1 if m == 0 else 0))
    raise ValueError(f"theta index must be 1..4, got {j}")


def _theta_at_zero_nome(j: int, z: complex, m: int) -> complex:
    if j in (3, 4):
        return 1 if m == 0 else 0
    return 0


@lru_cache(maxsize=64)
def _cot_derivative_poly(m: int) -> Tuple[float, ...]:
    """Coefficients in c = cot z of d^m/dz^m cot z."""
    poly = np.array([0.0, 1.0])
    dc = np.array([-1.0, 0.0, -1.0])  # dc/dz = −(1 + c²)
    for _ in range(m):
        poly = npoly.polymul(npoly.polyder(poly), dc)
    return tuple(poly)


def log_theta_derivative(j: int, m: int, z: complex, nome: complex) -> complex:
    """∂ᵐ ln θⱼ(z), m ≥ 1, from the Lambert-series form of θⱼ′/θⱼ."""
    if m < 1:
        raise ValueError("log-derivative order must be >= 1")
    _check_nome(nome)
    z = complex(z)
    head = 0j
    if j == 1:
        s = cmath.sin(z)
        if abs(s) < _POLE_TOL:
            raise PoleEvaluationError(f"theta_1 vanishes at z={z}")
        head = complex(npoly.polyval(cmath.cos(z) / s, _cot_derivative_poly(m - 1)))
    elif j == 2:
        c = cmath.cos(z)
        if abs(c) < _POLE_TOL:
            raise PoleEvaluationError(f"theta_2 vanishes at z={z}")
        # −tan z = cot(z + π/2)
        head = complex(npoly.polyval(-cmath.sin(z) / c, _cot_derivative_poly(m - 1)))
    elif j not in (3, 4):
        raise ValueError(f"theta index must be 1..4, got {j}")
    if nome == 0:
        return head

    log_q = cmath.log(nome)
    per_term = -log_q.real * (2 if j in (1, 2) else 1) - 2 * abs(z.imag)
    if per_term <= 0:
        raise PoleEvaluationError(f"z={z} lies outside the strip of convergence")
    count = min(int((_EPS_LOG + m * 8) / per_term) + 5, _MAX_TERMS)
    n = np.arange(1, count + 1, dtype=float)
    if j in (1, 2):
        qn = np.exp(2 * n * log_q)
        coeff = qn / (1 - qn)
        if j == 2:
            coeff = coeff * np.where(n % 2 == 0, 1.0, -1.0)
    else:
        qn = np.exp(n * log_q)
        coeff = qn / (1 - qn * qn)
        if j == 3:
            coeff = coeff * np.where(n % 2 == 0, 1.0, -1.0)
    return head + complex(4 * np.sum(coeff * _trig_derivative("sin", 2 * n, z, m - 1)))


# ---------------------------------------------------------------------------
# Eisenstein series and eta
# ---------------------------------------------------------------------------


def _lambert(q: complex, power: int) -> complex:
    """Σ n^power qⁿ/(1 − qⁿ)."""
    if abs(q) >= 1:
        raise InvalidEllipticParametersError(f"|q| must be < 1, got {abs(q)}")
    if q == 0:
        return 0j
    count = min(int(_EPS_LOG / -math.log(abs(q))) + 10 + power, _MAX_TERMS)
    n = np.arange(1, count + 1, dtype=float)
    qn = np.exp(n * cmath.log(q))
    return complex(np.sum(n**power * qn / (1 - qn)))


def eisenstein_E2(q: complex) -> complex:
    return 1 - 24 * _lambert(q, 1)


def eisenstein_E4(q: complex) -> complex:
    return 1 + 240 * _lambert(q, 3)


def eisenstein_E6(q: complex) -> complex:
    return 1 - 504 * _lambert(q, 5)


def log_eta(q: complex) -> complex:
    """ln(η(q)/q^{1/24}) = Σ ln(1 − qⁿ)."""
    if abs(q) >= 1:
        raise InvalidEllipticParametersError(f"|q| must be < 1, got {abs(q)}")
    if q == 0:
        return 0j
    count = min(int(_EPS_LOG / -math.log(abs(q))) + 10, _MAX_TERMS)
    n = np.arange(1, count + 1, dtype=float)
    return complex(np.sum(np.log(1 - np.exp(n * cmath.log(q)))))


# ---------------------------------------------------------------------------
# Lattice construction
# ---------------------------------------------------------------------------


def elliptic_params(omega1: complex, omega2: complex) -> EllipticParams:
    omega1, omega2 = complex(omega1), complex(omega2)
    if omega1 == 0:
        raise InvalidEllipticParametersError("omega1 must be nonzero")
    tau = omega2 / omega1
    if tau.imag <= 0:
        raise InvalidEllipticParametersError(f"Im(omega2/omega1) must be > 0, got tau={tau}")
    nome = cmath.exp(1j * cmath.pi * tau)
    q = nome * nome
    c = cmath.pi / (2 * omega1)

    t2 = theta(2, 0, nome=nome)
    t3 = theta(3, 0, nome=nome)
    t4 = theta(4, 0, nome=nome)
    t2_4, t3_4, t4_4 = t2**4, t3**4, t4**4

    e1 = c * c * (t2_4 + 2 * t4_4) / 3
    e2 = -c * c * (2 * t2_4 + t4_4) / 3
    e3 = c * c * (t2_4 - t4_4) / 3
    K = cmath.pi / 2 * t3 * t3
    return EllipticParams(
        omega1=omega1,
        omega2=omega2,
        q=q,
        nome=nome,
        zeta1=c * c * eisenstein_E2(q) / 3,
        e1=e1,
        e2=e2,
        e3=e3,
        g2=2 * (e1 * e1 + e2 * e2 + e3 * e3),
        g3=4 * e1 * e2 * e3,
        k=(t2 / t3) ** 2,
        K=K,
        Kp=-1j * tau * K,
        omega3=omega1 + omega2,
    )


def elliptic_params_from_q(q: complex, omega1: complex = math.pi / 2) -> EllipticParams:
    """Lattice with nome q and real half-period ω₁ (default π/2)."""
    if q == 0 or abs(q) >= 1:
        raise InvalidEllipticParametersError(f"need 0 < |q| < 1, got {q}")
    tau = cmath.log(q) / (2j * cmath.pi)
    return elliptic_params(omega1, omega1 * tau)


# ---------------------------------------------------------------------------
# Weierstrass functions
# ---------------------------------------------------------------------------


def wp_tilde_derivative(order: int, x: complex, ell: EllipticParams) -> complex:
    """∂ᵏ℘̃(x) = −(π/2ω₁)^{k+2} ∂^{k+2} ln θ₁(πx/2ω₁)."""
    c = ell.scale
    return -(c ** (order + 2)) * log_theta_derivative(1, order + 2, c * x, ell.nome)


def zeta_tilde(x: complex, ell: EllipticParams) -> complex:
    c = ell.scale
    return c * log_theta_derivative(1, 1, c * x, ell.nome)


def weierstrass(fn: str, x: complex, ell: EllipticParams) -> complex:
    """fn ∈ {"wp", "wp_prime", "zeta", "zeta_tilde", "wp_tilde"}."""
    if fn == "wp_tilde":
        return wp_tilde_derivative(0, x, ell)
    if fn == "wp":
        return wp_tilde_derivative(0, x, ell) - ell.zeta1
    if fn == "wp_prime":
        return wp_tilde_derivative(1, x, ell)
    if fn == "zeta_tilde":
        return zeta_tilde(x, ell)
    if fn == "zeta":
        return zeta_tilde(x, ell) + ell.zeta1 * x
    raise ValueError(f"unknown Weierstrass function {fn!r}")


# ---------------------------------------------------------------------------
# Jacobi functions
# ---------------------------------------------------------------------------


def _nome_guess(k: complex) -> complex:
    kp = cmath.sqrt(1 - k * k)
    root = cmath.sqrt(kp)
    eps = (1 - root) / (2 * (1 + root))
    return sum(coeff * eps**power for power, coeff in _NOME_SERIES)


def jacobi_nome(k: complex) -> complex:
    """Theta nome Q with k² = θ₂⁴/θ₃⁴, refined by Newton steps from the ε-series."""
    k = complex(k)
    if abs(k * k - 1) < 1e-15:
        raise InvalidEllipticParametersError("k^2 = 1 is degenerate")
    if k == 0:
        return 0j
    target = k * k
    nome = _nome_guess(k)

    def residual(Q: complex) -> complex:
        return (theta(2, 0, nome=Q) / theta(3, 0, nome=Q)) ** 4 - target

    for _ in range(30):
        f = residual(nome)
        if abs(f) < 1e-15 * max(1.0, abs(target)):
            break
        h = 1e-7 * max(abs(nome), 1e-3)
        slope = (residual(nome + h) - residual(nome - h)) / (2 * h)
        nome = nome - f / slope
    _check_nome(nome)
    return nome


def jacobi(fn: str, z: complex, k: complex) -> complex:
    """fn ∈ {"sn", "cn", "dn", "zn", "K", "Kp"}; k = 0 is the trigonometric limit."""
    k = complex(k)
    if abs(k * k - 1) < 1e-15:
        raise InvalidEllipticParametersError("k^2 = 1 is degenerate")
    if k == 0:
        trig = {
            "sn": lambda: cmath.sin(z),
            "cn": lambda: cmath.cos(z),
            "dn": lambda: 1 + 0j,
            "zn": lambda: 0j,
            "K": lambda: complex(math.pi / 2),
            "Kp": lambda: complex(math.inf),
        }
        if fn not in trig:
            raise ValueError(f"unknown Jacobi function {fn!r}")
        return trig[fn]()
    return jacobi_from_nome(fn, z, jacobi_nome(k))


def jacobi_from_nome(fn: str, z: complex, nome: complex) -> complex:
    t2 = theta(2, 0, nome=nome)
    t3 = theta(3, 0, nome=nome)
    t4 = theta(4, 0, nome=nome)
    K = cmath.pi / 2 * t3 * t3
    if fn == "K":
        return K
    if fn == "Kp":
        return -K * cmath.log(nome) / cmath.pi
    v = z / (t3 * t3)
    if fn == "zn":
        return (cmath.pi / (2 * K)) * log_theta_derivative(4, 1, v, nome)
    th4 = theta(4, v, nome=nome)
    if abs(th4) < _POLE_TOL:
        raise PoleEvaluationError(f"Jacobi functions have a pole at z={z}")
    if fn == "sn":
        return (t3 / t2) * theta(1, v, nome=nome) / th4
    if fn == "cn":
        return (t4 / t2) * theta(2, v, nome=nome) / th4
    if fn == "dn":
        return (t4 / t3) * theta(3, v, nome=nome) / th4
    raise ValueError(f"unknown Jacobi function {fn!r}")


# ---------------------------------------------------------------------------
# Weierstrass to Jacobi form
# ---------------------------------------------------------------------------


def jacobi_coordinate(z: complex, ell: EllipticParams) -> complex:
    """x = (z + iK′)/(e₁ − e₂)^(1/2)."""
    return (complex(z) + 1j * ell.Kp) / cmath.sqrt(ell.e1 - ell.e2)


def weierstrass_spectral(Lambda: complex, alpha: complex, ell: EllipticParams) -> complex:
    """λ = (e₁ − e₂)Λ − (e₂ + ζ₁)α."""
    return (ell.e1 - ell.e2) * Lambda - (ell.e2 + ell.zeta1) * alpha


def jacobi_map_check(
    ell: EllipticParams,
    alpha: complex,
    Lambda: complex,
    z_samples: Sequence[complex],
    tol: float = 1e-9,
) -> CheckReport:
    """
    α℘̃(x) + λ against (e₁ − e₂)(αk²sn²z + Λ) at mapped points; the two Lamé
    operators agree once ∂ₓ² = (e₁ − e₂)∂_z² is accounted for.
    """
    lam = weierstrass_spectral(Lambda, alpha, ell)
    scale = ell.e1 - ell.e2
    failures: List[str] = []
    worst = 0.0
    for z in z_samples:
        x = jacobi_coordinate(z, ell)
        lhs = alpha * wp_tilde_derivative(0, x, ell) + lam
        sn = jacobi_from_nome("sn", z, ell.nome)
        rhs = scale * (alpha * ell.k**2 * sn * sn + Lambda)
        err = abs(lhs - rhs) / max(1.0, abs(rhs))
        worst = max(worst, err)
        if err > tol:
            failures.append(f"z={z}: weierstrass={lhs} jacobi={rhs}")
    return CheckReport(
        name="jacobi-map",
        checked=len(z_samples),
        failures=tuple(failures),
        details={"max_relative_error": worst, "lambda": str(lam)},
        budget=tol,
    )
