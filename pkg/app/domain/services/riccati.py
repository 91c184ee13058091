"""
Order-by-order solution of the Riccati relation v_x + v² = u + λ.

Large energy: v = ±√λ + Σ v_ℓ λ^(−ℓ/2), v₁ = ±u/2.
Small energy: v = Σ_{ℓ≥−1} v_ℓ g^(−ℓ) around a minimum, with v₋₁ the
supplied branch and each further term obtained by exact division by 2v₋₁.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence

from app.domain.exceptions import ResidualError, TruncationError
from app.domain.model.elliptic import EllipticParams
from app.domain.model.problems import PotentialSpec, RingElem, SmallEnergyProblem
from app.domain.model.scalars import ParamPoly
from app.domain.services.func_rings import ring_diff, ring_eval, ring_mul

_HALF = ParamPoly.const(1) / 2


def _potential(u: PotentialSpec | RingElem) -> RingElem:
    return u.potential if isinstance(u, PotentialSpec) else u


def _convolution(v: Mapping[int, RingElem], lo: int, total: int) -> Optional[RingElem]:
    """Σ v_j·v_{total−j} over j = lo..total−lo."""
    acc = None
    for j in range(lo, total - lo + 1):
        term = ring_mul(v[j], v[total - j])
        acc = term if acc is None else acc + term
    return acc


def large_energy_densities(u: PotentialSpec | RingElem, order: int, sign: int = 1) -> List[RingElem]:
    """v₁..v_N for v = sign·√λ + Σ v_ℓ λ^(−ℓ/2)."""
    if order < 1:
        raise TruncationError("large-energy expansion needs order >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    potential = _potential(u)
    v: Dict[int, RingElem] = {1: potential * (_HALF * sign)}
    for m in range(1, order):
        acc = ring_diff(v[m])
        conv = _convolution(v, 1, m)
        if conv is not None:
            acc = acc + conv
        v[m + 1] = acc * (-_HALF * sign)
    return [v[ell] for ell in range(1, order + 1)]


def small_energy_densities(problem: SmallEnergyProblem, order: int) -> List[RingElem]:
    """v₋₁..v_N as actual densities (the overall unit is not divided out)."""
    if order < 0:
        raise TruncationError("small-energy expansion needs order >= 0")
    branch = problem.branch
    twice = branch * 2
    v: Dict[int, RingElem] = {-1: branch}
    for m in range(-1, order):
        acc = ring_diff(v[m])
        conv = _convolution(v, 0, m) if m >= 0 else None
        if conv is not None:
            acc = acc + conv
        r_m = problem.r(m)
        numerator = (r_m - acc) if r_m is not None else -acc
        v[m + 1] = numerator.divide(twice)
    return [v[ell] for ell in range(-1, order + 1)]


def density_table(problem: SmallEnergyProblem, order: int) -> List[RingElem]:
    """Densities with the overall unit divided out, the form printed in tables."""
    inv = problem.unit.inverse()
    return [w * inv for w in small_energy_densities(problem, order)]


# ---------------------------------------------------------------------------
# Residuals
# ---------------------------------------------------------------------------


def large_energy_residual(
    u: PotentialSpec | RingElem, densities: Sequence[RingElem], sign: int = 1
) -> Dict[int, RingElem]:
    """Exact residual of v_x + v² − u − λ at each fully determined order s^(−m)."""
    potential = _potential(u)
    v = {ell: d for ell, d in enumerate(densities, start=1)}
    out: Dict[int, RingElem] = {0: v[1] * (2 * sign) - potential}
    for m in range(1, len(densities)):
        acc = ring_diff(v[m]) + v[m + 1] * (2 * sign)
        conv = _convolution(v, 1, m)
        out[m] = acc + conv if conv is not None else acc
    return out


def small_energy_residual(problem: SmallEnergyProblem, densities: Sequence[RingElem]) -> Dict[int, RingElem]:
    """Exact residual at orders g^(−m), m = −2..N−1, for densities v₋₁..v_N."""
    v = {ell: d for ell, d in enumerate(densities, start=-1)}
    top = len(densities) - 2
    out: Dict[int, RingElem] = {}
    for m in range(-2, top):
        acc = ring_diff(v[m]) if m >= -1 else None
        conv = _convolution(v, -1, m)
        total = conv if acc is None else (acc + conv if conv is not None else acc)
        r_m = problem.r(m)
        out[m] = total - r_m if r_m is not None else total
    return out


def assert_residual_free(residuals: Mapping[int, RingElem]) -> None:
    for m, r in residuals.items():
        if not r == 0:
            raise ResidualError(f"Riccati residual at order {m}: {r}")


def numeric_small_residual(
    problem: SmallEnergyProblem,
    densities: Sequence[RingElem],
    x: complex,
    g: complex,
    params: Mapping[str, complex],
    ell: Optional[EllipticParams] = None,
) -> complex:
    """|v′ + v² − Σ r_m g^(−m)| at one point for the truncated numeric v."""
    value = 0j
    slope = 0j
    for ell_index, d in enumerate(densities, start=-1):
        weight = g ** (-ell_index)
        value += weight * ring_eval(d, x, params, ell)
        slope += weight * ring_eval(ring_diff(d), x, params, ell)
    target = sum(
        (g ** (-m)) * ring_eval(r, x, params, ell) for m, r in problem.rhs.items()
    )
    return abs(slope + value * value - target)
