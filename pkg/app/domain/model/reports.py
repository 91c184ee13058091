from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from app.domain.exceptions import IntegrationError


@dataclass(frozen=True)
class MonodromyResult:
    """
    Transfer of (ψ, ψ′) over one period, columns the two canonical solutions.

    ``nu`` is read from the eigenvalue of the matrix closest to the free
    branch; ``nu_pair`` holds both readings (ν, −ν up to the period lattice).
    """

    matrix: Tuple[Tuple[complex, complex], Tuple[complex, complex]]
    trace: complex
    nu: complex
    nu_pair: Tuple[complex, complex]
    wronskian_defect: float
    period: float
    steps: int
    tolerance: float
    near_band_edge: bool = False

    def __post_init__(self) -> None:
        if self.wronskian_defect >= 1e-9:
            raise IntegrationError(f"Wronskian defect {self.wronskian_defect:.3e} exceeds 1e-9")


@dataclass(frozen=True)
class ErrorReport:
    lambda_value: complex
    nu_series: complex
    nu_oracle: complex
    abs_err: float
    omitted_term_bound: float
    wronskian_defect: float

    @property
    def ratio(self) -> float:
        """abs_err over the first omitted term; the fitted C."""
        if self.omitted_term_bound == 0:
            return 0.0 if self.abs_err == 0 else float("inf")
        return self.abs_err / self.omitted_term_bound


@dataclass(frozen=True)
class WavefunctionErrorReport:
    x_grid: Tuple[float, ...]
    errors: Tuple[float, ...]  # |ψ_asym − ψ_ode| / |ψ_asym|
    residuals: Tuple[float, ...]  # |S″ + S′² − (u + λ)|

    @property
    def max_error(self) -> float:
        return max(self.errors) if self.errors else 0.0

    @property
    def max_residual(self) -> float:
        return max(self.residuals) if self.residuals else 0.0


@dataclass(frozen=True)
class LimitSample:
    q: float
    error: float
    budget: float

    @property
    def passed(self) -> bool:
        return self.error <= self.budget


@dataclass(frozen=True)
class LimitReport:
    name: str
    samples: Tuple[LimitSample, ...]
    failures: Tuple[str, ...] = ()
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and all(s.passed for s in self.samples)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a named suite; ``failures`` carries one line per failed item."""

    name: str
    checked: int
    failures: Tuple[str, ...] = ()
    details: Dict[str, Any] = field(default_factory=dict)
    budget: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class SweepPoint:
    """One grid point: ``variable`` is ν for large energy and h for small energy."""

    variable: float
    series_value: complex
    oracle_value: complex
    abs_err: float
    omitted_term_bound: float


@dataclass(frozen=True)
class SweepReport:
    name: str
    points: Tuple[SweepPoint, ...]
    slope: float  # fitted decay exponent, err ∝ variable^(−slope)
    predicted_slope: float
    constant: float  # median abs_err / omitted_term_bound

    @property
    def max_error(self) -> float:
        return max((p.abs_err for p in self.points), default=0.0)
