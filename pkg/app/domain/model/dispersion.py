from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Tuple

from app.domain.exceptions import TruncationError
from app.domain.model.scalars import ParamPoly
from app.domain.model.series import TruncatedSeries

REGIMES = ("large", "small")
PROVENANCES = ("derived", "paper-data")


@dataclass(frozen=True)
class DispersionSeries:
    """λ(ν) for large energy, or the spectral symbol as a series in g⁻¹ for small energy."""

    regime: str
    series: TruncatedSeries
    provenance: str
    spectral: Optional[str] = None  # "delta", "Lambda", "Lambdat" in the small regime
    floquet: str = "nu"

    def __post_init__(self) -> None:
        if self.regime not in REGIMES:
            raise TruncationError(f"unknown regime {self.regime!r}")
        if self.provenance not in PROVENANCES:
            raise TruncationError(f"unknown provenance {self.provenance!r}")
        if self.regime == "large":
            lead, coeff = self.series.leading()
            if lead != -2 or not (coeff == -1):
                raise TruncationError(f"large-energy dispersion must start with -nu^2, got {coeff}*{self.series.symbol}^{lead}")


@dataclass(frozen=True)
class ExponentSeries:
    """
    Exponent of ψ as a series whose coefficients are exact antiderivatives.

    ``sign`` is +1 for ψ₊ and −1 for ψ₋.
    """

    series: TruncatedSeries
    sign: int = 1


@dataclass(frozen=True)
class LogTerm:
    """coeff·ln(f) with f one of the named log-derivative patterns."""

    coeff: ParamPoly
    pattern: str


@dataclass(frozen=True)
class ClosedFormOrder:
    logs: Tuple[LogTerm, ...] = ()
    ring: Any = None  # a JacobiElem, differentiated exactly; None when absent


@dataclass(frozen=True)
class ClosedFormExponent:
    """A printed wave-function exponent, order by order in g⁻¹."""

    name: str
    problem_id: str
    sign: int
    substituted: bool  # spectral symbol already replaced by the Floquet exponent
    orders: Mapping[int, ClosedFormOrder] = field(default_factory=dict)

    @property
    def max_order(self) -> int:
        return max(self.orders) if self.orders else -1


@dataclass(frozen=True)
class OrderCheck:
    order: int
    status: str  # "match" or "mismatch"
    residual: str = "0"


@dataclass(frozen=True)
class VerificationReport:
    name: str
    checks: Tuple[OrderCheck, ...]
    details: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status == "match" for c in self.checks)
