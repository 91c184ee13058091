from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, Tuple

from app.domain.exceptions import SeriesBranchError, UnknownProblemError
from app.domain.model.scalars import ONE, ParamPoly

KINDS = ("mathieu", "lame-weierstrass", "lame-jacobi", "custom-ring")

# RingElem is any of FourierTrigPoly, WeierstrassElem, JacobiElem
RingElem = Any


@dataclass(frozen=True)
class Minimum:
    """Expansion point x* and the potential value there, both as text labels."""

    location: str
    value: str


@dataclass(frozen=True)
class PotentialSpec:
    kind: str
    potential: RingElem
    period: str  # exact period, e.g. "pi", "2*omega1", "2*K"
    minima: Tuple[Minimum, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise UnknownProblemError(f"unknown potential kind {self.kind!r}")


@dataclass(frozen=True)
class SmallEnergyProblem:
    """
    u + λ = Σ rhs[m]·g^(−m) around a minimum, with g the square root of the
    coupling. ``branch`` is v₋₁ (branch² = rhs[−2]); ``unit`` is the overall
    factor taken out of the printed density table (v = unit·Σ w_ℓ g^(−ℓ)).
    """

    symbol: str
    rhs: Mapping[int, RingElem]
    branch: RingElem
    spectral: str  # "delta", "Lambda" or "Lambdat"
    unit: ParamPoly = field(default_factory=lambda: ONE)
    floquet: str = "nu"  # "nu" for Mathieu, "mu" for Lamé

    def __post_init__(self) -> None:
        if -2 not in self.rhs:
            raise SeriesBranchError("rhs needs the leading g^2 term (order -2)")
        if not (self.branch * self.branch == self.rhs[-2]):
            raise SeriesBranchError(f"branch {self.branch} does not square to {self.rhs[-2]}")
        if not self.unit.is_monomial():
            raise SeriesBranchError("the overall unit must be an invertible monomial")

    def r(self, m: int) -> Optional[RingElem]:
        return self.rhs.get(m)


@dataclass(frozen=True)
class ProblemDefinition:
    """A catalog entry: the large- or small-energy problem behind a CLI id."""

    problem_id: str
    regime: str  # "large" or "small"
    potential: PotentialSpec
    small: Optional[SmallEnergyProblem] = None
    description: str = ""
