from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Dict

from app.domain.exceptions import InvalidEllipticParametersError


@dataclass(frozen=True)
class EllipticParams:
    """
    Lattice data for half-periods (ω₁, ω₂) with Im(ω₂/ω₁) > 0.

    q = exp(2πiω₂/ω₁) is the nome of the lattice; ``nome`` is its square
    root exp(iπω₂/ω₁), the nome of the theta series. e₁ = ℘(ω₁),
    e₂ = ℘(ω₂), e₃ = ℘(ω₁ + ω₂); k² = (e₃ − e₂)/(e₁ − e₂).
    """

    omega1: complex
    omega2: complex
    q: complex
    nome: complex
    zeta1: complex
    e1: complex
    e2: complex
    e3: complex
    g2: complex
    g3: complex
    k: complex
    K: complex
    Kp: complex
    omega3: complex  # ω₁ + ω₂; recorded, no formula uses it

    def __post_init__(self) -> None:
        if self.omega1 == 0:
            raise InvalidEllipticParametersError("omega1 must be nonzero")
        tau = self.omega2 / self.omega1
        if tau.imag <= 0:
            raise InvalidEllipticParametersError(f"Im(omega2/omega1) must be > 0, got tau={tau}")
        if abs(self.q) >= 1:
            raise InvalidEllipticParametersError(f"|q| must be < 1, got {abs(self.q)}")

    @property
    def tau(self) -> complex:
        return self.omega2 / self.omega1

    @property
    def scale(self) -> complex:
        """π/(2ω₁), the factor between x and the theta argument."""
        return cmath.pi / (2 * self.omega1)

    @property
    def kp(self) -> complex:
        return cmath.sqrt(1 - self.k * self.k)

    def bindings(self) -> Dict[str, complex]:
        """Numeric values of the lattice parameters used by ring coefficients."""
        return {"zeta1": self.zeta1, "g2": self.g2, "g3": self.g3, "k": self.k, "kp": self.kp}
