from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple

from app.domain.exceptions import InvalidEllipticParametersError, InvalidRunConfigError


@dataclass(frozen=True)
class Theta4Matrix:
    """
    Coefficients of −(i/2)ᵏ∂ᵏ_χ ln θ₄ as a double series: entries[i][j] multiplies x₁ⁱx₂ʲ.

    Rows and columns start at 0; only the leading dim × dim block is stored.
    """

    k: int
    dim: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise InvalidRunConfigError(f"derivative order must be >= 0, got {self.k}")
        if self.dim < 1:
            raise InvalidRunConfigError(f"matrix dimension must be >= 1, got {self.dim}")
        rows = tuple(tuple(Fraction(c) for c in row) for row in self.entries)
        if len(rows) != self.dim or any(len(row) != self.dim for row in rows):
            raise InvalidRunConfigError(f"entries are not a {self.dim}x{self.dim} block")
        object.__setattr__(self, "entries", rows)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def nonzero(self) -> Iterator[Tuple[int, int, Fraction]]:
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                if value:
                    yield i, j, value

    def row_support(self, n: int) -> List[int]:
        """Columns j < n with a nonzero entry in row n."""
        return [j for j in range(min(n, self.dim)) if self.entries[n][j]]

    def evaluate(self, x1: complex, x2: complex) -> complex:
        total = 0j
        for i, j, value in self.nonzero():
            total += float(value) * x1**i * x2**j
        return total

    def digest(self, size: int = 22) -> str:
        """Leading block as aligned text, one row per line."""
        size = min(size, self.dim)
        cells = [[str(self.entries[i][j]) for j in range(size)] for i in range(size)]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


@dataclass(frozen=True)
class GaugeParams:
    """
    a, m, ε₁, ε₂ of the surface-operator expansion, tied to the Lamé data by
    πa/ε₁ = ω₁ν, m/ε₁ = n, x₁ = q^(1/2)e^(−iπx/ω₁), x₂ = q^(1/2)e^(iπx/ω₁).
    """

    a: complex
    m: complex
    eps1: complex
    eps2: complex = 0j
    omega1: complex = cmath.pi / 2

    def __post_init__(self) -> None:
        if self.eps1 == 0:
            raise InvalidRunConfigError("eps1 must be nonzero")
        if self.eps2 != 0:
            raise InvalidRunConfigError("only eps2 = 0 is supported")
        if self.omega1 == 0:
            raise InvalidEllipticParametersError("omega1 must be nonzero")

    @classmethod
    def from_lame(cls, nu: complex, n: complex, omega1: complex = cmath.pi / 2, eps1: complex = 1) -> "GaugeParams":
        return cls(a=eps1 * omega1 * nu / cmath.pi, m=n * eps1, eps1=eps1, omega1=omega1)

    @property
    def nu(self) -> complex:
        return cmath.pi * self.a / (self.eps1 * self.omega1)

    @property
    def n(self) -> complex:
        return self.m / self.eps1

    @property
    def alpha(self) -> complex:
        return self.n * (self.n - 1)

    def chi(self, x: complex) -> complex:
        return cmath.pi * x / (2 * self.omega1)

    def x1(self, x: complex, q: complex) -> complex:
        return cmath.sqrt(q) * cmath.exp(-2j * self.chi(x))

    def x2(self, x: complex, q: complex) -> complex:
        return cmath.sqrt(q) * cmath.exp(2j * self.chi(x))

    def map_defect(self, x: complex, q: complex) -> float:
        """max(|x₁x₂ − q|, |(i/4)ln(x₁/x₂) − χ|); the logarithm is principal, so |Re χ| < π/4."""
        x1, x2 = self.x1(x, q), self.x2(x, q)
        return max(abs(x1 * x2 - q), abs(0.25j * cmath.log(x1 / x2) - self.chi(x)))
