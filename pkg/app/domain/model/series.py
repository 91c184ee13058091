from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional, Sequence, Tuple

from app.domain.exceptions import SeriesSymbolMismatchError, TruncationError
from app.domain.model.scalars import ZERO, ParamPoly

# Coefficients are ParamPoly or ring elements; both provide + - * and is_zero().
Coefficient = Any


def _zero_like(sample: Optional[Coefficient]) -> Coefficient:
    if sample is None:
        return ZERO
    return sample - sample


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Σ coeffs[j]·symbol^(lead+j), known for exponents lead..order−1."""

    symbol: str
    lead: int
    coeffs: Tuple[Coefficient, ...]
    order: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.order < self.lead:
            raise TruncationError(f"order {self.order} below lead {self.lead}")
        if len(self.coeffs) != self.order - self.lead:
            raise TruncationError(
                f"{len(self.coeffs)} coefficients for exponents {self.lead}..{self.order - 1}"
            )

    # -- construction -------------------------------------------------------

    @classmethod
    def from_terms(
        cls,
        symbol: str,
        terms: Mapping[int, Coefficient],
        order: int,
        lead: Optional[int] = None,
    ) -> "TruncatedSeries":
        """Build from a sparse {exponent: coefficient} map, zero-filling the gaps."""
        if lead is None:
            lead = min(terms) if terms else order
        sample = next(iter(terms.values()), None)
        zero = _zero_like(sample)
        for exp in terms:
            if exp < lead or exp >= order:
                raise TruncationError(f"exponent {exp} outside {lead}..{order - 1}")
        coeffs = tuple(terms.get(e, zero) for e in range(lead, order))
        return cls(symbol, lead, coeffs, order)

    @classmethod
    def monomial(cls, symbol: str, exponent: int, coeff: Coefficient, order: int) -> "TruncatedSeries":
        return cls.from_terms(symbol, {exponent: coeff}, order, lead=exponent)

    # -- access -------------------------------------------------------------

    @property
    def zero(self) -> Coefficient:
        return _zero_like(self.coeffs[0] if self.coeffs else None)

    def coefficient(self, exponent: int) -> Coefficient:
        if exponent >= self.order:
            raise TruncationError(f"{self.symbol}^{exponent} is beyond order {self.order}")
        if exponent < self.lead:
            return self.zero
        return self.coeffs[exponent - self.lead]

    def items(self) -> Sequence[Tuple[int, Coefficient]]:
        return [(self.lead + j, c) for j, c in enumerate(self.coeffs)]

    def normalized(self) -> "TruncatedSeries":
        """Drop leading zero coefficients (raising lead)."""
        j = 0
        while j < len(self.coeffs) and self.coeffs[j].is_zero():
            j += 1
        if j == 0:
            return self
        return TruncatedSeries(self.symbol, self.lead + j, self.coeffs[j:], self.order)

    def leading(self) -> Tuple[int, Coefficient]:
        s = self.normalized()
        if not s.coeffs:
            raise TruncationError("series has no known nonzero coefficient")
        return s.lead, s.coeffs[0]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    # -- light arithmetic ---------------------------------------------------

    def truncated(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        if order <= self.lead:
            return TruncatedSeries(self.symbol, order, (), order)
        return TruncatedSeries(self.symbol, self.lead, self.coeffs[: order - self.lead], order)

    def shifted(self, k: int) -> "TruncatedSeries":
        """Multiply by symbol^k."""
        return TruncatedSeries(self.symbol, self.lead + k, self.coeffs, self.order + k)

    def map(self, fn: Callable[[Coefficient], Coefficient]) -> "TruncatedSeries":
        return TruncatedSeries(self.symbol, self.lead, tuple(fn(c) for c in self.coeffs), self.order)

    def scale(self, factor: Coefficient) -> "TruncatedSeries":
        return self.map(lambda c: c * factor)

    def _check_symbol(self, other: "TruncatedSeries") -> None:
        if self.symbol != other.symbol:
            raise SeriesSymbolMismatchError(f"{self.symbol!r} vs {other.symbol!r}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_symbol(other)
        order = min(self.order, other.order)
        lead = min(self.lead, other.lead, order)
        coeffs = []
        for e in range(lead, order):
            if e < self.lead:
                coeffs.append(other.coefficient(e))
            elif e < other.lead:
                coeffs.append(self.coefficient(e))
            else:
                coeffs.append(self.coefficient(e) + other.coefficient(e))
        return TruncatedSeries(self.symbol, lead, tuple(coeffs), order)

    def __neg__(self) -> "TruncatedSeries":
        return self.map(lambda c: -c)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def equals(self, other: "TruncatedSeries") -> bool:
        """Same symbol, same order, equal coefficients (missing low terms read as zero)."""
        if self.symbol != other.symbol or self.order != other.order:
            return False
        return (self - other).is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        body = " + ".join(
            f"({c})*{self.symbol}^{e}" for e, c in self.items() if not c.is_zero()
        )
        return f"{body or '0'} + O({self.symbol}^{self.order})"


def scalar_series(symbol: str, terms: Mapping[int, ParamPoly], order: int) -> TruncatedSeries:
    return TruncatedSeries.from_terms(symbol, terms, order)
