from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Tuple

from app.domain.exceptions import RingMismatchError, UnsupportedRingOperationError
from app.domain.model.scalars import ParamPoly, ScalarLike

COS = "cos"
SIN = "sin"

Mode = Tuple[int, str]  # (frequency n >= 0, "cos" | "sin"), cos(n x) or sin(n x)


def _accumulate(out: Dict[Mode, ParamPoly], mode: Mode, coeff: ParamPoly) -> None:
    n, kind = mode
    if n < 0:
        n = -n
        if kind == SIN:
            coeff = -coeff
    if n == 0 and kind == SIN:
        return
    key = (n, kind)
    out[key] = out[key] + coeff if key in out else coeff


@dataclass(frozen=True, eq=False)
class FourierTrigPoly:
    """secular·x + Σ c·cos(n x) + Σ s·sin(n x) with ParamPoly coefficients."""

    secular: ParamPoly = field(default_factory=ParamPoly)
    modes: Mapping[Mode, ParamPoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: Dict[Mode, ParamPoly] = {}
        for mode, coeff in self.modes.items():
            _accumulate(clean, mode, ParamPoly.coerce(coeff))
        object.__setattr__(self, "modes", {m: c for m, c in clean.items() if not c.is_zero()})
        object.__setattr__(self, "secular", ParamPoly.coerce(self.secular))

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value: ScalarLike) -> "FourierTrigPoly":
        return cls(modes={(0, COS): ParamPoly.coerce(value)})

    @classmethod
    def cos(cls, n: int, coeff: ScalarLike = 1) -> "FourierTrigPoly":
        return cls(modes={(n, COS): ParamPoly.coerce(coeff)})

    @classmethod
    def sin(cls, n: int, coeff: ScalarLike = 1) -> "FourierTrigPoly":
        return cls(modes={(n, SIN): ParamPoly.coerce(coeff)})

    @classmethod
    def linear(cls, coeff: ScalarLike = 1) -> "FourierTrigPoly":
        return cls(secular=ParamPoly.coerce(coeff))

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.secular.is_zero() and not self.modes

    def mean(self) -> ParamPoly:
        return self.modes.get((0, COS), ParamPoly())

    def mode(self, n: int, kind: str) -> ParamPoly:
        return self.modes.get((n, kind), ParamPoly())

    def coefficients(self) -> Iterable[ParamPoly]:
        yield self.secular
        yield from self.modes.values()

    # -- algebra ------------------------------------------------------------

    def map_coefficients(self, fn: Callable[[ParamPoly], ParamPoly]) -> "FourierTrigPoly":
        return FourierTrigPoly(fn(self.secular), {m: fn(c) for m, c in self.modes.items()})

    def split(self, name: str) -> Dict[int, "FourierTrigPoly"]:
        powers = set(self.secular.split(name))
        for c in self.modes.values():
            powers.update(c.split(name))
        return {
            p: self.map_coefficients(lambda c, p=p: c.split(name).get(p, ParamPoly()))
            for p in powers
        }

    def _coerce(self, other: object) -> "FourierTrigPoly":
        if isinstance(other, FourierTrigPoly):
            return other
        if isinstance(other, (ParamPoly, int, Fraction)):
            return FourierTrigPoly.constant(other)
        raise RingMismatchError(f"cannot combine FourierTrigPoly with {type(other).__name__}")

    def __add__(self, other: object) -> "FourierTrigPoly":
        o = self._coerce(other)
        modes = dict(self.modes)
        for m, c in o.modes.items():
            modes[m] = modes[m] + c if m in modes else c
        return FourierTrigPoly(self.secular + o.secular, modes)

    __radd__ = __add__

    def __neg__(self) -> "FourierTrigPoly":
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other: object) -> "FourierTrigPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "FourierTrigPoly":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "FourierTrigPoly":
        if isinstance(other, (ParamPoly, int, Fraction)):
            scalar = ParamPoly.coerce(other)
            return self.map_coefficients(lambda c: c * scalar)
        o = self._coerce(other)
        if self.is_zero() or o.is_zero():
            return FourierTrigPoly()
        if not self.secular.is_zero() or not o.secular.is_zero():
            raise UnsupportedRingOperationError("products with a secular x-term leave the ring")
        half = ParamPoly.const(Fraction(1, 2))
        out: Dict[Mode, ParamPoly] = {}
        for (n1, k1), c1 in self.modes.items():
            for (n2, k2), c2 in o.modes.items():
                c = c1 * c2 * half
                if k1 == COS and k2 == COS:
                    _accumulate(out, (n1 - n2, COS), c)
                    _accumulate(out, (n1 + n2, COS), c)
                elif k1 == SIN and k2 == SIN:
                    _accumulate(out, (n1 - n2, COS), c)
                    _accumulate(out, (n1 + n2, COS), -c)
                elif k1 == SIN:
                    _accumulate(out, (n1 + n2, SIN), c)
                    _accumulate(out, (n1 - n2, SIN), c)
                else:
                    _accumulate(out, (n2 + n1, SIN), c)
                    _accumulate(out, (n2 - n1, SIN), c)
        return FourierTrigPoly(ParamPoly(), out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (FourierTrigPoly, ParamPoly, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    # -- calculus -----------------------------------------------------------

    def diff(self) -> "FourierTrigPoly":
        out: Dict[Mode, ParamPoly] = {(0, COS): self.secular}
        for (n, kind), c in self.modes.items():
            if kind == COS:
                _accumulate(out, (n, SIN), c * (-n))
            else:
                _accumulate(out, (n, COS), c * n)
        return FourierTrigPoly(ParamPoly(), out)

    def antiderivative(self) -> "FourierTrigPoly":
        if not self.secular.is_zero():
            raise UnsupportedRingOperationError("the antiderivative of x is not in the ring")
        out: Dict[Mode, ParamPoly] = {}
        secular = ParamPoly()
        for (n, kind), c in self.modes.items():
            if n == 0:
                secular = c
            elif kind == COS:
                _accumulate(out, (n, SIN), c / n)
            else:
                _accumulate(out, (n, COS), -(c / n))
        return FourierTrigPoly(secular, out)

    def reflect(self) -> "FourierTrigPoly":
        """x -> -x."""
        modes = {m: (c if m[1] == COS else -c) for m, c in self.modes.items()}
        return FourierTrigPoly(-self.secular, modes)

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        pieces = []
        if not self.secular.is_zero():
            pieces.append(_scaled(self.secular, "x"))
        for (n, kind) in sorted(self.modes, key=lambda m: (m[0], m[1] != COS)):
            c = self.modes[(n, kind)]
            if n == 0:
                pieces.append(str(c))
            else:
                pieces.append(_scaled(c, f"{kind}({n}x)"))
        return " + ".join(pieces).replace("+ -", "- ") if pieces else "0"

    def __repr__(self) -> str:
        return f"FourierTrigPoly({self})"


def _scaled(coeff: ParamPoly, basis: str) -> str:
    if coeff == 1:
        return basis
    text = str(coeff)
    if len(coeff.terms) > 1 or text.startswith("("):
        text = f"({text})"
    return f"{text}*{basis}"
