"""
Exact scalars for the symbolic layer.

GaussianRational is a pair of Fractions with i² = −1. ParamPoly is a Laurent
polynomial over Gaussian rationals in a fixed set of named formal parameters.
The complementary modulus k′ is kept as its own symbol and every positive
power k′^e with e ≥ 2 is reduced by k′² = 1 − k². Negative powers of k′ are
allowed (closed forms divide by k′); zero testing clears them first.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Mapping, Tuple, Union

from app.domain.exceptions import NonMonomialDivisionError, UnboundParameterError

# Order matters: it fixes the exponent tuple layout and the canonical text.
SYMBOLS: Tuple[str, ...] = (
    "h",
    "delta",
    "alpha",
    "k",
    "kp",
    "Lambda",
    "Lambdat",
    "zeta1",
    "g2",
    "g3",
    "n",
    "mu",
    "nu",
)
_INDEX: Dict[str, int] = {name: i for i, name in enumerate(SYMBOLS)}
_K = _INDEX["k"]
_KP = _INDEX["kp"]
_ZERO_EXP: Tuple[int, ...] = (0,) * len(SYMBOLS)

Exponent = Tuple[int, ...]
ScalarLike = Union[int, Fraction, "GaussianRational", "ParamPoly"]

_GAUSS_RE = re.compile(r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*(?:(?P<sign>[+-])\s*(?P<im>\d+(?:/\d+)?)\*i)?\s*$")


@dataclass(frozen=True)
class GaussianRational:
    """p/q + (r/s)·i with exact Fractions."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, value: Union[int, Fraction, "GaussianRational"]) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value), Fraction(0))
        raise TypeError(f"cannot make a Gaussian rational from {value!r}")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Inverse of ``str``: accepts "p/q", "r/s*i", "p/q+r/s*i"."""
        text = text.strip()
        if text.endswith("*i") and "+" not in text[1:] and "-" not in text[1:]:
            return cls(Fraction(0), Fraction(text[:-2]))
        match = _GAUSS_RE.match(text)
        if not match or (match.group("re") is None and match.group("im") is None):
            raise ValueError(f"not a Gaussian rational: {text!r}")
        real = Fraction(match.group("re")) if match.group("re") else Fraction(0)
        imag = Fraction(0)
        if match.group("im"):
            imag = Fraction(match.group("im"))
            if match.group("sign") == "-":
                imag = -imag
        return cls(real, imag)

    def __add__(self, other: object) -> "GaussianRational":
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: object) -> "GaussianRational":
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other: object) -> "GaussianRational":
        return GaussianRational.of(other) - self  # type: ignore[arg-type]

    def __mul__(self, other: object) -> "GaussianRational":
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        o = GaussianRational.of(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: object) -> "GaussianRational":
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        return self * GaussianRational.of(other).inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GaussianRational(Fraction(1))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


ONE_G = GaussianRational(Fraction(1))
I_G = GaussianRational(Fraction(0), Fraction(1))


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _canonical(terms: Mapping[Exponent, GaussianRational]) -> Dict[Exponent, GaussianRational]:
    out: Dict[Exponent, GaussianRational] = {}
    for exp, coeff in terms.items():
        if not coeff:
            continue
        e = exp[_KP]
        if e < 2:
            out[exp] = out.get(exp, GaussianRational()) + coeff
            continue
        # k'^e = k'^(e mod 2) (1 - k^2)^(e // 2)
        half, rest = divmod(e, 2)
        for j in range(half + 1):
            c = coeff * (comb(half, j) * (-1) ** j)
            new = list(exp)
            new[_KP] = rest
            new[_K] += 2 * j
            key = tuple(new)
            out[key] = out.get(key, GaussianRational()) + c
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True, eq=False)
class ParamPoly:
    """Laurent polynomial in the named parameters with Gaussian-rational coefficients."""

    terms: Mapping[Exponent, GaussianRational] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _canonical(self.terms))

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, value: Union[int, Fraction, GaussianRational]) -> "ParamPoly":
        return cls({_ZERO_EXP: GaussianRational.of(value)})

    @classmethod
    def symbol(cls, name: str, power: int = 1) -> "ParamPoly":
        exp = list(_ZERO_EXP)
        exp[_INDEX[name]] = power
        return cls({tuple(exp): ONE_G})

    @classmethod
    def monomial(cls, coeff: Union[int, Fraction, GaussianRational], **powers: int) -> "ParamPoly":
        exp = list(_ZERO_EXP)
        for name, power in powers.items():
            exp[_INDEX[name]] = power
        return cls({tuple(exp): GaussianRational.of(coeff)})

    @classmethod
    def coerce(cls, value: ScalarLike) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        return cls.const(value)  # type: ignore[arg-type]

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        if not self.terms:
            return True
        low = min(exp[_KP] for exp in self.terms)
        if low >= 0:
            return False
        shift = -low + (-low) % 2
        shifted = {}
        for exp, c in self.terms.items():
            new = list(exp)
            new[_KP] += shift
            shifted[tuple(new)] = c
        return not _canonical(shifted)

    def is_constant(self) -> bool:
        return all(exp == _ZERO_EXP for exp in self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get(_ZERO_EXP, GaussianRational())

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self, name: str) -> int:
        idx = _INDEX[name]
        return max((exp[idx] for exp in self.terms), default=0)

    def depends_on(self, name: str) -> bool:
        idx = _INDEX[name]
        return any(exp[idx] != 0 for exp in self.terms)

    def split(self, name: str) -> Dict[int, "ParamPoly"]:
        """Group terms by the power of one parameter: {power: coefficient poly}."""
        idx = _INDEX[name]
        groups: Dict[int, Dict[Exponent, GaussianRational]] = {}
        for exp, c in self.terms.items():
            stripped = list(exp)
            stripped[idx] = 0
            groups.setdefault(exp[idx], {})[tuple(stripped)] = c
        return {power: ParamPoly(t) for power, t in groups.items()}

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: object) -> "ParamPoly":
        if not isinstance(other, (ParamPoly, GaussianRational, int, Fraction)):
            return NotImplemented
        o = ParamPoly.coerce(other)  # type: ignore[arg-type]
        merged = dict(self.terms)
        for exp, c in o.terms.items():
            merged[exp] = merged.get(exp, GaussianRational()) + c
        return ParamPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly({exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other: object) -> "ParamPoly":
        if not isinstance(other, (ParamPoly, GaussianRational, int, Fraction)):
            return NotImplemented
        return self + (-ParamPoly.coerce(other))  # type: ignore[arg-type]

    def __rsub__(self, other: object) -> "ParamPoly":
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        return ParamPoly.coerce(other) - self

    def __mul__(self, other: object) -> "ParamPoly":
        if not isinstance(other, (ParamPoly, GaussianRational, int, Fraction)):
            return NotImplemented
        o = ParamPoly.coerce(other)  # type: ignore[arg-type]
        out: Dict[Exponent, GaussianRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                key = _add_exp(e1, e2)
                out[key] = out.get(key, GaussianRational()) + c1 * c2
        return ParamPoly(out)

    __rmul__ = __mul__

    def inverse(self) -> "ParamPoly":
        if not self.is_monomial():
            raise NonMonomialDivisionError(f"cannot invert non-monomial {self}")
        ((exp, c),) = self.terms.items()
        return ParamPoly({tuple(-e for e in exp): c.inverse()})

    def __truediv__(self, other: object) -> "ParamPoly":
        if not isinstance(other, (ParamPoly, GaussianRational, int, Fraction)):
            return NotImplemented
        return self * ParamPoly.coerce(other).inverse()  # type: ignore[arg-type]

    def __pow__(self, exponent: int) -> "ParamPoly":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ParamPoly.const(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (ParamPoly, GaussianRational, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def substitute(self, name: str, value: "ParamPoly") -> "ParamPoly":
        """Replace one parameter by a polynomial (negative powers need a monomial)."""
        result = ParamPoly()
        for power, rest in self.split(name).items():
            result = result + rest * (value**power)
        return result

    # -- numerics -----------------------------------------------------------

    def evaluate(self, bindings: Mapping[str, complex]) -> complex:
        values = dict(bindings)
        if "kp" not in values and "k" in values:
            values["kp"] = cmath.sqrt(1 - values["k"] ** 2)
        total = 0j
        for exp, c in self.terms.items():
            term = complex(c)
            for idx, power in enumerate(exp):
                if power == 0:
                    continue
                name = SYMBOLS[idx]
                if name not in values:
                    raise UnboundParameterError(f"parameter {name!r} is not bound")
                term *= complex(values[name]) ** power
            total += term
        return total

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, key=lambda e: (sum(abs(x) for x in e), e)):
            c = self.terms[exp]
            mono = "*".join(
                name if p == 1 else f"{name}^{p}" for name, p in zip(SYMBOLS, exp) if p != 0
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append(f"-{mono}")
            else:
                cs = f"({c})" if c.re != 0 and c.im != 0 else str(c)
                pieces.append(f"{cs}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"ParamPoly({self})"


def poly_sum(items: Iterable[ParamPoly]) -> ParamPoly:
    total = ParamPoly()
    for item in items:
        total = total + item
    return total


ZERO = ParamPoly()
ONE = ParamPoly.const(1)
I = ParamPoly.const(I_G)


def P(name: str, power: int = 1) -> ParamPoly:
    """Short constructor used by the data tables."""
    return ParamPoly.symbol(name, power)


def Q(num: int, den: int = 1, imag: bool = False) -> ParamPoly:
    """Rational (or purely imaginary rational) constant."""
    value = Fraction(num, den)
    return ParamPoly.const(GaussianRational(Fraction(0), value) if imag else value)
