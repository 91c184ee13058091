"""
Differential ring spanned by 1, x, ζ̃ and the derivatives ∂ᵏ℘̃.

℘̃ = ℘ + ζ₁ and ζ̃ = ζ − ζ₁x are the shifted Weierstrass functions; ζ₁, g₂
and g₃ are formal parameters. Only the subring {1, ∂ᵏ℘̃} is closed under
multiplication. Products go through the curve: every element of that subring
is E(℘) + ℘′·O(℘) with polynomials E, O, reduced by ℘′² = 4℘³ − g₂℘ − g₃ and
℘″ = 6℘² − g₂/2, then rewritten back in the derivative basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Tuple

from app.domain.exceptions import RingMismatchError, UnsupportedRingOperationError
from app.domain.model.scalars import ParamPoly, ScalarLike

# polynomial in P = ℘, {power: coefficient}
CurvePoly = Dict[int, ParamPoly]

_G2 = ParamPoly.symbol("g2")
_G3 = ParamPoly.symbol("g3")
_ZETA1 = ParamPoly.symbol("zeta1")


def _padd(a: CurvePoly, b: CurvePoly, scale: ParamPoly | None = None) -> CurvePoly:
    out = dict(a)
    for d, c in b.items():
        c = c * scale if scale is not None else c
        out[d] = out[d] + c if d in out else c
    return {d: c for d, c in out.items() if not c.is_zero()}


def _pmul(a: CurvePoly, b: CurvePoly) -> CurvePoly:
    out: CurvePoly = {}
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            d = d1 + d2
            out[d] = out[d] + c1 * c2 if d in out else c1 * c2
    return {d: c for d, c in out.items() if not c.is_zero()}


def _pdiff(a: CurvePoly) -> CurvePoly:
    return {d - 1: c * d for d, c in a.items() if d > 0}


def _deg(a: CurvePoly) -> int:
    return max(a) if a else -1


_CUBIC: CurvePoly = {3: ParamPoly.const(4), 1: -_G2, 0: -_G3}  # ℘′²
_SECOND: CurvePoly = {2: ParamPoly.const(6), 0: -_G2 / 2}  # ℘″

Curve = Tuple[CurvePoly, CurvePoly]  # E(℘) + ℘′·O(℘)


def _curve_mul(a: Curve, b: Curve) -> Curve:
    e1, o1 = a
    e2, o2 = b
    even = _padd(_pmul(e1, e2), _pmul(_CUBIC, _pmul(o1, o2)))
    odd = _padd(_pmul(e1, o2), _pmul(o1, e2))
    return even, odd


def _curve_diff(a: Curve) -> Curve:
    e, o = a
    even = _padd(_pmul(_SECOND, o), _pmul(_CUBIC, _pdiff(o)))
    return even, _pdiff(e)


@lru_cache(maxsize=None)
def _wp_derivative_curve(k: int) -> Curve:
    """∂ᵏ℘ on the curve."""
    if k == 0:
        return {1: ParamPoly.const(1)}, {}
    return _curve_diff(_wp_derivative_curve(k - 1))


def _curve_to_basis(curve: Curve) -> Tuple[ParamPoly, Dict[int, ParamPoly]]:
    """Rewrite E + ℘′O as const + Σ d_k ∂ᵏ℘ (unshifted)."""
    even, odd = dict(curve[0]), dict(curve[1])
    derivs: Dict[int, ParamPoly] = {}
    while _deg(even) >= 1:
        d = _deg(even)
        k = 2 * (d - 1)
        basis_even, _ = _wp_derivative_curve(k)
        factor = even[d] / basis_even[d]
        derivs[k] = derivs.get(k, ParamPoly()) + factor
        even = _padd(even, basis_even, -factor)
    while odd:
        d = _deg(odd)
        k = 2 * d + 1
        _, basis_odd = _wp_derivative_curve(k)
        factor = odd[d] / basis_odd[d]
        derivs[k] = derivs.get(k, ParamPoly()) + factor
        odd = _padd(odd, basis_odd, -factor)
    return even.get(0, ParamPoly()), derivs


@dataclass(frozen=True, eq=False)
class WeierstrassElem:
    """const + secular·x + zeta·ζ̃ + Σ derivs[k]·∂ᵏ℘̃."""

    const: ParamPoly = field(default_factory=ParamPoly)
    secular: ParamPoly = field(default_factory=ParamPoly)
    zeta: ParamPoly = field(default_factory=ParamPoly)
    derivs: Tuple[ParamPoly, ...] = ()

    def __post_init__(self) -> None:
        derivs = [ParamPoly.coerce(c) for c in self.derivs]
        while derivs and derivs[-1].is_zero():
            derivs.pop()
        object.__setattr__(self, "derivs", tuple(derivs))
        object.__setattr__(self, "const", ParamPoly.coerce(self.const))
        object.__setattr__(self, "secular", ParamPoly.coerce(self.secular))
        object.__setattr__(self, "zeta", ParamPoly.coerce(self.zeta))

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value: ScalarLike) -> "WeierstrassElem":
        return cls(const=ParamPoly.coerce(value))

    @classmethod
    def wp(cls, k: int = 0, coeff: ScalarLike = 1) -> "WeierstrassElem":
        """coeff·∂ᵏ℘̃."""
        derivs = [ParamPoly()] * k + [ParamPoly.coerce(coeff)]
        return cls(derivs=tuple(derivs))

    @classmethod
    def zeta_tilde(cls, coeff: ScalarLike = 1) -> "WeierstrassElem":
        return cls(zeta=ParamPoly.coerce(coeff))

    @classmethod
    def linear(cls, coeff: ScalarLike = 1) -> "WeierstrassElem":
        return cls(secular=ParamPoly.coerce(coeff))

    # -- queries ------------------------------------------------------------

    def deriv(self, k: int) -> ParamPoly:
        return self.derivs[k] if k < len(self.derivs) else ParamPoly()

    def is_zero(self) -> bool:
        return (
            self.const.is_zero()
            and self.secular.is_zero()
            and self.zeta.is_zero()
            and all(c.is_zero() for c in self.derivs)
        )

    def in_product_subring(self) -> bool:
        return self.secular.is_zero() and self.zeta.is_zero()

    # -- algebra ------------------------------------------------------------

    def map_coefficients(self, fn: Callable[[ParamPoly], ParamPoly]) -> "WeierstrassElem":
        return WeierstrassElem(
            fn(self.const), fn(self.secular), fn(self.zeta), tuple(fn(c) for c in self.derivs)
        )

    def split(self, name: str) -> Dict[int, "WeierstrassElem"]:
        powers = set()
        for c in (self.const, self.secular, self.zeta, *self.derivs):
            powers.update(c.split(name))
        return {
            p: self.map_coefficients(lambda c, p=p: c.split(name).get(p, ParamPoly()))
            for p in powers
        }

    def _coerce(self, other: object) -> "WeierstrassElem":
        if isinstance(other, WeierstrassElem):
            return other
        if isinstance(other, (ParamPoly, int, Fraction)):
            return WeierstrassElem.constant(other)
        raise RingMismatchError(f"cannot combine WeierstrassElem with {type(other).__name__}")

    def __add__(self, other: object) -> "WeierstrassElem":
        o = self._coerce(other)
        n = max(len(self.derivs), len(o.derivs))
        derivs = tuple(self.deriv(k) + o.deriv(k) for k in range(n))
        return WeierstrassElem(
            self.const + o.const, self.secular + o.secular, self.zeta + o.zeta, derivs
        )

    __radd__ = __add__

    def __neg__(self) -> "WeierstrassElem":
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other: object) -> "WeierstrassElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "WeierstrassElem":
        return self._coerce(other) - self

    def _to_curve(self) -> Curve:
        # ∂⁰℘̃ = ℘ + ζ₁; higher derivatives are unshifted
        base = self.const + self.deriv(0) * _ZETA1
        curve: Curve = ({} if base.is_zero() else {0: base}, {})
        for k, c in enumerate(self.derivs):
            if c.is_zero():
                continue
            e, o = _wp_derivative_curve(k)
            curve = (_padd(curve[0], e, c), _padd(curve[1], o, c))
        return curve

    @classmethod
    def _from_curve(cls, curve: Curve) -> "WeierstrassElem":
        const, derivs = _curve_to_basis(curve)
        # ℘ = ℘̃ − ζ₁
        const = const - derivs.get(0, ParamPoly()) * _ZETA1
        n = max(derivs) + 1 if derivs else 0
        return cls(const=const, derivs=tuple(derivs.get(k, ParamPoly()) for k in range(n)))

    def __mul__(self, other: object) -> "WeierstrassElem":
        if isinstance(other, (ParamPoly, int, Fraction)):
            scalar = ParamPoly.coerce(other)
            return self.map_coefficients(lambda c: c * scalar)
        o = self._coerce(other)
        if self.is_zero() or o.is_zero():
            return WeierstrassElem()
        if not self.in_product_subring() or not o.in_product_subring():
            raise UnsupportedRingOperationError("x and ζ̃ terms cannot be multiplied in this ring")
        return WeierstrassElem._from_curve(_curve_mul(self._to_curve(), o._to_curve()))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (WeierstrassElem, ParamPoly, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    # -- calculus -----------------------------------------------------------

    def diff(self) -> "WeierstrassElem":
        # ∂ζ̃ = −℘̃, ∂x = 1
        return WeierstrassElem(const=self.secular, derivs=(-self.zeta,) + self.derivs)

    def antiderivative(self) -> "WeierstrassElem":
        if not self.in_product_subring():
            raise UnsupportedRingOperationError("x and ζ̃ have no antiderivative in this ring")
        return WeierstrassElem(
            secular=self.const, zeta=-self.deriv(0), derivs=self.derivs[1:]
        )

    def reflect(self) -> "WeierstrassElem":
        """x -> -x: ∂ᵏ℘̃ has parity (−1)ᵏ, ζ̃ and x are odd."""
        return WeierstrassElem(
            self.const,
            -self.secular,
            -self.zeta,
            tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.derivs)),
        )

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        pieces = []
        if not self.const.is_zero():
            pieces.append(str(self.const))
        for coeff, basis in ((self.secular, "x"), (self.zeta, "zetat")):
            if not coeff.is_zero():
                pieces.append(_scaled(coeff, basis))
        for k, c in enumerate(self.derivs):
            if not c.is_zero():
                pieces.append(_scaled(c, "wpt" + "'" * k if k < 4 else f"wpt^({k})"))
        return " + ".join(pieces).replace("+ -", "- ") if pieces else "0"

    def __repr__(self) -> str:
        return f"WeierstrassElem({self})"


def _scaled(coeff: ParamPoly, basis: str) -> str:
    if coeff == 1:
        return basis
    text = str(coeff)
    if len(coeff.terms) > 1 or text.startswith("("):
        text = f"({text})"
    return f"{text}*{basis}"
