"""
Quotient ring of polynomials in sn, cn, dn over monomial denominators snᵖ·cnᵍ.

dn² is always reduced by dn² = 1 − k²sn²; sn² + cn² = 1 is only applied by
``normal_form`` (equality testing), so printed forms keep both sn and cn.
With ``trig=True`` the modulus is zero: sn, cn become sin, cos and dn ≡ 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Mapping, Tuple

from app.domain.exceptions import NonMonomialDivisionError, RingMismatchError
from app.domain.model.scalars import ParamPoly, ScalarLike

Monomial = Tuple[int, int, int]  # powers of (sn, cn, dn); dn power is 0 or 1

_K2 = ParamPoly.symbol("k", 2)


def _add_term(out: Dict[Monomial, ParamPoly], key: Monomial, coeff: ParamPoly, trig: bool) -> None:
    a, b, c = key
    if trig:
        c = 0
    if c >= 2:
        # dn² = 1 − k² sn²
        half, rest = divmod(c, 2)
        base = {(a, b, rest): coeff}
        for _ in range(half):
            nxt: Dict[Monomial, ParamPoly] = {}
            for (x, y, z), v in base.items():
                nxt[(x, y, z)] = nxt.get((x, y, z), ParamPoly()) + v
                nxt[(x + 2, y, z)] = nxt.get((x + 2, y, z), ParamPoly()) - v * _K2
            base = nxt
        for k, v in base.items():
            out[k] = out[k] + v if k in out else v
        return
    key = (a, b, c)
    out[key] = out[key] + coeff if key in out else coeff


@dataclass(frozen=True, eq=False)
class JacobiElem:
    """Σ coeff·snᵃcnᵇdnᶜ / (sn^den_sn · cn^den_cn)."""

    numerator: Mapping[Monomial, ParamPoly] = field(default_factory=dict)
    den_sn: int = 0
    den_cn: int = 0
    trig: bool = False

    def __post_init__(self) -> None:
        clean: Dict[Monomial, ParamPoly] = {}
        for key, coeff in self.numerator.items():
            _add_term(clean, key, ParamPoly.coerce(coeff), self.trig)
        clean = {k: v for k, v in clean.items() if not v.is_zero()}
        den_sn, den_cn = self.den_sn, self.den_cn
        if not clean:
            den_sn = den_cn = 0
        else:
            common_sn = min(min(k[0] for k in clean), den_sn)
            common_cn = min(min(k[1] for k in clean), den_cn)
            if common_sn or common_cn:
                clean = {(a - common_sn, b - common_cn, c): v for (a, b, c), v in clean.items()}
                den_sn -= common_sn
                den_cn -= common_cn
        object.__setattr__(self, "numerator", clean)
        object.__setattr__(self, "den_sn", den_sn)
        object.__setattr__(self, "den_cn", den_cn)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value: ScalarLike, trig: bool = False) -> "JacobiElem":
        return cls({(0, 0, 0): ParamPoly.coerce(value)}, trig=trig)

    @classmethod
    def monomial(
        cls,
        coeff: ScalarLike = 1,
        sn: int = 0,
        cn: int = 0,
        dn: int = 0,
        trig: bool = False,
    ) -> "JacobiElem":
        """coeff·snᵃcnᵇdnᶜ; negative sn/cn powers go to the denominator."""
        return cls(
            {(max(sn, 0), max(cn, 0), dn): ParamPoly.coerce(coeff)},
            den_sn=max(-sn, 0),
            den_cn=max(-cn, 0),
            trig=trig,
        )

    @classmethod
    def sn(cls, trig: bool = False) -> "JacobiElem":
        return cls.monomial(sn=1, trig=trig)

    @classmethod
    def cn(cls, trig: bool = False) -> "JacobiElem":
        return cls.monomial(cn=1, trig=trig)

    @classmethod
    def dn(cls) -> "JacobiElem":
        return cls.monomial(dn=1)

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        numerator, _, _ = self.normal_form()
        return not numerator

    def is_monomial(self) -> bool:
        if len(self.numerator) != 1:
            return False
        ((_, coeff),) = self.numerator.items()
        return coeff.is_monomial()

    # -- algebra ------------------------------------------------------------

    def map_coefficients(self, fn: Callable[[ParamPoly], ParamPoly]) -> "JacobiElem":
        return JacobiElem(
            {k: fn(v) for k, v in self.numerator.items()}, self.den_sn, self.den_cn, self.trig
        )

    def split(self, name: str) -> Dict[int, "JacobiElem"]:
        powers = set()
        for c in self.numerator.values():
            powers.update(c.split(name))
        return {
            p: self.map_coefficients(lambda c, p=p: c.split(name).get(p, ParamPoly()))
            for p in powers
        }

    def _coerce(self, other: object) -> "JacobiElem":
        if isinstance(other, JacobiElem):
            if other.trig != self.trig:
                raise RingMismatchError("trigonometric and Jacobi elements do not mix")
            return other
        if isinstance(other, (ParamPoly, int, Fraction)):
            return JacobiElem.constant(other, trig=self.trig)
        raise RingMismatchError(f"cannot combine JacobiElem with {type(other).__name__}")

    def _raised(self, den_sn: int, den_cn: int) -> Dict[Monomial, ParamPoly]:
        """Numerator over the larger denominator sn^den_sn·cn^den_cn."""
        da, db = den_sn - self.den_sn, den_cn - self.den_cn
        return {(a + da, b + db, c): v for (a, b, c), v in self.numerator.items()}

    def __add__(self, other: object) -> "JacobiElem":
        o = self._coerce(other)
        den_sn, den_cn = max(self.den_sn, o.den_sn), max(self.den_cn, o.den_cn)
        merged = self._raised(den_sn, den_cn)
        for k, v in o._raised(den_sn, den_cn).items():
            merged[k] = merged[k] + v if k in merged else v
        return JacobiElem(merged, den_sn, den_cn, self.trig)

    __radd__ = __add__

    def __neg__(self) -> "JacobiElem":
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other: object) -> "JacobiElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "JacobiElem":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "JacobiElem":
        if isinstance(other, (ParamPoly, int, Fraction)):
            scalar = ParamPoly.coerce(other)
            return self.map_coefficients(lambda c: c * scalar)
        o = self._coerce(other)
        out: Dict[Monomial, ParamPoly] = {}
        for (a1, b1, c1), v1 in self.numerator.items():
            for (a2, b2, c2), v2 in o.numerator.items():
                _add_term(out, (a1 + a2, b1 + b2, c1 + c2), v1 * v2, self.trig)
        return JacobiElem(out, self.den_sn + o.den_sn, self.den_cn + o.den_cn, self.trig)

    __rmul__ = __mul__

    def divide(self, other: "JacobiElem") -> "JacobiElem":
        """Exact division by a monomial c·snᵃcnᵇ (no dn factor)."""
        o = self._coerce(other)
        if not o.is_monomial():
            raise NonMonomialDivisionError(f"cannot divide by non-monomial {o}")
        ((a, b, c), coeff) = next(iter(o.numerator.items()))
        if c:
            raise NonMonomialDivisionError("division by dn leaves the ring")
        inv = coeff.inverse()
        raised = {(x + o.den_sn, y + o.den_cn, z): v * inv for (x, y, z), v in self.numerator.items()}
        return JacobiElem(raised, self.den_sn + a, self.den_cn + b, self.trig)

    def __truediv__(self, other: object) -> "JacobiElem":
        if isinstance(other, (ParamPoly, int, Fraction)):
            inv = ParamPoly.coerce(other).inverse()
            return self.map_coefficients(lambda c: c * inv)
        if isinstance(other, JacobiElem):
            return self.divide(other)
        return NotImplemented

    def normal_form(self) -> Tuple[Dict[Monomial, ParamPoly], int, int]:
        """Numerator with cn² → 1 − sn² applied; cn powers at most one."""
        out: Dict[Monomial, ParamPoly] = {}
        for (a, b, c), v in self.numerator.items():
            half, rest = divmod(b, 2)
            # cn^(2h) = (1 − sn²)^h
            terms = {(a, rest, c): v}
            for _ in range(half):
                nxt: Dict[Monomial, ParamPoly] = {}
                for (x, y, z), w in terms.items():
                    nxt[(x, y, z)] = nxt.get((x, y, z), ParamPoly()) + w
                    nxt[(x + 2, y, z)] = nxt.get((x + 2, y, z), ParamPoly()) - w
                terms = nxt
            for k, w in terms.items():
                out[k] = out[k] + w if k in out else w
        return {k: v for k, v in out.items() if not v.is_zero()}, self.den_sn, self.den_cn

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (JacobiElem, ParamPoly, int, Fraction)):
            return NotImplemented
        numerator, _, _ = (self - other).normal_form()
        return not numerator

    __hash__ = None  # type: ignore[assignment]

    # -- calculus -----------------------------------------------------------

    def _numerator_diff(self) -> Dict[Monomial, ParamPoly]:
        out: Dict[Monomial, ParamPoly] = {}
        for (a, b, c), v in self.numerator.items():
            # sn' = cn dn, cn' = −sn dn, dn' = −k² sn cn
            if a:
                _add_term(out, (a - 1, b + 1, c + 1), v * a, self.trig)
            if b:
                _add_term(out, (a + 1, b - 1, c + 1), v * (-b), self.trig)
            if c and not self.trig:
                _add_term(out, (a + 1, b + 1, c - 1), v * (-c) * _K2, self.trig)
        return out

    def diff(self) -> "JacobiElem":
        p, q = self.den_sn, self.den_cn
        # [N' sn cn − p N cn² dn + q N sn² dn] / (sn^(p+1) cn^(q+1))
        out: Dict[Monomial, ParamPoly] = {}
        for (a, b, c), v in self._numerator_diff().items():
            _add_term(out, (a + 1, b + 1, c), v, self.trig)
        for (a, b, c), v in self.numerator.items():
            if p:
                _add_term(out, (a, b + 2, c + 1), v * (-p), self.trig)
            if q:
                _add_term(out, (a + 2, b, c + 1), v * q, self.trig)
        return JacobiElem(out, p + 1, q + 1, self.trig)

    def reflect(self) -> "JacobiElem":
        """z -> −z: sn is odd, cn and dn are even."""
        return JacobiElem(
            {(a, b, c): (v if (a - self.den_sn) % 2 == 0 else -v) for (a, b, c), v in self.numerator.items()},
            self.den_sn,
            self.den_cn,
            self.trig,
        )

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.numerator:
            return "0"
        names = ("sin", "cos", "1") if self.trig else ("sn", "cn", "dn")
        pieces = []
        for key in sorted(self.numerator):
            v = self.numerator[key]
            mono = "*".join(
                name if p == 1 else f"{name}^{p}" for name, p in zip(names, key) if p
            )
            text = str(v)
            if not mono:
                pieces.append(text)
            elif v == 1:
                pieces.append(mono)
            else:
                pieces.append(f"({text})*{mono}" if len(v.terms) > 1 else f"{text}*{mono}")
        body = " + ".join(pieces).replace("+ -", "- ")
        den = "*".join(
            name if p == 1 else f"{name}^{p}"
            for name, p in zip(names[:2], (self.den_sn, self.den_cn))
            if p
        )
        if not den:
            return body
        if len(pieces) > 1:
            body = f"({body})"
        return f"{body}/{den}" if "*" not in den else f"{body}/({den})"

    def __repr__(self) -> str:
        return f"JacobiElem({self})"
