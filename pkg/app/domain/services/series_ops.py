"""
Truncated formal power series over exact coefficient rings.

All operations are pure and propagate truncation pessimistically: a result
never claims an exponent that some unknown input coefficient could reach.
Coefficients are ParamPoly scalars or function-ring elements; scalars act on
ring elements, so a scalar series may multiply a ring-valued series.
"""

from __future__ import annotations

import json
from typing import Dict, List, Optional

from app.domain.exceptions import (
    SeriesBranchError,
    SeriesRingMismatchError,
    SeriesSymbolMismatchError,
    TruncationError,
)
from app.domain.model.scalars import ONE, ParamPoly
from app.domain.model.series import Coefficient, TruncatedSeries

_HALF = ParamPoly.const(1) / 2


def _ring_kind(s: TruncatedSeries) -> Optional[type]:
    for c in s.coeffs:
        if not isinstance(c, ParamPoly):
            return type(c)
    return None


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.symbol != b.symbol:
        raise SeriesSymbolMismatchError(f"{a.symbol!r} vs {b.symbol!r}")
    ka, kb = _ring_kind(a), _ring_kind(b)
    if ka is not None and kb is not None and ka is not kb:
        raise SeriesRingMismatchError(f"{ka.__name__} vs {kb.__name__}")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller relative precision."""
    _check_compatible(a, b)
    n = min(len(a.coeffs), len(b.coeffs))
    lead = a.lead + b.lead
    out: List[Coefficient] = []
    for k in range(n):
        total = None
        for i in range(k + 1):
            x, y = a.coeffs[i], b.coeffs[k - i]
            if x.is_zero() or y.is_zero():
                continue
            term = x * y
            total = term if total is None else total + term
        if total is None:
            total = a.coeffs[0] * b.coeffs[0] - a.coeffs[0] * b.coeffs[0]
        out.append(total)
    return TruncatedSeries(a.symbol, lead, tuple(out), lead + n)


def series_pow(a: TruncatedSeries, n: int) -> TruncatedSeries:
    if n < 0:
        return series_pow(series_inverse(a), -n)
    s = a.normalized()
    if n == 0:
        width = max(len(s.coeffs), 1)
        return TruncatedSeries.monomial(a.symbol, 0, ONE, width)
    result = s
    for _ in range(n - 1):
        result = series_mul(result, s)
    return result


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Reciprocal; the leading coefficient must be an invertible monomial."""
    s = a.normalized()
    if not s.coeffs:
        raise TruncationError("cannot invert a series with no known nonzero term")
    head = s.coeffs[0]
    if not isinstance(head, ParamPoly) or not head.is_monomial():
        raise SeriesBranchError(f"leading coefficient {head} is not invertible")
    inv_head = head.inverse()
    out: List[Coefficient] = [inv_head]
    for k in range(1, len(s.coeffs)):
        acc = ParamPoly()
        for j in range(1, k + 1):
            acc = acc + s.coeffs[j] * out[k - j]
        out.append(-(acc * inv_head))
    lead = -s.lead
    return TruncatedSeries(s.symbol, lead, tuple(out), lead + len(out))


def series_sqrt(a: TruncatedSeries, branch: Optional[ParamPoly]) -> TruncatedSeries:
    """Square root by Newton iteration r ← (r + a/r)/2; ``branch`` is the leading root."""
    s = a.normalized()
    if not s.coeffs:
        raise TruncationError("cannot take the root of a series with no known term")
    if s.lead % 2:
        raise SeriesBranchError(f"odd leading exponent {s.lead}")
    if branch is None:
        raise SeriesBranchError("square root of the leading coefficient not supplied")
    if not (branch * branch - s.coeffs[0]).is_zero():
        raise SeriesBranchError(f"({branch})^2 != {s.coeffs[0]}")
    n = len(s.coeffs)
    base = TruncatedSeries(s.symbol, 0, s.coeffs, n)
    root = TruncatedSeries(s.symbol, 0, (branch,), 1)
    while len(root.coeffs) < n:
        width = min(2 * len(root.coeffs), n)
        padded = TruncatedSeries(
            s.symbol, 0, root.coeffs + (ParamPoly(),) * (width - len(root.coeffs)), width
        )
        quotient = series_mul(base.truncated(width), series_inverse(padded))
        root = (padded + quotient).scale(_HALF)
    half = s.lead // 2
    return root.shifted(half)


def series_substitute_scalar(a: TruncatedSeries, factor: ParamPoly, symbol: str) -> TruncatedSeries:
    """Rewrite a series in ε as a series in η where ε = factor·η."""
    coeffs = tuple(c * (factor**e) for e, c in a.items())
    return TruncatedSeries(symbol, a.lead, coeffs, a.order)


def series_compose(
    outer: TruncatedSeries,
    inner: TruncatedSeries,
    target_order: Optional[int] = None,
    outer_exact: bool = False,
) -> TruncatedSeries:
    """Evaluate ``outer`` at ``inner``; the result is a series in inner's symbol.

    ``outer_exact`` asserts the outer series is a polynomial (its unknown tail
    is zero). Inner series with a non-positive leading exponent need it, plus
    a caller-supplied ``target_order``.
    """
    s = inner.normalized()
    if not s.coeffs:
        raise TruncationError("inner series has no known nonzero term")
    p = s.lead
    rel = len(s.coeffs)
    active = [(j, c) for j, c in outer.items() if not c.is_zero()]

    # inner**0 is exactly 1 and carries no truncation
    bounds: List[int] = [p * j + rel for j, _ in active if j != 0]
    if not outer_exact:
        if p <= 0:
            raise TruncationError("inner lead <= 0 needs an exact (polynomial) outer series")
        bounds.append(p * outer.order)
    if target_order is not None:
        bounds.append(target_order)
    if not bounds:
        raise TruncationError("insufficient truncation data to produce any order")
    order = min(bounds)

    if not active:
        return TruncatedSeries(s.symbol, order, (), order)

    lead = min(p * j for j, _ in active)
    if lead > order:
        lead = order
    acc: Dict[int, Coefficient] = {}
    powers: Dict[int, TruncatedSeries] = {}
    for j, c in active:
        power = _cached_power(s, j, powers)
        for e, pc in power.items():
            if e >= order:
                break
            if pc.is_zero():
                continue
            term = c * pc
            acc[e] = acc[e] + term if e in acc else term
    zero = active[0][1] - active[0][1]
    coeffs = tuple(acc.get(e, zero) for e in range(lead, order))
    return TruncatedSeries(s.symbol, lead, coeffs, order)


def _cached_power(s: TruncatedSeries, j: int, cache: Dict[int, TruncatedSeries]) -> TruncatedSeries:
    if j in cache:
        return cache[j]
    if j == 0:
        result = TruncatedSeries(s.symbol, 0, (ONE,) + (ParamPoly(),) * (len(s.coeffs) - 1), len(s.coeffs))
    elif j > 0:
        result = s if j == 1 else series_mul(_cached_power(s, j - 1, cache), s)
    else:
        result = series_inverse(s) if j == -1 else series_mul(_cached_power(s, j + 1, cache), series_inverse(s))
    cache[j] = result
    return result


def series_revert(a: TruncatedSeries, symbol: Optional[str] = None) -> TruncatedSeries:
    """Compositional inverse, solved term by term.

    Leading degree +1: returns b with a(b(t)) = t. Leading degree −1 (a large
    value y = a(ε)): returns ε as a series in w = 1/y.
    """
    s = a.normalized()
    if not s.coeffs:
        raise TruncationError("cannot revert a series with no known term")
    if s.lead == -1:
        return series_revert(series_inverse(s), symbol)
    if s.lead != 1:
        raise SeriesBranchError(f"reversion needs leading degree ±1, got {s.lead}")
    head = s.coeffs[0]
    if not isinstance(head, ParamPoly) or not head.is_monomial():
        raise SeriesBranchError(f"leading coefficient {head} is not invertible")
    inv_head = head.inverse()
    out_symbol = symbol or s.symbol
    n = s.order
    coeffs: List[ParamPoly] = [inv_head]
    for k in range(2, n):
        trial = TruncatedSeries(out_symbol, 1, tuple(coeffs) + (ParamPoly(),) * (n - 1 - len(coeffs)), n)
        composed = series_compose(_renamed(s, s.symbol), trial, target_order=k + 1)
        coeffs.append(-(composed.coefficient(k) * inv_head))
    return TruncatedSeries(out_symbol, 1, tuple(coeffs), n)


def _renamed(s: TruncatedSeries, symbol: str) -> TruncatedSeries:
    return TruncatedSeries(symbol, s.lead, s.coeffs, s.order)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def series_to_dict(s: TruncatedSeries) -> dict:
    return {
        "symbol": s.symbol,
        "lead": s.lead,
        "order": s.order,
        "coeffs": [str(c) for c in s.coeffs],
    }


def series_to_json(s: TruncatedSeries) -> str:
    return json.dumps(series_to_dict(s), sort_keys=True, ensure_ascii=False)
