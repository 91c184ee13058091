"""Plain JSON-ready values: rationals as "p/q" strings, complex as [re, im]."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Mapping

from app.domain.model.scalars import GaussianRational, ParamPoly


def canonical(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return value if math.isfinite(value) else str(value)
    if isinstance(value, complex):
        return [canonical(value.real), canonical(value.imag)]
    if isinstance(value, (GaussianRational, ParamPoly)):
        return str(value)
    if isinstance(value, Mapping):
        return {str(k): canonical(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [canonical(v) for v in value]
    return str(value)
