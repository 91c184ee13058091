"""
Closed-form wave functions checked on their logarithmic derivatives.

A candidate exponent is, order by order, a sum of c·ln f over a fixed table
of functions f plus an exact Jacobi/trig ring element. Its x-derivative is
formed exactly and compared with the density series; integration never
happens, so constants in the exponent drop out.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Optional

from app.domain.exceptions import UnknownProblemError
from app.domain.data.closed_forms import ClosedFormEntry
from app.domain.data.small_dispersion import SMALL_DISPERSIONS
from app.domain.model.dispersion import ClosedFormExponent, ClosedFormOrder, OrderCheck, VerificationReport
from app.domain.model.jacobi import JacobiElem
from app.domain.model.scalars import I, P, Q
from app.domain.model.series import TruncatedSeries
from app.domain.services.dispersion import substitute_small_dispersion
from app.domain.services.func_rings import ring_diff
from app.domain.services.problem_catalog import flipped_branch, get_problem
from app.domain.services.riccati import small_energy_densities

_K = P("k")
_KP = P("kp")


def _t(coeff=1, sn: int = 0, cn: int = 0) -> JacobiElem:
    return JacobiElem.monomial(coeff, sn=sn, cn=cn, trig=True)


def _j(coeff=1, sn: int = 0, cn: int = 0, dn: int = 0) -> JacobiElem:
    return JacobiElem.monomial(coeff, sn=sn, cn=cn, dn=dn)


# d/dx ln f for every f a printed closed form uses.
LOG_DERIVATIVES: Dict[str, Callable[[], JacobiElem]] = {
    # trigonometric
    "sin": lambda: _t(1, sn=-1, cn=1),
    "cos": lambda: _t(-1, sn=1, cn=-1),
    "sec": lambda: _t(1, sn=1, cn=-1),
    "tan(x/2)": lambda: _t(1, sn=-1),
    "sin(x/2)": lambda: _t(Q(1, 2), sn=-1) + _t(Q(1, 2), sn=-1, cn=1),
    "cos(x/2)": lambda: _t(Q(-1, 2), sn=-1) + _t(Q(1, 2), sn=-1, cn=1),
    "tan(x/2+pi/4)": lambda: _t(1, cn=-1),
    "cos(x/2+pi/4)": lambda: _t(Q(-1, 2), cn=-1) + _t(Q(-1, 2), sn=1, cn=-1),
    "sin(x/2+pi/4)": lambda: _t(Q(1, 2), cn=-1) + _t(Q(-1, 2), sn=1, cn=-1),
    # Jacobi
    "sn": lambda: _j(1, sn=-1, cn=1, dn=1),
    "cn": lambda: _j(-1, sn=1, cn=-1, dn=1),
    "dn-k*cn": lambda: _j(_K, sn=1),
    "dn+k*cn": lambda: _j(-_K, sn=1),
    "dn+cn": lambda: _j(1, sn=-1, cn=1, dn=1) - _j(1, sn=-1),
    "dn-cn": lambda: _j(1, sn=-1, cn=1, dn=1) + _j(1, sn=-1),
    "(dn+cn)/sn": lambda: _j(-1, sn=-1),
    "dn+i*k*sn": lambda: _j(I * _K, cn=1),
    "dn-i*k*sn": lambda: _j(-I * _K, cn=1),
    "dn+kp*sn": lambda: _j(_KP, cn=-1) - _j(1, sn=1, cn=-1, dn=1),
    "dn-kp*sn": lambda: _j(-_KP, cn=-1) - _j(1, sn=1, cn=-1, dn=1),
    "(dn+kp*sn)/cn": lambda: _j(_KP, cn=-1),
}


def log_derivative(pattern: str) -> JacobiElem:
    try:
        return LOG_DERIVATIVES[pattern]()
    except KeyError:
        raise KeyError(f"no log-derivative for {pattern!r}") from None


def order_derivative(order: ClosedFormOrder) -> Optional[JacobiElem]:
    """∂ of one order of a candidate exponent."""
    total: Optional[JacobiElem] = None
    for term in order.logs:
        piece = log_derivative(term.pattern) * term.coeff
        total = piece if total is None else total + piece
    if order.ring is not None:
        piece = ring_diff(order.ring)
        total = piece if total is None else total + piece
    return total


def verify_closed_form(candidate: ClosedFormExponent, v_series: TruncatedSeries) -> VerificationReport:
    """Order-by-order exact comparison of ∂(candidate) with the density series."""
    checks: List[OrderCheck] = []
    for power in sorted(candidate.orders):
        if power >= v_series.order:
            checks.append(OrderCheck(power, "mismatch", f"series known only below order {v_series.order}"))
            continue
        derived = order_derivative(candidate.orders[power])
        expected = v_series.coefficient(power)
        if derived is None:
            residual = expected
        else:
            residual = derived - expected
        if residual == 0:
            checks.append(OrderCheck(power, "match"))
        else:
            checks.append(OrderCheck(power, "mismatch", str(residual)))
    details = {"problem": candidate.problem_id, "sign": "+" if candidate.sign > 0 else "-"}
    if any(o.ring is not None and _has_constant(o.ring) for o in candidate.orders.values()):
        details["normalization"] = "constant terms of the exponent dropped"
    return VerificationReport(name=candidate.name, checks=tuple(checks), details=details)


def _has_constant(elem: JacobiElem) -> bool:
    return elem.den_sn == 0 and elem.den_cn == 0 and (0, 0, 0) in elem.numerator


def zero_candidate(name: str = "zero") -> ClosedFormExponent:
    return ClosedFormExponent(name=name, problem_id="free", sign=1, substituted=False, orders={})


def density_series_for(entry: ClosedFormEntry, sign: int, order: int = 5) -> TruncatedSeries:
    """∂ ln ψ± for an entry's problem: raw densities, or regrouped in ν (μ) when substituted."""
    problem = get_problem(entry.problem_id).small
    if problem is None:
        raise UnknownProblemError(f"{entry.problem_id} has no small-energy expansion")
    if entry.uses_flipped_branch(sign):
        problem = flipped_branch(problem)
    densities = small_energy_densities(problem, order)
    if entry.substituted:
        return substitute_small_dispersion(densities, SMALL_DISPERSIONS[entry.problem_id](), problem.symbol)
    terms = {ell: v for ell, v in enumerate(densities, start=-1)}
    return TruncatedSeries.from_terms(problem.symbol, terms, order=order + 1, lead=-1)


def verify_entry(entry: ClosedFormEntry, sign: int, order: int = 5) -> VerificationReport:
    return verify_closed_form(entry.candidate(sign), density_series_for(entry, sign, order))
