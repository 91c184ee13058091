from __future__ import annotations

from functools import lru_cache
from typing import Dict, List

from app.domain.exceptions import UnknownProblemError
from app.domain.model.fourier import FourierTrigPoly
from app.domain.model.jacobi import JacobiElem
from app.domain.model.problems import Minimum, PotentialSpec, ProblemDefinition, SmallEnergyProblem
from app.domain.model.scalars import I, P, ParamPoly
from app.domain.model.weierstrass import WeierstrassElem

MATHIEU_SMALL_SYMBOL = "h^-1/2"
LAME_SMALL_SYMBOL = "alpha^-1/2"
LARGE_SYMBOL = "lambda^-1/2"

_H = P("h")
_ALPHA = P("alpha")
_K = P("k")


def _trig(coeff: ParamPoly | int = 1, sn: int = 0, cn: int = 0) -> JacobiElem:
    return JacobiElem.monomial(coeff, sn=sn, cn=cn, trig=True)


def _jac(coeff: ParamPoly | int = 1, sn: int = 0, cn: int = 0, dn: int = 0) -> JacobiElem:
    return JacobiElem.monomial(coeff, sn=sn, cn=cn, dn=dn)


def mathieu_potential() -> PotentialSpec:
    return PotentialSpec(
        kind="mathieu",
        potential=FourierTrigPoly.cos(2, _H * 2),
        period="pi",
        minima=(Minimum("0", "2*h"), Minimum("pi/2", "-2*h")),
    )


def lame_potential() -> PotentialSpec:
    return PotentialSpec(
        kind="lame-weierstrass",
        potential=WeierstrassElem.wp(0, _ALPHA),
        period="2*omega1",
        minima=(
            Minimum("omega1", "alpha*(e1+zeta1)"),
            Minimum("omega2", "alpha*(e2+zeta1)"),
            Minimum("omega1+omega2", "alpha*(e3+zeta1)"),
        ),
    )


def _mathieu_trig_potential() -> PotentialSpec:
    # 2h cos 2x = 2h (cos² x − sin² x)
    return PotentialSpec(
        kind="mathieu",
        potential=_trig(_H * 2, cn=2) - _trig(_H * 2, sn=2),
        period="pi",
        minima=(Minimum("0", "2*h"), Minimum("pi/2", "-2*h")),
    )


def _lame_jacobi_potential() -> PotentialSpec:
    return PotentialSpec(
        kind="lame-jacobi",
        potential=_jac(_ALPHA * _K**2, sn=2),
        period="2*K",
        minima=(Minimum("0", "0"), Minimum("K", "alpha*k^2")),
    )


def mathieu_min0_problem() -> SmallEnergyProblem:
    # around x* = 0, λ = −2h + δ: u + λ = h(2cos2x − 2) + δ
    return SmallEnergyProblem(
        symbol=MATHIEU_SMALL_SYMBOL,
        rhs={
            -2: _trig(2, cn=2) - _trig(2, sn=2) - 2,
            0: _trig(P("delta")),
        },
        branch=_trig(I * 2, sn=1),
        spectral="delta",
    )


def mathieu_minpi2_problem() -> SmallEnergyProblem:
    # around x* = π/2, λ = 2h + δ: u + λ = h(2cos2x + 2) + δ
    return SmallEnergyProblem(
        symbol=MATHIEU_SMALL_SYMBOL,
        rhs={
            -2: _trig(2, cn=2) - _trig(2, sn=2) + 2,
            0: _trig(P("delta")),
        },
        branch=_trig(2, cn=1),
        spectral="delta",
    )


def lame_z0_problem() -> SmallEnergyProblem:
    return SmallEnergyProblem(
        symbol=LAME_SMALL_SYMBOL,
        rhs={-2: _jac(_K**2, sn=2), 0: _jac(P("Lambda"))},
        branch=_jac(_K, sn=1),
        spectral="Lambda",
        floquet="mu",
    )


def lame_zk_problem() -> SmallEnergyProblem:
    # around z* = K, Λ = −αk² + Λ̃; densities are printed as v = i·Σ w_ℓ α^(−ℓ/2)
    return SmallEnergyProblem(
        symbol=LAME_SMALL_SYMBOL,
        rhs={-2: _jac(_K**2, sn=2) - _jac(_K**2), 0: _jac(P("Lambdat"))},
        branch=_jac(I * _K, cn=1),
        spectral="Lambdat",
        unit=I,
        floquet="mu",
    )


def flipped_branch(problem: SmallEnergyProblem) -> SmallEnergyProblem:
    """The same problem on the opposite square-root branch (the lower-sign wave function)."""
    return SmallEnergyProblem(
        symbol=problem.symbol,
        rhs=problem.rhs,
        branch=-problem.branch,
        spectral=problem.spectral,
        unit=problem.unit,
        floquet=problem.floquet,
    )


def free_potential() -> PotentialSpec:
    return PotentialSpec(kind="custom-ring", potential=FourierTrigPoly(), period="pi")


@lru_cache(maxsize=1)
def _catalog() -> Dict[str, ProblemDefinition]:
    return {
        "mathieu-large": ProblemDefinition(
            "mathieu-large", "large", mathieu_potential(), description="u = 2h cos 2x, large energy"
        ),
        "lame-large": ProblemDefinition(
            "lame-large", "large", lame_potential(), description="u = alpha*wpt(x), large energy"
        ),
        "free": ProblemDefinition("free", "large", free_potential(), description="u = 0"),
        "mathieu-min0": ProblemDefinition(
            "mathieu-min0",
            "small",
            _mathieu_trig_potential(),
            mathieu_min0_problem(),
            "Mathieu, expansion around x* = 0",
        ),
        "mathieu-minpi2": ProblemDefinition(
            "mathieu-minpi2",
            "small",
            _mathieu_trig_potential(),
            mathieu_minpi2_problem(),
            "Mathieu, expansion around x* = pi/2",
        ),
        "lame-z0": ProblemDefinition(
            "lame-z0",
            "small",
            _lame_jacobi_potential(),
            lame_z0_problem(),
            "Lame (Jacobi form), expansion around z* = 0",
        ),
        "lame-zK": ProblemDefinition(
            "lame-zK",
            "small",
            _lame_jacobi_potential(),
            lame_zk_problem(),
            "Lame (Jacobi form), expansion around z* = K",
        ),
    }


def get_problem(problem_id: str) -> ProblemDefinition:
    try:
        return _catalog()[problem_id]
    except KeyError:
        raise UnknownProblemError(f"unknown problem {problem_id!r}") from None


def list_problems() -> List[str]:
    return sorted(_catalog())
