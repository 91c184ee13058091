"""
Printed x₁, x₂ expansions: the 22×22 digest of −ln θ₄, the first −ln η
coefficients and the G window through a⁻².

G lines are {(i, j): coefficient of x₁ⁱx₂ʲ}; the prefactor of line l
carries a^(−l) and is evaluated by ``g_prefactor``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

_DIGEST = """
0 1 1/2 1/3 1/4 1/5 1/6 1/7 1/8 1/9 1/10 1/11 1/12 1/13 1/14 1/15 1/16 1/17 1/18 1/19 1/20 1/21
1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1/2 1 3/2 1 1/2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1/3 0 1 4/3 1 0 1/3 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1/4 0 1/2 1 7/4 1 1/2 0 1/4 0 0 0 0 0 0 0 0 0 0 0 0 0
1/5 0 0 0 1 6/5 1 0 0 0 1/5 0 0 0 0 0 0 0 0 0 0 0
1/6 0 0 1/3 1/2 1 2 1 1/2 1/3 0 0 1/6 0 0 0 0 0 0 0 0 0
1/7 0 0 0 0 0 1 8/7 1 0 0 0 0 0 1/7 0 0 0 0 0 0 0
1/8 0 0 0 1/4 0 1/2 1 15/8 1 1/2 0 1/4 0 0 0 1/8 0 0 0 0 0
1/9 0 0 0 0 0 1/3 0 1 13/9 1 0 1/3 0 0 0 0 0 1/9 0 0 0
1/10 0 0 0 0 1/5 0 0 1/2 1 9/5 1 1/2 0 0 1/5 0 0 0 0 1/10 0
1/11 0 0 0 0 0 0 0 0 0 1 12/11 1 0 0 0 0 0 0 0 0 0
1/12 0 0 0 0 0 1/6 0 1/4 1/3 1/2 1 7/3 1 1/2 1/3 1/4 0 1/6 0 0 0
1/13 0 0 0 0 0 0 0 0 0 0 0 1 14/13 1 0 0 0 0 0 0 0
1/14 0 0 0 0 0 0 1/7 0 0 0 0 1/2 1 12/7 1 1/2 0 0 0 0 1/7
1/15 0 0 0 0 0 0 0 0 0 1/5 0 1/3 0 1 8/5 1 0 1/3 0 1/5 0
1/16 0 0 0 0 0 0 0 1/8 0 0 0 1/4 0 1/2 1 31/16 1 1/2 0 1/4 0
1/17 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 18/17 1 0 0 0
1/18 0 0 0 0 0 0 0 0 1/9 0 0 1/6 0 0 1/3 1/2 1 13/6 1 1/2 1/3
1/19 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 20/19 1 0
1/20 0 0 0 0 0 0 0 0 0 1/10 0 0 0 0 1/5 1/4 0 1/2 1 21/10 1
1/21 0 0 0 0 0 0 0 0 0 0 0 0 0 1/7 0 0 0 1/3 0 1 32/21
"""


def theta4_digest() -> List[List[Fraction]]:
    """Θ₄[i][j] for 0 ≤ i, j < 22 as printed."""
    return [[Fraction(cell) for cell in line.split()] for line in _DIGEST.strip().splitlines()]


LOG_ETA_PRINTED: Tuple[Fraction, ...] = (
    Fraction(1),
    Fraction(3, 2),
    Fraction(4, 3),
    Fraction(7, 4),
    Fraction(6, 5),
    Fraction(2),
)

Monomials = Dict[Tuple[int, int], Fraction]

G_WINDOW: Tuple[Monomials, ...] = (
    {
        (1, 0): Fraction(1),
        (0, 1): Fraction(1),
        (2, 0): Fraction(1, 2),
        (0, 2): Fraction(1, 2),
        (3, 0): Fraction(1, 3),
        (2, 1): Fraction(1),
        (1, 2): Fraction(1),
        (0, 3): Fraction(1, 3),
    },
    {
        (1, 0): Fraction(1),
        (0, 1): Fraction(-1),
        (2, 0): Fraction(1),
        (0, 2): Fraction(-1),
        (3, 0): Fraction(1),
        (2, 1): Fraction(1),
        (1, 2): Fraction(-1),
        (0, 3): Fraction(-1),
    },
    {
        (1, 0): Fraction(1),
        (0, 1): Fraction(1),
        (2, 0): Fraction(2),
        (0, 2): Fraction(2),
        (3, 0): Fraction(3),
        (2, 1): Fraction(1),
        (1, 2): Fraction(1),
        (0, 3): Fraction(3),
    },
)


def g_prefactor(line: int, m: Fraction, eps1: Fraction, a: Fraction) -> Fraction:
    """−(m−ε₁)/ε₁, −m(m−ε₁)/(2aε₁), −m(m−ε₁)/(4a²)."""
    if line == 0:
        return -(m - eps1) / eps1
    if line == 1:
        return -m * (m - eps1) / (2 * a * eps1)
    if line == 2:
        return -m * (m - eps1) / (4 * a * a)
    raise IndexError(f"G window has lines 0..2, got {line}")


# α² part of F/ε₁² at order ν⁻², per unit −(π²/ω₁²)α²/(2ν²): q + 3q² + 4q³
F_ALPHA2_PRINTED: Tuple[Fraction, ...] = (Fraction(1), Fraction(3), Fraction(4))
