"""Frozen reference data for the certification checks.

The polynomial builders below reproduce a fixed external reference table
verbatim; they are compared against the package's own computation and are
never derived from it.  Where the computation is known to disagree with the
table, the exact discrepancy is frozen here too, so regressions in either
direction are caught.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly

DATA_VERSION = "v1"

_A = MultiPoly.var("a")
_B = MultiPoly.var("b")
_BP = MultiPoly.var("bp")
_RHO = MultiPoly.var("rho")
_P = MultiPoly.var("p")
_K = MultiPoly.var("k")
_M = MultiPoly.var("m")


def reference_delta1() -> MultiPoly:
    """Reference value for the m^2 coefficient of the reduced determinant."""
    b, bp, rho = _B, _BP, _RHO
    inner = (
        -(b**2) + b**3 - 2 * bp + b**2 * bp + 3 * bp**2 - b * bp**2 - bp**3
        - b * rho - bp * rho + 2 * b * bp * rho - b * rho**2 + bp * rho**2
    )
    return 4 * (-1 + b + bp) * rho**2 * inner


def reference_delta2() -> MultiPoly:
    """Reference value for the (a+k)p coefficient of the reduced determinant."""
    b, bp, rho = _B, _BP, _RHO
    inner = (
        -2 + 5 * b - 3 * b**2 + 7 * bp - 6 * b * bp - 3 * bp**2
        - rho + 2 * b * rho - 2 * bp * rho + rho**2
    )
    return -2 * rho * (1 + rho) * inner


def reference_delta3() -> MultiPoly:
    """Reference value for the p^2 coefficient of the reduced determinant."""
    b, bp, rho = _B, _BP, _RHO
    part0 = (-2 + b - bp) * (-1 + b + bp) * (-b + b**2 - 3 * bp + 2 * b * bp + bp**2)
    part1 = (
        2 - 10 * b + 10 * b**2 - 2 * b**3 - 10 * bp + 18 * b * bp
        - 6 * b**2 * bp + 8 * bp**2 - 6 * b * bp**2 - 2 * bp**3
    )
    part2 = 3 - 10 * b + 6 * b**2 - 2 * bp + 6 * b * bp
    part3 = -2 * b + 2 * bp
    return part0 + part1 * rho + part2 * rho**2 + part3 * rho**3 - rho**4


def recorded_delta3_difference() -> MultiPoly:
    """Frozen discrepancy: computed p^2 coefficient minus reference_delta3().

    Vanishes on bp = b and on b + bp = 1, so it never changes which
    parameters satisfy the vanishing conditions.
    """
    b, bp = _B, _BP
    return -2 * (b - bp) * (b + bp - 1) * (b**2 + 2 * b * bp - b + bp**2 - 3 * bp)


def reference_s0() -> MultiPoly:
    """Reference value for the determinant specialised at bp = b."""
    a, b, rho, p, k, m = _A, _B, _RHO, _P, _K, _M
    quad_m = 8 * rho**2 * b * (2 * b - 1) * (b - 1)
    quad_mixed = rho**2 - rho - 12 * b**2 + 12 * b - 2
    quad_p = 8 * b * (2 * b - 1) * (b - 1) + rho * quad_mixed
    return (
        (rho - 1) * rho * (1 + rho) * m**6
        * (quad_m * m**2 - 2 * rho * quad_mixed * (a + k) * p - quad_p * p**2)
    )


def recorded_s0_sign() -> int:
    """Frozen discrepancy: the computed specialisation is -1 times reference_s0()."""
    return -1


# -- expected scan outcomes --------------------------------------------------------

# Families are (rho, relation) rows meaning every grid point on the relation
# satisfies the vanishing conditions; points are isolated parameter choices.
EXPECTED_HALF_FAMILIES: tuple[tuple[Fraction, str], ...] = (
    (Fraction(0), "bp=b"),
    (Fraction(0), "b+bp=1"),
)

EXPECTED_HALF_POINTS: tuple[tuple[Fraction, tuple[Fraction, Fraction]], ...] = (
    (Fraction(3, 2), (Fraction(0), Fraction(1, 2))),
    (Fraction(3, 2), (Fraction(0), Fraction(1))),
    (Fraction(3, 2), (Fraction(1, 2), Fraction(0))),
    (Fraction(3, 2), (Fraction(1, 2), Fraction(1))),
    (Fraction(3, 2), (Fraction(1), Fraction(0))),
    (Fraction(3, 2), (Fraction(1), Fraction(1, 2))),
)

EXPECTED_S0_FAMILIES: tuple[tuple[Fraction, str], ...] = (
    (Fraction(0), "b free"),
    (Fraction(1), "b free"),
)

EXPECTED_S0_POINTS: tuple[tuple[Fraction, Fraction], ...] = (
    (Fraction(2), Fraction(0)),
    (Fraction(2), Fraction(1)),
)
