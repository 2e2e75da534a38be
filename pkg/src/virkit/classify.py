"""Compatibility system for an extra weight family, and the parameter scan.

A weight module with chains indexed by Z and Z + 1/2 carries slopes b (integer
chain) and bp (shifted chain).  Compatibility of the extra family's action
f(p, k) with the bracket relations yields a linear recurrence; pushing it one
step further gives a 3x3 homogeneous linear system in the window
(f(p, k-m), f(p, k), f(p, k+m)).  Nontrivial solutions force its determinant
to vanish identically in (a, k, p, m), which factors through two linear forms
in (b, bp, rho) and a quadratic form whose coefficients are the delta
polynomials certified against the frozen reference table in golden.py.

The scan enumerates rational parameter choices on a bounded grid and groups
the solutions into one-parameter families and isolated points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import ParameterError
from .golden import (
    EXPECTED_HALF_FAMILIES,
    EXPECTED_HALF_POINTS,
    EXPECTED_S0_FAMILIES,
    EXPECTED_S0_POINTS,
    recorded_delta3_difference,
    reference_delta1,
    reference_delta2,
    reference_delta3,
    reference_s0,
)
from .poly import MultiPoly, det3
from .rationals import format_rational

_A = MultiPoly.var("a")
_B = MultiPoly.var("b")
_BP = MultiPoly.var("bp")
_RHO = MultiPoly.var("rho")
_P = MultiPoly.var("p")
_K = MultiPoly.var("k")
_M = MultiPoly.var("m")
_C = MultiPoly.var("c")

HALF = Fraction(1, 2)

HALF_RELATIONS = ("bp=b", "b+bp=1", "bp=b+1/2", "bp=b-1/2")

_RELATION_TESTS = {
    "bp=b": lambda b, bp: bp == b,
    "b+bp=1": lambda b, bp: b + bp == 1,
    "bp=b+1/2": lambda b, bp: bp == b + HALF,
    "bp=b-1/2": lambda b, bp: bp == b - HALF,
}

_RELATION_RANK = {"bp=b": 0, "b+bp=1": 1, "bp=b+1/2": 2, "bp=b-1/2": 3, "b free": 0, "points": 9}


# -- the one-step recurrence -------------------------------------------------------


@dataclass(frozen=True)
class FunctionalEquation:
    """sum of coeff * f(p + dp*m, k + dk*m) over terms ((dp, dk), coeff) = 0."""

    terms: tuple[tuple[tuple[int, int], MultiPoly], ...]

    def argument_shifts(self) -> tuple[tuple[int, int], ...]:
        return tuple(shift for shift, _ in self.terms)


def build_functional_equation() -> FunctionalEquation:
    """Recurrence tying f(p, k), f(p, k+m) and f(p+m, k) together."""
    return FunctionalEquation(
        terms=(
            ((0, 0), _A + _P + _K + _BP * _M),
            ((0, 1), -(_A + _K + _B * _M)),
            ((1, 0), -(_P - _M * _RHO)),
        )
    )


def equation_residual(
    eq: FunctionalEquation,
    table: Mapping[tuple[Fraction, Fraction], Fraction],
    point: Mapping[str, Fraction],
) -> Fraction:
    """Residual of the recurrence at a numeric point, reading f from a table."""
    for name in ("a", "b", "bp", "rho", "p", "k", "m"):
        if name not in point:
            raise ParameterError(f"point is missing a value for {name}")
    p, k, m = point["p"], point["k"], point["m"]
    total = Fraction(0)
    for (dp, dk), coeff in eq.terms:
        args = (p + dp * m, k + dk * m)
        if args not in table:
            raise ParameterError(
                f"table has no entry for f({format_rational(args[0])}, {format_rational(args[1])})"
            )
        total += coeff.evaluate(point) * table[args]
    return total


def constant_residual(eq: FunctionalEquation) -> MultiPoly:
    """Symbolic residual of the constant candidate f = c."""
    total = MultiPoly.zero()
    for _, coeff in eq.terms:
        total = total + coeff
    return _C * total


def check_constant_solution(rho: Fraction | int, c: Fraction | int) -> bool:
    """Does f = c solve the recurrence identically once both slopes agree?"""
    eq = build_functional_equation()
    residual = constant_residual(eq).substitute({"bp": _B})
    residual = residual.substitute({"rho": Fraction(rho), "c": Fraction(c)})
    return residual.is_zero()


# -- the 3x3 system and its determinant --------------------------------------------


def build_linear_system() -> tuple[tuple[MultiPoly, MultiPoly, MultiPoly], ...]:
    """Coefficient matrix on the unknowns (f(p, k-m), f(p, k), f(p, k+m))."""
    a, b, bp, rho, p, k, m = _A, _B, _BP, _RHO, _P, _K, _M
    e11 = (p - 2 * m * rho) * (a + k - m + p + bp * m) * (a + k + p + bp * m) - (
        p - m * rho
    ) * (m + p - m * rho) * (a + k - m + p + 2 * bp * m)
    e12 = -2 * (p - 2 * m * rho) * (a + k - m + b * m) * (a + k + p + bp * m)
    e13 = (p - 2 * m * rho) * (a + k - m + b * m) * (a + k + b * m) + (p - m * rho) * (
        m + p - m * rho
    ) * (a + k - m + 2 * b * m)
    e21 = (a + k + m - 2 * b * m) * (p + m * rho) * (-m + p + m * rho) + (
        p + 2 * m * rho
    ) * (a + k + m - b * m) * (a + k - b * m)
    e22 = -2 * (p + 2 * m * rho) * (a + k + m - b * m) * (a + k + p - bp * m)
    e23 = (p + 2 * m * rho) * (a + k + m + p - bp * m) * (a + k + p - bp * m) - (
        p + m * rho
    ) * (-m + p + m * rho) * (a + k + m + p - 2 * bp * m)
    e31 = (a + k - b * m) * (a + k + p - m + bp * m)
    e32 = -(
        (a + k + p - bp * m) * (a + k + p - m + bp * m)
        - (p + m * rho) * (-m + p - m * rho)
        + (a + k + b * m) * (a + k + m - b * m)
    )
    e33 = (a + k + b * m) * (a + k + p + m - bp * m)
    return ((e11, e12, e13), (e21, e22, e23), (e31, e32, e33))


@lru_cache(maxsize=1)
def compute_delta() -> MultiPoly:
    """Determinant of the 3x3 system, fully expanded."""
    return det3(build_linear_system())


def linear_factor_1() -> MultiPoly:
    return _BP - _B + _RHO


def linear_factor_2() -> MultiPoly:
    return 1 + _B - _BP - _RHO


@dataclass(frozen=True)
class FactorizationCertificate:
    """Outcome of dividing the determinant by its claimed factors.

    differences holds computed-minus-reference for the three quadratic-form
    coefficients; an entry of zero means exact agreement with the table.
    """

    divisible: bool
    shape_ok: bool
    coefficients: tuple[MultiPoly, MultiPoly, MultiPoly]
    differences: tuple[MultiPoly, MultiPoly, MultiPoly]

    def matches_reference(self) -> bool:
        return all(d.is_zero() for d in self.differences)


@lru_cache(maxsize=1)
def _reduced_quotient() -> tuple[bool, MultiPoly]:
    """(all divisions exact, determinant / (L1 * L2 * m^6))."""
    quotient, rem1 = compute_delta().divrem(linear_factor_1())
    quotient, rem2 = quotient.divrem(linear_factor_2())
    quotient, rem3 = quotient.divrem(_M**6)
    exact = rem1.is_zero() and rem2.is_zero() and rem3.is_zero()
    return exact, quotient


@lru_cache(maxsize=1)
def _quadratic_coefficients() -> tuple[bool, tuple[MultiPoly, MultiPoly, MultiPoly]]:
    """Extract (C1, C2, C3) with quotient = C1 m^2 + C2 (a+k) p + C3 p^2."""
    _, quotient = _reduced_quotient()
    idx = {"a": 0, "b": 1, "bp": 2, "rho": 3, "p": 4, "k": 5, "m": 6, "n": 7, "c": 8}
    buckets: dict[tuple[int, int, int, int], dict[tuple[int, ...], Fraction]] = {}
    for exps, coeff in quotient.terms().items():
        if exps[idx["n"]] or exps[idx["c"]]:
            return False, (MultiPoly.zero(),) * 3
        outer = (exps[idx["a"]], exps[idx["p"]], exps[idx["k"]], exps[idx["m"]])
        inner = list(exps)
        for name in ("a", "p", "k", "m"):
            inner[idx[name]] = 0
        buckets.setdefault(outer, {})[tuple(inner)] = coeff
    allowed = {(0, 0, 0, 2), (1, 1, 0, 0), (0, 1, 1, 0), (0, 2, 0, 0)}
    if not set(buckets) <= allowed:
        return False, (MultiPoly.zero(),) * 3
    c1 = MultiPoly(buckets.get((0, 0, 0, 2), {}))
    c2_from_a = MultiPoly(buckets.get((1, 1, 0, 0), {}))
    c2_from_k = MultiPoly(buckets.get((0, 1, 1, 0), {}))
    c3 = MultiPoly(buckets.get((0, 2, 0, 0), {}))
    if c2_from_a != c2_from_k:
        return False, (MultiPoly.zero(),) * 3
    return True, (c1, c2_from_a, c3)


def certify_factorization() -> FactorizationCertificate:
    """Divide out the linear factors and m^6, then compare with the reference."""
    divisible, _ = _reduced_quotient()
    shape_ok, (c1, c2, c3) = _quadratic_coefficients()
    references = (reference_delta1(), reference_delta2(), reference_delta3())
    differences = tuple(comp - ref for comp, ref in zip((c1, c2, c3), references))
    return FactorizationCertificate(
        divisible=divisible,
        shape_ok=shape_ok,
        coefficients=(c1, c2, c3),
        differences=differences,
    )


@dataclass(frozen=True)
class S0Certificate:
    """Comparison of the bp = b specialisation against the reference display."""

    computed: MultiPoly
    difference: MultiPoly

    def matches_reference(self) -> bool:
        return self.difference.is_zero()


@lru_cache(maxsize=1)
def specialize_s0() -> S0Certificate:
    computed = compute_delta().substitute({"bp": _B})
    return S0Certificate(computed=computed, difference=computed - reference_s0())


# -- vanishing conditions -----------------------------------------------------------


@lru_cache(maxsize=65536)
def _vanishes_at(rho: Fraction, b: Fraction, bp: Fraction) -> bool:
    """Is the determinant identically zero in (a, k, p, m) at these parameters?"""
    point = {"b": b, "bp": bp, "rho": rho}
    if linear_factor_1().evaluate(point) == 0 or linear_factor_2().evaluate(point) == 0:
        return True
    shape_ok, coefficients = _quadratic_coefficients()
    if not shape_ok:
        raise ParameterError("quadratic shape extraction failed; cannot test vanishing")
    return all(coeff.evaluate(point) == 0 for coeff in coefficients)


def condition_pair_holds(
    rho: Fraction | int, b: Fraction | int, bp: Fraction | int
) -> tuple[bool, bool]:
    """Vanishing condition in the given slope order and with the slopes swapped."""
    rho, b, bp = Fraction(rho), Fraction(b), Fraction(bp)
    return (_vanishes_at(rho, b, bp), _vanishes_at(rho, bp, b))


# -- grid scan ------------------------------------------------------------------------


def grid_values(max_num: int, max_den: int) -> list[Fraction]:
    """Reduced rationals with numerator and denominator within the bounds."""
    if max_num < 0 or max_den < 1:
        raise ParameterError("grid bounds must satisfy max_num >= 0 and max_den >= 1")
    values = {
        Fraction(n, d)
        for n in range(-max_num, max_num + 1)
        for d in range(1, max_den + 1)
    }
    return sorted(v for v in values if abs(v.numerator) <= max_num and v.denominator <= max_den)


@dataclass(frozen=True)
class ClassificationCase:
    """One scan outcome row: a family along a relation, or isolated points."""

    rho: Fraction
    relation: str
    points: tuple
    satisfied_by: tuple

    def sort_key(self) -> tuple:
        return (self.rho, _RELATION_RANK[self.relation], self.points)


@dataclass(frozen=True)
class ScanResult:
    s: Fraction
    max_num: int
    max_den: int
    cases: tuple[ClassificationCase, ...]
    hits: tuple


@lru_cache(maxsize=4)
def _s0_specialized_delta() -> MultiPoly:
    return compute_delta().substitute({"bp": _B})


@lru_cache(maxsize=65536)
def _s0_hit(rho: Fraction, b: Fraction) -> bool:
    """Specialised determinant vanishes at every cube point, as a poly in a."""
    poly = _s0_specialized_delta().substitute({"b": b, "rho": rho})
    if poly.is_zero():
        return True
    for p in range(-3, 4):
        if p == 0:
            continue
        for k in range(-3, 4):
            for m in range(-3, 4):
                value = poly.substitute({"p": p, "k": k, "m": m})
                if not value.is_zero():
                    return False
    return True


def enumerate_cases(s: Fraction | int, max_num: int, max_den: int) -> ScanResult:
    """Scan the rational grid for parameters meeting the vanishing conditions."""
    s = Fraction(s)
    grid = grid_values(max_num, max_den)
    rho_grid = [r for r in grid if r != -1]
    cases: list[ClassificationCase] = []
    hits: list[tuple] = []
    if s == HALF:
        for rho in rho_grid:
            rho_hits = {
                (b, bp)
                for b in grid
                for bp in grid
                if condition_pair_holds(rho, b, bp) == (True, True)
            }
            hits.extend((rho, b, bp) for (b, bp) in sorted(rho_hits))
            covered: set[tuple[Fraction, Fraction]] = set()
            for relation in HALF_RELATIONS:
                on_line = {(b, bp) for (b, bp) in _pairs(grid) if _RELATION_TESTS[relation](b, bp)}
                if on_line and on_line <= rho_hits:
                    cases.append(
                        ClassificationCase(
                            rho=rho,
                            relation=relation,
                            points=(),
                            satisfied_by=tuple(sorted(on_line)),
                        )
                    )
                    covered |= on_line
            leftover = sorted(rho_hits - covered)
            if leftover:
                cases.append(
                    ClassificationCase(
                        rho=rho,
                        relation="points",
                        points=tuple(leftover),
                        satisfied_by=tuple(leftover),
                    )
                )
    elif s == 0:
        for rho in rho_grid:
            rho_hits = {b for b in grid if _s0_hit(rho, b)}
            hits.extend((rho, b) for b in sorted(rho_hits))
            if rho_hits == set(grid):
                cases.append(
                    ClassificationCase(
                        rho=rho,
                        relation="b free",
                        points=(),
                        satisfied_by=tuple(sorted(rho_hits)),
                    )
                )
            elif rho_hits:
                ordered = tuple(sorted(rho_hits))
                cases.append(
                    ClassificationCase(
                        rho=rho, relation="points", points=ordered, satisfied_by=ordered
                    )
                )
    else:
        raise ParameterError("the scan is defined for s = 0 and s = 1/2 only")
    cases.sort(key=ClassificationCase.sort_key)
    return ScanResult(
        s=s, max_num=max_num, max_den=max_den, cases=tuple(cases), hits=tuple(hits)
    )


def _pairs(grid: list[Fraction]):
    for b in grid:
        for bp in grid:
            yield (b, bp)


# -- comparison against the expected outcome ------------------------------------------


def _family_text(rho: Fraction, relation: str) -> str:
    return f"rho={format_rational(rho)}: family {relation}"


def _point_text(s: Fraction, rho: Fraction, point) -> str:
    if s == HALF:
        b, bp = point
        return f"rho={format_rational(rho)}: point (b={format_rational(b)}, bp={format_rational(bp)})"
    return f"rho={format_rational(rho)}: point b={format_rational(point)}"


def compare_with_expected(result: ScanResult) -> dict[str, tuple[str, ...]]:
    """Match scan cases against the frozen expected list, bounds-aware."""
    if result.s == HALF:
        expected_families = EXPECTED_HALF_FAMILIES
        expected_points = EXPECTED_HALF_POINTS
    elif result.s == 0:
        expected_families = EXPECTED_S0_FAMILIES
        expected_points = EXPECTED_S0_POINTS
    else:
        raise ParameterError("the scan is defined for s = 0 and s = 1/2 only")
    grid = set(grid_values(result.max_num, result.max_den))
    rho_grid = {r for r in grid if r != -1}

    computed_families = {
        (case.rho, case.relation) for case in result.cases if case.relation != "points"
    }
    computed_points = {
        (case.rho, point)
        for case in result.cases
        if case.relation == "points"
        for point in case.points
    }
    satisfied = {}
    for case in result.cases:
        satisfied.setdefault(case.rho, set()).update(case.satisfied_by)

    matched, missing, outside = [], [], []
    for rho, relation in expected_families:
        if result.s == HALF:
            in_bounds = rho in rho_grid and any(
                _RELATION_TESTS[relation](b, bp) for (b, bp) in _pairs(sorted(grid))
            )
        else:
            in_bounds = rho in rho_grid
        if not in_bounds:
            outside.append(_family_text(rho, relation))
        elif (rho, relation) in computed_families:
            matched.append(_family_text(rho, relation))
        else:
            missing.append(_family_text(rho, relation))
    for rho, point in expected_points:
        coords = point if result.s == HALF else (point,)
        if rho not in rho_grid or any(x not in grid for x in coords):
            outside.append(_point_text(result.s, rho, point))
        elif point in satisfied.get(rho, set()) or (rho, point) in computed_points:
            matched.append(_point_text(result.s, rho, point))
        else:
            missing.append(_point_text(result.s, rho, point))

    expected_family_set = set(expected_families)
    expected_point_set = set(expected_points)
    extra = []
    for rho, relation in sorted(computed_families, key=lambda t: (t[0], _RELATION_RANK[t[1]])):
        if (rho, relation) not in expected_family_set:
            extra.append(_family_text(rho, relation))
    for rho, point in sorted(computed_points):
        if (rho, point) in expected_point_set:
            continue
        on_expected_family = False
        for erho, erel in expected_families:
            if erho != rho:
                continue
            if result.s == 0 and erel == "b free":
                on_expected_family = True
            elif result.s == HALF and _RELATION_TESTS[erel](*point):
                on_expected_family = True
        if not on_expected_family:
            extra.append(_point_text(result.s, rho, point))

    return {
        "matched": tuple(matched),
        "missing": tuple(missing),
        "extra": tuple(extra),
        "outside_bounds": tuple(outside),
    }
