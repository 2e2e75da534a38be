"""Graded Lie algebras given by structure constants, with window checks.

Supported algebras (over exact rationals):

  Vir      one family L_n (n in Z), [L_m, L_n] = (n-m) L_{m+n}
  W        L plus a family Y_p (p in Z+s), [L_m, Y_p] = (p - m*rho) Y_{m+p},
           [Y_p, Y_q] = 0; parameters s in {0, 1/2} and rho != -1
  SV       L, Y, M with [L_m, Y_p] = (p - m/2) Y_{p+m}, [L_m, M_n] = n M_{n+m},
           [Y_p, Y_q] = (q - p) M_{q+p}, [Y, M] = [M, M] = 0; s in {0, 1/2}
  D        L, Y, M (all integer-graded) with [L_m, Y_n] = (n - (rho+1)/2 m) Y_{n+m},
           [L_m, M_n] = (n - rho*m) M_{n+m}, [Y_n, Y_m] = (m - n) M_{n+m},
           [Y, M] = [M, M] = 0; rho not in {0, -1, -3}

Every bracket of basis elements is a rational multiple of a single basis
element, which the window checks exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from .errors import ParameterError
from .rationals import format_rational
from .reports import CheckReport, Violation

FAMILY_ORDER = {"L": 0, "Y": 1, "M": 2}

ALGEBRA_NAMES = ("Vir", "W", "SV", "D")
COCYCLE_NAMES = ("gamma0", "gamma01", "gamma02", "gamma11")


@dataclass(frozen=True)
class BasisElement:
    family: str
    degree: Fraction

    def __str__(self) -> str:
        return f"{self.family}_{format_rational(self.degree)}"

    def sort_key(self) -> tuple:
        return (FAMILY_ORDER[self.family], self.degree)


class Element:
    """Finite rational linear combination of basis elements."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[BasisElement, Fraction] | None = None):
        self._terms = {b: c for b, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def from_basis(cls, basis: BasisElement, coeff: Fraction | int = 1) -> "Element":
        return cls({basis: Fraction(coeff)})

    def terms(self) -> dict[BasisElement, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "Element") -> "Element":
        out = dict(self._terms)
        for b, c in other._terms.items():
            acc = out.get(b, Fraction(0)) + c
            if acc:
                out[b] = acc
            else:
                out.pop(b, None)
        result = Element.__new__(Element)
        result._terms = out
        return result

    def __neg__(self) -> "Element":
        result = Element.__new__(Element)
        result._terms = {b: -c for b, c in self._terms.items()}
        return result

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __rmul__(self, scalar: Fraction | int) -> "Element":
        scalar = Fraction(scalar)
        result = Element.__new__(Element)
        result._terms = {b: scalar * c for b, c in self._terms.items()} if scalar else {}
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for basis in sorted(self._terms, key=BasisElement.sort_key):
            coeff = self._terms[basis]
            if coeff == 1:
                pieces.append(str(basis))
            elif coeff.denominator == 1:
                pieces.append(f"({coeff.numerator})*{basis}")
            else:
                pieces.append(f"({coeff.numerator}/{coeff.denominator})*{basis}")
        return " + ".join(pieces)

    __repr__ = __str__


@dataclass(frozen=True)
class AlgebraSpec:
    name: str
    s: Fraction
    rho: Fraction | None
    families: tuple[str, ...]

    def label(self) -> str:
        if self.name == "Vir":
            return "Vir"
        if self.name == "W":
            return f"W({format_rational(self.rho)})[{format_rational(self.s)}]"
        if self.name == "SV":
            return f"sv[{format_rational(self.s)}]"
        return f"D({format_rational(self.rho)})"

    def family_offset(self, family: str) -> Fraction:
        """Degree lattice offset: family degrees live in Z + offset."""
        if family == "Y" and self.name in ("W", "SV"):
            return self.s
        return Fraction(0)


def make_algebra(
    name: str,
    rho: Fraction | int | None = None,
    s: Fraction | int = 0,
) -> AlgebraSpec:
    """Validate parameters and build an algebra description."""
    s = Fraction(s)
    rho = Fraction(rho) if rho is not None else None
    if name == "Vir":
        if rho is not None:
            raise ParameterError("Vir takes no rho parameter")
        if s != 0:
            raise ParameterError("Vir requires s = 0")
        return AlgebraSpec("Vir", s, None, ("L",))
    if name == "W":
        if s not in (Fraction(0), Fraction(1, 2)):
            raise ParameterError("W requires s in {0, 1/2}")
        if rho is None:
            raise ParameterError("W requires a rho parameter")
        if rho == -1:
            raise ParameterError("W excludes rho = -1")
        return AlgebraSpec("W", s, rho, ("L", "Y"))
    if name == "SV":
        if s not in (Fraction(0), Fraction(1, 2)):
            raise ParameterError("SV requires s in {0, 1/2}")
        if rho is not None:
            raise ParameterError("SV takes no rho parameter")
        return AlgebraSpec("SV", s, None, ("L", "Y", "M"))
    if name == "D":
        if s != 0:
            raise ParameterError("D requires s = 0")
        if rho is None:
            raise ParameterError("D requires a rho parameter")
        if rho in (Fraction(0), Fraction(-1), Fraction(-3)):
            raise ParameterError("D excludes rho in {0, -1, -3}")
        return AlgebraSpec("D", s, rho, ("L", "Y", "M"))
    raise ParameterError(f"unknown algebra {name!r}; choose from {ALGEBRA_NAMES}")


# -- structure constants -------------------------------------------------------


def struct(alg: AlgebraSpec, x: BasisElement, y: BasisElement):
    """[x, y] as (coefficient, basis element), or None when structurally zero."""
    fx, fy = x.family, y.family
    dx, dy = x.degree, y.degree
    if fx == "L" and fy == "L":
        return (dy - dx, BasisElement("L", dx + dy))
    if fx == "L" and fy == "Y":
        return (_l_on_y(alg, dx, dy), BasisElement("Y", dx + dy))
    if fx == "Y" and fy == "L":
        return (-_l_on_y(alg, dy, dx), BasisElement("Y", dx + dy))
    if fx == "Y" and fy == "Y":
        if alg.name in ("SV", "D"):
            return (dy - dx, BasisElement("M", dx + dy))
        return None
    if fx == "L" and fy == "M":
        return (_l_on_m(alg, dx, dy), BasisElement("M", dx + dy))
    if fx == "M" and fy == "L":
        return (-_l_on_m(alg, dy, dx), BasisElement("M", dx + dy))
    # [Y, M], [M, Y], [M, M] all vanish in SV and D
    return None


def _l_on_y(alg: AlgebraSpec, m: Fraction, p: Fraction) -> Fraction:
    if alg.name == "W":
        return p - m * alg.rho
    if alg.name == "SV":
        return p - m / 2
    if alg.name == "D":
        return p - (alg.rho + 1) / 2 * m
    raise ParameterError(f"{alg.label()} has no Y family")


def _l_on_m(alg: AlgebraSpec, m: Fraction, n: Fraction) -> Fraction:
    if alg.name == "SV":
        return n
    if alg.name == "D":
        return n - alg.rho * m
    raise ParameterError(f"{alg.label()} has no M family")


def bracket(alg: AlgebraSpec, x, y) -> Element:
    """Bilinear bracket of elements or basis elements."""
    if isinstance(x, BasisElement):
        x = Element.from_basis(x)
    if isinstance(y, BasisElement):
        y = Element.from_basis(y)
    out: dict[BasisElement, Fraction] = {}
    for bx, cx in x.terms().items():
        for by, cy in y.terms().items():
            got = struct(alg, bx, by)
            if got is None:
                continue
            coeff, basis = got
            acc = out.get(basis, Fraction(0)) + cx * cy * coeff
            if acc:
                out[basis] = acc
            else:
                out.pop(basis, None)
    return Element(out)


# -- basis enumeration ---------------------------------------------------------


def basis_degrees(alg: AlgebraSpec, family: str, window: int) -> list[Fraction]:
    """All degrees d of the family with |d| <= window, ascending."""
    offset = alg.family_offset(family)
    degrees = []
    low = -window - 1
    for z in range(low, window + 2):
        d = Fraction(z) + offset
        if -window <= d <= window:
            degrees.append(d)
    return degrees


def basis_elements(alg: AlgebraSpec, window: int) -> list[BasisElement]:
    out = []
    for family in alg.families:
        out.extend(BasisElement(family, d) for d in basis_degrees(alg, family, window))
    return out


# -- window checks --------------------------------------------------------------


BracketFn = Callable[[AlgebraSpec, BasisElement, BasisElement], Element]


def check_antisymmetry(alg: AlgebraSpec, window: int, bracket_fn: BracketFn | None = None) -> CheckReport:
    """[x,y] + [y,x] = 0 over all basis pairs with |degree| <= window."""
    if window < 0:
        raise ParameterError("window must be non-negative")
    elements = basis_elements(alg, window)
    violations = []
    if bracket_fn is None:
        for x, y in product(elements, repeat=2):
            acc: dict[BasisElement, Fraction] = {}
            for u, v in ((x, y), (y, x)):
                got = struct(alg, u, v)
                if got is not None:
                    coeff, basis = got
                    acc[basis] = acc.get(basis, Fraction(0)) + coeff
            residual = Element(acc)
            if not residual.is_zero():
                violations.append(Violation((x, y), residual))
    else:
        for x, y in product(elements, repeat=2):
            residual = bracket_fn(alg, x, y) + bracket_fn(alg, y, x)
            if not residual.is_zero():
                violations.append(Violation((x, y), residual))
    return CheckReport.from_violations(window, violations)


def check_jacobi(alg: AlgebraSpec, window: int, bracket_fn: BracketFn | None = None) -> CheckReport:
    """[[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over all basis triples in the window."""
    if window < 0:
        raise ParameterError("window must be non-negative")
    elements = basis_elements(alg, window)
    violations = []
    if bracket_fn is None:
        for x, y, z in product(elements, repeat=3):
            acc: dict[BasisElement, Fraction] = {}
            for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
                got = struct(alg, u, v)
                if got is None:
                    continue
                c1, b1 = got
                got2 = struct(alg, b1, w)
                if got2 is None:
                    continue
                c2, b2 = got2
                acc[b2] = acc.get(b2, Fraction(0)) + c1 * c2
            residual = Element(acc)
            if not residual.is_zero():
                violations.append(Violation((x, y, z), residual))
    else:
        for x, y, z in product(elements, repeat=3):
            residual = Element.zero()
            for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
                inner = bracket_fn(alg, u, v)
                for basis, coeff in inner.terms().items():
                    residual = residual + coeff * bracket_fn(alg, basis, w)
            if not residual.is_zero():
                violations.append(Violation((x, y, z), residual))
    return CheckReport.from_violations(window, violations)


# -- central-extension cocycles --------------------------------------------------

# Admissible base algebras per cocycle name: W(rho)[0] with the rho values below.
_COCYCLE_RHO = {
    "gamma0": (Fraction(0), Fraction(1)),
    "gamma01": (Fraction(0),),
    "gamma02": (Fraction(0),),
    "gamma11": (Fraction(1),),
}


def cocycle_value(name: str, x: BasisElement, y: BasisElement) -> Fraction:
    """Value on a pair of basis elements; pairs outside the support give 0."""
    if name not in COCYCLE_NAMES:
        raise ParameterError(f"unknown cocycle {name!r}; choose from {COCYCLE_NAMES}")
    m, n = x.degree, y.degree
    pair = (x.family, y.family)
    if name == "gamma0":
        if pair == ("L", "L") and m + n == 0:
            return (m**3 - m) / 12
        return Fraction(0)
    if name == "gamma02":
        if pair == ("Y", "Y") and m + n == 0:
            return n
        return Fraction(0)
    # gamma01 / gamma11 pair L with Y; the (Y, L) direction is the
    # antisymmetrized extension of the printed (L, Y) values
    shape = (lambda d: d**2 - d) if name == "gamma01" else (lambda d: (d**3 - d) / 12)
    if pair == ("L", "Y") and m + n == 0:
        return shape(m)
    if pair == ("Y", "L") and m + n == 0:
        return -shape(n)
    return Fraction(0)


def check_cocycle(name: str, alg: AlgebraSpec, window: int) -> CheckReport:
    """2-cocycle identity gamma([x,y],z) + gamma([y,z],x) + gamma([z,x],y) = 0."""
    if name not in COCYCLE_NAMES:
        raise ParameterError(f"unknown cocycle {name!r}; choose from {COCYCLE_NAMES}")
    if alg.name != "W" or alg.s != 0 or alg.rho not in _COCYCLE_RHO[name]:
        allowed = " or ".join(f"W({format_rational(r)})[0]" for r in _COCYCLE_RHO[name])
        raise ParameterError(f"{name} is defined on {allowed}, not {alg.label()}")
    if window < 0:
        raise ParameterError("window must be non-negative")
    elements = basis_elements(alg, window)
    violations = []
    for x, y, z in product(elements, repeat=3):
        total = Fraction(0)
        for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
            got = struct(alg, u, v)
            if got is None:
                continue
            coeff, basis = got
            if coeff:
                total += coeff * cocycle_value(name, basis, w)
        if total:
            violations.append(Violation((x, y, z), total))
    return CheckReport.from_violations(window, violations)
