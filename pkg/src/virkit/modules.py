"""Weight modules with one-dimensional weight spaces, plus window checks.

Module kinds and their host algebras:

  Aab      over Vir: L_m . v_i = (a + i + b m) v_{m+i}, indices i in Z
  Aa       over Vir: L_m . v_i = (i + m) v_{m+i} for i != 0,
           L_m . v_0 = m (m + a) v_m
  Ba       over Vir: L_m . v_i = i v_{m+i} for i != -m,
           L_m . v_{-m} = -m (m + a) v_0
  Aabc     over W(rho)[0]: L as in Aab, Y_p . v_k = c v_{p+k}, indices in Z
  Aabc1c2  over W(rho)[1/2]: indices in (1/2) Z; L_m uses weight slope b on
           integer indices and bp on half-odd indices; Y_p . v_k = c1 v_{p+k}
           for integer k and c2 v_{p+k} for half-odd k

For Aab, Aabc and Aabc1c2 an integer offset a is normalised to 0, since
shifting every index by an integer gives an isomorphic module.  The special
points of Aa and Ba are pinned to index 0, so no normalisation applies there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebras import AlgebraSpec, BasisElement, Element, basis_elements, make_algebra, struct
from .errors import ParameterError
from .rationals import format_rational
from .reports import CheckReport, Violation

MODULE_KINDS = ("Aab", "Aa", "Ba", "Aabc", "Aabc1c2")

_PARAM_NAMES = ("a", "b", "bp", "c", "c1", "c2")


class WeightVector:
    """Finite rational linear combination of weight vectors v_i."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Fraction, Fraction] | None = None):
        self._terms = {i: c for i, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "WeightVector":
        return cls()

    @classmethod
    def basis(cls, index: Fraction | int, coeff: Fraction | int = 1) -> "WeightVector":
        return cls({Fraction(index): Fraction(coeff)})

    def terms(self) -> dict[Fraction, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "WeightVector") -> "WeightVector":
        out = dict(self._terms)
        for i, c in other._terms.items():
            acc = out.get(i, Fraction(0)) + c
            if acc:
                out[i] = acc
            else:
                out.pop(i, None)
        result = WeightVector.__new__(WeightVector)
        result._terms = out
        return result

    def __neg__(self) -> "WeightVector":
        result = WeightVector.__new__(WeightVector)
        result._terms = {i: -c for i, c in self._terms.items()}
        return result

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return self + (-other)

    def __rmul__(self, scalar: Fraction | int) -> "WeightVector":
        scalar = Fraction(scalar)
        result = WeightVector.__new__(WeightVector)
        result._terms = {i: scalar * c for i, c in self._terms.items()} if scalar else {}
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index in sorted(self._terms):
            coeff = self._terms[index]
            name = f"v_{format_rational(index)}"
            if coeff == 1:
                pieces.append(name)
            elif coeff.denominator == 1:
                pieces.append(f"({coeff.numerator})*{name}")
            else:
                pieces.append(f"({coeff.numerator}/{coeff.denominator})*{name}")
        return " + ".join(pieces)

    __repr__ = __str__


@dataclass(frozen=True)
class ModuleSpec:
    kind: str
    host: AlgebraSpec
    a: Fraction | None = None
    b: Fraction | None = None
    bp: Fraction | None = None
    c: Fraction | None = None
    c1: Fraction | None = None
    c2: Fraction | None = None

    def params(self) -> dict[str, Fraction]:
        out = {}
        for name in _PARAM_NAMES:
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out

    def label(self) -> str:
        inner = ", ".join(f"{k}={format_rational(v)}" for k, v in self.params().items())
        return f"{self.kind}({inner}) over {self.host.label()}"

    def index_offsets(self) -> tuple[Fraction, ...]:
        """Cosets of Z populated by weight indices."""
        if self.kind == "Aabc1c2":
            return (Fraction(0), Fraction(1, 2))
        return (Fraction(0),)


_REQUIRED = {
    "Aab": ("a", "b"),
    "Aa": ("a",),
    "Ba": ("a",),
    "Aabc": ("a", "b", "c"),
    "Aabc1c2": ("a", "b", "c1", "c2"),
}

_OPTIONAL = {"Aabc1c2": ("bp",)}

_NEEDS_RHO = ("Aabc", "Aabc1c2")


def make_module(
    kind: str,
    a: Fraction | int | None = None,
    b: Fraction | int | None = None,
    bp: Fraction | int | None = None,
    c: Fraction | int | None = None,
    c1: Fraction | int | None = None,
    c2: Fraction | int | None = None,
    rho: Fraction | int | None = None,
) -> ModuleSpec:
    """Validate parameters, build the host algebra and the module description."""
    if kind not in MODULE_KINDS:
        raise ParameterError(f"unknown module kind {kind!r}; choose from {MODULE_KINDS}")
    given = {"a": a, "b": b, "bp": bp, "c": c, "c1": c1, "c2": c2}
    given = {k: Fraction(v) for k, v in given.items() if v is not None}
    required = _REQUIRED[kind]
    allowed = set(required) | set(_OPTIONAL.get(kind, ()))
    for name in required:
        if name not in given:
            raise ParameterError(f"{kind} requires parameter {name}")
    for name in given:
        if name not in allowed:
            raise ParameterError(f"{kind} does not take parameter {name}")
    if kind in _NEEDS_RHO:
        if rho is None:
            raise ParameterError(f"{kind} requires parameter rho")
        host = make_algebra("W", rho=rho, s=0 if kind == "Aabc" else Fraction(1, 2))
    else:
        if rho is not None:
            raise ParameterError(f"{kind} does not take parameter rho")
        host = make_algebra("Vir")
    if kind in ("Aab", "Aabc", "Aabc1c2") and given["a"].denominator == 1:
        given["a"] = Fraction(0)
    if kind == "Aabc1c2" and "bp" not in given:
        given["bp"] = given["b"]
    return ModuleSpec(kind=kind, host=host, **given)


def _check_index(mod: ModuleSpec, index: Fraction) -> None:
    if all((index - off).denominator != 1 for off in mod.index_offsets()):
        raise ParameterError(f"index {format_rational(index)} is not on the {mod.kind} lattice")


def act_basis(mod: ModuleSpec, x: BasisElement, index: Fraction | int) -> tuple[Fraction, Fraction]:
    """Coefficient and target index of x . v_index; the coefficient may be 0."""
    index = Fraction(index)
    _check_index(mod, index)
    m = x.degree
    target = index + m
    if x.family == "L":
        if mod.kind in ("Aab", "Aabc"):
            return (mod.a + index + mod.b * m, target)
        if mod.kind == "Aabc1c2":
            slope = mod.b if index.denominator == 1 else mod.bp
            return (mod.a + index + slope * m, target)
        if mod.kind == "Aa":
            if index != 0:
                return (index + m, target)
            return (m * (m + mod.a), target)
        if mod.kind == "Ba":
            if index != -m:
                return (index, target)
            return (-m * (m + mod.a), target)
    if x.family == "Y" and mod.kind == "Aabc":
        return (mod.c, target)
    if x.family == "Y" and mod.kind == "Aabc1c2":
        return (mod.c1 if index.denominator == 1 else mod.c2, target)
    raise ParameterError(f"{x.family} does not act on {mod.kind}")


def act(mod: ModuleSpec, x: Element | BasisElement, vec: WeightVector) -> WeightVector:
    """Action of an algebra element on a module element, extended bilinearly."""
    if isinstance(x, BasisElement):
        x = Element.from_basis(x)
    out: dict[Fraction, Fraction] = {}
    for basis, cx in x.terms().items():
        for index, cv in vec.terms().items():
            coeff, target = act_basis(mod, basis, index)
            acc = out.get(target, Fraction(0)) + cx * cv * coeff
            if acc:
                out[target] = acc
            else:
                out.pop(target, None)
    return WeightVector(out)


def module_indices(mod: ModuleSpec, bound: Fraction | int) -> list[Fraction]:
    """All weight indices i with |i| <= bound, ascending."""
    bound = Fraction(bound)
    out = []
    low = -int(bound) - 1
    high = int(bound) + 2
    for off in mod.index_offsets():
        for z in range(low, high):
            i = Fraction(z) + off
            if -bound <= i <= bound:
                out.append(i)
    out.sort()
    return out


# -- window checks ----------------------------------------------------------------


def check_module_axiom(mod: ModuleSpec, window: int) -> CheckReport:
    """[x,y].v - x.(y.v) + y.(x.v) = 0 over basis pairs and indices in the window."""
    if window < 0:
        raise ParameterError("window must be non-negative")
    host = mod.host
    elements = basis_elements(host, window)
    indices = module_indices(mod, window)
    violations = []
    for x, y in product(elements, repeat=2):
        br = struct(host, x, y)
        for i in indices:
            acc: dict[Fraction, Fraction] = {}
            if br is not None:
                c0, b0 = br
                if c0:
                    coeff, target = act_basis(mod, b0, i)
                    if c0 * coeff:
                        acc[target] = acc.get(target, Fraction(0)) + c0 * coeff
            cy, ty = act_basis(mod, y, i)
            if cy:
                cx, t2 = act_basis(mod, x, ty)
                if cy * cx:
                    acc[t2] = acc.get(t2, Fraction(0)) - cy * cx
            cx, tx = act_basis(mod, x, i)
            if cx:
                cy2, t2 = act_basis(mod, y, tx)
                if cx * cy2:
                    acc[t2] = acc.get(t2, Fraction(0)) + cx * cy2
            residual = WeightVector(acc)
            if not residual.is_zero():
                violations.append(Violation((x, y, WeightVector.basis(i)), residual))
    return CheckReport.from_violations(window, violations)


class MissingIndices:
    """Weight indices a generator fails to reach inside the window."""

    __slots__ = ("indices",)

    def __init__(self, indices):
        self.indices = tuple(sorted(indices))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MissingIndices):
            return NotImplemented
        return self.indices == other.indices

    def __str__(self) -> str:
        return "missing " + ", ".join(f"v_{format_rational(i)}" for i in self.indices)

    __repr__ = __str__


def _operator_degrees(mod: ModuleSpec, window: int) -> list[tuple[str, Fraction]]:
    host = mod.host
    out: list[tuple[str, Fraction]] = []
    for family in host.families:
        offset = host.family_offset(family)
        for z in range(-2 * window - 1, 2 * window + 2):
            d = Fraction(z) + offset
            if abs(d) <= 2 * window:
                out.append((family, d))
    return out


def reachable_indices(mod: ModuleSpec, start: Fraction | int, window: int) -> set[Fraction]:
    """Indices reachable from v_start by repeated basis actions, staying in the window.

    Operator degrees up to 2*window are allowed, so any jump between two
    in-window indices can be realised by a single basis element when its
    action coefficient is nonzero.
    """
    start = Fraction(start)
    _check_index(mod, start)
    if abs(start) > window:
        raise ParameterError("start index lies outside the window")
    degrees = _operator_degrees(mod, window)
    seen = {start}
    frontier = [start]
    while frontier:
        j = frontier.pop()
        for family, d in degrees:
            target = j + d
            if abs(target) > window or target in seen:
                continue
            coeff, _ = act_basis(mod, BasisElement(family, d), j)
            if coeff:
                seen.add(target)
                frontier.append(target)
    return seen


def check_window_cyclic(mod: ModuleSpec, window: int) -> CheckReport:
    """Does each v_i with |i| <= window/2 reach every index in that range?

    One violation per failing generator, recording the missed indices.
    """
    if window < 0:
        raise ParameterError("window must be non-negative")
    required = module_indices(mod, Fraction(window, 2))
    violations = []
    for i in required:
        reached = reachable_indices(mod, i, window)
        missing = [j for j in required if j not in reached]
        if missing:
            violations.append(Violation((WeightVector.basis(i),), MissingIndices(missing)))
    return CheckReport.from_violations(window, violations)


def simplicity_criterion(mod: ModuleSpec) -> bool:
    """Parameter test for simplicity; defined for Aab, Aabc and Aabc1c2 only."""
    if mod.kind == "Aab":
        return not (mod.a.denominator == 1 and mod.b in (0, 1))
    if mod.kind == "Aabc":
        return not (mod.a.denominator == 1 and mod.b in (0, 1) and mod.c == 0)
    if mod.kind == "Aabc1c2":
        return mod.c1 * mod.c2 != 0
    raise ParameterError(f"no simplicity criterion is implemented for {mod.kind}")
