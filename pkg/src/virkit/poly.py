"""Sparse multivariate polynomials over exact rationals.

A polynomial is a mapping from dense exponent tuples to nonzero Fraction
coefficients, over the fixed variable alphabet

    a < b < bp < rho < p < k < m < n < c

(one slot per variable, in that order).  The monomial order is graded
lexicographic: compare total degree first, then the exponent tuples in
alphabet order.  Output ("canonical string") lists terms in descending
order and is bit-exact, so polynomial identities can be frozen as text.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction

ALPHABET: tuple[str, ...] = ("a", "b", "bp", "rho", "p", "k", "m", "n", "c")
_VAR_INDEX = {name: i for i, name in enumerate(ALPHABET)}
_NVARS = len(ALPHABET)
_ZERO_EXP = (0,) * _NVARS

Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise ValueError(f"not an exact scalar: {value!r}")


def _grlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial in the fixed alphabet."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[exps] = coeff
        self._terms = clean
        self._hash: int | None = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def const(cls, value: Scalar) -> "MultiPoly":
        value = _as_fraction(value)
        return cls({_ZERO_EXP: value}) if value else cls()

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}; alphabet is {ALPHABET}")
        exps = [0] * _NVARS
        exps[_VAR_INDEX[name]] = 1
        return cls({tuple(exps): Fraction(1)})

    # -- basic queries ----------------------------------------------------

    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, name: str) -> int:
        """Largest exponent of one variable; -1 for the zero polynomial."""
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}")
        if not self._terms:
            return -1
        i = _VAR_INDEX[name]
        return max(e[i] for e in self._terms)

    def variables(self) -> tuple[str, ...]:
        """Variables with a nonzero exponent somewhere, in alphabet order."""
        used = [False] * _NVARS
        for exps in self._terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(name for i, name in enumerate(ALPHABET) if used[i])

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) == {_ZERO_EXP}:
            return self._terms[_ZERO_EXP]
        raise ValueError("polynomial is not constant")

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        """Greatest term under the graded-lexicographic order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self._terms, key=_grlex_key)
        return exps, self._terms[exps]

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            acc = out.get(exps, Fraction(0)) + coeff
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return _wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(x + y for x, y in zip(e1, e2))
                acc = out.get(exps, Fraction(0)) + c1 * c2
                if acc:
                    out[exps] = acc
                else:
                    out.pop(exps, None)
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int):
            raise ValueError("polynomial exponent must be an integer")
        if exponent < 0:
            raise ValueError("negative polynomial exponent")
        result = MultiPoly.const(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({canonical_string(self)!r})"

    def __str__(self) -> str:
        return canonical_string(self)

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a point; every variable that occurs must be assigned."""
        values: list[Fraction | None] = [None] * _NVARS
        for name, value in assignment.items():
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}")
            values[_VAR_INDEX[name]] = _as_fraction(value)
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for i, e in enumerate(exps):
                if e:
                    v = values[i]
                    if v is None:
                        raise ValueError(f"variable {ALPHABET[i]!r} is not assigned")
                    term *= v**e
            total += term
        return total

    def substitute(self, images: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Replace variables by polynomials (or scalars); others stay themselves."""
        repl: dict[int, MultiPoly] = {}
        for name, image in images.items():
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}")
            repl[_VAR_INDEX[name]] = image if isinstance(image, MultiPoly) else MultiPoly.const(image)
        total = MultiPoly.zero()
        for exps, coeff in self._terms.items():
            term = MultiPoly.const(coeff)
            for i, e in enumerate(exps):
                if not e:
                    continue
                if i in repl:
                    term = term * repl[i] ** e
                else:
                    base = [0] * _NVARS
                    base[i] = e
                    term = term * MultiPoly({tuple(base): 1})
            total = total + term
        return total

    # -- division ----------------------------------------------------------

    def divrem(self, divisor: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Single-divisor reduction against the divisor's leading term.

        Returns (q, r) with self == q * divisor + r and no monomial of r
        divisible by the divisor's leading monomial.
        """
        if not isinstance(divisor, MultiPoly) or divisor.is_zero():
            raise ValueError("division by the zero polynomial")
        d_exps, d_coeff = divisor.leading_term()
        quotient: dict[tuple[int, ...], Fraction] = {}
        remainder: dict[tuple[int, ...], Fraction] = {}
        work = dict(self._terms)
        while work:
            exps = max(work, key=_grlex_key)
            coeff = work.pop(exps)
            if all(x >= y for x, y in zip(exps, d_exps)):
                t_exps = tuple(x - y for x, y in zip(exps, d_exps))
                t_coeff = coeff / d_coeff
                quotient[t_exps] = quotient.get(t_exps, Fraction(0)) + t_coeff
                # subtract t * divisor from the tail
                for e2, c2 in divisor._terms.items():
                    if e2 == d_exps:
                        continue
                    prod = tuple(x + y for x, y in zip(t_exps, e2))
                    acc = work.get(prod, Fraction(0)) - t_coeff * c2
                    if acc:
                        work[prod] = acc
                    else:
                        work.pop(prod, None)
            else:
                remainder[exps] = coeff
        return _wrap(quotient), _wrap(remainder)


def _wrap(terms: dict[tuple[int, ...], Fraction]) -> MultiPoly:
    poly = MultiPoly.__new__(MultiPoly)
    poly._terms = terms
    poly._hash = None
    return poly


def _coerce(value: object) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return MultiPoly.const(value)
    return NotImplemented


def poly_divrem(x: MultiPoly, d: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    return x.divrem(d)


def det3(matrix: Iterable[Iterable[MultiPoly]]) -> MultiPoly:
    """Determinant of a 3x3 polynomial matrix by first-row cofactor expansion."""
    rows = [list(row) for row in matrix]
    if len(rows) != 3 or any(len(row) != 3 for row in rows):
        raise ValueError("det3 needs a 3x3 matrix")
    (a00, a01, a02), (a10, a11, a12), (a20, a21, a22) = rows
    return (
        a00 * (a11 * a22 - a12 * a21)
        - a01 * (a10 * a22 - a12 * a20)
        + a02 * (a10 * a21 - a11 * a20)
    )


# -- canonical text form ----------------------------------------------------


def _format_coefficient(coeff: Fraction) -> str:
    if coeff.denominator == 1:
        return f"({coeff.numerator})"
    return f"({coeff.numerator}/{coeff.denominator})"


def _format_monomial(exps: tuple[int, ...]) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(ALPHABET[i])
        elif e > 1:
            parts.append(f"{ALPHABET[i]}^{e}")
    return "*".join(parts)


def canonical_string(poly: MultiPoly) -> str:
    """Bit-exact text form: terms in descending graded-lex order.

    The coefficient prefix "(num/den)*" is omitted only for a coefficient of
    exactly 1 on a non-constant monomial; constants always keep parentheses.
    """
    if poly.is_zero():
        return "0"
    pieces = []
    for exps in sorted(poly._terms, key=_grlex_key, reverse=True):
        coeff = poly._terms[exps]
        mono = _format_monomial(exps)
        if not mono:
            pieces.append(_format_coefficient(coeff))
        elif coeff == 1:
            pieces.append(mono)
        else:
            pieces.append(f"{_format_coefficient(coeff)}*{mono}")
    return " + ".join(pieces)


_COEFF_RE = re.compile(r"^\((-?\d+)(?:/(\d+))?\)$")
_FACTOR_RE = re.compile(r"^([a-z]+)(?:\^(\d+))?$")


def parse_poly(text: str) -> MultiPoly:
    """Inverse of canonical_string (accepts exactly that grammar)."""
    text = text.strip()
    if text == "0":
        return MultiPoly.zero()
    if not text:
        raise ValueError("empty polynomial text")
    terms: dict[tuple[int, ...], Fraction] = {}
    for chunk in text.split(" + "):
        factors = chunk.split("*")
        coeff = Fraction(1)
        if factors and factors[0].startswith("("):
            match = _COEFF_RE.match(factors[0])
            if not match:
                raise ValueError(f"malformed coefficient {factors[0]!r}")
            num, den = match.groups()
            coeff = Fraction(int(num), int(den) if den else 1)
            factors = factors[1:]
        exps = [0] * _NVARS
        for factor in factors:
            match = _FACTOR_RE.match(factor)
            if not match or match.group(1) not in _VAR_INDEX:
                raise ValueError(f"malformed monomial factor {factor!r}")
            name, power = match.groups()
            exps[_VAR_INDEX[name]] += int(power) if power else 1
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return MultiPoly(terms)
