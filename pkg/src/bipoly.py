# src/bipoly.py
"""Exact bivariate polynomials over Q.

BiPoly is a sparse, immutable map {(i, j): coeff} for coeff * x^i * y^j.
Everything the criterion needs sits on top of it: division by monic
polynomials in y, expansions in powers of one or several of them,
resultants in y, the Tschirnhausen shift and approximate roots.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

import sympy
from sympy import QQ, Poly
from sympy.polys.subresultants_qq_zz import sylvester

from src.config import DEFAULT_SYLVESTER_MAX_DEGREE
from src.errors import InternalConsistencyError, PolyError

log = logging.getLogger(__name__)

Scalar = Union[int, Fraction]

_X, _Y = sympy.symbols("x y")


class _Infinity:
    """x-order of the zero polynomial; compares above every integer."""

    _instance: "_Infinity | None" = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("equising-infinity")

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True


INFINITY = _Infinity()


def is_infinite(value: object) -> bool:
    return value is INFINITY


class BiPoly:
    __slots__ = ("_terms", "_ydeg")

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise PolyError(f"negative exponent in term x^{i}*y^{j}")
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._ydeg = max((j for _, j in clean), default=-1)

    # constructors

    @classmethod
    def const(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: Scalar, i: int, j: int) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    # inspection

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree_y(self) -> int:
        return self._ydeg

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    @property
    def is_pure_x(self) -> bool:
        return self._ydeg <= 0

    def __len__(self) -> int:
        return len(self._terms)

    def coeff_y(self, j: int) -> "BiPoly":
        return BiPoly({(i, 0): c for (i, jj), c in self._terms.items() if jj == j})

    def leading_coeff_y(self) -> "BiPoly":
        return self.coeff_y(self._ydeg)

    def is_monic_y(self) -> bool:
        return self._ydeg >= 1 and self.leading_coeff_y() == 1

    def sorted_terms(self) -> list[tuple[int, int, Fraction]]:
        """(i, j, c) in print order: y-degree descending, then x ascending."""
        return [(i, j, c) for (i, j), c in sorted(self._terms.items(), key=lambda t: (-t[0][1], t[0][0]))]

    # arithmetic

    @staticmethod
    def _coerce(other: object) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        return None

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __add__(self, other: object) -> "BiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in rhs._terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __sub__(self, other: object) -> "BiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "BiPoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "BiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in rhs._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if not isinstance(n, int) or n < 0:
            raise PolyError(f"exponent must be a nonnegative integer, got {n!r}")
        result, base = BiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "BiPoly":
        return BiPoly({k: v * c for k, v in self._terms.items()})

    def derivative_x(self) -> "BiPoly":
        return BiPoly({(i - 1, j): c * i for (i, j), c in self._terms.items() if i})

    def derivative_y(self) -> "BiPoly":
        return BiPoly({(i, j - 1): c * j for (i, j), c in self._terms.items() if j})

    def substitute_y(self, q: "BiPoly") -> "BiPoly":
        """p(x, q(x, y)) by Horner's rule over the y-columns."""
        result = BiPoly()
        for j in range(self._ydeg, -1, -1):
            result = result * q + self.coeff_y(j)
        return result

    def swap_xy(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()})

    # sympy bridge

    def to_sympy(self) -> sympy.Expr:
        return sum(
            (sympy.Rational(c.numerator, c.denominator) * _X**i * _Y**j for (i, j), c in self._terms.items()),
            sympy.Integer(0),
        )

    def _to_poly(self) -> Poly:
        return Poly.from_dict({(j, i): QQ(c.numerator, c.denominator) for (i, j), c in self._terms.items()}, _Y, _X, domain=QQ)

    @classmethod
    def from_sympy(cls, expr: sympy.Expr) -> "BiPoly":
        poly = Poly(expr, _X, _Y, domain=QQ)
        return cls({(i, j): Fraction(int(c.p), int(c.q)) for (i, j), c in poly.as_dict().items()})

    # printing

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for i, j, c in self.sorted_terms():
            text = _format_term(c, i, j)
            if out and not text.startswith("-"):
                out += "+"
            out += text
        return out

    def __repr__(self) -> str:
        return f"BiPoly({self})"


def _format_term(c: Fraction, i: int, j: int) -> str:
    factors = []
    if i:
        factors.append("x" if i == 1 else f"x^{i}")
    if j:
        factors.append("y" if j == 1 else f"y^{j}")
    mono = "*".join(factors)
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def x_order(p: BiPoly) -> int | _Infinity:
    if p.is_zero:
        return INFINITY
    return min(i for i, _ in p.terms)


def positive_leading(p: BiPoly) -> BiPoly:
    """Sign-normalized copy whose leading term (highest y, then highest x) is positive."""
    if p.is_zero:
        return p
    i, j, c = max(p.sorted_terms(), key=lambda t: (t[1], t[0]))
    return -p if c < 0 else p


def y_divmod(a: BiPoly, g: BiPoly) -> tuple[BiPoly, BiPoly]:
    if not g.is_monic_y():
        raise PolyError(f"divisor {g} is not monic in y")
    n = g.degree_y
    quotient, rest = BiPoly(), a
    while rest.degree_y >= n:
        shift = rest.degree_y - n
        lead = rest.leading_coeff_y() * BiPoly.monomial(1, 0, shift)
        quotient = quotient + lead
        rest = rest - lead * g
    return quotient, rest


def expand_in_powers(f: BiPoly, q: BiPoly) -> list[BiPoly]:
    """[c_0, c_1, ...] with f = sum c_i * q^i and deg_y c_i < deg_y q."""
    digits = []
    rest = f
    while not rest.is_zero:
        rest, rem = y_divmod(rest, q)
        digits.append(rem)
    return digits


@dataclass(frozen=True)
class Digit:
    x_order: int
    exponents: tuple[int, ...]
    coeff: BiPoly


@dataclass(frozen=True)
class AdicExpansion:
    basis: tuple[BiPoly, ...]
    digits: tuple[Digit, ...]

    def reconstruct(self) -> BiPoly:
        total = BiPoly()
        for digit in self.digits:
            term = digit.coeff
            for g, b in zip(self.basis, digit.exponents):
                term = term * g**b
            total = total + term
        return total


def _check_basis(basis: Sequence[BiPoly]) -> None:
    if not basis:
        raise PolyError("empty expansion basis")
    prev = None
    for g in basis:
        if not g.is_monic_y():
            raise PolyError(f"basis element {g} is not monic in y")
        deg = g.degree_y
        if prev is None:
            if deg != 1:
                raise PolyError(f"first basis element must have y-degree 1, got {deg}")
        elif deg <= prev or deg % prev:
            raise PolyError(f"basis degrees must increase by divisibility, got {prev} then {deg}")
        prev = deg


def _digits(p: BiPoly, basis: Sequence[BiPoly], top: int) -> list[Digit]:
    if p.is_zero:
        return []
    if top == 0:
        if not p.is_pure_x:
            raise InternalConsistencyError(f"expansion left a y-dependent coefficient {p}")
        return [Digit(x_order(p), (), p)]
    out = []
    for j, c in enumerate(expand_in_powers(p, basis[top - 1])):
        for digit in _digits(c, basis, top - 1):
            out.append(Digit(digit.x_order, digit.exponents + (j,), digit.coeff))
    return out


def adic_expand(p: BiPoly, basis: Iterable[BiPoly]) -> AdicExpansion:
    basis = tuple(basis)
    _check_basis(basis)
    digits = sorted(_digits(p, basis, len(basis)), key=lambda dg: dg.exponents)
    return AdicExpansion(basis, tuple(digits))


def resultant_y(a: BiPoly, b: BiPoly) -> BiPoly:
    if a.is_zero or b.is_zero:
        return BiPoly()
    if a.degree_y == 0:
        return a ** max(b.degree_y, 0)
    if b.degree_y == 0:
        return b ** a.degree_y
    res = a._to_poly().resultant(b._to_poly())
    return BiPoly.from_sympy(res.as_expr())


def resultant_y_sylvester(a: BiPoly, b: BiPoly, max_degree: int = DEFAULT_SYLVESTER_MAX_DEGREE) -> BiPoly:
    """Determinant of the Sylvester matrix; small degrees only."""
    if a.degree_y < 1 or b.degree_y < 1:
        return resultant_y(a, b)
    if max(a.degree_y, b.degree_y) > max_degree:
        raise PolyError(f"Sylvester determinant limited to y-degree {max_degree}")
    matrix = sylvester(a.to_sympy(), b.to_sympy(), _Y, 1)
    return BiPoly.from_sympy(sympy.expand(matrix.det()))


def normalize_tschirnhausen(p: BiPoly) -> BiPoly:
    if not p.is_monic_y():
        raise PolyError(f"{p} is not monic in y")
    n = p.degree_y
    a1 = p.coeff_y(n - 1)
    if a1.is_zero:
        return p
    shifted = p.substitute_y(BiPoly.y() - a1.scale(Fraction(1, n)))
    log.debug("Tschirnhausen shift y -> y - (%s)/%d", a1, n)
    return shifted


def approximate_root(f: BiPoly, d: int) -> BiPoly:
    if not f.is_monic_y():
        raise PolyError(f"{f} is not monic in y")
    n = f.degree_y
    if d < 1 or n % d:
        raise PolyError(f"{d} does not divide the y-degree {n}")
    if d == 1:
        return f
    g = BiPoly.monomial(1, 0, n // d)
    steps = 0
    while True:
        digits = expand_in_powers(f, g)
        alpha1 = digits[d - 1] if len(digits) >= d else BiPoly()
        if alpha1.is_zero:
            log.debug("App_%d found after %d corrections", d, steps)
            return g
        g = g + alpha1.scale(Fraction(1, d))
        steps += 1
