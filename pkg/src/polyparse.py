# src/polyparse.py
"""Expression grammar for polynomials in x and y.

    expr     := [sign] term (('+'|'-') term)*
    term     := factor ('*'? factor)*
    factor   := base ('^' uint)?
    base     := 'x' | 'y' | rational | '(' expr ')'
    rational := uint ('/' uint)?

Whitespace is ignored and juxtaposition multiplies, so "2x^3y" is 2*x^3*y.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

import pyparsing as pp

from src.bipoly import BiPoly
from src.config import DEFAULT_MAX_DEGREE
from src.errors import PolyParseError

_STRAY_LETTER = re.compile(r"[A-Za-z_]")


def _rational(s: str, loc: int, toks: pp.ParseResults) -> BiPoly:
    denominator = int(toks[1]) if len(toks) > 1 else 1
    if denominator == 0:
        raise pp.ParseFatalException(s, loc, "zero denominator")
    return BiPoly.const(Fraction(int(toks[0]), denominator))


def _variable(toks: pp.ParseResults) -> BiPoly:
    return BiPoly.x() if toks[0] == "x" else BiPoly.y()


class _DegreeLimit(pp.ParseFatalException):
    pass


def _degree(p: BiPoly) -> int:
    return max(p.degree_x, p.degree_y, 0)


def _power_action(max_degree: int):
    def power(s: str, loc: int, toks: pp.ParseResults) -> BiPoly:
        base = toks[0]
        if len(toks) == 1:
            return base
        exponent = int(toks[1])
        if exponent > max_degree or exponent * _degree(base) > max_degree:
            raise _DegreeLimit(s, loc, f"power ^{exponent} exceeds the degree limit {max_degree} (EQUISING_MAX_DEGREE)")
        return base**exponent

    return power


def _product_action(max_degree: int):
    def product(s: str, loc: int, toks: pp.ParseResults) -> BiPoly:
        result = toks[0]
        for factor in toks[1:]:
            xdeg = max(result.degree_x, 0) + max(factor.degree_x, 0)
            ydeg = max(result.degree_y, 0) + max(factor.degree_y, 0)
            if max(xdeg, ydeg) > max_degree:
                raise _DegreeLimit(s, loc, f"product exceeds the degree limit {max_degree} (EQUISING_MAX_DEGREE)")
            result = result * factor
        return result

    return product


def _sum(toks: pp.ParseResults) -> BiPoly:
    items = list(toks)
    sign = "+"
    if isinstance(items[0], str):
        sign = items.pop(0)
    result = BiPoly()
    for item in items:
        if isinstance(item, str):
            sign = item
            continue
        result = result + item if sign == "+" else result - item
    return result


@lru_cache(maxsize=8)
def _grammar(max_degree: int) -> pp.ParserElement:
    expr = pp.Forward()
    uint = pp.Word(pp.nums)
    rational = (uint + pp.Optional(pp.Suppress("/") + uint)).set_parse_action(_rational)
    variable = pp.one_of("x y").set_parse_action(_variable)
    group = pp.Suppress("(") + expr + pp.Suppress(")")
    base = variable | rational | group
    factor = (base + pp.Optional(pp.Suppress("^") + uint)).set_parse_action(_power_action(max_degree))
    term = (factor + pp.ZeroOrMore(pp.Optional(pp.Suppress("*")) + factor)).set_parse_action(_product_action(max_degree))
    addop = pp.one_of("+ -")
    expr <<= (pp.Optional(addop) + term + pp.ZeroOrMore(addop + term)).set_parse_action(_sum)
    return expr


def parse_poly(text: str, max_degree: int = DEFAULT_MAX_DEGREE) -> BiPoly:
    """Parse text into a BiPoly, refusing any power or product whose x- or
    y-degree would pass max_degree before it is expanded."""
    if text is None or not text.strip():
        raise PolyParseError("empty expression", 0)
    stray = next((m for m in _STRAY_LETTER.finditer(text) if m.group() not in "xy"), None)
    if stray is not None:
        raise PolyParseError(f"unknown variable {stray.group()!r}", stray.start())
    try:
        return _grammar(max_degree).parse_string(text, parse_all=True)[0]
    except _DegreeLimit as exc:
        raise PolyParseError(exc.msg, exc.loc) from exc
    except pp.ParseBaseException as exc:
        raise PolyParseError(f"syntax error: {exc.msg}", exc.loc) from exc
