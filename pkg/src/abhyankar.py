# src/abhyankar.py
"""Intersection multiplicities and the generalized Newton polygon test.

is_irreducible() walks the approximate roots g_1 = y, g_2, ... of a monic
polynomial, collecting r_k = int(p, g_k) and d_{k+1} = gcd(d_k, r_k) until the
gcd reaches 1, and checks the growth and polygon conditions at every level.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from src.bipoly import (
    INFINITY,
    BiPoly,
    adic_expand,
    approximate_root,
    expand_in_powers,
    is_infinite,
    normalize_tschirnhausen,
    resultant_y,
    x_order,
)
from src.errors import InternalConsistencyError, PolyError, ReducibleError
from src.numsg import SemigroupData, derive_char, minimal_arrangement

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenNewtonPolygon:
    points: tuple[tuple[int, int], ...]
    hull: tuple[tuple[int, int], ...]

    def is_segment(self, length: int) -> bool:
        return self.hull == ((0, length), (length, 0))


@dataclass(frozen=True)
class StageCheck:
    k: int
    e: int
    rbar: int
    target: int
    fint_top: object
    ok: bool
    polygon: GenNewtonPolygon | None = None

    @property
    def fint_checks(self) -> str:
        return "ok" if self.ok else "failed"


@dataclass(frozen=True)
class CriterionTrace:
    verdict: str
    r: tuple[int, ...]
    d: tuple[int, ...]
    roots: tuple[BiPoly, ...]
    stages: tuple[StageCheck, ...] = ()
    reason: str | None = None
    stage: int | None = None
    normalized: BiPoly | None = None
    shifted: bool = False

    @property
    def irreducible(self) -> bool:
        return self.verdict == "irreducible"


def int_mult(f: BiPoly, g: BiPoly):
    """x-order of Res_y(f, g); INFINITY when f and g share a factor."""
    if f.is_zero or g.is_zero:
        return INFINITY
    return x_order(resultant_y(f, g))


def _gcd_chain(r: Sequence[int]) -> list[int]:
    chain = [r[0]]
    for v in r[1:]:
        chain.append(gcd(chain[-1], v))
    return chain


def fint(p: BiPoly, r: Sequence[int], g: Sequence[BiPoly]):
    r, g = tuple(r), tuple(g)
    h = len(r) - 1
    if p.is_zero:
        raise PolyError("fint of the zero polynomial")
    if h < 0 or len(g) not in (h, h + 1):
        raise PolyError(f"basis of length {len(g)} does not fit {len(r)} weights")
    chain = _gcd_chain(r)
    for i, gi in enumerate(g):
        if r[0] % chain[i] or gi.degree_y != r[0] // chain[i]:
            raise PolyError(f"basis element g_{i + 1}={gi} has y-degree {gi.degree_y}, expected r_0/d_{i + 1}")
    top_given = len(g) == h + 1
    if not top_given and p.degree_y >= r[0] // chain[h]:
        raise PolyError(f"y-degree of {p} reaches the implied top degree {r[0] // chain[h]}")

    if not g:
        if not p.is_pure_x:
            raise PolyError(f"{p} depends on y but the basis is empty")
        return x_order(p) * r[0]

    values = []
    for digit in adic_expand(p, g).digits:
        if top_given and digit.exponents[-1]:
            continue
        values.append(digit.x_order * r[0] + sum(b * w for b, w in zip(digit.exponents[:h], r[1:])))
    if not values:
        return INFINITY
    if len(set(values)) != len(values):
        raise InternalConsistencyError(f"fint minimizer not unique for {p} over weights {r}")
    return min(values)


def _lower_hull(points: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Compact sides of the lower-left hull, monotone chain from the leftmost point."""
    pts = sorted(set(points))
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] unless it turns strictly counter-clockwise
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    lowest = min(y for _, y in hull)
    cut = next(i for i, (_, y) in enumerate(hull) if y == lowest)
    return tuple(hull[: cut + 1])


def gnp(p: BiPoly, q: BiPoly, r: Sequence[int], g: Sequence[BiPoly]) -> GenNewtonPolygon:
    if not q.is_monic_y():
        raise PolyError(f"{q} is not monic in y")
    if p.degree_y < 0 or p.degree_y % q.degree_y:
        raise PolyError(f"y-degree of {q} does not divide that of {p}")
    d = p.degree_y // q.degree_y
    coeffs = expand_in_powers(p, q)
    fq = fint(q, r, g)
    if is_infinite(fq):
        raise PolyError(f"{q} has infinite formal intersection with the implied top element")
    points = [(0, d * fq)]
    for k in range(1, d + 1):
        alpha = coeffs[d - k]
        if not alpha.is_zero:
            points.append((fint(alpha, r, g), (d - k) * fq))
    return GenNewtonPolygon(points=tuple(points), hull=_lower_hull(points))


def _reducible(reason: str, stage: int, r, d, roots, stages, f, shifted) -> CriterionTrace:
    log.info("Reducible: %s", reason)
    return CriterionTrace(
        verdict="reducible", r=tuple(r), d=tuple(d), roots=tuple(roots), stages=tuple(stages),
        reason=reason, stage=stage, normalized=f, shifted=shifted,
    )


def _stage_check(f: BiPoly, k: int, r: Sequence[int], d: Sequence[int], roots: Sequence[BiPoly]) -> StageCheck:
    # lists are 0-based: d[k] is d_{k+1}, roots[k - 1] is g_k
    h = len(r) - 1
    upper = roots[k] if k < h else f
    gk = roots[k - 1]
    e = d[k - 1] // d[k]
    rbar = [v // d[k] for v in r[: k + 1]]
    basis = roots[:k]
    coeffs = expand_in_powers(upper, gk)
    alphas = {i: coeffs[e - i] for i in range(1, e + 1)}
    if not alphas[1].is_zero:
        raise InternalConsistencyError(f"approximate root g_{k} leaves alpha_1={alphas[1]}")

    target = rbar[k] * e
    top = alphas[e]
    fint_top = INFINITY if top.is_zero else fint(top, rbar, basis)
    ok = fint_top == target
    for i in range(2, e):
        if ok and not alphas[i].is_zero and not fint(alphas[i], rbar, basis) > rbar[k] * i:
            ok = False
    polygon = gnp(upper, gk, rbar, basis) if ok else None
    log.debug("stage k=%d e=%d target=%d fint=%s ok=%s", k, e, target, fint_top, ok)
    return StageCheck(k=k, e=e, rbar=rbar[k], target=target, fint_top=fint_top, ok=ok, polygon=polygon)


def is_irreducible(p: BiPoly) -> CriterionTrace:
    if not p.is_monic_y():
        raise PolyError(f"{p} is not monic in y")
    f = normalize_tschirnhausen(p)
    shifted = f != p
    n = f.degree_y
    if n == 1:
        return CriterionTrace(verdict="irreducible", r=(1,), d=(1,), roots=(), normalized=f, shifted=shifted)

    y = BiPoly.y()
    r, d, roots = [n], [n], [y]
    r1 = int_mult(f, y)
    if is_infinite(r1):
        return _reducible("int(p, g_1) is infinite", 1, r, d, roots, (), f, shifted)
    r.append(r1)

    k = 1
    while True:
        d_next = gcd(d[k - 1], r[k])
        d.append(d_next)
        if d_next == 1:
            break
        g_next = approximate_root(f, d_next)
        roots.append(g_next)
        r_next = int_mult(f, g_next)
        if is_infinite(r_next):
            return _reducible(f"int(p, g_{k + 1}) is infinite", k + 1, r, d, roots, (), f, shifted)
        r.append(r_next)
        log.debug("k=%d d=%d g=%s r=%d", k + 1, d_next, g_next, r_next)
        if not r_next * d_next > r[k] * d[k - 1]:
            return _reducible(f"condition 2 fails at k={k}", k, r, d, roots, (), f, shifted)
        k += 1

    stages = []
    for level in range(1, len(r)):
        check = _stage_check(f, level, r, d, roots)
        stages.append(check)
        if not check.ok:
            return _reducible(f"condition 3 fails at k={level}", level, r, d, roots, stages, f, shifted)
    log.info("Irreducible with r=%s", tuple(r))
    return CriterionTrace(
        verdict="irreducible", r=tuple(r), d=tuple(d), roots=tuple(roots), stages=tuple(stages),
        normalized=f, shifted=shifted,
    )


def semigroup_of(p: BiPoly) -> SemigroupData:
    trace = is_irreducible(p)
    if not trace.irreducible:
        raise ReducibleError(f"{p} is reducible: {trace.reason}", trace)
    s = derive_char(minimal_arrangement(trace.r))
    if not s.is_valid:
        raise InternalConsistencyError(f"criterion accepted {p} but {s} does not validate")
    return s


def _milnor_by_resultant(p: BiPoly) -> int:
    if p.degree_y == 1:
        return 0
    mu = x_order(resultant_y(p.derivative_x(), p.derivative_y()))
    if is_infinite(mu):
        raise InternalConsistencyError(f"partials of {p} share a factor")
    return mu


def milnor_with_semigroup(p: BiPoly) -> tuple[int, SemigroupData]:
    s = semigroup_of(p)
    mu = _milnor_by_resultant(p)
    if mu != s.conductor:
        raise InternalConsistencyError(f"Milnor number {mu} of {p} differs from conductor {s.conductor} of {s}")
    return mu, s


def milnor(p: BiPoly) -> int:
    return milnor_with_semigroup(p)[0]


@dataclass(frozen=True)
class RecursiveMilnor:
    k: int
    root_milnor: int
    value: int


def milnor_recursive_check(p: BiPoly) -> list[RecursiveMilnor]:
    """mu(p) = d_k*mu(g_k) + sum_{i>=k}(e_i-1)*r_i - d_k + 1 for every level k."""
    trace = is_irreducible(p)
    if not trace.irreducible:
        raise ReducibleError(f"{p} is reducible: {trace.reason}", trace)
    mu = _milnor_by_resultant(trace.normalized)
    r, d = trace.r, trace.d
    h = len(r) - 1
    out: list[RecursiveMilnor] = []
    for k in range(1, h + 1):
        root_mu = _milnor_by_resultant(trace.roots[k - 1])
        tail = sum((d[i - 1] // d[i] - 1) * r[i] for i in range(k, h + 1))
        value = d[k - 1] * root_mu + tail - d[k - 1] + 1
        if value != mu:
            raise InternalConsistencyError(f"level {k} gives Milnor number {value}, resultant gives {mu}")
        out.append(RecursiveMilnor(k=k, root_milnor=root_mu, value=value))
    return out
