# src/enumalg.py
"""All semigroups of plane branches with a given Milnor number.

A semigroup of length h with conductor mu comes from one of length h-1
and conductor mu' through mu = mu'*d + (r - 1)*(d - 1), where d = d_h and
r = r_h. Exact bounds on d and r keep the search finite; every assembled
sequence still goes through numsg.validate at the end.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd, isqrt
from typing import Iterator

from src.errors import SemigroupError
from src.numsg import SemigroupData, derive_char, validate

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumBounds:
    """Search bounds at level h for conductor mu.

    M and a_h are irrational in general, so they are carried as their
    radicands together with exact floors: M = (9 + sqrt(radicand)) / 10 and
    a_h = (q + sqrt(a_radicand)) / (2 (p + q)).
    """

    h: int
    mu: int
    radicand: int
    M_floor: int
    p: Fraction
    q: Fraction
    a_radicand: Fraction
    a_floor: int
    b_lower: Fraction
    D: tuple[int, ...]
    windows: tuple[tuple[int, Fraction, Fraction], ...]

    def window(self, d: int) -> tuple[int, int]:
        for dd, b, c in self.windows:
            if dd == d:
                return ceil(b), floor(c)
        raise SemigroupError(f"{d} is not an admissible d at level {self.h} for mu={self.mu}")

    def a_h_at_least(self, d: int) -> bool:
        """Exact test of a_h >= d."""
        return _under_a_h(self.p, self.q, self.mu, d)


@dataclass(frozen=True)
class EnumNode:
    mu_prev: int
    r: int
    d: int
    children: tuple["EnumNode", ...] = ()

    @property
    def mu(self) -> int:
        return self.mu_prev * self.d + (self.r - 1) * (self.d - 1)


def length_range(m: int) -> list[int]:
    """h >= 1 with 2^h <= (9 + sqrt(1 + 60m)) / 10, compared in integers."""
    if m < 0:
        return []
    radicand = 1 + 60 * m
    out, h = [], 1
    while (10 * 2**h - 9) ** 2 <= radicand:
        out.append(h)
        h += 1
    return out


def _p(h: int) -> Fraction:
    return Fraction(5, 3) * 4 ** (h - 1) - 3 * 2 ** (h - 1) + Fraction(4, 3)


def _q(h: int) -> Fraction:
    return Fraction(3 * 2 ** (h - 1) - 2)


def lower_conductor(h: int) -> Fraction:
    """Least conductor of a semigroup of length h."""
    return Fraction(5, 3) * 4**h - 3 * 2**h + Fraction(4, 3)


def lower_last_generator(h: int) -> Fraction:
    return Fraction(5, 3) * 2 ** (2 * h - 1) - Fraction(1, 3)


def _under_a_h(p: Fraction, q: Fraction, mu: int, d: int) -> bool:
    return (p + q) * d * d - q * d - mu <= 0


def enum_bounds(mu: int, h: int) -> EnumBounds:
    if mu < 0:
        raise SemigroupError(f"conductor must be nonnegative, got {mu}")
    p, q = _p(h), _q(h)
    radicand = 1 + 60 * mu
    # a_h is the positive root of (p+q) d^2 - q d - mu; the other root is <= 0
    a_floor = 0
    while _under_a_h(p, q, mu, a_floor + 1):
        a_floor += 1
    D = tuple(range(2, a_floor + 1))
    windows = []
    for d in D:
        b = Fraction(mu, d) + 3 * 2 ** (h - 1) - 1
        c = Fraction(mu, d - 1) - p * d / (d - 1) + 1
        windows.append((d, b, c))
    return EnumBounds(
        h=h, mu=mu, radicand=radicand, M_floor=(9 + isqrt(radicand)) // 10, p=p, q=q,
        a_radicand=q * q + 4 * mu * (p + q), a_floor=a_floor, b_lower=lower_conductor(h),
        D=D, windows=tuple(windows),
    )


def _coprime_pairs(mu: int) -> list[tuple[int, int]]:
    """(a, b) with 2 <= a < b, gcd(a, b) = 1 and (a-1)(b-1) = mu."""
    pairs = []
    for u in range(1, isqrt(mu) + 1):
        if mu % u:
            continue
        a, b = u + 1, mu // u + 1
        if a < b and gcd(a, b) == 1:
            pairs.append((a, b))
    return pairs


def _candidates(bounds: EnumBounds, r_major: bool) -> Iterator[tuple[int, int]]:
    spans = {d: bounds.window(d) for d in bounds.D}
    if not r_major:
        for d in bounds.D:
            lo, hi = spans[d]
            for r in range(lo, hi + 1):
                yield d, r
        return
    lo = min((s[0] for s in spans.values()), default=1)
    hi = max((s[1] for s in spans.values()), default=0)
    for r in range(lo, hi + 1):
        for d in bounds.D:
            if spans[d][0] <= r <= spans[d][1]:
                yield d, r


@lru_cache(maxsize=None)
def search_tree(mu: int, h: int, r_major: bool = False) -> tuple[EnumNode, ...]:
    """Admissible (mu', r, d) triples at level h, each with its subtree."""
    if h == 1:
        return tuple(EnumNode(mu_prev=0, r=b, d=a) for a, b in _coprime_pairs(mu))
    nodes = []
    for d, r in _candidates(enum_bounds(mu, h), r_major):
        if gcd(r, d) != 1:
            continue
        rest = mu - (d - 1) * (r - 1)
        if rest < 0 or rest % d or (rest // d) % 2:
            continue
        children = search_tree(rest // d, h - 1, r_major)
        if children:
            nodes.append(EnumNode(mu_prev=rest // d, r=r, d=d, children=children))
    return tuple(nodes)


def _sequences(node: EnumNode) -> Iterator[tuple[int, ...]]:
    if not node.children:
        yield (node.d, node.r)
        return
    for child in node.children:
        for seq in _sequences(child):
            yield tuple(v * node.d for v in seq) + (node.r,)


def level_counts(m: int) -> dict[int, int]:
    return {h: len(search_tree(m, h)) for h in length_range(m)}


def enumerate_semigroups(m: int, r_major: bool = False) -> list[SemigroupData]:
    if m <= 0 or m % 2:
        return []
    found: set[tuple[int, ...]] = set()
    for h in length_range(m):
        for node in search_tree(m, h, r_major):
            for seq in _sequences(node):
                if validate(seq).valid and derive_char(seq).conductor == m:
                    found.add(seq)
                else:
                    log.debug("Discarding assembled sequence %s", seq)
    log.info("Milnor number %d: %d classes", m, len(found))
    return [derive_char(seq) for seq in sorted(found)]


def brute_force_enumerate(m: int, r_cap: int) -> list[SemigroupData]:
    """Exhaustive search over increasing sequences with entries <= r_cap."""
    if m <= 0 or m % 2:
        return []
    if r_cap < m + 1:
        raise ValueError(f"r_cap={r_cap} is below m+1={m + 1}")
    found: list[tuple[int, ...]] = []

    def extend(seq: tuple[int, ...], d: int, partial: int) -> None:
        for r in range(seq[-1] + 1, r_cap + 1):
            g = gcd(d, r)
            if g == d:
                continue
            total = partial + (d // g - 1) * r
            if total > m or (total >= m and g > 1):
                continue
            nxt = seq + (r,)
            if g == 1:
                if total == m and validate(nxt).valid:
                    found.append(nxt)
            else:
                extend(nxt, g, total)

    for r0 in range(2, r_cap + 1):
        extend((r0,), r0, 1 - r0)
    return [derive_char(seq) for seq in sorted(found)]


def sharp_family(h: int) -> SemigroupData:
    if h < 1:
        raise SemigroupError("sharp family needs h >= 1")
    r = [2**h] + [2 ** (h - k) * (5 * 2 ** (2 * k - 1) - 1) // 3 for k in range(1, h + 1)]
    return derive_char(r)
