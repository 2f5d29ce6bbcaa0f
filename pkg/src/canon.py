# src/canon.py
"""Equations of an equisingularity class built from its semigroup."""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from src.abhyankar import semigroup_of
from src.bipoly import BiPoly
from src.config import DEFAULT_COEFF_BOUND, DEFAULT_EXTRA_TERMS
from src.errors import InternalConsistencyError, SemigroupError
from src.numsg import SemigroupData, theta_rep

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CanonicalElement:
    semigroup: SemigroupData
    G: tuple[BiPoly, ...]
    thetas: tuple[tuple[int, ...], ...]

    @property
    def equation(self) -> BiPoly:
        return self.G[-1]

    def nested(self) -> str:
        texts = ["y"]
        for k, theta in enumerate(self.thetas, start=1):
            head = _power_text(texts[k - 1], self.semigroup.e[k - 1], atomic=k == 1)
            mono = _monomial_text(theta, texts)
            texts.append(f"{head}-{mono}")
        return texts[-1]


@dataclass(frozen=True)
class Constraint:
    """sum(coeffs[j] * theta_j) > rhs"""

    i: int
    rhs: int
    coeffs: tuple[int, ...]

    def holds(self, theta: Sequence[int]) -> bool:
        return sum(c * t for c, t in zip(self.coeffs, theta)) > self.rhs


@dataclass(frozen=True)
class GenericLevel:
    k: int
    e: int
    forced: tuple[int, ...]
    constraints: tuple[Constraint, ...]


@dataclass(frozen=True)
class GenericForm:
    semigroup: SemigroupData
    levels: tuple[GenericLevel, ...]

    def text(self) -> str:
        texts = ["y"]
        for level in self.levels:
            head = _power_text(texts[level.k - 1], level.e, atomic=level.k == 1)
            mono = _monomial_text(level.forced, texts)
            texts.append(f"{head}+a{level.k}*{mono}+F{level.k}")
        return texts[-1]


def _wrap(text: str, atomic: bool) -> str:
    return text if atomic else f"({text})"


def _power_text(text: str, exponent: int, atomic: bool) -> str:
    base = _wrap(text, atomic)
    return base if exponent == 1 else f"{base}^{exponent}"


def _monomial_text(theta: Sequence[int], texts: Sequence[str]) -> str:
    parts = []
    if theta[0]:
        parts.append("x" if theta[0] == 1 else f"x^{theta[0]}")
    for j, t in enumerate(theta[1:], start=1):
        if t:
            parts.append(_power_text(texts[j - 1], t, atomic=j == 1))
    return "*".join(parts) or "1"


def _require_valid(s: SemigroupData) -> None:
    if not s.is_valid:
        raise SemigroupError(f"{s} is not the semigroup of a plane branch")


def _monomial(theta: Sequence[int], roots: Sequence[BiPoly]) -> BiPoly:
    term = BiPoly.monomial(1, theta[0], 0)
    for j, t in enumerate(theta[1:]):
        if t:
            term = term * roots[j] ** t
    return term


def canonical_element(s: SemigroupData) -> CanonicalElement:
    _require_valid(s)
    G = [BiPoly.y()]
    thetas = []
    for k in range(1, s.h + 1):
        theta = theta_rep(s, k)
        thetas.append(theta)
        G.append(G[k - 1] ** s.e[k - 1] - _monomial(theta, G))
        log.debug("G_%d = %s", k + 1, G[-1])
    return CanonicalElement(semigroup=s, G=tuple(G), thetas=tuple(thetas))


def _weights(s: SemigroupData, k: int) -> tuple[int, ...]:
    dk1 = s.d[k]
    return tuple(v // dk1 for v in s.r[: k + 1])


def generic_form(s: SemigroupData) -> GenericForm:
    _require_valid(s)
    levels = []
    for k in range(1, s.h + 1):
        w = _weights(s, k)
        e = s.e[k - 1]
        constraints = tuple(Constraint(i=i, rhs=w[k] * i, coeffs=w[:k]) for i in range(2, e + 1))
        levels.append(GenericLevel(k=k, e=e, forced=theta_rep(s, k), constraints=constraints))
    return GenericForm(semigroup=s, levels=tuple(levels))


def enumerate_E(s: SemigroupData, k: int, i: int, xdeg_bound: int, kind: int = 2) -> list[tuple[int, ...]]:
    """Exponents theta of the monomials x^theta_0 * prod g_j^theta_j in E(k, i, kind).

    kind=2 lists the weights strictly above r_k*i/d_{k+1} with theta_0 <= xdeg_bound;
    kind=1 lists the exact matches and ignores the bound.
    """
    _require_valid(s)
    if not 1 <= k <= s.h:
        raise SemigroupError(f"level {k} outside 1..{s.h}")
    e = s.e[k - 1]
    if not 2 <= i <= e:
        raise SemigroupError(f"index {i} outside 2..{e}")
    if kind not in (1, 2):
        raise SemigroupError(f"unknown E-set kind {kind}")
    if xdeg_bound < 0:
        raise SemigroupError("x-degree bound must be nonnegative")

    w = _weights(s, k)
    target = w[k] * i
    boxes = [range(s.e[j - 1]) for j in range(1, k)]
    found = []
    for upper in itertools.product(*boxes):
        rest = target - sum(t * wj for t, wj in zip(upper, w[1:k]))
        if kind == 1:
            if rest >= 0 and rest % w[0] == 0:
                found.append((rest // w[0],) + upper)
            continue
        low = max(0, rest // w[0] + 1)
        found.extend((t0,) + upper for t0 in range(low, xdeg_bound + 1))
    return sorted(found)


def _nonzero(rng: random.Random, bound: int) -> int:
    return rng.choice([c for c in range(-bound, bound + 1) if c])


def sample_member(
    s: SemigroupData,
    seed: int = 0,
    extra_terms: int = DEFAULT_EXTRA_TERMS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    forced_coeff: int | Fraction | None = None,
    verify: bool = True,
) -> BiPoly:
    """A random member of the class of s, reproducible from the seed."""
    _require_valid(s)
    if extra_terms < 0 or coeff_bound < 1:
        raise SemigroupError("extra_terms must be >= 0 and coeff_bound >= 1")
    rng = random.Random(seed)
    form = generic_form(s)

    extras: dict[int, list[tuple[int, tuple[int, ...], int]]] = {}
    for _ in range(extra_terms if s.h else 0):
        level = rng.choice(form.levels)
        i = rng.randint(2, level.e)
        pool = enumerate_E(s, level.k, i, s.conductor)
        if not pool:
            continue
        extras.setdefault(level.k, []).append((i, rng.choice(pool), _nonzero(rng, coeff_bound)))

    G = [BiPoly.y()]
    for level in form.levels:
        k = level.k
        a = forced_coeff if forced_coeff is not None else _nonzero(rng, coeff_bound)
        nxt = G[k - 1] ** level.e + _monomial(level.forced, G).scale(a)
        for i, theta, c in extras.get(k, []):
            nxt = nxt + (_monomial(theta, G) * G[k - 1] ** (level.e - i)).scale(c)
        G.append(nxt)
    member = G[-1]

    if verify:
        got = semigroup_of(member)
        if got.r != s.r:
            raise InternalConsistencyError(f"sampled {member} has semigroup {got}, expected {s}")
    return member
