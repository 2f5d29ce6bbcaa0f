# src/numsg.py
"""Numerical semigroups of plane branches.

A candidate semigroup is given by its generators r_0 < r_1 < ... < r_h.  From
them we derive the gcd sequence d, the ratios e, and the characteristic
exponents m (recovered from r without any Puiseux parametrization).
"""
from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from src.errors import InternalConsistencyError, SemigroupError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SemigroupData:
    r: tuple[int, ...]
    d: tuple[int, ...]
    e: tuple[int, ...]
    m: tuple[int, ...]
    h: int
    conductor: int | None

    @property
    def generators(self) -> tuple[int, ...]:
        return self.r

    @property
    def is_valid(self) -> bool:
        return self.conductor is not None

    def __str__(self) -> str:
        return "<" + ",".join(str(v) for v in self.r) + ">"


@dataclass(frozen=True)
class Failure:
    tag: str
    k: int | None = None

    def __str__(self) -> str:
        return self.tag if self.k is None else f"{self.tag}({self.k})"


@dataclass(frozen=True)
class ValidationReport:
    generators: tuple[int, ...]
    failures: tuple[Failure, ...]

    @property
    def valid(self) -> bool:
        return not self.failures

    def tags(self) -> list[str]:
        return [f.tag for f in self.failures]


def parse_generators(text: str) -> tuple[int, ...]:
    parts = [p for p in re.split(r"[\s,]+", (text or "").strip()) if p]
    if not parts:
        raise SemigroupError("no generators given")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise SemigroupError(f"generators must be integers: {text!r}") from exc


def _sequences(r: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    h = len(r) - 1
    d = [r[0]]
    for k in range(1, h + 1):
        d.append(gcd(d[-1], r[k]))
    e = [d[k] // d[k + 1] for k in range(h)]
    m: list[int] = []
    if h >= 1:
        m.append(r[1])
        for k in range(1, h):
            # r_{k+1} = r_k*e_k + (m_{k+1} - m_k), solved for m_{k+1}
            m.append(r[k + 1] - r[k] * e[k - 1] + m[k - 1])
    return tuple(d), tuple(e), tuple(m)


def _conductor_pair(r: Sequence[int], d: Sequence[int], e: Sequence[int], m: Sequence[int]) -> tuple[int, int]:
    h = len(r) - 1
    by_sum = sum((e[i - 1] - 1) * r[i] for i in range(1, h + 1)) - r[0] + 1
    if h == 0:
        by_last = r[0] - 1
    else:
        # d[h - 1] is d_h, m[h - 1] is m_h
        by_last = r[h] * d[h - 1] - m[h - 1] - r[0] + 1
    return by_sum, by_last


def _check_input(r: Iterable[int]) -> tuple[int, ...]:
    seq = tuple(int(v) for v in r)
    if not seq:
        raise SemigroupError("no generators given")
    if any(v < 1 for v in seq):
        raise SemigroupError(f"generators must be positive: {seq}")
    return seq


def validate(r: Iterable[int]) -> ValidationReport:
    seq = tuple(int(v) for v in r)
    if not seq:
        return ValidationReport(seq, (Failure("empty"),))
    if any(v < 1 for v in seq):
        return ValidationReport(seq, (Failure("non-positive"),))

    failures: list[Failure] = []
    h = len(seq) - 1
    d, _, _ = _sequences(seq)

    if any(seq[i + 1] <= seq[i] for i in range(h)):
        failures.append(Failure("not-increasing"))
    if d[h] != 1:
        failures.append(Failure("gcd-not-one"))
    for k in range(1, h):
        # d is 0-based: d[k] is d_{k+1}
        if not seq[k + 1] * d[k] > seq[k] * d[k - 1]:
            failures.append(Failure("star-violated", k))
    for k in range(1, h + 1):
        if d[k] == d[k - 1]:
            failures.append(Failure("not-minimal", k))
    return ValidationReport(seq, tuple(failures))


def derive_char(r: Iterable[int]) -> SemigroupData:
    seq = _check_input(r)
    d, e, m = _sequences(seq)
    cond = None
    if validate(seq).valid:
        cond = _agreed_conductor(seq, d, e, m)
    else:
        log.debug("%s does not validate, conductor left unset", seq)
    return SemigroupData(r=seq, d=d, e=e, m=m, h=len(seq) - 1, conductor=cond)


def _agreed_conductor(r, d, e, m) -> int:
    by_sum, by_last = _conductor_pair(r, d, e, m)
    if by_sum != by_last:
        raise InternalConsistencyError(
            f"conductor formulas disagree for {tuple(r)}: {by_sum} != {by_last}"
        )
    if by_sum < 0 or by_sum % 2:
        raise InternalConsistencyError(f"conductor {by_sum} of {tuple(r)} is not a nonnegative even integer")
    return by_sum


def _require_valid(s: SemigroupData) -> None:
    if s.conductor is None:
        report = validate(s.r)
        raise SemigroupError(
            f"{s} is not the semigroup of a plane branch: " + ", ".join(str(f) for f in report.failures)
        )


def conductor(s: SemigroupData) -> int:
    """Conductor c = Milnor number, evaluated by both closed formulas."""
    _require_valid(s)
    return _agreed_conductor(s.r, s.d, s.e, s.m)


def identity_defect(s: SemigroupData, k: int) -> int:
    """sum_{i<k}(e_i-1) r_i - (r_k - m_k); zero for every 2 <= k <= h."""
    lhs = sum((s.e[i - 1] - 1) * s.r[i] for i in range(1, k))
    return lhs - (s.r[k] - s.m[k - 1])


def scaled_prefix(s: SemigroupData, k: int) -> SemigroupData:
    """Semigroup <r_0/d_k, ..., r_{k-1}/d_k> of the k-th approximate root."""
    if not 1 <= k <= s.h + 1:
        raise SemigroupError(f"prefix index {k} outside 1..{s.h + 1}")
    dk = s.d[k - 1]
    return derive_char(v // dk for v in s.r[:k])


def recursive_conductor(s: SemigroupData) -> int:
    _require_valid(s)
    if s.h == 0:
        return 0
    dh = s.d[s.h - 1]
    inner = scaled_prefix(s, s.h)
    return dh * recursive_conductor(inner) + (dh - 1) * (s.r[s.h] - 1)


def _standard_digits(target: int, weights: Sequence[int]) -> tuple[int, ...]:
    """Write target = sum theta_j*w_j with 0 <= theta_j < e_j for j >= 1.

    Digits are solved from the top index down, each from a congruence modulo
    the ratio of consecutive gcds. theta_0 may come out negative.
    """
    chain = [weights[0]]
    for w in weights[1:]:
        chain.append(gcd(chain[-1], w))
    if target % chain[-1]:
        raise SemigroupError(f"{target} is not a multiple of gcd{tuple(weights)}")

    rest = target
    digits = [0] * len(weights)
    for j in range(len(weights) - 1, 0, -1):
        below = chain[j]
        span = chain[j - 1] // below
        if rest % below:
            raise SemigroupError(f"no standard representation of {target} over {tuple(weights)}")
        if span > 1:
            digits[j] = (rest // below) * pow(weights[j] // below, -1, span) % span
        rest -= digits[j] * weights[j]
    if rest % weights[0]:
        raise SemigroupError(f"no standard representation of {target} over {tuple(weights)}")
    digits[0] = rest // weights[0]
    return tuple(digits)


def theta_rep(s: SemigroupData, k: int) -> tuple[int, ...]:
    _require_valid(s)
    if not 1 <= k <= s.h:
        raise SemigroupError(f"level {k} outside 1..{s.h}")
    dk1 = s.d[k]
    weights = [v // dk1 for v in s.r[:k]]
    target = (s.r[k] // dk1) * s.e[k - 1]
    theta = _standard_digits(target, weights)
    if theta[0] < 0:
        raise SemigroupError(f"r_{k}*e_{k} of {s} has no representation by earlier generators")
    return theta


def theta_rep_scan(s: SemigroupData, k: int) -> tuple[int, ...]:
    """Exhaustive search of the bounded box; slow, kept as a cross-check."""
    _require_valid(s)
    if not 1 <= k <= s.h:
        raise SemigroupError(f"level {k} outside 1..{s.h}")
    dk1 = s.d[k]
    weights = [v // dk1 for v in s.r[:k]]
    target = (s.r[k] // dk1) * s.e[k - 1]
    boxes = [range(target // weights[0] + 1)] + [range(s.e[j - 1]) for j in range(1, k)]
    found = [
        theta for theta in itertools.product(*boxes)
        if sum(t * w for t, w in zip(theta, weights)) == target
    ]
    if len(found) != 1:
        raise SemigroupError(f"expected a unique representation at level {k} of {s}, found {len(found)}")
    return found[0]


def membership(s: SemigroupData, n: int) -> bool:
    _require_valid(s)
    if n < 0:
        return False
    if n >= s.conductor or n == 0:
        return True
    return _standard_digits(n, s.r)[0] >= 0


def gaps(s: SemigroupData) -> list[int]:
    _require_valid(s)
    return [n for n in range(s.conductor) if not membership(s, n)]


def puiseux_pairs(s: SemigroupData) -> list[tuple[int, int]]:
    pairs = []
    for k in range(1, s.h + 1):
        mk, dk1 = s.m[k - 1], s.d[k]
        if mk % dk1:
            raise SemigroupError(f"m_{k}={mk} is not divisible by d_{k + 1}={dk1} in {s}")
        pairs.append((mk // dk1, s.e[k - 1]))
    return pairs


def from_puiseux_pairs(pairs: Sequence[tuple[int, int]]) -> SemigroupData:
    """Rebuild the generators from Newton-Puiseux pairs (beta_k, e_k)."""
    if not pairs:
        return derive_char((1,))
    es = [int(e) for _, e in pairs]
    d = [1]
    for e in reversed(es):
        d.insert(0, d[0] * e)
    m = [int(beta) * d[k + 1] for k, (beta, _) in enumerate(pairs)]
    r = [d[0], m[0]]
    for k in range(1, len(pairs)):
        r.append(r[k] * es[k - 1] + m[k] - m[k - 1])
    return derive_char(r)


def minimal_arrangement(r: Sequence[int]) -> tuple[int, ...]:
    """Increasing, minimal generating sequence from a criterion r-sequence.

    The criterion may return r_1 < r_0 (the swapped arrangement) and a
    generator that the gcd chain shows to be redundant.
    """
    seq = sorted(int(v) for v in r)
    kept = [seq[0]]
    current = seq[0]
    for v in seq[1:]:
        nxt = gcd(current, v)
        if nxt < current:
            kept.append(v)
            current = nxt
    return tuple(kept)
