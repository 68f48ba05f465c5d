"""Vanilla siteswap sequences: parsing, validity, and the site swap transform.

A sequence ``h(0), ..., h(n-1)`` describes the doubly infinite juggling
pattern ``t -> t + h(t mod n)``. Beat ``t`` is thrown by the bottom hand when
``t`` is even and by the top hand when ``t`` is odd.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    IndexOrder,
    LandingClash,
    NoCatch,
    NonIntegerAverage,
    ParseError,
    SwapTooFar,
)

_SEPARATORS = re.compile(r"[\s,]+")
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class SiteswapSequence:
    """A periodic list of nonnegative throw values, indexed periodically."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = tuple(values)
        if not vals:
            raise ParseError("a siteswap needs at least one throw")
        for v in vals:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParseError(f"throw value {v!r} is not an integer")
            if v < 0:
                raise ParseError(f"throw value {v} is negative")
        object.__setattr__(self, "values", vals)

    @property
    def period(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def throw(self, t: int) -> int:
        """Throw value at integer beat ``t`` (any sign) by periodic extension."""
        return self.values[t % len(self.values)]

    @property
    def max_throw(self) -> int:
        return max(self.values)

    def __str__(self):
        return " ".join(str(v) for v in self.values)

    def __repr__(self):
        return f"SiteswapSequence({list(self.values)!r})"

    def rotate(self, shift: int) -> "SiteswapSequence":
        shift %= len(self.values)
        return SiteswapSequence(self.values[shift:] + self.values[:shift])

    def repeat(self, times: int) -> "SiteswapSequence":
        return SiteswapSequence(self.values * times)


@dataclass(frozen=True)
class ValidationReport:
    ball_count: int
    listed_period: int
    exact_period: int
    chamber_length: int
    landing_permutation: tuple[int, ...]

    def to_dict(self):
        return {
            "ball_count": self.ball_count,
            "listed_period": self.listed_period,
            "exact_period": self.exact_period,
            "chamber_length": self.chamber_length,
            "landing_permutation": list(self.landing_permutation),
        }


def parse_siteswap(text: str) -> SiteswapSequence:
    """Parse ``"5 1"``, ``"5,1"`` or compact ``"51"`` / ``"b1"`` notation.

    Separator mode (any whitespace or comma present) reads decimal tokens, so
    multi-digit throws such as ``"1 27 0"`` need separators. Compact mode reads
    one character per throw with ``a``-``z`` standing for 10-35.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty siteswap")
    if _SEPARATORS.search(stripped):
        values = []
        for token in _SEPARATORS.split(stripped):
            if not token:
                continue
            if not token.isdigit() or not token.isascii():
                raise ParseError(f"non-numeric token {token!r}", token=token)
            values.append(int(token))
        if not values:
            raise ParseError("empty siteswap")
        return SiteswapSequence(values)
    values = []
    for ch in stripped:
        idx = _DIGITS.find(ch)
        if idx < 0:
            raise ParseError(f"character {ch!r} is not in [0-9a-z]", character=ch)
        values.append(idx)
    return SiteswapSequence(values)


def as_siteswap(seq) -> SiteswapSequence:
    if isinstance(seq, SiteswapSequence):
        return seq
    if isinstance(seq, str):
        return parse_siteswap(seq)
    return SiteswapSequence(seq)


def landing_map(seq: SiteswapSequence) -> list[int]:
    n = len(seq)
    return [(i + h) % n for i, h in enumerate(seq.values)]


def exact_period(values: tuple[int, ...]) -> int:
    n = len(values)
    for m in range(1, n + 1):
        if n % m == 0 and all(values[i] == values[i % m] for i in range(n)):
            return m
    return n  # unreachable


def chamber_length_for(period: int) -> int:
    return 2 * period if period % 2 else period


def _follow_orbits(seq: SiteswapSequence, perm: list[int]) -> int:
    # A cycle of the residue permutation with total displacement S = m*n
    # carries m distinct ball worldlines; fixed 0-throws carry none.
    n = len(seq)
    seen = [False] * n
    balls = 0
    for start in range(n):
        if seen[start] or seq.values[start] == 0:
            seen[start] = True
            continue
        displacement = 0
        i = start
        while True:
            seen[i] = True
            displacement += seq.values[i]
            i = perm[i]
            if i == start:
                break
        assert displacement % n == 0
        balls += displacement // n
    return balls


def validate(seq) -> ValidationReport:
    """Check the two validity conditions and summarize the pattern.

    Raises:
        NonIntegerAverage: the throw values do not average to an integer.
        LandingClash: two beats land on the same residue mod the period.
    """
    seq = as_siteswap(seq)
    n = len(seq)
    total = sum(seq.values)
    if total % n:
        raise NonIntegerAverage(
            f"average {total}/{n} of the throw values is not an integer",
            condition=1,
            total=total,
            period=n,
        )
    perm = landing_map(seq)
    first = {}
    for i, r in enumerate(perm):
        if r in first:
            raise LandingClash(
                f"beats {first[r]} and {i} both land on residue {r} mod {n}",
                condition=2,
                beats=[first[r], i],
                residue=r,
            )
        first[r] = i
    b = total // n
    worldlines = _follow_orbits(seq, perm)
    assert worldlines == b, (worldlines, b)
    m = exact_period(seq.values)
    return ValidationReport(
        ball_count=b,
        listed_period=n,
        exact_period=m,
        chamber_length=chamber_length_for(m),
        landing_permutation=tuple(perm),
    )


def is_valid(seq) -> bool:
    try:
        validate(seq)
    except (NonIntegerAverage, LandingClash):
        return False
    return True


def exact_period_and_chamber(seq) -> tuple[int, int]:
    report = validate(seq)
    return report.exact_period, report.chamber_length


def site_swap(seq, a: int, b: int) -> SiteswapSequence:
    """Exchange the landing sites of beats ``a < b``.

    The new values are ``g(a) = h(b) + (b - a)`` and ``g(b) = h(a) - (b - a)``;
    all other beats are unchanged and the ball count is preserved.
    """
    seq = as_siteswap(seq)
    report = validate(seq)
    n = len(seq)
    if not (0 <= a < b <= n - 1):
        raise IndexOrder(f"need 0 <= a < b <= {n - 1}, got a={a}, b={b}", a=a, b=b)
    gap = b - a
    if gap > seq.values[a]:
        raise SwapTooFar(
            f"b - a = {gap} exceeds h(a) = {seq.values[a]}", a=a, b=b, gap=gap
        )
    vals = list(seq.values)
    vals[a], vals[b] = seq.values[b] + gap, seq.values[a] - gap
    out = SiteswapSequence(vals)
    assert validate(out).ball_count == report.ball_count
    return out


def predecessor_beat(seq, t: int) -> int:
    """The beat at which the ball caught at beat ``t`` was thrown."""
    seq = as_siteswap(seq)
    validate(seq)
    n = len(seq)
    if seq.throw(t) == 0:
        raise NoCatch(f"beat {t} is a 0-throw: no ball arrives", beat=t)
    perm = landing_map(seq)
    r = t % n
    j = perm.index(r)
    return t - seq.values[j]
