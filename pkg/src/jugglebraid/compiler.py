"""Compile an arbitrary braid word into a juggling sequence.

The building block is the identity pattern in which ball ``k`` always makes
``3^(2k-1)``-throws, starting from beat ``alpha_k``. Its strands are layered by
height, so its braid is trivial. Each letter of the word then gets its own
doubled identity chamber in which one site swap between the throws of balls
``k`` and ``k+1`` creates the single crossing for that letter.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass

from .braid import BraidWord, as_braid, cycle_type
from .errors import GeneratorRange
from .invariants import MATCH_EXACT, MATCH_MIRROR, MISMATCH, closure_invariants, compare_braids
from .siteswap import SiteswapSequence, validate

log = logging.getLogger(__name__)

DEFAULT_MAX_BALLS = 4


def alpha_offset(k: int) -> int:
    """First throw beat of ball ``k``: 0, 1, 10, 91, ..."""
    if k < 1:
        raise GeneratorRange(f"ball index {k} must be >= 1")
    return sum(9**j for j in range(k - 1))


def _check_cap(n: int, max_balls):
    if n < 1:
        raise GeneratorRange(f"need at least one ball, got {n}")
    cap = DEFAULT_MAX_BALLS if max_balls is None else max_balls
    if n > cap:
        raise GeneratorRange(
            f"{n} balls exceeds the cap of {cap}; pass max_balls to override "
            f"(period grows as 3^{2 * n - 1})",
            n=n,
        )
    if n > DEFAULT_MAX_BALLS:
        warnings.warn(
            f"{n} balls gives a period of {3 ** (2 * n - 1)} beats per chamber; "
            "crossing extraction will be slow",
            stacklevel=3,
        )


def identity_values(n: int) -> list:
    period = 3 ** (2 * n - 1)
    values = [0] * period
    for k in range(n, 0, -1):
        step = 3 ** (2 * k - 1)
        for t in range(alpha_offset(k) % step, period, step):
            assert values[t] == 0, "throw classes of distinct balls overlap"
            values[t] = step
    return values


def identity_sequence(n: int, max_balls=None) -> SiteswapSequence:
    """The ``n``-ball pattern whose braid is the trivial solid torus braid."""
    _check_cap(n, max_balls)
    return SiteswapSequence(identity_values(n))


def generator_sites(k: int, sign: int, n: int | None = None) -> tuple[int, int]:
    """Beats ``(a, b)`` to swap in a doubled identity chamber for ``s_k^sign``.

    Over-crossing: ``(alpha_{k+1}, alpha_k + 3^(2k+1))``.
    Under-crossing: ``(alpha_{k+1}, alpha_k + 3^(2k-1))``.
    """
    if k < 1 or (n is not None and k > n - 1):
        raise GeneratorRange(f"generator index {k} out of range for {n} strands", k=k)
    a = alpha_offset(k + 1)
    if sign > 0:
        b = alpha_offset(k) + 3 ** (2 * k + 1)
    else:
        b = alpha_offset(k) + 3 ** (2 * k - 1)
    return a, b


def natural_sign(k: int) -> int:
    """Sign of the crossing a swap for generator ``k`` makes in the first half
    of a doubled identity chamber.

    Both site choices of ``generator_sites`` give this same sign: the crossing
    that exchanges the two balls' roles has the over-strand on the side of
    the hand that makes beat ``alpha_{k+1}``, whose parity is that of ``k``.
    The second half of the doubled chamber is the same picture with the
    hands exchanged (the identity period is odd), so a swap placed there
    gives the opposite sign.
    """
    return -1 if k % 2 else 1


def chamber_sites(k: int, sign: int, n: int, literal: bool = False) -> tuple[int, int]:
    """Swap beats inside one doubled chamber (``0 .. 2*3^(2n-1)``) for ``s_k^sign``."""
    P = 3 ** (2 * n - 1)
    a, b = generator_sites(k, sign, n)
    if literal or natural_sign(k) == sign:
        return a, b
    if b + P > 2 * P:
        # keep both sites inside this chamber; the under sites cross the same way
        a, b = generator_sites(k, -sign, n)
    return a + P, b + P


@dataclass(frozen=True)
class CompiledPattern:
    word: BraidWord
    sequence: SiteswapSequence
    n_balls: int
    r: int
    period: int
    chamber_letter_map: tuple  # ((copy j, letter), ...), 1-based copies
    sites: tuple = ()  # absolute swap beats per letter, modulo the period

    def to_dict(self):
        return {
            "word": str(self.word),
            "n_balls": self.n_balls,
            "r": self.r,
            "period": self.period,
            "chamber_letter_map": [[j, x] for j, x in self.chamber_letter_map],
            "sites": [list(ab) for ab in self.sites],
            "sequence": str(self.sequence),
        }


def compile_word(word, max_balls=None, literal: bool = False) -> CompiledPattern:
    """A juggling sequence whose chamber closes up to the given braid.

    With ``literal=True`` every swap sits in the first half of its chamber,
    which makes every letter ``s_k^e`` cross with sign ``natural_sign(k)``
    regardless of ``e``.
    """
    word = as_braid(word)
    n = word.n_strands
    _check_cap(n, max_balls)
    base = identity_values(n)
    P = len(base)
    r = len(word.letters)
    if r == 0:
        seq = SiteswapSequence(base)
        validate(seq)
        return CompiledPattern(word, seq, n, 0, P, ())
    doubled = base * 2
    total = 2 * r * P
    values = doubled * r
    letter_map, sites = [], []
    for j, x in enumerate(word.letters):
        k, sign = abs(x), (1 if x > 0 else -1)
        a, b = chamber_sites(k, sign, n, literal)
        gap = b - a
        off = 2 * j * P
        ia, ib = (off + a) % total, (off + b) % total
        va, vb = values[ia], values[ib]
        assert va == base[a % P] and vb == base[b % P], "swap sites of two letters overlap"
        assert gap <= va, "site swap precondition"
        values[ia] = vb + gap
        values[ib] = va - gap
        letter_map.append((j + 1, x))
        sites.append((ia, ib))
    seq = SiteswapSequence(values)
    report = validate(seq)
    assert report.ball_count == n
    return CompiledPattern(word, seq, n, r, total, tuple(letter_map), tuple(sites))


@dataclass
class RoundTrip:
    word: BraidWord
    compiled: CompiledPattern
    extracted: BraidWord
    verdict: str
    target: object
    found: object

    @property
    def matched(self) -> bool:
        return self.verdict in (MATCH_EXACT, MATCH_MIRROR)

    def to_dict(self):
        return {
            "word": str(self.word),
            "period": self.compiled.period,
            "extracted": str(self.extracted),
            "verdict": self.verdict,
            "target": self.target.to_dict(),
            "found": self.found.to_dict(),
        }


def verify_roundtrip(word, max_balls=None, params=None, literal: bool = False) -> RoundTrip:
    """Compile, extract the braid over one full period, and compare invariants."""
    from .mapping import extract_braid

    word = as_braid(word)
    compiled = compile_word(word, max_balls=max_balls, literal=literal)
    report = validate(compiled.sequence)
    length = compiled.period
    if length % report.chamber_length:
        length *= 2  # the r = 0 pattern has odd period
    ex = extract_braid(compiled.sequence, window_length=length, params=params)
    target = closure_invariants(word)
    found = closure_invariants(ex.word)
    verdict = compare_braids(found, target)
    if verdict == MISMATCH:
        log.warning("round trip mismatch for %s: extracted %s", word, ex.word)
    return RoundTrip(word, compiled, ex.word, verdict, target, found)


def census(seq: SiteswapSequence) -> dict:
    """Throw-value histogram over one period (zeros excluded)."""
    out = {}
    for v in seq.values:
        if v:
            out[v] = out.get(v, 0) + 1
    return dict(sorted(out.items()))


__all__ = [
    "alpha_offset",
    "identity_sequence",
    "generator_sites",
    "natural_sign",
    "chamber_sites",
    "compile_word",
    "verify_roundtrip",
    "CompiledPattern",
    "RoundTrip",
    "census",
    "cycle_type",
]
