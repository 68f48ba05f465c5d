"""Exhaustive search for the ball index and throw index of a link.

Sequences are enumerated once per rotation class (the lexicographically
largest rotation is kept) and only primitive ones, since a repeated sequence
has the same chambers as its primitive root. Every match is an
invariant-level match (component count and Jones polynomial up to mirror),
and every minimum is a minimum within the searched bounds only.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .braid import BraidWord, as_braid
from .errors import ParseError
from .invariants import MISMATCH, closure_invariants, compare_links
from .mapping import extract_braid
from .siteswap import SiteswapSequence, exact_period, is_valid

MATCH_LABEL = "invariant-level match"
BOUND_LABEL = "within searched bounds"

NAMED_TARGETS = {
    "unknot": "B1:",
    "hopf": "B2: 1 1",
    "trefoil": "B2: 1 1 1",
    "figure8": "B3: 1 -2 1 -2",
    "borromean": "B3: 1 -2 1 -2 1 -2",
}


def target_word(target) -> BraidWord:
    """Reference braid for a named link, or the word itself."""
    if isinstance(target, BraidWord):
        return target
    name = str(target).strip()
    key = name.lower().replace("_", "-")
    if key in NAMED_TARGETS:
        return as_braid(NAMED_TARGETS[key])
    if key.startswith("unlink-"):
        try:
            k = int(key.split("-", 1)[1])
        except ValueError:
            raise ParseError(f"bad unlink size in {name!r}") from None
        if k < 1:
            raise ParseError(f"unlink needs at least one component, got {k}")
        return BraidWord(k)
    try:
        return as_braid(name)
    except ParseError:
        known = ", ".join(sorted(NAMED_TARGETS) + ["unlink-k"])
        raise ParseError(f"unknown target {name!r}; expected a braid word or one of {known}") from None


@dataclass(frozen=True)
class SearchSpec:
    target: object = "trefoil"
    max_balls: int = 3
    max_throw: int = 5
    max_period: int = 4
    max_copies: int = 3

    def __post_init__(self):
        for name in ("max_balls", "max_throw", "max_period", "max_copies"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")


@dataclass(frozen=True, order=True)
class Witness:
    balls: int
    max_throw: int
    period: int
    copies: int
    values: tuple
    verdict: str = field(compare=False, default="")

    def to_dict(self):
        return {
            "sequence": " ".join(map(str, self.values)),
            "copies": self.copies,
            "balls": self.balls,
            "max_throw": self.max_throw,
            "verdict": self.verdict,
        }


def canonical_sequences(max_balls: int, max_throw: int, max_period: int):
    """Valid primitive sequences, one per rotation class, in a fixed order."""
    for p in range(1, max_period + 1):
        for vals in itertools.product(range(max_throw + 1), repeat=p):
            if max(vals[i:] + vals[:i] for i in range(p)) != vals:
                continue
            if sum(vals) % p or sum(vals) // p > max_balls:
                continue
            if exact_period(list(vals)) != p:
                continue
            if is_valid(SiteswapSequence(vals)):
                yield vals


def _scan(args):
    vals, max_copies, targets = args
    seq = SiteswapSequence(vals)
    balls = sum(vals) // len(vals)
    hits = []
    for k in range(1, max_copies + 1):
        inv = closure_invariants(extract_braid(seq, k).word)
        for name, target in targets:
            verdict = compare_links(inv, target)
            if verdict != MISMATCH:
                hits.append((name, Witness(balls, max(vals), len(vals), k, vals, verdict)))
    return hits


def _minimal(witnesses, key):
    if not witnesses:
        return None, []
    best = min(key(w) for w in witnesses)
    tied = sorted(w for w in witnesses if key(w) == best)
    return best, tied


@dataclass
class SearchReport:
    spec: SearchSpec
    target: BraidWord
    matches: list
    searched: int

    @property
    def ball_index(self):
        return _minimal(self.matches, lambda w: w.balls)[0]

    @property
    def throw_index(self):
        return _minimal(self.matches, lambda w: w.max_throw)[0]

    def ball_witnesses(self):
        """Matches reaching the minimal ball count, best first."""
        return _minimal(self.matches, lambda w: w.balls)[1]

    def throw_witnesses(self):
        return sorted(
            _minimal(self.matches, lambda w: w.max_throw)[1],
            key=lambda w: (w.max_throw, w.balls, w.period, w.copies, w.values),
        )

    def to_dict(self):
        s = self.spec
        bw, tw = self.ball_witnesses(), self.throw_witnesses()
        return {
            "target": str(s.target),
            "target_word": str(self.target),
            "bounds": {
                "max_balls": s.max_balls,
                "max_throw": s.max_throw,
                "max_period": s.max_period,
                "max_copies": s.max_copies,
            },
            "sequences_searched": self.searched,
            "match_kind": MATCH_LABEL,
            "bound_kind": BOUND_LABEL,
            "ball_index": self.ball_index,
            "ball_witness": bw[0].to_dict() if bw else None,
            "ball_witnesses": [w.to_dict() for w in bw],
            "throw_index": self.throw_index,
            "throw_witness": tw[0].to_dict() if tw else None,
            "throw_witnesses": [w.to_dict() for w in tw],
            "match_count": len(self.matches),
        }


def search_many(targets: dict, max_balls=3, max_throw=5, max_period=4, max_copies=3,
                n_jobs: int = 1) -> dict:
    """One pass over the sequence space for several targets at once."""
    specs = {
        name: SearchSpec(t, max_balls, max_throw, max_period, max_copies)
        for name, t in targets.items()
    }
    words = {name: target_word(t) for name, t in targets.items()}
    prepared = tuple((name, closure_invariants(w)) for name, w in words.items())
    seqs = list(canonical_sequences(max_balls, max_throw, max_period))
    jobs = [(v, max_copies, prepared) for v in seqs]
    if n_jobs and n_jobs > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            results = list(pool.map(_scan, jobs, chunksize=16))
    else:
        results = [_scan(j) for j in jobs]
    found = {name: [] for name in targets}
    for hits in results:
        for name, w in hits:
            found[name].append(w)
    return {
        name: SearchReport(specs[name], words[name], sorted(found[name]), len(seqs))
        for name in targets
    }


def search_indices(spec: SearchSpec, n_jobs: int = 1) -> SearchReport:
    """Ball and throw index of ``spec.target`` within the bounds of ``spec``."""
    return search_many(
        {"target": spec.target},
        spec.max_balls,
        spec.max_throw,
        spec.max_period,
        spec.max_copies,
        n_jobs,
    )["target"]
