"""From a juggling sequence to the braid of ``copies`` adjacent chambers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, reduce_word, word_from_crossings
from .invariants import LinkInvariants, closure_invariants
from .ladder import HALF, GeometryParams, Resolution, resolve_ladder
from .siteswap import as_siteswap, validate


@dataclass
class Extraction:
    sequence: object
    copies: int
    resolution: Resolution
    raw: BraidWord
    word: BraidWord

    @property
    def params(self) -> GeometryParams:
        return self.resolution.params

    @property
    def crossings(self):
        return self.resolution.crossings


def extract_braid(seq, copies: int = 1, start=-HALF, params=None, window_length=None,
                  reduce: bool = True, cyclic: bool = True) -> Extraction:
    """Closure word of ``copies`` fundamental chambers starting at ``start``.

    ``window_length`` overrides the chamber-based length (it must be an even
    multiple of a period for the closure to be meaningful).
    """
    seq = as_siteswap(seq)
    report = validate(seq)
    length = window_length if window_length is not None else copies * report.chamber_length
    t0 = Fraction(start)
    res = resolve_ladder(seq, (t0, t0 + length), params)
    n = res.diagram.n_strands
    raw = word_from_crossings(res.crossings, range(n), n)
    word = reduce_word(raw, cyclic=cyclic) if reduce else raw
    return Extraction(seq, copies, res, raw, word)


def juggle_braid(seq, copies: int = 1, **kwargs) -> BraidWord:
    return extract_braid(seq, copies, **kwargs).word


def juggle_link(seq, copies: int = 1, **kwargs) -> LinkInvariants:
    return closure_invariants(extract_braid(seq, copies, **kwargs).word)
