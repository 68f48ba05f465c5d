"""Exact ladder-diagram geometry with dwell and carry.

Time runs along the beat axis; the lateral axis places the bottom hand (even
beats) on the line 0 and the top hand (odd beats) on the line ``w``. A ball is
caught a distance ``c`` outside its hand line at ``beat - d/2``, carried to a
point ``c`` inside the hand line, and thrown at ``beat + d/2``. A ``k``-throw is
therefore airborne for ``k - d`` beats, and its height at time ``t`` is
proportional to ``(t - launch) * (land - t)``. Carries sit at height zero.

All coordinates are :class:`fractions.Fraction`, so every intersection and
height comparison below is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (
    GeometryDegeneracy,
    HeightTie,
    InadmissibleParams,
    NonAdjacent,
    ResolutionFailure,
    WindowMisaligned,
)
from .siteswap import SiteswapSequence, as_siteswap, landing_map, validate

FLIGHT = "flight"
CARRY = "carry"

BOTTOM = 0
TOP = 1

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GeometryParams:
    w: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("w", "c", "d"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def default(cls, max_throw: int) -> "GeometryParams":
        return cls(w=Fraction(1), c=Fraction(1, 8 * (max_throw + 1)), d=Fraction(1, 4))

    def carry_margin(self, max_throw: int) -> Fraction:
        """The lateral carry offset measured in beats of a ``max_throw`` flight."""
        return self.c * (max_throw - self.d) / self.w

    def check(self, max_throw: int) -> None:
        if self.w <= 0:
            raise InadmissibleParams(f"w = {self.w} must be positive")
        if not 0 < self.d < HALF:
            raise InadmissibleParams(f"dwell d = {self.d} must lie in (0, 1/2)")
        if not 0 < self.c < self.w / 4:
            raise InadmissibleParams(f"carry c = {self.c} must lie in (0, w/4)")
        if max_throw > 0 and self.carry_margin(max_throw) >= 1:
            raise InadmissibleParams(
                f"c*(K-d)/w = {self.carry_margin(max_throw)} must be < 1 for K = {max_throw}"
            )

    def halved(self, carry=True, dwell=True) -> "GeometryParams":
        return GeometryParams(
            w=self.w,
            c=self.c / 2 if carry else self.c,
            d=self.d / 2 if dwell else self.d,
        )

    def to_dict(self):
        return {"w": str(self.w), "c": str(self.c), "d": str(self.d)}


@dataclass(frozen=True)
class LadderSegment:
    """One straight piece of a ball worldline, clipped to the window.

    ``t_start``/``t_end`` and ``lateral_start``/``lateral_end`` describe the
    visible (clipped) piece; ``launch``/``land`` keep the unclipped flight
    times that the height parabola depends on.
    """

    strand: int
    kind: str
    beat: int
    value: int
    from_hand: int
    to_hand: int
    t_start: Fraction
    t_end: Fraction
    lateral_start: Fraction
    lateral_end: Fraction
    launch: Fraction
    land: Fraction
    slope: Fraction = field(repr=False)
    intercept: Fraction = field(repr=False)

    def lateral(self, t) -> Fraction:
        return self.intercept + self.slope * t

    def height(self, t) -> Fraction:
        if self.kind == CARRY:
            return Fraction(0)
        return (t - self.launch) * (self.land - t)

    def covers(self, t) -> bool:
        """Half-open membership, so a junction time belongs to one segment."""
        return self.t_start <= t < self.t_end


@dataclass(frozen=True)
class Crossing:
    time: Fraction
    lateral: Fraction
    over: LadderSegment
    under: LadderSegment

    @property
    def over_tag(self) -> int:
        return self.over.strand

    @property
    def under_tag(self) -> int:
        return self.under.strand

    def sort_key(self):
        return (self.time, self.lateral)


@dataclass
class LadderDiagram:
    sequence: SiteswapSequence
    params: GeometryParams
    t0: Fraction
    t1: Fraction
    segments: list
    n_strands: int

    def positions_at(self, t) -> dict:
        """Lateral position of every strand at time ``t`` inside the window."""
        out = {}
        for seg in self.segments:
            if seg.t_start <= t <= seg.t_end and seg.strand not in out:
                out[seg.strand] = seg.lateral(t)
        return out

    def order_at(self, t) -> list:
        """Strand tags sorted by lateral position just before ``t``, bottom first."""
        key = {}
        for seg in self.segments:
            if seg.t_start < t <= seg.t_end and seg.strand not in key:
                key[seg.strand] = (seg.lateral(t), -seg.slope)
        return sorted(key, key=lambda s: key[s])

    def strands_through(self, t) -> int:
        return sum(1 for seg in self.segments if seg.covers(t))

    def strand_segments(self, strand: int) -> list:
        return [s for s in self.segments if s.strand == strand]


def _hand(beat: int) -> int:
    return beat % 2


def _hand_line(hand: int, p: GeometryParams) -> Fraction:
    return Fraction(0) if hand == BOTTOM else p.w


def _catch_point(hand: int, p: GeometryParams) -> Fraction:
    return -p.c if hand == BOTTOM else p.w + p.c


def _throw_point(hand: int, p: GeometryParams) -> Fraction:
    return p.c if hand == BOTTOM else p.w - p.c


def _segment(strand, kind, beat, value, hands, ta, xa, tb, xb, t0, t1):
    slope = (xb - xa) / (tb - ta)
    intercept = xa - slope * ta
    lo, hi = max(ta, t0), min(tb, t1)
    return LadderSegment(
        strand=strand,
        kind=kind,
        beat=beat,
        value=value,
        from_hand=hands[0],
        to_hand=hands[1],
        t_start=lo,
        t_end=hi,
        lateral_start=intercept + slope * lo,
        lateral_end=intercept + slope * hi,
        launch=ta,
        land=tb,
        slope=slope,
        intercept=intercept,
    )


def _check_window(window):
    t0, t1 = (Fraction(x) for x in window)
    length = t1 - t0
    if length <= 0 or length.denominator != 1 or length.numerator % 2:
        raise WindowMisaligned(f"window length {length} must be a positive even integer")
    if (t0 - HALF).denominator != 1:
        raise WindowMisaligned(f"window start {t0} must be a half-integer")
    return t0, t1


def default_window(seq, copies: int = 1, start=-HALF):
    report = validate(seq)
    t0 = Fraction(start)
    return t0, t0 + copies * report.chamber_length


def build_ladder(seq, window=None, params: Optional[GeometryParams] = None) -> LadderDiagram:
    """All flights and carries meeting ``window = (t0, t1)``, clipped to it.

    Strand tags ``0..b-1`` follow the bottom-to-top order of the balls at
    ``t0``; each tag is carried through catch, carry and re-throw.
    """
    seq = as_siteswap(seq)
    report = validate(seq)
    if window is None:
        window = default_window(seq)
    t0, t1 = _check_window(window)
    K = seq.max_throw
    p = params or GeometryParams.default(K)
    p.check(K)
    if report.ball_count == 0:
        return LadderDiagram(seq, p, t0, t1, [], 0)

    n = len(seq)
    perm = landing_map(seq)
    inverse = [0] * n
    for i, r in enumerate(perm):
        inverse[r] = i
    half_d = p.d / 2
    first = (t0 - HALF).numerator - K  # earliest launch beat that can reach t0
    last = (t1 - HALF).numerator  # last beat strictly inside the window

    # Tags for balls airborne at t0, ordered by lateral position.
    alive = []
    for s in range(first, (t0 - HALF).numerator + 1):
        k = seq.throw(s)
        if k and s + half_d < t0 < s + k - half_d:
            ta, tb = s + half_d, s + k - half_d
            xa = _throw_point(_hand(s), p)
            xb = _catch_point(_hand(s + k), p)
            slope = (xb - xa) / (tb - ta)
            alive.append((xa + slope * (t0 - ta), slope, s))
    # Ties at t0 are broken by the order just before the cut.
    alive.sort(key=lambda item: (item[0], -item[1]))
    if len({(x, sl) for x, sl, _ in alive}) != len(alive):
        raise GeometryDegeneracy(f"two balls coincide at t0 = {t0}")
    tag_of_throw = {s: i for i, (_, _, s) in enumerate(alive)}

    segments = []
    for s in range(first, last + 1):
        k = seq.throw(s)
        if k == 0:
            continue
        if s not in tag_of_throw:
            if s <= (t0 - HALF).numerator:
                continue  # landed before t0
            prev = s - seq.values[inverse[s % n]]
            tag_of_throw[s] = tag_of_throw[prev]
        tag = tag_of_throw[s]
        hand = _hand(s)
        if s > t0:
            segments.append(
                _segment(tag, CARRY, s, 0, (hand, hand),
                         s - half_d, _catch_point(hand, p),
                         s + half_d, _throw_point(hand, p), t0, t1)
            )
        ta, tb = s + half_d, s + k - half_d
        if ta < t1 and tb > t0:
            segments.append(
                _segment(tag, FLIGHT, s, k, (hand, _hand(s + k)),
                         ta, _throw_point(hand, p),
                         tb, _catch_point(_hand(s + k), p), t0, t1)
            )
    return LadderDiagram(seq, p, t0, t1, segments, report.ball_count)


def _intersect(a: LadderSegment, b: LadderSegment, t0, t1) -> Optional[Fraction]:
    # The window is half-open: a crossing exactly at t0 counts, one at t1 is
    # the periodic copy of it and does not.
    lo = max(a.t_start, b.t_start)
    hi = min(a.t_end, b.t_end)
    if lo > hi:
        return None
    if a.slope == b.slope:
        if a.intercept == b.intercept:
            raise GeometryDegeneracy(
                f"collinear overlap of strands {a.strand} and {b.strand} near t = {lo}"
            )
        return None
    t = (b.intercept - a.intercept) / (a.slope - b.slope)
    if t < lo or t > hi or t >= t1:
        return None
    if t in (a.launch, a.land, b.launch, b.land):
        raise GeometryDegeneracy(
            f"strands {a.strand} and {b.strand} meet at a segment junction, t = {t}",
            time=t,
        )
    return t


def find_crossings(diagram: LadderDiagram) -> list:
    """Every transversal strand crossing, sorted by ``(time, lateral)``.

    Raises:
        HeightTie: two strands are at equal height where they cross.
        NonAdjacent: a crossing pair is not adjacent in the running order.
        GeometryDegeneracy: endpoint contacts or collinear overlaps.
    """
    segs = sorted(diagram.segments, key=lambda s: (s.t_start, s.t_end))
    found = []
    active = []
    for seg in segs:
        active = [a for a in active if a.t_end >= seg.t_start]
        for other in active:
            if other.strand == seg.strand:
                continue
            t = _intersect(other, seg, diagram.t0, diagram.t1)
            if t is None:
                continue
            h1, h2 = other.height(t), seg.height(t)
            if h1 == h2:
                raise HeightTie(
                    f"strands {other.strand} and {seg.strand} collide at t = {t}",
                    time=t,
                    strands=[other.strand, seg.strand],
                )
            over, under = (other, seg) if h1 > h2 else (seg, other)
            found.append(Crossing(time=t, lateral=seg.lateral(t), over=over, under=under))
        active.append(seg)
    found.sort(key=Crossing.sort_key)
    ordered, _ = order_crossings(found, list(range(diagram.n_strands)))
    return ordered


def order_crossings(crossings, initial_order):
    """Replay crossings on the strand order, checking adjacency.

    Several strands can pass through one point (straight flights from one
    hand whose launch and landing times are affinely related stay concurrent
    for every ``c`` and ``d``). With distinct heights such a point is a
    layered local half-twist; its pairwise crossings are emitted in
    bubble-sort order so that each one swaps adjacent strands.

    Returns ``(ordered_crossings, final_order)``.
    """
    order = list(initial_order)
    where = {s: i for i, s in enumerate(order)}
    out = []
    idx = 0
    last_time = None
    touched = set()
    while idx < len(crossings):
        key = crossings[idx].sort_key()
        group = [crossings[idx]]
        idx += 1
        while idx < len(crossings) and crossings[idx].sort_key() == key:
            group.append(crossings[idx])
            idx += 1
        strands = {s for cr in group for s in (cr.over_tag, cr.under_tag)}
        if key[0] != last_time:
            last_time, touched = key[0], set()
        if strands & touched:
            raise NonAdjacent(
                f"simultaneous crossings share a strand at t = {key[0]}", time=key[0]
            )
        touched |= strands
        m = len(strands)
        if len(group) != m * (m - 1) // 2:
            raise GeometryDegeneracy(
                f"{m} strands meet at t = {key[0]} without crossing pairwise", time=key[0]
            )
        positions = sorted(where[s] for s in strands)
        lo = positions[0]
        if positions != list(range(lo, lo + m)):
            raise NonAdjacent(
                f"strands {sorted(strands)} cross at t = {key[0]} from non-adjacent "
                f"positions {[p + 1 for p in positions]}",
                time=key[0],
            )
        by_pair = {frozenset((cr.over_tag, cr.under_tag)): cr for cr in group}
        # Reverse the block order[lo:lo+m] by adjacent transpositions.
        for sweep in range(m - 1):
            for i in range(lo, lo + m - 1 - sweep):
                j = i + 1
                out.append(by_pair[frozenset((order[i], order[j]))])
                order[i], order[j] = order[j], order[i]
                where[order[i]], where[order[j]] = i, j
    return out, order


def check_adjacency(crossings, initial_order) -> list:
    """Final strand order after replaying ``crossings``."""
    return order_crossings(crossings, initial_order)[1]


@dataclass
class Resolution:
    params: GeometryParams
    diagram: LadderDiagram
    crossings: list
    rounds: int  # halvings forced by degenerate geometry
    refinements: int = 0  # further halvings until the crossing pattern settled

    def __iter__(self):
        # Unpacks as (params, crossings).
        return iter((self.params, self.crossings))


def _segment_id(seg: LadderSegment):
    return (seg.kind, seg.beat)


def crossing_signature(diagram: LadderDiagram, crossings) -> tuple:
    """Parameter-free description of a resolved diagram.

    Two parameter sets with equal signatures give the same braid word letter
    for letter: the same strands start in the same lateral order and the
    same segment pairs cross in the same order with the same strand on top.
    """
    start = {}
    for seg in diagram.segments:
        if seg.t_start == diagram.t0:
            start[seg.strand] = _segment_id(seg)
    order = tuple(start[s] for s in range(diagram.n_strands))
    pairs = tuple((_segment_id(c.over), _segment_id(c.under)) for c in crossings)
    return order, pairs


def _attempt(seq, window, p):
    diagram = build_ladder(seq, window, p)
    crossings = find_crossings(diagram)
    final = check_adjacency(crossings, range(diagram.n_strands))
    if diagram.n_strands and final != diagram.order_at(diagram.t1):
        raise NonAdjacent("replayed strand order disagrees with the geometry at t1")
    return diagram, crossings


def resolve_ladder(seq, window=None, params=None, max_rounds: int = 20,
                   confirm: bool = True) -> Resolution:
    """Shrink carry and dwell until the crossing list is clean and settled.

    Starts from ``w = 1, d = 1/4, c = 1/(8(K+1))`` and halves ``c`` and ``d``
    after every degenerate attempt. With ``confirm`` the result must also
    survive one more halving unchanged (same ``crossing_signature``); a
    crossing still close enough to a window cut to switch sides triggers
    another halving.
    """
    seq = as_siteswap(seq)
    if window is None:
        window = default_window(seq)
    p = params or GeometryParams.default(seq.max_throw)
    last_error = None
    rounds = refinements = 0
    current = None
    for _ in range(max_rounds + 1):
        if current is None:
            try:
                current = _attempt(seq, window, p)
            except GeometryDegeneracy as exc:
                last_error = exc
                p = p.halved()
                rounds += 1
                continue
        diagram, crossings = current
        if not confirm:
            return Resolution(p, diagram, crossings, rounds, refinements)
        q = p.halved()
        try:
            nxt = _attempt(seq, window, q)
        except GeometryDegeneracy as exc:
            last_error = exc
            nxt = None
        if nxt is not None and crossing_signature(*nxt) == crossing_signature(diagram, crossings):
            return Resolution(p, diagram, crossings, rounds, refinements)
        p, current = q, nxt
        refinements += 1
    if last_error is None:
        raise ResolutionFailure(f"crossing pattern still changing after {max_rounds} halvings")
    raise ResolutionFailure(
        f"no clean geometry after {max_rounds} halvings: {last_error.message}",
        cause=last_error.code,
        **last_error.details,
    )


def resolve_geometry(seq, window=None, params=None, max_rounds: int = 20):
    """``(params, crossings)`` for the first clean parameter set."""
    res = resolve_ladder(seq, window, params, max_rounds)
    return res.params, res.crossings
