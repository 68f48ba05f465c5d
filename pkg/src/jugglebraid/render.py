"""SVG and ASCII pictures of ladder diagrams.

Time runs left to right, the bottom hand is drawn at the bottom. In the SVG
every strand is one polyline; at each crossing a short background-coloured
stroke cuts the under-strand and the over-strand piece is drawn again on top.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .ladder import resolve_ladder, default_window
from .siteswap import as_siteswap, validate

COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf")

BEAT_PX = 40
BAND_PX = 160
MARGIN = 30
GAP = Fraction(1, 5)  # half-length of a crossing cut, in beats


def _fmt(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def ladder_for(seq, copies: int = 1, params=None):
    seq = as_siteswap(seq)
    validate(seq)
    return resolve_ladder(seq, default_window(seq, copies), params)


def strand_paths(diagram) -> dict:
    """``{strand: [(t, lateral), ...]}`` with consecutive duplicates removed."""
    paths = {}
    for strand in range(diagram.n_strands):
        pts = []
        for seg in sorted(diagram.strand_segments(strand), key=lambda s: s.t_start):
            for p in ((seg.t_start, seg.lateral_start), (seg.t_end, seg.lateral_end)):
                if not pts or pts[-1] != p:
                    pts.append(p)
        paths[strand] = pts
    return paths


def _cut(seg, t, diagram):
    lo = max(t - GAP, seg.t_start, diagram.t0)
    hi = min(t + GAP, seg.t_end, diagram.t1)
    return (lo, seg.lateral(lo)), (hi, seg.lateral(hi))


def render_svg(seq, copies: int = 1, params=None) -> str:
    res = ladder_for(seq, copies, params)
    diagram, crossings = res.diagram, res.crossings
    seq = diagram.sequence
    w = diagram.params.w
    t0, t1 = diagram.t0, diagram.t1
    span = float(t1 - t0)
    width = span * BEAT_PX + 2 * MARGIN
    height = BAND_PX + 2 * MARGIN

    def X(t):
        return MARGIN + float(t - t0) * BEAT_PX

    def Y(x):
        return MARGIN + BAND_PX * (1 - float(x / w))

    def points(pts):
        return " ".join(f"{_fmt(X(t))},{_fmt(Y(x))}" for t, x in pts)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f"<title>ladder diagram of {escape(str(seq))}, {copies} chamber(s)</title>",
        '<rect class="background" x="0" y="0" width="100%" height="100%" fill="white"/>',
    ]
    chamber = validate(seq).chamber_length
    for j in range(copies):
        if j % 2 == 0:
            a = t0 + j * chamber
            out.append(
                f'<rect class="chamber" x="{_fmt(X(a))}" y="{_fmt(Y(w))}" '
                f'width="{_fmt(chamber * BEAT_PX)}" height="{BAND_PX}" fill="#eeeeee"/>'
            )
    for x in (0, w):
        out.append(
            f'<line class="hand" x1="{_fmt(X(t0))}" y1="{_fmt(Y(x))}" x2="{_fmt(X(t1))}" '
            f'y2="{_fmt(Y(x))}" stroke="#888888" stroke-dasharray="4 3"/>'
        )
    first = int(t0 + Fraction(1, 2))
    for b in range(first, int(t1 + Fraction(1, 2))):
        x = 0 if b % 2 == 0 else w
        y = Y(x)
        out.append(
            f'<line class="tick" x1="{_fmt(X(b))}" y1="{_fmt(y - 4)}" x2="{_fmt(X(b))}" '
            f'y2="{_fmt(y + 4)}" stroke="#444444"/>'
        )
        label_y = y + 16 if x == 0 else y - 8
        out.append(
            f'<text class="beat" x="{_fmt(X(b))}" y="{_fmt(label_y)}" font-size="9" '
            f'text-anchor="middle">{b}</text>'
        )
    for strand, pts in strand_paths(diagram).items():
        color = COLORS[strand % len(COLORS)]
        out.append(
            f'<polyline class="strand" data-strand="{strand}" points="{points(pts)}" '
            f'fill="none" stroke="{color}" stroke-width="2"/>'
        )
    for cr in crossings:
        color = COLORS[cr.over_tag % len(COLORS)]
        out.append(
            f'<polyline class="break" points="{points(_cut(cr.under, cr.time, diagram))}" '
            f'fill="none" stroke="white" stroke-width="6"/>'
        )
        out.append(
            f'<polyline class="over" points="{points(_cut(cr.over, cr.time, diagram))}" '
            f'fill="none" stroke="{color}" stroke-width="2"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ascii(seq, copies: int = 1, params=None, cols_per_beat: int = 4, rows: int = 9) -> str:
    """Beat-grid sketch: one character cell per quarter beat and lateral band."""
    res = ladder_for(seq, copies, params)
    diagram = res.diagram
    w = diagram.params.w
    t0, t1 = diagram.t0, diagram.t1
    ncols = int((t1 - t0) * cols_per_beat)
    grid = [[" "] * ncols for _ in range(rows)]
    for r in (0, rows - 1):
        grid[r] = ["-"] * ncols
    symbols = "abcdefghijklmnopqrstuvwxyz"
    for col in range(ncols):
        t = t0 + Fraction(2 * col + 1, 2 * cols_per_beat)
        best = {}
        for seg in diagram.segments:
            if not seg.covers(t):
                continue
            r = rows - 1 - round(float(seg.lateral(t) / w) * (rows - 1))
            h = seg.height(t)
            if r not in best or h > best[r][0]:
                best[r] = (h, seg.strand)
        for r, (_, strand) in best.items():
            grid[r][col] = symbols[strand % len(symbols)]
    labels = [" "] * ncols
    for b in range(int(t0 + Fraction(1, 2)), int(t1 + Fraction(1, 2))):
        col = int((b - t0) * cols_per_beat)
        if 0 <= col < ncols:
            labels[col] = "|"
    lines = ["".join(row).rstrip() for row in grid]
    lines.append("".join(labels).rstrip())
    lines.append(f"{diagram.sequence}  window [{t0}, {t1})  crossings {len(res.crossings)}")
    return "\n".join(lines) + "\n"


def render_diagram(seq, copies: int = 1, fmt: str = "svg", path=None, params=None) -> str:
    """Render and optionally write to ``path``; returns the text either way."""
    if fmt == "svg":
        text = render_svg(seq, copies, params)
    elif fmt == "ascii":
        text = render_ascii(seq, copies, params)
    else:
        raise ValueError(f"unknown render format {fmt!r}")
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
