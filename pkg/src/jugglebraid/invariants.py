"""Kauffman bracket and Jones polynomial of braid closures.

``kauffman_bracket`` multiplies through the Temperley-Lieb algebra: each
letter ``s_i^{+-1}`` acts as ``A^{+-1} * 1 + A^{-+1} * e_i``, closed loops cost
``delta = -A^2 - A^-2``, and the trace closure counts the remaining loops.
The bracket is normalized so that a single circle has bracket ``delta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .braid import BraidWord, as_braid, cycle_type, permutation_and_components
from .laurent import DELTA, LaurentPoly

MATCH_EXACT = "MatchExact"
MATCH_MIRROR = "MatchMirror"
MISMATCH = "Distinct-or-Unknown"


# -- Temperley-Lieb diagrams ---------------------------------------------------
# A diagram on n strands is a perfect matching on 2n points: 0..n-1 on the top
# edge (where the word starts) and n..2n-1 on the bottom edge.


@lru_cache(maxsize=None)
def identity_diagram(n: int) -> tuple:
    return tuple(list(range(n, 2 * n)) + list(range(n)))


@lru_cache(maxsize=None)
def e_diagram(n: int, i: int) -> tuple:
    """The cup-cap generator joining positions ``i`` and ``i+1`` (1-based)."""
    m = list(identity_diagram(n))
    j = i - 1
    m[j], m[j + 1] = j + 1, j
    m[n + j], m[n + j + 1] = n + j + 1, n + j
    return tuple(m)


def compose_diagrams(top: tuple, bottom: tuple, n: int):
    """Stack ``top`` above ``bottom``; returns ``(diagram, closed_loops)``."""
    result = [None] * (2 * n)
    middle_seen = [False] * n
    for start in range(2 * n):
        if result[start] is not None:
            continue
        # Walk from an outer point until another outer point is reached.
        if start < n:
            layer, p = 0, start
        else:
            layer, p = 1, start
        while True:
            q = (top if layer == 0 else bottom)[p]
            if layer == 0 and q >= n:
                middle_seen[q - n] = True
                layer, p = 1, q - n
            elif layer == 1 and q < n:
                middle_seen[q] = True
                layer, p = 0, q + n
            else:
                end = q if layer == 0 else q
                result[start] = end
                result[end] = start
                break
    loops = 0
    for k in range(n):
        if middle_seen[k]:
            continue
        loops += 1
        # Loop alternates between top's bottom edge and bottom's top edge.
        p = k
        while not middle_seen[p]:
            middle_seen[p] = True
            q = top[n + p] - n  # top diagram, bottom edge point n+p -> another bottom point
            middle_seen[q] = True
            p = bottom[q]  # bottom diagram, top edge q -> another top point
    return tuple(result), loops


def closure_loops(diagram: tuple, n: int) -> int:
    """Loops formed by joining each top point ``i`` to bottom point ``n + i``."""
    seen = [False] * (2 * n)
    loops = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        loops += 1
        p = start
        while not seen[p]:
            seen[p] = True
            q = diagram[p]
            seen[q] = True
            p = q + n if q < n else q - n
    return loops


def _delta_power(k: int) -> LaurentPoly:
    return _DELTA_POWERS(k)


@lru_cache(maxsize=None)
def _DELTA_POWERS(k: int) -> LaurentPoly:
    return DELTA**k


def tl_state(word: BraidWord) -> dict:
    """The word as a combination ``{diagram: coefficient}`` in TL_n."""
    n = word.n_strands
    state = {identity_diagram(n): LaurentPoly.constant(1)}
    for x in word.letters:
        i, s = abs(x), (1 if x > 0 else -1)
        e = e_diagram(n, i)
        nxt = {}
        for diag, coef in state.items():
            keep = coef.shift(s)
            nxt[diag] = nxt.get(diag, LaurentPoly()) + keep
            smoothed, loops = compose_diagrams(diag, e, n)
            add = coef.shift(-s) * _delta_power(loops)
            nxt[smoothed] = nxt.get(smoothed, LaurentPoly()) + add
        state = {d: c for d, c in nxt.items() if not c.is_zero()}
    return state


def kauffman_bracket(word) -> LaurentPoly:
    word = as_braid(word)
    n = word.n_strands
    if n == 0:
        return LaurentPoly.constant(1)
    total = LaurentPoly()
    for diag, coef in tl_state(word).items():
        total = total + coef * _delta_power(closure_loops(diag, n))
    return total


def bracket_by_states(word) -> LaurentPoly:
    """State-sum bracket over all ``2^crossings`` smoothings (slow oracle)."""
    word = as_braid(word)
    n, m = word.n_strands, len(word.letters)
    if n == 0:
        return LaurentPoly.constant(1)
    total = {}
    for choice in product((0, 1), repeat=m):
        parent = list(range(n * (m + 1)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        exponent = 0
        for level, (x, ch) in enumerate(zip(word.letters, choice)):
            i = abs(x) - 1
            # ch == 0 is the A-smoothing: vertical for s_i, cup-cap for s_i^-1.
            vertical = (ch == 0) == (x > 0)
            exponent += 1 if ch == 0 else -1
            base, nxt = level * n, (level + 1) * n
            for p in range(n):
                if vertical or p not in (i, i + 1):
                    union(base + p, nxt + p)
            if not vertical:
                union(base + i, base + i + 1)
                union(nxt + i, nxt + i + 1)
        for p in range(n):
            union(p, m * n + p)
        loops = len({find(a) for a in range(n * (m + 1))})
        for e, c in (DELTA**loops).items():
            total[e + exponent] = total.get(e + exponent, 0) + c
    return LaurentPoly(total)


def jones(word) -> LaurentPoly:
    """Jones polynomial in ``A`` (``t = A^-4``); the unknot gives 1."""
    word = as_braid(word)
    if word.n_strands < 1:
        raise ValueError("the Jones polynomial needs at least one strand")
    bracket = kauffman_bracket(word)
    w = word.writhe
    factor = LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)  # (-A^3)^-w
    return (factor * bracket).exact_div(DELTA)


@dataclass(frozen=True)
class LinkInvariants:
    n_strands: int
    components: int
    writhe: int
    cycle_type: tuple
    jones: LaurentPoly | None

    def mirror(self) -> "LinkInvariants":
        return LinkInvariants(
            self.n_strands,
            self.components,
            -self.writhe,
            self.cycle_type,
            None if self.jones is None else self.jones.mirror(),
        )

    def to_dict(self):
        return {
            "n_strands": self.n_strands,
            "components": self.components,
            "writhe": self.writhe,
            "cycle_type": list(self.cycle_type),
            "jones": None if self.jones is None else self.jones.serialize(),
            "jones_pretty": None if self.jones is None else str(self.jones),
            "jones_q": None if self.jones is None else self.jones.to_t_string(),
        }


def closure_invariants(word) -> LinkInvariants:
    word = as_braid(word)
    _, comps = permutation_and_components(word)
    return LinkInvariants(
        n_strands=word.n_strands,
        components=comps,
        writhe=word.writhe,
        cycle_type=cycle_type(word),
        jones=jones(word) if word.n_strands else None,
    )


def compare_links(found: LinkInvariants, target: LinkInvariants) -> str:
    """Link-level verdict: component count and Jones polynomial, up to mirror."""
    if found.components != target.components or found.jones is None:
        return MISMATCH
    if found.jones == target.jones:
        return MATCH_EXACT
    if found.jones == target.jones.mirror():
        return MATCH_MIRROR
    return MISMATCH


def compare_braids(found: LinkInvariants, target: LinkInvariants) -> str:
    """Solid-torus verdict: also strand count, writhe and permutation type."""
    if found.n_strands != target.n_strands or found.cycle_type != target.cycle_type:
        return MISMATCH
    if found.components != target.components:
        return MISMATCH
    if found.writhe == target.writhe and found.jones == target.jones:
        return MATCH_EXACT
    mirrored = target.mirror()
    if found.writhe == mirrored.writhe and found.jones == mirrored.jones:
        return MATCH_MIRROR
    return MISMATCH
