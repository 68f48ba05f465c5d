"""Braid words in Artin generators and the moves that act on them.

A letter is a nonzero integer: ``+i`` is sigma_i (the strand at position ``i``
crosses over the strand at ``i + 1``), ``-i`` is its inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GeneratorRange, NonAdjacent, ParseError, StrandMismatch

_HEADER = re.compile(r"^\s*B\s*(\d+)\s*:(.*)$")


@dataclass(frozen=True)
class BraidWord:
    n_strands: int
    letters: tuple[int, ...] = ()
    # True when the word is only known up to conjugation (cyclic reduction).
    up_to_conjugacy: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.n_strands < 0:
            raise GeneratorRange(f"strand count {self.n_strands} is negative")
        for x in self.letters:
            if x == 0 or abs(x) >= self.n_strands:
                raise GeneratorRange(
                    f"letter {x} is not a generator of B_{self.n_strands}", letter=x
                )

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __str__(self):
        body = " ".join(str(x) for x in self.letters)
        return f"B{self.n_strands}: {body}".rstrip()

    def pretty(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"s{abs(x)}" + ("" if x > 0 else "^-1") for x in self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __invert__(self) -> "BraidWord":
        return inverse(self)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return inverse(self) ** (-k)
        return BraidWord(self.n_strands, self.letters * k)

    def to_dict(self):
        return {"n_strands": self.n_strands, "letters": list(self.letters), "text": str(self)}


def parse_braid(text: str) -> BraidWord:
    """Read ``"B4: 2 3 2 1 -2 -1 3"``; an empty body is the trivial word."""
    m = _HEADER.match(text)
    if not m:
        raise ParseError(f"braid word {text!r} lacks a 'B<n>:' header")
    n = int(m.group(1))
    letters = []
    for tok in m.group(2).replace(",", " ").split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise ParseError(f"non-integer braid letter {tok!r}", token=tok) from None
    return BraidWord(n, letters)


def as_braid(word) -> BraidWord:
    if isinstance(word, BraidWord):
        return word
    if isinstance(word, str):
        return parse_braid(word)
    raise TypeError(f"cannot interpret {word!r} as a braid word")


# -- crossings to words ---------------------------------------------------


def word_from_crossings(crossings, initial_order: Sequence[int], n: int) -> BraidWord:
    """Read off letters from time-ordered crossings.

    Positions are numbered from the bottom of ``initial_order``. A crossing
    between positions ``i, i+1`` emits ``+i`` when the strand at ``i`` is over.
    """
    order = list(initial_order)
    if len(order) != n:
        raise StrandMismatch(f"initial order has {len(order)} strands, expected {n}")
    where = {s: i for i, s in enumerate(order)}
    letters = []
    for cr in crossings:
        i, j = sorted((where[cr.over_tag], where[cr.under_tag]))
        if j != i + 1:
            raise NonAdjacent(
                f"crossing strands at positions {i + 1} and {j + 1} are not adjacent",
                time=cr.time,
            )
        letters.append(i + 1 if order[i] == cr.over_tag else -(i + 1))
        order[i], order[j] = order[j], order[i]
        where[order[i]], where[order[j]] = i, j
    return BraidWord(n, letters)


# -- permutation -------------------------------------------------------------


def permutation(word: BraidWord) -> tuple[int, ...]:
    """``perm[p]`` is the end position of the strand starting at position ``p``."""
    n = word.n_strands
    at = list(range(n))  # at[position] = strand starting there
    for x in word.letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    perm = [0] * n
    for pos, strand in enumerate(at):
        perm[strand] = pos
    return tuple(perm)


def cycles(perm: Sequence[int]) -> list:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i]
        out.append(tuple(cyc))
    return out


def cycle_type(word: BraidWord) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(permutation(word))), reverse=True))


def permutation_and_components(word: BraidWord):
    perm = permutation(word)
    return perm, len(cycles(perm))


# -- word algebra (Artin and Markov moves) -------------------------------------


def _same_group(a: BraidWord, b: BraidWord):
    if a.n_strands != b.n_strands:
        raise StrandMismatch(
            f"cannot combine words in B_{a.n_strands} and B_{b.n_strands}"
        )


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    _same_group(a, b)
    return BraidWord(a.n_strands, a.letters + b.letters)


def inverse(word: BraidWord) -> BraidWord:
    return BraidWord(word.n_strands, tuple(-x for x in reversed(word.letters)))


def conjugate(word: BraidWord, by) -> BraidWord:
    """``g * word * g^-1`` for a letter or word ``g``."""
    g = BraidWord(word.n_strands, (by,)) if isinstance(by, int) else by
    _same_group(word, g)
    return compose(compose(g, word), inverse(g))


def stabilize(word: BraidWord, sign: int = 1) -> BraidWord:
    """Append sigma_n^{+-1}, moving the word into B_{n+1}."""
    n = word.n_strands
    return BraidWord(n + 1, word.letters + ((n if sign > 0 else -n),))


def mirror(word: BraidWord) -> BraidWord:
    return BraidWord(word.n_strands, tuple(-x for x in word.letters))


def rotate(word: BraidWord, k: int = 1) -> BraidWord:
    """Cyclic rotation, a conjugation of the word by its first ``k`` letters."""
    if not word.letters:
        return word
    k %= len(word.letters)
    return BraidWord(word.n_strands, word.letters[k:] + word.letters[:k], True)


def word_algebra(kind: str, *operands, **kwargs) -> BraidWord:
    ops = {
        "compose": compose,
        "inverse": inverse,
        "conjugate": conjugate,
        "stabilize": stabilize,
        "mirror": mirror,
    }
    if kind not in ops:
        raise ValueError(f"unknown word operation {kind!r}")
    return ops[kind](*operands, **kwargs)


# -- reduction -----------------------------------------------------------------


def free_reduce(letters: Iterable[int]) -> list:
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def _commutes(x: int, y: int) -> bool:
    return abs(abs(x) - abs(y)) > 1


def _commuting_cancel(w: list) -> bool:
    """Cancel one pair ``x v x^-1`` whose middle commutes with ``x``."""
    for p, x in enumerate(w):
        for q in range(p + 1, len(w)):
            y = w[q]
            if y == -x:
                del w[q]
                del w[p]
                return True
            if not _commutes(x, y):
                break
    return False


def _cyclic_cancel(w: list) -> bool:
    """Cancel a pair across the end of the word, moving through commuting letters."""
    n = len(w)
    for p in range(n - 1, -1, -1):
        x = w[p]
        ok = all(_commutes(x, w[r]) for r in range(p + 1, n))
        if not ok:
            continue
        for q in range(p):
            if w[q] == -x:
                del w[p]
                del w[q]
                return True
            if not _commutes(x, w[q]):
                break
    return False


def handle_reduce(letters: Sequence[int], max_steps: int = 100_000):
    """Dehornoy handle reduction.

    A handle is ``s_i^e v s_i^-e`` where ``v`` uses only generators above ``i``.
    It is replaced by ``v`` with every ``s_{i+1}^d`` rewritten as
    ``s_{i+1}^-e s_i^d s_{i+1}^e``; the leftmost-closing handle is always
    reducible. The result is empty exactly when the braid is trivial.

    Returns ``None`` if ``max_steps`` is exhausted.
    """
    w = free_reduce(letters)
    for _ in range(max_steps):
        handle = None
        for q, y in enumerate(w):
            i = abs(y)
            for p in range(q - 1, -1, -1):
                j = abs(w[p])
                if j < i:
                    break
                if j == i:
                    if w[p] == -y:
                        handle = (p, q)
                    break
            if handle:
                break
        if handle is None:
            return w
        p, q = handle
        i, e = abs(w[p]), (1 if w[p] > 0 else -1)
        middle = []
        for y in w[p + 1:q]:
            if abs(y) == i + 1:
                middle.extend((-e * (i + 1), (i if y > 0 else -i), e * (i + 1)))
            else:
                middle.append(y)
        w = free_reduce(w[:p] + middle + w[q + 1:])
    return None


def is_trivial(word: BraidWord) -> bool:
    result = handle_reduce(word.letters)
    if result is None:
        raise RuntimeError("handle reduction did not finish")
    return not result


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    """Equality in the braid group, decided by handle reduction of ``a b^-1``."""
    _same_group(a, b)
    return is_trivial(compose(a, inverse(b)))


def reduce_word(word: BraidWord, cyclic: bool = False) -> BraidWord:
    """Shorten a word without changing its braid (or conjugacy class if cyclic).

    Runs free cancellation, cancellation through commuting letters, optionally
    cancellation around the cyclic end, and keeps a handle-reduced form
    whenever it is strictly shorter. Never lengthens the word.
    """
    w = list(word.letters)
    rotated = False
    while True:
        w = free_reduce(w)
        if _commuting_cancel(w):
            continue
        if cyclic and len(w) > 1 and _cyclic_cancel(w):
            rotated = True
            continue
        if w:
            hr = handle_reduce(w, max_steps=20 * len(w) + 1000)
            if hr is not None and len(hr) < len(w):
                w = hr
                continue
        break
    return BraidWord(word.n_strands, w, up_to_conjugacy=word.up_to_conjugacy or rotated)
