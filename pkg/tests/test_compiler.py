import warnings
from collections import Counter

import pytest

from jugglebraid.braid import BraidWord, parse_braid
from jugglebraid.compiler import (
    alpha_offset,
    census,
    chamber_sites,
    compile_word,
    generator_sites,
    identity_sequence,
    identity_values,
    natural_sign,
    verify_roundtrip,
)
from jugglebraid.errors import GeneratorRange
from jugglebraid.invariants import MATCH_EXACT, MATCH_MIRROR
from jugglebraid.laurent import DELTA
from jugglebraid.mapping import extract_braid
from jugglebraid.siteswap import validate


def test_alpha():
    assert [alpha_offset(k) for k in (1, 2, 3, 4)] == [0, 1, 10, 91]
    with pytest.raises(GeneratorRange):
        alpha_offset(0)


def test_identity_small():
    assert identity_sequence(1).values == (3, 0, 0)
    seq = identity_sequence(2)
    assert len(seq) == 27
    assert seq.values[1] == 27
    assert all(seq.values[t] == 3 for t in range(0, 27, 3))
    assert Counter(seq.values) == Counter({27: 1, 3: 9, 0: 17})
    assert validate(seq).ball_count == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_identity_census(n):
    seq = identity_sequence(n)
    report = validate(seq)
    assert report.ball_count == n
    expected = {3 ** (2 * k - 1): 3 ** (2 * (n - k)) for k in range(1, n + 1)}
    assert census(seq) == expected


def test_identity_cap():
    with pytest.raises(GeneratorRange):
        identity_sequence(5)
    with pytest.raises(GeneratorRange):
        identity_sequence(0)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert len(identity_values(5)) == 3**9
        identity_sequence(5, max_balls=5)
    assert caught


@pytest.mark.parametrize("n", [1, 2, 3])
def test_identity_braid_is_trivial(n):
    seq = identity_sequence(n)
    ex = extract_braid(seq, window_length=2 * len(seq))
    assert ex.word.letters == ()
    over = {}
    for c in ex.crossings:
        pair = frozenset((c.over_tag, c.under_tag))
        over.setdefault(pair, set()).add(c.over_tag)
    assert all(len(v) == 1 for v in over.values())


def test_generator_sites():
    assert generator_sites(1, 1) == (1, 27)
    assert generator_sites(1, -1) == (1, 3)
    with pytest.raises(GeneratorRange):
        generator_sites(2, 1, n=2)
    for n in (2, 3, 4):
        base = identity_values(n)
        doubled = base * 2
        for k in range(1, n):
            for sign in (1, -1):
                a, b = generator_sites(k, sign, n)
                assert 0 <= a < b and b - a <= doubled[a]
                gap = b - a
                assert gap == (26 if sign > 0 else 2) * 9 ** (k - 1)


def test_literal_compile_example():
    c = compile_word("B2: 1", literal=True)
    assert c.period == 54
    ref = identity_values(2) * 2
    diff = {i: v for i, (v, r) in enumerate(zip(c.sequence.values, ref)) if v != r}
    assert diff == {1: 29, 27: 1}


def test_compiled_sigma_one_is_rotated_literal():
    c = compile_word("B2: 1")
    lit = compile_word("B2: 1", literal=True)
    assert c.sites == ((28, 0),)
    assert c.sequence.rotate(27).values == lit.sequence.values


def test_compile_empty_and_repeated():
    c = compile_word(BraidWord(3))
    assert c.sequence == identity_sequence(3) and c.period == 243 and c.r == 0
    c = compile_word("B2: 1 1 1")
    assert c.period == 162 and c.r == 3
    assert c.chamber_letter_map == ((1, 1), (2, 1), (3, 1))
    assert validate(c.sequence).ball_count == 2


def test_compile_rejects_bad_letter():
    with pytest.raises(GeneratorRange):
        compile_word("B2: 2")


def test_chamber_sites_stay_inside():
    for n in (2, 3, 4):
        P = 3 ** (2 * n - 1)
        for k in range(1, n):
            for sign in (1, -1):
                a, b = chamber_sites(k, sign, n)
                assert 0 <= a < b <= 2 * P


def test_literal_construction_sign_depends_on_hand_only():
    # both site choices give the same crossing sign (-1)^k in the first half
    for word in ("B2: 1", "B2: -1", "B3: 2", "B3: -2"):
        rt = verify_roundtrip(word, literal=True)
        k = abs(parse_braid(word).letters[0])
        assert rt.found.writhe == natural_sign(k)


@pytest.mark.parametrize(
    "word",
    ["B2: 1", "B2: -1", "B3: 1", "B3: -1", "B3: 2", "B3: -2", "B2: 1 1 1",
     "B3: 1 2", "B3: 1 -2", "B3: -2 -1", "B3: 2 1 -2", "B4: 3 2", "B4: -3"],
)
def test_roundtrip_exact(word):
    rt = verify_roundtrip(word)
    assert rt.verdict == MATCH_EXACT
    assert rt.matched


def test_roundtrip_empty():
    for n in (1, 2, 3):
        rt = verify_roundtrip(BraidWord(n))
        assert rt.extracted.letters == ()
        assert rt.found.jones == DELTA ** (n - 1)


def test_mirror_recorded_as_match():
    rt = verify_roundtrip("B2: 1", literal=True)
    assert rt.verdict == MATCH_MIRROR and rt.matched
