from __future__ import annotations

import random
from fractions import Fraction

import pytest

from lyndon2d import (
    InvalidInput,
    NotSufficientlyPeriodic,
    Occurrence,
    OpCounter,
    SummaryColumn,
    brute_search,
    build_index,
    search_text,
    verify_candidate,
)
from lyndon2d.dictmatch import SENTINEL, _Automaton, _window_summaries
from lyndon2d.workbench import gen_matrix
from oracles import occurs_at, periodic_extension

HALF = Fraction(1, 2)


def window_column(rows, index, width=None):
    """Summaries of full-height rows, exactly as the search path builds them."""
    width = len(rows[0]) if width is None else width
    ids, periods, lwpos = _window_summaries(rows, 0, width, index)
    return SummaryColumn(tuple(periods), tuple(lwpos), tuple(ids))


# ---------------------------------------------------------------------------
# automaton


def test_automaton_matches_naive_scan():
    rng = random.Random(0)
    for _ in range(50):
        alphabet = range(4)
        k = rng.randint(1, 4)
        length = rng.randint(1, 4)
        keywords = {
            tuple(rng.choice(alphabet) for _ in range(length)) for _ in range(k)
        }
        auto = _Automaton()
        for word in keywords:
            auto.insert(word, word)
        auto.build()
        text = [rng.choice([*alphabet, SENTINEL]) for _ in range(40)]
        got = {(end, w) for end, w in auto.scan(text)}
        expected = {
            (end, w)
            for w in keywords
            for end in range(len(w) - 1, len(text))
            if tuple(text[end - len(w) + 1 : end + 1]) == w
        }
        assert got == expected


# ---------------------------------------------------------------------------
# build_index


def test_build_all_a_pattern():
    pattern = ["aaaaaaaa"] * 8
    index = build_index([pattern])
    assert index.m == 8 and index.d == 1
    assert len(index.groups) == 1
    group = next(iter(index.groups.values()))
    assert group.r == 8  # running LCM stays at 1, never above the width
    assert group.lcm_prefix_r == (1,) * 8
    assert group.subgroups == {(0,) * 8: {(): [(0, 0)]}}


def test_build_rotated_patterns_share_subgroup():
    rng = random.Random(1)
    periods = [3, 4, 2, 3, 1, 4, 2, 3]  # prefix LCM hits 12 > 8 at row 2
    p1 = gen_matrix(periods, 8, alphabet=3, rng=rng)
    p2 = [periodic_extension(row, 8, 1) for row in p1]
    index = build_index([p1, p2], max_period_fraction=HALF)
    assert len(index.groups) == 1
    group = next(iter(index.groups.values()))
    assert group.r == 2
    assert len(group.subgroups) == 1
    entries = [e for tails in group.subgroups.values() for es in tails.values() for e in es]
    assert sorted(pid for pid, _ in entries) == [0, 1]
    z_values = {pid: z for pid, z in entries}
    assert z_values[1] == (z_values[0] - 1) % group.lcm_prefix_r[-1]


def test_build_distinct_period_structures_split_groups():
    rng = random.Random(2)
    mixed = gen_matrix([2, 3] * 8, 16, alphabet=3, rng=rng, strict=True)
    uniform = gen_matrix([2] * 16, 16, alphabet=3, rng=rng, strict=True)
    index = build_index([mixed, uniform])
    assert len(index.groups) == 2


def test_build_input_validation():
    with pytest.raises(InvalidInput):
        build_index([])
    with pytest.raises(InvalidInput):
        build_index([["ab", "ab"], ["abc", "abc", "abc"]])
    with pytest.raises(InvalidInput):
        build_index([["abc", "abc"]])
    with pytest.raises(NotSufficientlyPeriodic) as info:
        build_index([["abababab"] * 7 + ["abcdefgh"]])
    assert "pattern 0 row 7" in str(info.value)


# ---------------------------------------------------------------------------
# verify_candidate


@pytest.fixture
def head_split_index():
    rng = random.Random(3)
    periods = [3, 4, 2, 3, 1, 4, 2, 3]
    pattern = gen_matrix(periods, 8, alphabet=3, rng=rng)
    return pattern, build_index([pattern], max_period_fraction=HALF)


def test_verify_self_window(head_split_index):
    pattern, index = head_split_index
    group = next(iter(index.groups.values()))
    window = [periodic_extension(row, 12) for row in pattern]
    col = window_column(window, index)
    assert verify_candidate(col, group, 12) == [(0, 0)]


def test_verify_rotated_window(head_split_index):
    pattern, index = head_split_index
    group = next(iter(index.groups.values()))
    # window holds the pattern rotated right by 3: occurrence at column 3
    window = [periodic_extension(row, 12, -3) for row in pattern]
    col = window_column(window, index)
    assert verify_candidate(col, group, 12) == [(0, 3)]
    for pid, s in [(0, 3)]:
        assert occurs_at(window, pattern, 0, s)


def test_verify_perturbed_head_misses(head_split_index):
    pattern, index = head_split_index
    group = next(iter(index.groups.values()))
    window = [periodic_extension(row, 12) for row in pattern]
    # shift only the second row's phase: head offsets no longer match
    window[1] = periodic_extension(pattern[1], 12, 1)
    col = window_column(window, index)
    assert col.names == group.name_seq
    assert verify_candidate(col, group, 12) == []


def test_verify_degenerate_group_reports_every_admissible_shift():
    pattern = [periodic_extension("ab", 8)] * 8  # joint repeat of 2
    index = build_index([pattern])
    group = next(iter(index.groups.values()))
    window = [periodic_extension("ab", 12)] * 8
    col = window_column(window, index)
    assert verify_candidate(col, group, 12) == [(0, 0), (0, 2), (0, 4)]


# ---------------------------------------------------------------------------
# search_text + brute_search


def test_brute_search_examples():
    text = ["abab", "cdcd", "abab", "cdcd"]
    pattern = ["ab", "cd"]
    got = brute_search(text, [pattern])
    assert got == {
        Occurrence(0, 0, 0),
        Occurrence(0, 0, 2),
        Occurrence(0, 2, 0),
        Occurrence(0, 2, 2),
    }
    assert brute_search(text, [["zz"]]) == set()
    assert brute_search(text, [text]) == {Occurrence(0, 0, 0)}


def test_search_tiled_pattern_matches_brute():
    rng = random.Random(4)
    periods = [2, 4, 1, 3, 2, 4, 1, 3]
    pattern = gen_matrix(periods, 8, alphabet=3, rng=rng, strict=False)
    index = build_index([pattern], max_period_fraction=HALF)
    text = [periodic_extension(row, 32) for row in pattern]
    found = search_text(text, index)
    assert found == brute_search(text, [pattern])
    assert Occurrence(0, 0, 0) in found
    for occ in found:
        assert occurs_at(text, pattern, occ.row, occ.col)


def test_search_no_periodic_rows():
    pattern = [periodic_extension("ab", 8)] * 8
    index = build_index([pattern])
    rng = random.Random(5)
    text = []
    for _ in range(16):
        while True:
            row = "".join(rng.choice("abc") for _ in range(16))
            from oracles import brute_period

            if brute_period(row) > 4:  # no window slice can look periodic enough
                break
        text.append(row)
    assert search_text(text, index) == set()


def test_search_multiple_patterns_planted():
    rng = random.Random(6)
    m = 8
    patterns = [
        gen_matrix([rng.choice((1, 2)) for _ in range(m)], m, alphabet=2, rng=rng, strict=True)
        for _ in range(4)
    ]
    index = build_index(patterns)
    text = []
    for band in range(4):
        pat = patterns[band]
        shift = rng.randrange(4)
        text.extend(periodic_extension(row, 40, shift) for row in pat)
    found = search_text(text, index)
    expected = brute_search(text, patterns)
    assert found == expected
    assert len(expected) >= 4
    for occ in found:
        assert occurs_at(text, patterns[occ.pattern], occ.row, occ.col)


def test_search_parallel_matches_sequential():
    rng = random.Random(7)
    pattern = gen_matrix([2, 1, 2, 2, 1, 2, 1, 2], 8, alphabet=2, rng=rng, strict=True)
    index = build_index([pattern])
    text = [periodic_extension(row, 64) for row in pattern] * 3
    assert search_text(text, index, parallel=True) == search_text(text, index)


def test_search_text_validation():
    pattern = [periodic_extension("ab", 8)] * 8
    index = build_index([pattern])
    assert search_text([], index) == set()
    assert search_text(["abab"] * 2, index) == set()  # smaller than the pattern
    with pytest.raises(InvalidInput):
        search_text(["abab", "ab"], index)


def test_counter_bounds():
    rng = random.Random(8)
    periods = [3, 4, 2, 3, 1, 4, 2, 3]
    pattern = gen_matrix(periods, 8, alphabet=3, rng=rng)
    index = build_index([pattern], max_period_fraction=HALF)
    text = [periodic_extension(row, 48) for row in pattern]
    counter = OpCounter()
    found = search_text(text, index, counter=counter)
    assert found
    assert counter.candidates > 0
    assert counter.ops <= 16 * index.m * counter.candidates
    assert counter.lookups <= 3 * counter.candidates
