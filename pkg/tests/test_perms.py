"""Word-level and cycle-level statistics, cycle forms, and special classes."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simsun import perms

# zigzag numbers E_0..E_11, frozen from pruned alternating-permutation search
EULER = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792]
# snake counts per n, frozen from exhaustive signed-window enumeration
SPRINGER = [1, 1, 3, 11, 57, 361, 2763]

small_perms = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(tuple)


def test_check_word_accepts_and_rejects():
    assert perms.check_word([2, 1, 3]) == (2, 1, 3)
    with pytest.raises(ValueError):
        perms.check_word((1, 3))
    with pytest.raises(ValueError):
        perms.check_word((1, 1, 2))


def test_check_window():
    assert perms.check_window((2, -1)) == (2, -1)
    with pytest.raises(ValueError):
        perms.check_window((2, -2))


def test_descent_set():
    assert perms.descent_set((3, 5, 1, 4, 2)) == [2, 4]
    assert perms.descent_set((1, 2, 3)) == []


def test_word_stats_examples():
    rec = perms.word_stats((1, 2, 3, 4))
    assert (rec.des, rec.lpk, rec.pk, rec.altruns, rec.uprun, rec.lalt) == (
        0, 0, 0, 1, 1, 1,
    )
    rec = perms.word_stats((2, 1))
    assert (rec.des, rec.lpk, rec.pk, rec.altruns, rec.uprun, rec.lalt) == (
        1, 1, 0, 1, 2, 2,
    )
    rec = perms.word_stats((3, 4, 1, 2, 5))
    assert (rec.des, rec.lpk, rec.pk) == (1, 1, 1)
    rec = perms.word_stats(())
    assert (rec.des, rec.lpk, rec.pk, rec.altruns, rec.uprun, rec.lalt) == (
        0, 0, 0, 0, 0, 0,
    )
    assert perms.word_stats((1,)).uprun == 1
    assert perms.word_stats((1,)).altruns == 0


@given(small_perms)
def test_uprun_equals_longest_alternating_subsequence(w):
    rec = perms.word_stats(w)
    assert rec.uprun == rec.lalt


@given(small_perms)
def test_altruns_vs_uprun(w):
    # prepending 0 adds a run exactly when the word starts with a descent
    rec = perms.word_stats(w)
    extra = 1 if len(w) >= 2 and w[0] > w[1] else 0
    if len(w) >= 2:
        assert rec.uprun == rec.altruns + extra
    else:
        assert rec.uprun == len(w)


@given(small_perms)
def test_inverse_is_an_involution(w):
    assert perms.inverse(perms.inverse(w)) == w


@given(small_perms)
def test_cycle_roundtrip(w):
    cycles = perms.to_cycles(w)
    assert perms.from_cycles(cycles) == w
    assert perms.standardize(cycles) == cycles
    for cyc in cycles:
        assert cyc[0] == min(cyc)
    assert [c[0] for c in cycles] == sorted(c[0] for c in cycles)


def test_cycle_stats_example():
    rec = perms.cycle_stats((3, 1, 2))
    assert (rec.exc, rec.fix, rec.cyc, rec.cpk, rec.has_double_exc) == (
        1, 0, 1, 1, False,
    )
    rec = perms.cycle_stats((1, 2, 3))
    assert (rec.exc, rec.fix, rec.cyc) == (0, 3, 3)


@given(small_perms)
def test_excedance_cyclic_peak_double_excedance_partition(w):
    # every non-fixed value is hit from below or above: exc counts positions,
    # cpk + double excedances count values hit from below
    rec = perms.cycle_stats(w)
    doubles = sum(
        1
        for x in range(1, len(w) + 1)
        if perms.inverse(w)[x - 1] < x < w[x - 1]
    )
    assert rec.has_double_exc == (doubles > 0)
    assert rec.exc == rec.cpk + doubles


def test_restrict_to():
    assert perms.restrict_to((3, 5, 1, 4, 2), 3) == (3, 1, 2)
    assert perms.restrict_to((3, 5, 1, 4, 2), 0) == ()
    with pytest.raises(ValueError):
        perms.restrict_to((1,), 2)


def test_remove_largest_bypasses():
    cycles = ((1, 5, 3, 4), (2,))
    assert perms.remove_largest(cycles, 1) == ((1, 3, 4), (2,))
    assert perms.remove_largest(cycles, 5) == ()
    with pytest.raises(ValueError):
        perms.remove_largest(cycles, 6)


def test_permutations_lexicographic():
    got = list(perms.permutations(3))
    assert got == sorted(got)
    assert len(got) == 6


def test_signed_permutations():
    got = list(perms.signed_permutations(2))
    assert len(got) == 8
    assert got == sorted(got)
    assert (1, -2) in got


def test_alternating_and_snakes():
    assert perms.is_alternating((3, 1, 4, 2))
    assert not perms.is_alternating((1, 3, 2))
    assert perms.is_snake((2, -1))
    assert not perms.is_snake((-1, 2))
    for n in range(7):
        assert sum(1 for _ in perms.snakes(n)) == SPRINGER[n]
    for n in range(8):
        assert sum(1 for _ in perms.alternating_permutations(n)) == EULER[n]


def test_snakes_match_filter():
    for n in range(5):
        listed = list(perms.snakes(n))
        brute = [w for w in perms.signed_permutations(n) if perms.is_snake(w)]
        assert listed == brute


def test_alternating_matches_filter():
    for n in range(6):
        listed = list(perms.alternating_permutations(n))
        brute = [w for w in perms.permutations(n) if perms.is_alternating(w)]
        assert listed == brute


def test_cycle_up_down():
    assert perms.is_cycle_up_down((1, 2, 3))  # three singletons
    assert perms.is_up_down_cycle((1, 4, 3))
    assert not perms.is_up_down_cycle((1, 3, 4))


def test_euler_numbers():
    assert [perms.euler_number(n) for n in range(10)] == EULER[:10]


@settings(max_examples=25)
@given(small_perms)
def test_restriction_chain_consistency(w):
    # restricting to k keeps relative order and forms a permutation of [k]
    for k in range(len(w) + 1):
        r = perms.restrict_to(w, k)
        assert sorted(r) == list(range(1, k + 1))
        assert perms.restrict_to(r, max(k - 1, 0)) == perms.restrict_to(w, max(k - 1, 0))
