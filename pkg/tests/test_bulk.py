"""Vectorized oracles cross-checked against the pure-Python enumerators."""

from collections import Counter

from simsun import bulk, classes, perms

N_SMALL = 6


def test_word_sweep_matches_enumeration():
    dist = bulk.simsun_word_distributions(N_SMALL)
    for n in range(N_SMALL + 1):
        expected = Counter()
        for w in classes.gen_simsun_first(n):
            rec = perms.word_stats(w)
            starts = 1 if len(w) >= 2 and w[0] > w[1] else 0
            alt = int(perms.is_alternating(w))
            expected[(rec.des, rec.pk, rec.uprun, starts, alt)] += 1
        assert dist[n] == expected


def test_cycle_sweep_matches_enumeration():
    dist = bulk.simsun_cycle_distributions(N_SMALL)
    for n in range(N_SMALL + 1):
        expected = Counter()
        for c in classes.gen_simsun_second(n):
            rec = perms.cycle_stats(perms.from_cycles(c))
            expected[(rec.exc, rec.fix, rec.cyc)] += 1
        assert dist[n] == expected


def test_all_permutation_sweep_matches_enumeration():
    dist = bulk.all_perm_word_distributions(N_SMALL)
    for n in range(N_SMALL + 1):
        expected = Counter()
        for w in perms.permutations(n):
            rec = perms.word_stats(w)
            expected[(rec.lpk, rec.pk, rec.altruns)] += 1
        assert dist[n] == expected


def test_sweep_totals():
    euler = [perms.euler_number(n) for n in range(N_SMALL + 2)]
    words = bulk.simsun_word_distributions(N_SMALL)
    cycles = bulk.simsun_cycle_distributions(N_SMALL)
    fact = 1
    for n in range(N_SMALL + 1):
        fact *= max(n, 1)
        assert sum(words[n].values()) == euler[n + 1]
        assert sum(cycles[n].values()) == euler[n + 1]
        assert sum(bulk.all_perm_word_distributions(N_SMALL)[n].values()) == fact
