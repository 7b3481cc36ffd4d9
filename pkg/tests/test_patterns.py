import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from c5pair.errors import InvalidArgumentError, SizeLimitError
from c5pair.gen import c5_tournament, cycle_tournament, gen_c5free, random_tournament, transitive_tournament
from c5pair.oracle import brute_c5, brute_tr, c5_isomorphism, verify_c5_witness
from c5pair.patterns import (
    find_c5,
    is_c5,
    is_transitive_set,
    max_transitive_exact,
    max_transitive_greedy,
)

from conftest import tournament_from_bits, tournaments


def test_is_c5_on_figure_construction():
    assert is_c5(c5_tournament())


def test_is_c5_rejects_transitive_and_wrong_size():
    assert not is_c5(transitive_tournament(5))
    with pytest.raises(InvalidArgumentError):
        is_c5(transitive_tournament(4))


def test_degree_criterion_equals_isomorphism_on_all_5_vertex_tournaments():
    agree = 0
    for bits in range(1 << 10):
        t = tournament_from_bits(5, bits)
        assert is_c5(t) == (c5_isomorphism(t.adj) is not None)
        agree += 1
    assert agree == 1024


def test_find_c5_examples():
    assert tuple(find_c5(c5_tournament())) == (0, 1, 2, 3, 4)
    for n in (1, 4, 5, 30):
        assert find_c5(transitive_tournament(n)) is None


def test_find_c5_is_lexicographically_first():
    # C5 on {2..6} plus vertices 0, 1 that beat everyone: only one 5-subset qualifies.
    m = np.zeros((7, 7), dtype=bool)
    m[2:, 2:] = c5_tournament().adj
    m[0, 1:] = True
    m[1, 2:] = True
    from c5pair.graphs import Tournament
    t = Tournament(m)
    assert tuple(find_c5(t)) == (2, 3, 4, 5, 6)


@settings(max_examples=300, deadline=None)
@given(tournaments(min_n=1, max_n=12))
def test_find_c5_agrees_with_brute_force(t):
    w = find_c5(t)
    ref = brute_c5(t)
    assert (w is None) == (ref is None)
    if w is not None:
        assert verify_c5_witness(t, w)
        assert w[0] == min(w)
        assert sorted(w) == sorted(ref)  # both report the lexicographically first subset


def test_find_c5_seeded_random_small():
    for seed in range(200):
        n = 5 + seed % 8
        t = random_tournament(n, seed)
        assert (find_c5(t) is None) == (brute_c5(t) is None)


def test_find_c5_practical_at_n_120():
    t = gen_c5free(120, 11)
    assert find_c5(t) is None
    w = find_c5(random_tournament(120, 11))
    assert w is not None and verify_c5_witness(random_tournament(120, 11), w)


def test_max_transitive_exact_examples():
    assert max_transitive_exact(transitive_tournament(7)) == list(range(7))
    assert max_transitive_exact(c5_tournament()) == [0, 1, 2]
    assert len(max_transitive_exact(cycle_tournament())) == 2


def test_max_transitive_c5_by_enumeration():
    t = c5_tournament()
    best = 0
    for k in range(6):
        for sub in itertools.combinations(range(5), k):
            if is_transitive_set(t, sub):
                best = max(best, k)
    assert best == 3 == len(max_transitive_exact(t))


def test_max_transitive_exact_size_cap():
    with pytest.raises(SizeLimitError):
        max_transitive_exact(transitive_tournament(25))
    assert len(max_transitive_exact(transitive_tournament(24))) == 24


@settings(max_examples=150, deadline=None)
@given(tournaments(min_n=1, max_n=12))
def test_max_transitive_exact_is_optimal(t):
    order = max_transitive_exact(t)
    assert is_transitive_set(t, order)
    assert all(t.beats(order[i], order[j]) for i in range(len(order)) for j in range(i + 1, len(order)))
    assert len(order) == brute_tr(t)


@settings(max_examples=150, deadline=None)
@given(tournaments(min_n=1, max_n=12))
def test_greedy_transitive_is_valid_and_below_exact(t):
    order = max_transitive_greedy(t)
    assert len(order) >= 1 and is_transitive_set(t, order)
    assert all(t.beats(order[i], order[j]) for i in range(len(order)) for j in range(i + 1, len(order)))
    assert len(order) <= len(max_transitive_exact(t))


def test_greedy_on_transitive_tournament():
    assert max_transitive_greedy(transitive_tournament(9)) == list(range(9))
