from fractions import Fraction

import numpy as np
import pytest

from c5pair.ehpair import (
    CompletePair,
    build_common_in_digraph,
    claim1_check_edge,
    claim2_extract,
    find_complete_pair,
)
from c5pair.errors import InvalidArgumentError, PreconditionError
from c5pair.gen import gen_c5free, gen_planted_blocks, random_tournament, transitive_tournament
from c5pair.graphs import Tournament
from c5pair.oracle import brute_c5, verify_c5_witness, verify_complete_pair
from c5pair.patterns import C5Witness, is_c5
from c5pair.structures import SmoothStructure, StructureSpec, find_structure, verify_structure

from constructions import EMBED_KINDS, base_transitive, claim1_config, claim2_config, embed_random


def c5_check(t, w):
    assert isinstance(w, C5Witness)
    assert verify_c5_witness(t, w)
    assert is_c5(t.induced(list(w)))


def test_common_in_digraph_edgeless_when_all_forward():
    t = transitive_tournament(10)
    wd = build_common_in_digraph(t, range(5), range(5, 10))
    assert not wd.d.adj.any()


def test_common_in_digraph_single_edge():
    # vertices: u=0, v=1, x=2 with x->u, x->v, u->v
    m = np.array([[0, 1, 0], [0, 0, 0], [1, 1, 0]], dtype=bool)
    wd = build_common_in_digraph(Tournament(m), [0, 1], [2])
    assert wd.d.edges() == [(0, 1)]
    assert wd.host_witness(0, 1) == 2


@pytest.mark.parametrize("seed", range(10))
def test_common_in_digraph_matches_definition(seed):
    t = random_tournament(40, seed)
    v1, v5 = list(range(0, 40, 2)), list(range(1, 40, 2))
    wd = build_common_in_digraph(t, v1, v5)
    for i, u in enumerate(v1):
        for j, v in enumerate(v1):
            common = [x for x in v5 if t.beats(x, u) and t.beats(x, v)]
            expected = bool(common) and u != v and t.beats(u, v)
            assert wd.d.adj[i, j] == expected
            if expected:
                assert wd.host_witness(i, j) == min(common)
            else:
                assert wd.host_witness(i, j) == -1


def test_claim2_forward_case():
    m, s = base_transitive()
    claim2_config(m, s.sets, 0, 1, 2, 40, 41)  # x5=40 -> y5=41
    t = Tournament(m)
    assert verify_structure(t, s).ok
    wd = build_common_in_digraph(t, s.sets[0], s.sets[4])
    w = claim2_extract(t, s, 0, 1, 2, wd)
    assert tuple(w) == (0, 2, 20, 40, 41)
    c5_check(t, w)
    assert find_complete_pair(t, s) == w


def test_claim2_mirrored_case():
    m, s = base_transitive()
    claim2_config(m, s.sets, 0, 1, 2, 41, 40)  # y5=40 -> x5=41
    t = Tournament(m)
    assert verify_structure(t, s).ok
    wd = build_common_in_digraph(t, s.sets[0], s.sets[4])
    w = claim2_extract(t, s, 0, 1, 2, wd)
    assert tuple(w) == (0, 1, 20, 40, 41)
    c5_check(t, w)


def test_claim1_ok_edge():
    m, s = base_transitive()
    for src, dst in ((40, 0), (40, 1)):
        m[src, dst], m[dst, src] = True, False
    t = Tournament(m)
    wd = build_common_in_digraph(t, s.sets[0], s.sets[4])
    assert wd.d.edges() == [(0, 1)]
    assert claim1_check_edge(t, s, 0, 1, 40, wd) is None
    assert isinstance(find_complete_pair(t, s), CompletePair)


def test_claim1_c5_branch():
    m, s = base_transitive()
    claim1_config(m, s.sets, 0, 1, 20, 40, v5_beats_v3=False)
    t = Tournament(m)
    assert verify_structure(t, s).ok
    w = claim1_check_edge(t, s, 0, 1, 40)
    assert tuple(w) == (0, 1, 10, 20, 40)
    c5_check(t, w)
    assert find_complete_pair(t, s) == w


def test_claim1_complete_pair_branch():
    m, s = base_transitive()
    claim1_config(m, s.sets, 0, 1, 20, 40, v5_beats_v3=True)
    t = Tournament(m)
    assert verify_structure(t, s).ok
    out = claim1_check_edge(t, s, 0, 1, 40)
    assert isinstance(out, CompletePair) and out.branch == "claim1-N2N4"
    bound = -(-(1 - 3 * s.spec.lam) * 10 // 1)
    assert len(out.A) >= bound and len(out.B) >= bound
    assert verify_complete_pair(t, out.A, out.B)
    assert find_complete_pair(t, s) == out


def test_claim1_n2n4_c5_branch():
    m, s = base_transitive()
    claim1_config(m, s.sets, 0, 1, 20, 40, v5_beats_v3=True)
    m[35, 12], m[12, 35] = True, False
    t = Tournament(m)
    assert verify_structure(t, s).ok
    w = claim1_check_edge(t, s, 0, 1, 40)
    assert tuple(w) == (20, 0, 35, 12, 40)
    c5_check(t, w)


def test_pipeline_planted_transitive_250():
    t = transitive_tournament(250)
    s = SmoothStructure(StructureSpec("1/5", "1/5", "00000"), tuple(tuple(range(50 * i, 50 * i + 50)) for i in range(5)))
    out = find_complete_pair(t, s)
    assert isinstance(out, CompletePair) and out.branch == "caseI-AC"
    assert len(out.A) >= 8 and out.B == s.sets[4]


def test_pipeline_zero_noise_600():
    t, s = gen_planted_blocks(600, 5, Fraction(1, 5), 0, 4)
    out = find_complete_pair(t, s)
    assert isinstance(out, CompletePair)
    assert out.min_side >= 20
    assert verify_complete_pair(t, out.A, out.B)


@pytest.mark.parametrize("seed", range(12))
def test_pipeline_embedded_configurations(seed):
    rng = np.random.default_rng(seed)
    t0, s = gen_planted_blocks(150, 5, Fraction(1, 5), Fraction(1, 3), seed)
    kind = EMBED_KINDS[seed % len(EMBED_KINDS)]
    t = embed_random(t0.adj.copy(), s.sets, kind, rng)
    if not verify_structure(t, s).ok:
        pytest.skip("embedding exceeded the smoothness budget")
    out = find_complete_pair(t, s)
    if isinstance(out, CompletePair):
        assert verify_complete_pair(t, out.A, out.B)
    else:
        c5_check(t, out)


def test_pipeline_never_witnesses_on_c5free_small_checked():
    # C5-free host (checked by oracle on a sample of 12-vertex induced subtournaments)
    t, s = gen_planted_blocks(150, 5, Fraction(1, 5), 0, 8)
    rng = np.random.default_rng(0)
    for _ in range(30):
        sub = sorted(rng.choice(150, size=12, replace=False).tolist())
        assert brute_c5(t.induced(sub)) is None
    assert isinstance(find_complete_pair(t, s), CompletePair)


def test_pipeline_preconditions():
    t = transitive_tournament(50)
    sets = tuple(tuple(range(10 * i, 10 * i + 10)) for i in range(5))
    with pytest.raises(PreconditionError):
        find_complete_pair(t, SmoothStructure(StructureSpec("1/5", "1/4", "00000"), sets))
    backwards = SmoothStructure(StructureSpec("1/5", "1/5", "00000"), sets[::-1])
    with pytest.raises(PreconditionError):
        find_complete_pair(t, backwards)
    tiny = tuple(tuple(range(5 * i, 5 * i + 5)) for i in range(5))
    with pytest.raises(PreconditionError):
        find_complete_pair(transitive_tournament(25), SmoothStructure(StructureSpec("1/5", "1/5", "00000"), tiny))


def test_pipeline_deterministic_and_c5free_sweep():
    for seed in range(6):
        t = gen_c5free(300, seed)
        s = find_structure(t, StructureSpec("1/10", "1/5", "00000"), attempts=4, seed=seed)
        if s is None or len(s.sets[0]) < 6:
            continue
        out = find_complete_pair(t, s)
        assert isinstance(out, CompletePair)
        assert verify_complete_pair(t, out.A, out.B)
        assert find_complete_pair(t, s) == out


def test_containment_after_clean_sweep():
    for seed in range(5):
        t, s = gen_planted_blocks(150, 5, Fraction(1, 5), Fraction(1, 4), seed)
        out = find_complete_pair(t, s)
        if not isinstance(out, CompletePair) or out.branch == "claim1-N2N4":
            continue
        wd = build_common_in_digraph(t, s.sets[0], s.sets[4])
        for i, j in wd.d.edges():
            u, v = wd.v1[i], wd.v1[j]
            for x in s.sets[2]:
                if t.beats(x, u):
                    assert t.beats(x, v)


def test_endgame_case_one_b_side():
    m, s = base_transitive(60)
    v5 = s.sets[4]
    for k in range(31):
        m[v5[k], 1 + k % 30], m[1 + k % 30, v5[k]] = True, False
    t = Tournament(m)
    assert verify_structure(t, s).ok
    out = find_complete_pair(t, s)
    assert out.branch == "caseI-BV5"
    assert verify_complete_pair(t, out.A, out.B)
    assert out.min_side >= 10


def test_endgame_case_two_via_heavy_clique():
    m, s = base_transitive(60)
    v5 = s.sets[4]
    groups = [range(0, 8), range(8, 12), range(12, 16), range(16, 20)]
    covers = [groups[0], groups[1]], [groups[0], groups[2]], [groups[0], groups[3]], [groups[1], groups[2], groups[3]]
    for x, cover in zip(v5, covers):
        for g in cover:
            for v in g:
                m[x, v], m[v, x] = True, False
    t = Tournament(m)
    assert verify_structure(t, s).ok
    out = find_complete_pair(t, s)
    assert out.branch == "caseII-AC"
    assert verify_complete_pair(t, out.A, out.B)


def test_resolve_split_case_two_v3_side():
    # Not reachable from a smooth structure; exercised directly on a toy host.
    # A = {0}, B = {1}, V3 = {2, 3, 4}: 2, 3 beat 0 and 1, vertex 4 is beaten by 0.
    m = np.zeros((6, 6), dtype=bool)
    edges = [(0, 1), (2, 0), (3, 0), (0, 4), (2, 1), (3, 1), (1, 4), (2, 3), (4, 2), (3, 4), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4)]
    for u, v in edges:
        m[u, v] = True
    t = Tournament(m)
    from c5pair.ehpair import resolve_split
    out = resolve_split(t, "II", [0], [1], [2, 3, 4], [5])
    assert out.branch == "caseII-V3B" and out.A == (2, 3) and out.B == (1,)
    out = resolve_split(t, "II", [1], [0], [2, 3, 4], [5])
    assert out.branch == "caseII-V3B" and out.A == (2, 3) and out.B == (0,)


def test_pair_from_transitive():
    from c5pair.ehpair import pair_from_transitive
    from c5pair.patterns import max_transitive_exact
    out = pair_from_transitive(transitive_tournament(7), range(7))
    assert out.A == (0, 1, 2) and out.B == (4, 5, 6)
    t = random_tournament(12, 1)
    out = pair_from_transitive(t, max_transitive_exact(t))
    assert verify_complete_pair(t, out.A, out.B)
    with pytest.raises(InvalidArgumentError):
        pair_from_transitive(t, [3])
