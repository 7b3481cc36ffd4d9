"""Seeded generators for tournaments, structures and outsimplicial digraphs.

Randomness comes from numpy's PCG64.  Every generator draws from its own
stream ``SeedSequence(seed, spawn_key=(STREAM,))`` so that adding a new
generator never shifts the output of an existing one; sub-structures
(recursive parts, flips per block pair) use generators spawned from that
stream in a fixed order.  ``PRNG_NAME`` is recorded in every file header.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidArgumentError
from .graphs import OrientedDigraph, Tournament
from .structures import SmoothStructure, StructureSpec

__all__ = [
    "PRNG_NAME",
    "rng_for",
    "transitive_tournament",
    "c5_tournament",
    "cycle_tournament",
    "random_tournament",
    "substitute",
    "gen_c5free",
    "gen_planted_blocks",
    "random_chordal_graph",
    "gen_outsimplicial",
]

PRNG_NAME = "pcg64/seedseq-v1"

_STREAMS = {"random": 1, "c5free": 2, "planted": 3, "outsimplicial": 4}


def rng_for(kind: str, seed: int) -> np.random.Generator:
    if seed < 0:
        raise InvalidArgumentError("seed must be nonnegative")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(_STREAMS[kind],))))


def transitive_tournament(n: int) -> Tournament:
    """``i -> j`` exactly when ``i < j``."""
    return Tournament(np.triu(np.ones((n, n), dtype=bool), 1))


def c5_tournament() -> Tournament:
    """Vertex ``i`` beats ``i+1`` and ``i+2`` mod 5."""
    m = np.zeros((5, 5), dtype=bool)
    for i in range(5):
        m[i, (i + 1) % 5] = m[i, (i + 2) % 5] = True
    return Tournament(m)


def cycle_tournament() -> Tournament:
    """The directed triangle ``0 -> 1 -> 2 -> 0``."""
    return Tournament(np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=bool))


def _random_matrix(n: int, rng: np.random.Generator) -> np.ndarray:
    upper = np.triu(rng.random((n, n)) < 0.5, 1)
    lower = np.triu(~upper, 1).T
    return upper | lower


def random_tournament(n: int, seed: int) -> Tournament:
    """Each pair oriented by an independent fair coin."""
    if n < 1:
        raise InvalidArgumentError("n must be at least 1")
    return Tournament(_random_matrix(n, rng_for("random", seed)))


def substitute(t0: Tournament, parts: Sequence[Tournament]) -> Tournament:
    """Replace vertex ``i`` of ``t0`` by ``parts[i]``; blocks appear in order."""
    if len(parts) != t0.n:
        raise InvalidArgumentError(f"need {t0.n} parts, got {len(parts)}")
    sizes = [p.n for p in parts]
    lab = np.repeat(np.arange(t0.n), sizes)
    m = t0.adj[np.ix_(lab, lab)].copy()
    start = 0
    for p in parts:
        m[start:start + p.n, start:start + p.n] = p.adj
        start += p.n
    return Tournament(m)


def _c5free_matrix(n: int, rng: np.random.Generator) -> np.ndarray:
    if n <= 4:
        return _random_matrix(n, rng)
    k = int(rng.integers(2, 5))
    cuts = np.sort(rng.choice(np.arange(1, n), size=k - 1, replace=False))
    sizes = np.diff(np.concatenate(([0], cuts, [n]))).tolist()
    quotient = Tournament(_random_matrix(k, rng))
    parts = [Tournament(_c5free_matrix(s, rng)) for s in sizes]
    m = substitute(quotient, parts).adj
    perm = rng.permutation(n)
    return m[np.ix_(perm, perm)]


def gen_c5free(n: int, seed: int) -> Tournament:
    """Random C5-free tournament by recursive substitution.

    Quotients have 2 to 4 vertices and so cannot contain C5; since C5 has
    no nontrivial homogeneous set, a copy in a substitution would have to
    sit inside one part or be a transversal of the quotient.  Vertex labels
    are shuffled at every level.
    """
    if n < 1:
        raise InvalidArgumentError("n must be at least 1")
    return Tournament(_c5free_matrix(n, rng_for("c5free", seed)))


def gen_planted_blocks(n: int, k: int, c, noise, seed: int, lam=Fraction(1, 5)) -> tuple[Tournament, SmoothStructure]:
    """Tournament with ``k`` planted blocks forming a smooth structure.

    Blocks ``0..k-1`` have ``ceil(c n)`` vertices each and occupy the first
    vertex ids in order; leftover vertices form a final block outside the
    structure.  Blocks are internally C5-free and all edges between blocks
    point forward, except for flips: for each block pair every vertex gets
    exactly ``floor(noise * floor(lam * s))`` reversed edges to the other
    block (``s`` the block size), realised as a randomly relabelled
    circulant.  ``noise = 1`` puts every vertex exactly at the smoothness
    boundary; ``noise = 0`` is a substitution into a transitive quotient
    and hence C5-free.

    Returns the tournament and the structure with spec ``(c, lam, 0^k)``.
    """
    c, noise, lam = Fraction(c), Fraction(noise), Fraction(lam)
    if k < 1 or not 0 < c <= 1 or not 0 <= noise <= 1:
        raise InvalidArgumentError(f"bad parameters k={k}, c={c}, noise={noise}")
    s = -((-c.numerator * n) // c.denominator)  # ceil(c n)
    if k * s > n:
        raise InvalidArgumentError(f"{k} blocks of size {s} do not fit in n={n}")
    root = np.random.SeedSequence(seed, spawn_key=(_STREAMS["planted"],))
    part_seq, flip_seq = root.spawn(2)
    part_rngs = [np.random.default_rng(x) for x in part_seq.spawn(k + 1)]
    rest = n - k * s
    sizes = [s] * k + ([rest] if rest else [])
    parts = [Tournament(_c5free_matrix(size, part_rngs[i])) for i, size in enumerate(sizes)]
    m = substitute(transitive_tournament(len(sizes)), parts).adj.copy()

    flips = math.floor(noise * math.floor(lam * s))
    if flips:
        pair_rngs = iter(np.random.default_rng(x) for x in flip_seq.spawn(k * (k - 1) // 2))
        for i in range(k):
            for j in range(i + 1, k):
                rng = next(pair_rngs)
                offsets = rng.choice(s, size=flips, replace=False)
                pi = rng.permutation(s) + i * s
                sigma = rng.permutation(s) + j * s
                for o in offsets.tolist():
                    a = pi
                    b = sigma[(np.arange(s) + o) % s]
                    m[a, b] = False
                    m[b, a] = True
    t = Tournament(m)
    spec = StructureSpec(c, lam, (0,) * k)
    return t, SmoothStructure(spec, tuple(tuple(range(i * s, (i + 1) * s)) for i in range(k)))


def random_chordal_graph(n: int, rng: np.random.Generator) -> tuple[np.ndarray, list[int]]:
    """Random chordal graph grown by attaching each new vertex to a clique.

    Returns the adjacency matrix and the insertion order; each vertex is
    joined to a random subset of a random maximal clique built so far, so
    the neighbours it has on insertion form a clique.
    """
    adj = np.zeros((n, n), dtype=bool)
    cliques: list[list[int]] = []
    for v in range(n):
        if not cliques or rng.random() < 0.1:
            base: list[int] = []
        else:
            clique = cliques[int(rng.integers(len(cliques)))]
            take = int(rng.integers(1, len(clique) + 1))
            base = sorted(rng.choice(clique, size=take, replace=False).tolist())
        for u in base:
            adj[u, v] = adj[v, u] = True
        if base and base == sorted(clique):
            cliques.remove(clique)
        cliques.append(base + [v])
    return adj, list(range(n))


def gen_outsimplicial(n: int, seed: int, blowup: bool = False) -> OrientedDigraph:
    """Random outsimplicial digraph.

    Each vertex of a random chordal graph points to the neighbours it had
    when inserted (a clique), so the orientation is acyclic and
    outsimplicial.  With ``blowup`` some vertices become directed triangles
    or copies of C5, which are strongly connected and complete, so
    outsimpliciality is preserved.  Labels are shuffled.
    """
    if n < 1:
        raise InvalidArgumentError("n must be at least 1")
    rng = rng_for("outsimplicial", seed)
    sizes: list[int] = []
    if blowup:
        left = n
        while left:
            opts = [x for x in (1, 1, 1, 3, 5) if x <= left]
            sizes.append(int(rng.choice(opts)))
            left -= sizes[-1]
    else:
        sizes = [1] * n
    base, _ = random_chordal_graph(len(sizes), rng)
    oriented = np.tril(base)  # newer vertex -> older neighbour
    pieces = {1: np.zeros((1, 1), dtype=bool), 3: cycle_tournament().adj, 5: c5_tournament().adj}
    lab = np.repeat(np.arange(len(sizes)), sizes)
    m = oriented[np.ix_(lab, lab)].copy()
    start = 0
    for size in sizes:
        m[start:start + size, start:start + size] = pieces[size]
        start += size
    perm = rng.permutation(n)
    return OrientedDigraph(m[np.ix_(perm, perm)])
