"""Detection of C5 subtournaments and of large transitive subtournaments."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import InvalidArgumentError, SizeLimitError
from .graphs import Tournament

__all__ = [
    "C5Witness",
    "C5_EDGES",
    "is_c5",
    "is_c5_witness",
    "find_c5",
    "max_transitive_exact",
    "max_transitive_greedy",
    "is_transitive_set",
    "MAX_TRANSITIVE_EXACT_N",
]

# Position i beats positions i+1 and i+2 (mod 5).
C5_EDGES = tuple((i, (i + s) % 5) for i in range(5) for s in (1, 2))

MAX_TRANSITIVE_EXACT_N = 24


class C5Witness(NamedTuple):
    """Five host vertices listed so that each beats the next two (cyclically)."""

    v0: int
    v1: int
    v2: int
    v3: int
    v4: int


def is_c5(t: Tournament) -> bool:
    """True iff the 5-vertex tournament ``t`` is C5 (all out-degrees equal 2).

    C5 is the only 5-vertex tournament that is regular, so the degree test
    is a complete isomorphism test.
    """
    if t.n != 5:
        raise InvalidArgumentError(f"is_c5 needs a 5-vertex tournament, got n={t.n}")
    return bool((t.out_degrees() == 2).all())


def is_c5_witness(t: Tournament, w) -> bool:
    """Check the ten orientations of a claimed witness against the host."""
    w = tuple(int(x) for x in w)
    if len(w) != 5 or len(set(w)) != 5 or min(w) < 0 or max(w) >= t.n:
        return False
    return all(t.adj[w[i], w[j]] for i, j in C5_EDGES)


def _quad_tensor(adj: np.ndarray, v0: int, rest: np.ndarray):
    """Positions a, b in N+(v0) and c, d in N-(v0) among ``rest``.

    Returns the index arrays and the sub-blocks used for the quadruple
    conditions a->b, a->c, b->c, b->d, c->d, d->a.
    """
    outs = rest[adj[v0, rest]]
    ins = rest[adj[rest, v0]]
    oo = adj[np.ix_(outs, outs)]
    oi = adj[np.ix_(outs, ins)]
    io = adj[np.ix_(ins, outs)]
    ii = adj[np.ix_(ins, ins)]
    return outs, ins, oo, oi, io, ii


def find_c5(t: Tournament) -> C5Witness | None:
    """Return a C5 subtournament of ``t``, or ``None`` if ``t`` is C5-free.

    The witness is on the lexicographically smallest 5-subset that induces
    C5, rotated to start at its smallest vertex.  With ``v0`` the smallest
    vertex, the witness is ``(v0, a, b, c, d)`` with ``a, b`` out-neighbours
    and ``c, d`` in-neighbours of ``v0``; per ``v0`` the existence of such a
    quadruple is decided by dense matrix products, so only one ``v0`` is
    ever enumerated explicitly.  Practical up to ``n`` of a few hundred
    (``n = 120`` runs in well under a second).
    """
    adj = t.adj
    n = t.n
    for v0 in range(n - 4):
        rest = np.arange(v0 + 1, n)
        outs, ins, oo, oi, io, ii = _quad_tensor(adj, v0, rest)
        if len(outs) < 2 or len(ins) < 2:
            continue
        oi_f = oi.astype(np.float64)
        # g[c, b, a] = #{d : b->d, c->d, d->a}
        g = np.matmul(oi_f[None, :, :] * ii.astype(np.float64)[:, None, :], io.astype(np.float64))
        # need a->b, a->c, b->c
        hits = g * oo.T[None, :, :] * oi.T[:, :, None] * oi.T[:, None, :]
        if not hits.any():
            continue
        best = None
        for c, b, a in np.argwhere(hits > 0).tolist():
            dmask = oi[b] & ii[c] & io[:, a]
            for d in np.flatnonzero(dmask).tolist():
                quad = (int(outs[a]), int(outs[b]), int(ins[c]), int(ins[d]))
                key = tuple(sorted(quad))
                if best is None or key < best[0]:
                    best = (key, quad)
        return C5Witness(v0, *best[1])
    return None


def is_transitive_set(t: Tournament, vertices) -> bool:
    """True iff ``vertices`` induce a transitive subtournament.

    A tournament is transitive iff its out-degrees are pairwise distinct.
    """
    idx = list(vertices)
    if len(set(idx)) != len(idx):
        return False
    deg = t.adj[np.ix_(idx, idx)].sum(axis=1)
    return len(set(deg.tolist())) == len(idx)


def max_transitive_exact(t: Tournament) -> list[int]:
    """A maximum transitive subtournament, in its beating order.

    Memoised recursion over vertex subsets: the best transitive set inside
    ``S`` picks a top vertex ``v`` and continues inside ``S & N+(v)``.
    Raises :class:`SizeLimitError` beyond ``n = 24``.
    """
    n = t.n
    if n > MAX_TRANSITIVE_EXACT_N:
        raise SizeLimitError(f"max_transitive_exact is capped at n={MAX_TRANSITIVE_EXACT_N}, got {n}")
    if n == 0:
        return []
    out_mask = [sum(1 << j for j in np.flatnonzero(t.adj[v]).tolist()) for v in range(n)]
    memo: dict[int, tuple[int, int]] = {0: (0, -1)}

    def best(s: int) -> int:
        hit = memo.get(s)
        if hit is not None:
            return hit[0]
        size, arg = 0, -1
        rest = s
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            sub = s & out_mask[v]
            if 1 + sub.bit_count() <= size:
                continue
            cand = 1 + best(sub)
            if cand > size:
                size, arg = cand, v
        memo[s] = (size, arg)
        return size

    s = (1 << n) - 1
    best(s)
    order = []
    while s:
        v = memo[s][1]
        order.append(v)
        s &= out_mask[v]
    return order


def max_transitive_greedy(t: Tournament) -> list[int]:
    """A transitive subtournament found greedily (no optimality claim).

    Repeatedly keeps the candidate with the most out-neighbours among the
    remaining candidates and restricts to those out-neighbours.
    """
    cand = np.arange(t.n)
    order = []
    while len(cand):
        sub = t.adj[np.ix_(cand, cand)]
        k = int(np.argmax(sub.sum(axis=1)))
        order.append(int(cand[k]))
        cand = cand[sub[k]]
    return order
