"""Brute-force reference implementations.

Nothing here imports the optimised search code it is used to check; only
the plain graph containers are shared.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .errors import SizeLimitError
from .graphs import Tournament

__all__ = [
    "c5_isomorphism",
    "brute_c5",
    "brute_max_pair",
    "brute_tr",
    "verify_complete_pair",
    "verify_c5_witness",
]

_PATTERN = tuple((i, (i + s) % 5) for i in range(5) for s in (1, 2))
_PAIRS = tuple(combinations(range(5), 2))


def _code(adj, verts) -> int:
    """10-bit code of the tournament induced on ``verts`` (bit k: pair k forward)."""
    code = 0
    for k, (i, j) in enumerate(_PAIRS):
        if adj[verts[i], verts[j]]:
            code |= 1 << k
    return code


@lru_cache(maxsize=1)
def _c5_table() -> dict[int, tuple[int, ...]]:
    """Every labelled 5-vertex tournament isomorphic to C5, keyed by code.

    The value is an ordering of ``0..4`` realising the pattern; built by
    trying all 120 bijections on all 1024 codes.
    """
    table = {}
    for code in range(1 << 10):
        m = np.zeros((5, 5), dtype=bool)
        for k, (i, j) in enumerate(_PAIRS):
            if code >> k & 1:
                m[i, j] = True
            else:
                m[j, i] = True
        hit = c5_isomorphism(m)
        if hit is not None:
            table[code] = hit
    return table


def c5_isomorphism(adj) -> tuple[int, ...] | None:
    """Explicit search for a bijection onto the C5 pattern (5x5 input)."""
    for perm in permutations(range(5)):
        if all(adj[perm[i], perm[j]] for i, j in _PATTERN):
            return perm
    return None


def brute_c5(t: Tournament):
    """First 5-subset (lexicographic) inducing C5, as a witness tuple, or ``None``."""
    if t.n > 14:
        raise SizeLimitError(f"brute_c5 is capped at n=14, got {t.n}")
    table = _c5_table()
    for verts in combinations(range(t.n), 5):
        perm = table.get(_code(t.adj, verts))
        if perm is not None:
            return tuple(verts[p] for p in perm)
    return None


def brute_max_pair(t: Tournament):
    """Best complete pair by enumerating every ``A``.

    ``B`` is taken as the full common out-neighbourhood of ``A``, which
    loses nothing.  Returns ``(A, B, value)`` with ``value = max min(|A|,
    |B|)`` and ``A`` lexicographically smallest among optimal choices.
    """
    n = t.n
    if n > 20:
        raise SizeLimitError(f"brute_max_pair is capped at n=20, got {n}")
    out = np.array([sum(1 << int(j) for j in np.flatnonzero(t.adj[v])) for v in range(n)], dtype=np.uint32)
    common = np.empty(1 << n, dtype=np.uint32)
    common[0] = (1 << n) - 1
    for i in range(n):
        common[1 << i: 1 << (i + 1)] = common[: 1 << i] & out[i]
    masks = np.arange(1 << n, dtype=np.uint32)
    value_arr = np.minimum(np.bitwise_count(masks), np.bitwise_count(common))
    value = int(value_arr.max())
    best = None
    for mask in np.flatnonzero(value_arr == value).tolist():
        a = tuple(v for v in range(n) if mask >> v & 1)
        if best is None or a < best:
            best = a
    b_mask = int(common[sum(1 << v for v in best)])
    b = tuple(v for v in range(n) if b_mask >> v & 1) if best else ()
    return best, b, value


def brute_tr(t: Tournament) -> int:
    """Largest transitive subtournament size, by trying subsets largest first."""
    n = t.n
    if n > 14:
        raise SizeLimitError(f"brute_tr is capped at n=14, got {n}")
    for size in range(n, 0, -1):
        for verts in combinations(range(n), size):
            sub = t.adj[np.ix_(verts, verts)]
            # acyclic iff repeatedly removing a sink empties the set
            alive = np.ones(size, dtype=bool)
            for _ in range(size):
                sinks = np.flatnonzero(alive & ~(sub[:, alive].any(axis=1)))
                if not len(sinks):
                    break
                alive[sinks[0]] = False
            if not alive.any():
                return size
    return 0


def verify_complete_pair(t: Tournament, a, b) -> bool:
    """Nonempty, disjoint, in range, and every ``a -> b``."""
    a, b = list(a), list(b)
    if not a or not b or set(a) & set(b):
        return False
    if len(set(a)) != len(a) or len(set(b)) != len(b):
        return False
    if any(not 0 <= v < t.n for v in a + b):
        return False
    return all(t.adj[x, y] for x in a for y in b)


def verify_c5_witness(t: Tournament, w) -> bool:
    """The ten orientations of the C5 pattern hold for ``w`` in ``t``."""
    w = tuple(int(x) for x in w)
    if len(w) != 5 or len(set(w)) != 5 or any(not 0 <= v < t.n for v in w):
        return False
    return all(t.adj[w[i], w[j]] for i, j in _PATTERN)
