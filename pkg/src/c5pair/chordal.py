"""Chordal graph toolkit: MCS, recognition, clique trees, weighted centroid bag."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import InternalInvariantError, InvalidArgumentError, NotChordalError
from .graphs import UndirectedGraph

__all__ = [
    "TreeDecomposition",
    "mcs_order",
    "is_chordal",
    "find_hole",
    "clique_tree",
    "verify_clique_tree",
    "max_weight_clique_chordal",
    "components_without",
    "centroid_bag",
]


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags (ascending vertex tuples) and the tree edges joining bag indices."""

    bags: tuple[tuple[int, ...], ...]
    tree_edges: tuple[tuple[int, int], ...]

    def tree_neighbors(self, i: int) -> list[int]:
        return sorted([b for a, b in self.tree_edges if a == i] + [a for a, b in self.tree_edges if b == i])


def mcs_order(g: UndirectedGraph) -> list[int]:
    """Maximum cardinality search visit order, ties broken by smallest id."""
    n = g.n
    score = np.zeros(n, dtype=np.int64)
    done = np.zeros(n, dtype=bool)
    order = []
    for _ in range(n):
        masked = np.where(done, -1, score)
        v = int(np.argmax(masked))  # argmax returns the first maximum
        order.append(v)
        done[v] = True
        score += g.adj[v]
    return order


def _peo(g: UndirectedGraph) -> list[int]:
    return mcs_order(g)[::-1]


def _peo_violation(g: UndirectedGraph, peo: Sequence[int]) -> bool:
    pos = np.empty(g.n, dtype=np.intp)
    pos[list(peo)] = np.arange(g.n)
    for v in peo:
        later = np.flatnonzero(g.adj[v] & (pos > pos[v]))
        if len(later) < 2:
            continue
        u = later[np.argmin(pos[later])]
        rest = later[later != u]
        if not g.adj[u, rest].all():
            return True
    return False


def find_hole(g: UndirectedGraph) -> tuple[int, ...] | None:
    """An induced cycle of length >= 4, or ``None`` when ``g`` is chordal.

    For each vertex ``v`` and non-adjacent neighbours ``a < b``, a shortest
    ``a``-``b`` path avoiding the rest of ``N[v]`` closes a chordless cycle.
    """
    adj = g.adj
    n = g.n
    for v in range(n):
        nbrs = np.flatnonzero(adj[v]).tolist()
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if adj[a, b]:
                    continue
                blocked = adj[v].copy()
                blocked[v] = True
                blocked[a] = blocked[b] = False
                parent = {a: -1}
                queue = deque([a])
                while queue and b not in parent:
                    x = queue.popleft()
                    for y in np.flatnonzero(adj[x] & ~blocked).tolist():
                        if y not in parent:
                            parent[y] = x
                            queue.append(y)
                if b in parent:
                    path = [b]
                    while path[-1] != a:
                        path.append(parent[path[-1]])
                    return (v, *path[::-1])
    return None


def is_chordal(g: UndirectedGraph) -> tuple[bool, tuple[int, ...] | None]:
    """Chordality test by checking that reverse MCS order eliminates perfectly.

    Returns ``(True, None)`` or ``(False, hole)`` where ``hole`` is an
    induced cycle of length at least 4, listed in cycle order.
    """
    if not _peo_violation(g, _peo(g)):
        return True, None
    hole = find_hole(g)
    if hole is None:
        raise InternalInvariantError("PEO check failed but no hole exists")
    return False, hole


def _require_chordal(g: UndirectedGraph) -> list[int]:
    peo = _peo(g)
    if _peo_violation(g, peo):
        raise NotChordalError(find_hole(g))
    return peo


def _peo_cliques(g: UndirectedGraph, peo: Sequence[int]) -> list[tuple[int, ...]]:
    """``{v} | later neighbours of v`` for every v, in elimination order."""
    pos = np.empty(g.n, dtype=np.intp)
    pos[list(peo)] = np.arange(g.n)
    return [tuple(sorted([v] + np.flatnonzero(g.adj[v] & (pos > pos[v])).tolist())) for v in peo]


def clique_tree(g: UndirectedGraph) -> TreeDecomposition:
    """Clique tree of a chordal graph.

    Bags are the maximal cliques in lexicographic order; the tree is a
    maximum-weight spanning tree of the clique intersection graph (Kruskal,
    ties by bag indices), with empty intersections joining disconnected
    parts.

    Raises
    ------
    NotChordalError
        If ``g`` is not chordal; carries a hole certificate.
    """
    peo = _require_chordal(g)
    if g.n == 0:
        return TreeDecomposition((), ())
    cands = sorted(set(_peo_cliques(g, peo)))
    member = np.zeros((len(cands), g.n), dtype=np.int64)
    for i, c in enumerate(cands):
        member[i, list(c)] = 1
    inter = member @ member.T
    sizes = np.diag(inter)
    contained = (inter == sizes[:, None]) & (sizes[:, None] < sizes[None, :])
    bags = [c for i, c in enumerate(cands) if not contained[i].any()]

    keep = [i for i, c in enumerate(cands) if not contained[i].any()]
    w = inter[np.ix_(keep, keep)]
    k = len(bags)
    pairs = sorted((-int(w[i, j]), i, j) for i in range(k) for j in range(i + 1, k))
    root = list(range(k))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    edges = []
    for _, i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            root[ri] = rj
            edges.append((i, j))
            if len(edges) == k - 1:
                break
    return TreeDecomposition(tuple(bags), tuple(edges))


def verify_clique_tree(g: UndirectedGraph, td: TreeDecomposition, *, maximal: bool = True) -> list[str]:
    """Check tree-decomposition invariants; returns the violations found.

    With ``maximal`` set the bags must also be exactly the maximal cliques.
    """
    problems = []
    k = len(td.bags)
    if len(td.tree_edges) != max(k - 1, 0):
        problems.append(f"tree has {len(td.tree_edges)} edges for {k} bags")
    root = list(range(k))

    def find(x):
        while root[x] != x:
            x = root[x]
        return x

    for a, b in td.tree_edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            problems.append(f"tree edge {(a, b)} closes a cycle")
        root[ra] = rb

    member = np.zeros((k, g.n), dtype=bool)
    for i, bag in enumerate(td.bags):
        member[i, list(bag)] = True
    for v in np.flatnonzero(~member.any(axis=0)).tolist():
        problems.append(f"vertex {v} in no bag")
    for u, v in zip(*np.nonzero(np.triu(g.adj))):
        if not (member[:, u] & member[:, v]).any():
            problems.append(f"edge {(int(u), int(v))} in no bag")
    for v in range(g.n):
        holders = set(np.flatnonzero(member[:, v]).tolist())
        if not holders:
            continue
        start = min(holders)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in td.tree_neighbors(x):
                if y in holders and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != holders:
            problems.append(f"bags holding vertex {v} are not connected in the tree")
    if maximal:
        for i, bag in enumerate(td.bags):
            sub = g.adj[np.ix_(bag, bag)]
            if not (sub | np.eye(len(bag), dtype=bool)).all():
                problems.append(f"bag {i} is not a clique")
                continue
            common = g.adj[list(bag)].all(axis=0)
            if common.any():
                problems.append(f"bag {i} is not maximal (extendable by {int(np.argmax(common))})")
        if len(set(td.bags)) != k:
            problems.append("duplicate bags")
    return problems


def max_weight_clique_chordal(g: UndirectedGraph, weights: Sequence[int]) -> tuple[int, ...]:
    """Maximum-weight clique of a chordal graph with nonnegative integer weights.

    Scans the cliques ``{v} | later neighbours`` of a perfect elimination
    ordering; ties go to the lexicographically smallest vertex tuple.
    """
    if len(weights) != g.n:
        raise InvalidArgumentError("one weight per vertex required")
    if any(int(x) < 0 for x in weights):
        raise InvalidArgumentError("weights must be nonnegative")
    peo = _require_chordal(g)
    best = None
    for c in _peo_cliques(g, peo):
        key = (-sum(int(weights[v]) for v in c), c)
        if best is None or key < best:
            best = key
    return best[1] if best else ()


def components_without(g: UndirectedGraph, removed) -> list[tuple[int, ...]]:
    """Connected components of ``g`` minus ``removed``, each an ascending tuple,
    listed by smallest vertex."""
    keep = np.ones(g.n, dtype=bool)
    keep[list(removed)] = False
    idx = np.flatnonzero(keep)
    if not len(idx):
        return []
    _, lab = connected_components(csr_matrix(g.adj[np.ix_(idx, idx)]), directed=False)
    comps: dict[int, list[int]] = {}
    for v, c in zip(idx.tolist(), lab.tolist()):
        comps.setdefault(c, []).append(v)
    return sorted(tuple(c) for c in comps.values())


def centroid_bag(g: UndirectedGraph, td: TreeDecomposition, weights: Sequence[int]) -> int:
    """Smallest bag index whose removal leaves components of weight <= W/2.

    The comparison is exact: ``2 * weight(component) <= W``.

    Raises
    ------
    InternalInvariantError
        If no bag qualifies, which a valid clique tree rules out.
    """
    total = sum(int(x) for x in weights)
    if total <= 0:
        raise InvalidArgumentError("total weight must be positive")
    for i, bag in enumerate(td.bags):
        heaviest = max((sum(int(weights[v]) for v in c) for c in components_without(g, bag)), default=0)
        if 2 * heaviest <= total:
            return i
    raise InternalInvariantError("no bag splits the weight in half; decomposition is invalid")
