"""Dense graph types, strongly connected components and reachability.

All graphs are stored as immutable ``n x n`` boolean numpy matrices;
``adj[i, j]`` means the edge ``i -> j``.  Vertex ids are ``0..n-1``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import InvalidArgumentError

__all__ = [
    "Tournament",
    "OrientedDigraph",
    "UndirectedGraph",
    "Condensation",
    "scc_condensation",
    "reaches_all",
    "reachable_from",
    "underlying",
    "as_vertex_tuple",
]


def _frozen_bool_matrix(adj) -> np.ndarray:
    m = np.array(adj, dtype=bool, copy=True)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidArgumentError(f"adjacency must be square, got shape {m.shape}")
    m.setflags(write=False)
    return m


def as_vertex_tuple(vertices: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Sorted tuple of distinct vertex ids, optionally range-checked."""
    out = tuple(sorted({int(v) for v in vertices}))
    if n is not None and out and (out[0] < 0 or out[-1] >= n):
        raise InvalidArgumentError(f"vertex ids out of range 0..{n - 1}: {out}")
    return out


class _DenseGraph:
    """Shared behaviour for the three matrix-backed graph types."""

    __slots__ = ("adj",)

    def __init__(self, adj):
        object.__setattr__(self, "adj", _frozen_bool_matrix(adj))
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _validate(self) -> None:
        if self.adj.diagonal().any():
            raise InvalidArgumentError("self-loops are not allowed")

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def out_neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adj[v])

    def in_neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adj[:, v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` in lexicographic order."""
        rows, cols = np.nonzero(self.adj)
        return list(zip(rows.tolist(), cols.tolist()))

    def induced(self, vertices: Sequence[int]):
        """Induced subgraph; vertex ``i`` of the result is ``vertices[i]``."""
        idx = np.asarray(vertices, dtype=np.intp)
        return type(self)(self.adj[np.ix_(idx, idx)])

    def __eq__(self, other):
        return type(self) is type(other) and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((type(self).__name__, self.adj.shape, np.packbits(self.adj).tobytes()))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={int(self.adj.sum())})"


class OrientedDigraph(_DenseGraph):
    """Digraph with at most one direction per vertex pair (no 2-cycles)."""

    __slots__ = ()

    def _validate(self) -> None:
        super()._validate()
        if (self.adj & self.adj.T).any():
            i, j = map(int, np.argwhere(self.adj & self.adj.T)[0])
            raise InvalidArgumentError(f"both directions present between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "OrientedDigraph":
        m = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            m[u, v] = True
        return cls(m)


class Tournament(OrientedDigraph):
    """Complete oriented graph: exactly one direction between every two vertices."""

    __slots__ = ()

    def _validate(self) -> None:
        super()._validate()
        off = ~np.eye(self.n, dtype=bool)
        if not (self.adj | self.adj.T)[off].all():
            i, j = map(int, np.argwhere(~(self.adj | self.adj.T) & off)[0])
            raise InvalidArgumentError(f"no edge between {i} and {j}")

    def beats(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def out_degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    @classmethod
    def from_function(cls, n: int, beats) -> "Tournament":
        """Build from a predicate ``beats(i, j)`` consulted for ``i < j``."""
        m = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in range(i + 1, n):
                if beats(i, j):
                    m[i, j] = True
                else:
                    m[j, i] = True
        return cls(m)


class UndirectedGraph(_DenseGraph):
    """Simple undirected graph with a symmetric adjacency matrix."""

    __slots__ = ()

    def _validate(self) -> None:
        super()._validate()
        if not np.array_equal(self.adj, self.adj.T):
            raise InvalidArgumentError("undirected adjacency must be symmetric")

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adj[v])

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "UndirectedGraph":
        m = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            m[u, v] = m[v, u] = True
        return cls(m)


def underlying(g: OrientedDigraph) -> UndirectedGraph:
    """Forget edge directions."""
    return UndirectedGraph(g.adj | g.adj.T)


@dataclass(frozen=True, eq=False)
class Condensation:
    """Strongly connected components of a digraph in topological order.

    Attributes
    ----------
    components : tuple of tuple of int
        Vertex lists, each ascending; every quotient edge goes from a
        lower to a higher component index.
    quotient : OrientedDigraph
        The acyclic digraph on component indices.
    weights : tuple of int
        ``len(components[i])`` for each ``i``.
    label : numpy.ndarray
        ``label[v]`` is the index of the component holding ``v``.
    """

    components: tuple[tuple[int, ...], ...]
    quotient: OrientedDigraph
    weights: tuple[int, ...]
    label: np.ndarray

    @property
    def m(self) -> int:
        return len(self.components)


def scc_condensation(d: OrientedDigraph) -> Condensation:
    """Condense ``d`` into its strongly connected components.

    Components are emitted in a topological order of the quotient; among
    the components available at each step the one holding the smallest
    vertex id comes first.
    """
    n = d.n
    if n == 0:
        empty = OrientedDigraph(np.zeros((0, 0), dtype=bool))
        return Condensation((), empty, (), np.zeros(0, dtype=np.intp))
    m, raw = connected_components(csr_matrix(d.adj), directed=True, connection="strong")
    members: list[list[int]] = [[] for _ in range(m)]
    for v, c in enumerate(raw.tolist()):
        members[c].append(v)

    ind = np.zeros((n, m))
    ind[np.arange(n), raw] = 1.0
    q = (ind.T @ d.adj.astype(np.float64) @ ind) > 0
    np.fill_diagonal(q, False)

    # Kahn's algorithm keyed on each component's smallest vertex.
    indeg = q.sum(axis=0).tolist()
    heap = [(members[c][0], c) for c in range(m) if indeg[c] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        _, c = heapq.heappop(heap)
        order.append(c)
        for t in np.flatnonzero(q[c]).tolist():
            indeg[t] -= 1
            if indeg[t] == 0:
                heapq.heappush(heap, (members[t][0], t))

    new_index = np.empty(m, dtype=np.intp)
    new_index[order] = np.arange(m)
    label = new_index[raw]
    label.setflags(write=False)
    quotient = OrientedDigraph(q[np.ix_(order, order)])
    components = tuple(tuple(members[c]) for c in order)
    return Condensation(components, quotient, tuple(len(c) for c in components), label)


def reachable_from(d: OrientedDigraph, sources: Iterable[int]) -> np.ndarray:
    """Boolean mask of vertices reachable from ``sources`` (sources included)."""
    reached = np.zeros(d.n, dtype=bool)
    frontier = np.zeros(d.n, dtype=bool)
    frontier[list(sources)] = True
    while frontier.any():
        reached |= frontier
        frontier = d.adj[frontier].any(axis=0) & ~reached
    return reached


def reaches_all(d: OrientedDigraph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every vertex of ``a`` has a directed path to every vertex of ``b``."""
    a = as_vertex_tuple(a, d.n)
    b = as_vertex_tuple(b, d.n)
    if set(a) & set(b):
        raise InvalidArgumentError("A and B must be disjoint")
    if not a or not b:
        return True
    # One search per strongly connected component met in A suffices.
    label = scc_condensation(d).label
    seen: set[int] = set()
    b_idx = list(b)
    for v in a:
        c = int(label[v])
        if c in seen:
            continue
        seen.add(c)
        if not reachable_from(d, [v])[b_idx].all():
            return False
    return True
