"""Complete pairs in C5-free tournaments, or a C5 explaining why not.

Given a tournament with a verified smooth structure ``(V1, ..., V5)`` at
``lambda <= 1/5``, :func:`find_complete_pair` returns either two disjoint
sets with every edge from the first to the second, or five vertices
inducing C5.  Every point where the classical argument would derive a
contradiction is a return branch here, so the output is always a
checkable certificate even for inputs that do contain C5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InternalInvariantError, InvalidArgumentError, PreconditionError
from .graphs import OrientedDigraph, Tournament, as_vertex_tuple
from .outsimplicial import CASE_I, check_outsimplicial, split
from .patterns import C5Witness, is_c5_witness
from .structures import SmoothStructure, verify_structure

__all__ = [
    "CompletePair",
    "WitnessedDigraph",
    "build_common_in_digraph",
    "claim2_extract",
    "claim1_check_edge",
    "find_complete_pair",
    "is_complete_pair",
    "resolve_split",
    "pair_from_transitive",
    "BRANCHES",
]

BRANCHES = ("claim1-N2N4", "caseI-AC", "caseI-BV5", "caseII-AC", "caseII-V3B")
MIN_V1 = 6


@dataclass(frozen=True)
class CompletePair:
    """Disjoint ``A``, ``B`` with ``a -> b`` for all ``a`` in A, ``b`` in B."""

    A: tuple[int, ...]
    B: tuple[int, ...]
    branch: str

    @property
    def min_side(self) -> int:
        return min(len(self.A), len(self.B))


@dataclass(frozen=True, eq=False)
class WitnessedDigraph:
    """Digraph on positions of ``V1``; ``witness[i, j]`` is a common in-neighbour in V5.

    ``v1[i]`` is the host vertex at position ``i``; ``witness`` holds -1
    where there is no edge.
    """

    d: OrientedDigraph
    v1: tuple[int, ...]
    witness: np.ndarray

    def host_witness(self, i: int, j: int) -> int:
        return int(self.witness[i, j])


def is_complete_pair(t: Tournament, a, b) -> bool:
    a, b = list(a), list(b)
    if not a or not b or set(a) & set(b):
        return False
    return bool(t.adj[np.ix_(a, b)].all())


def build_common_in_digraph(t: Tournament, v1, v5) -> WitnessedDigraph:
    """Join ``u, v`` in ``V1`` when they share an in-neighbour in ``V5``.

    Edges are oriented as in ``t``; the stored witness is the smallest
    qualifying ``V5`` vertex.
    """
    v1 = as_vertex_tuple(v1, t.n)
    v5 = as_vertex_tuple(v5, t.n)
    if set(v1) & set(v5):
        raise InvalidArgumentError("V1 and V5 must be disjoint")
    into = t.adj[np.ix_(v5, v1)]  # into[x, u]: x -> u
    common = into[:, :, None] & into[:, None, :]
    has = common.any(axis=0)
    np.fill_diagonal(has, False)
    first = np.argmax(common, axis=0)
    sub = t.adj[np.ix_(v1, v1)]
    adj = has & sub
    witness = np.where(adj, np.asarray(v5, dtype=np.int64)[first] if v5 else -1, -1)
    witness.setflags(write=False)
    return WitnessedDigraph(OrientedDigraph(adj), v1, witness)


def _scan(t: Tournament, pool, outs_from=(), ins_to=()):
    """Vertices ``z`` of ``pool`` with ``u -> z`` for ``u`` in outs_from and
    ``z -> y`` for ``y`` in ins_to, ascending."""
    pool = np.asarray(pool, dtype=np.intp)
    mask = np.ones(len(pool), dtype=bool)
    for u in outs_from:
        mask &= t.adj[u, pool]
    for y in ins_to:
        mask &= t.adj[pool, y]
    return pool[mask].tolist()


def _witness(t: Tournament, w) -> C5Witness:
    w = C5Witness(*(int(x) for x in w))
    if not is_c5_witness(t, w):
        raise InternalInvariantError(f"constructed tuple {tuple(w)} is not a C5")
    return w


def _require_lambda(s: SmoothStructure) -> None:
    if s.spec.lam > Fraction(1, 5):
        raise PreconditionError(f"lambda must be at most 1/5, got {s.spec.lam}")
    if len(s.sets) != 5:
        raise PreconditionError(f"need a 5-set structure, got {len(s.sets)} sets")


def claim2_extract(t: Tournament, s: SmoothStructure, u1: int, v1: int, w1: int, wd: WitnessedDigraph) -> C5Witness:
    """C5 from an outsimpliciality violation of the common-in-neighbour digraph.

    ``u1 -> v1`` and ``u1 -> w1`` are edges of ``wd`` (host ids), while
    ``v1, w1`` share no in-neighbour in V5.  With ``x5``, ``y5`` the two
    stored witnesses, a vertex ``z3`` of V3 closes the cycle.
    """
    _require_lambda(s)
    pos = {v: i for i, v in enumerate(wd.v1)}
    x5 = wd.host_witness(pos[u1], pos[v1])
    y5 = wd.host_witness(pos[u1], pos[w1])
    if x5 < 0 or y5 < 0:
        raise InvalidArgumentError("(u1, v1) and (u1, w1) must be edges of the digraph")
    if x5 == y5:
        raise InvalidArgumentError("v1 and w1 share an in-neighbour in V5")
    if not t.beats(x5, y5):
        # Mirror: swap the roles of (v1, x5) and (w1, y5).
        v1, w1, x5, y5 = w1, v1, y5, x5
    hits = _scan(t, s.sets[2], outs_from=(u1, w1), ins_to=(x5, y5))
    if not hits:
        raise InternalInvariantError("no vertex of V3 closes the C5; structure is not smooth")
    return _witness(t, (u1, w1, hits[0], x5, y5))


def claim1_check_edge(t: Tournament, s: SmoothStructure, u1: int, v1: int, v5: int, wd: WitnessedDigraph | None = None):
    """Test in-neighbourhood containment across the edge ``u1 -> v1``.

    Returns ``None`` when every in-neighbour of ``u1`` in V3 also beats
    ``v1``.  Otherwise returns a :class:`C5Witness` or a :class:`CompletePair`
    tagged ``claim1-N2N4``.
    """
    _require_lambda(s)
    v2s, v3s, v4s = s.sets[1], s.sets[2], s.sets[3]
    bad = _scan(t, v3s, outs_from=(v1,), ins_to=(u1,))
    if not bad:
        return None
    v3 = bad[0]
    if t.beats(v3, v5):
        hits = _scan(t, v2s, outs_from=(u1, v1), ins_to=(v3, v5))
        if not hits:
            raise InternalInvariantError("no vertex of V2 closes the C5; structure is not smooth")
        return _witness(t, (u1, v1, hits[0], v3, v5))
    n4 = _scan(t, v4s, outs_from=(u1, v3), ins_to=(v5,))
    n2 = _scan(t, v2s, outs_from=(u1,), ins_to=(v3, v5))
    if not n2 or not n4:
        raise InternalInvariantError("N2 or N4 is empty; structure is not smooth")
    back = t.adj[np.ix_(n4, n2)]
    if back.any():
        i, j = np.argwhere(back)[0]
        return _witness(t, (v3, u1, n4[i], n2[j], v5))
    return CompletePair(tuple(n2), tuple(n4), "claim1-N2N4")


def _checked_pair(t: Tournament, a, b, branch: str) -> CompletePair:
    pair = CompletePair(tuple(sorted(a)), tuple(sorted(b)), branch)
    if not is_complete_pair(t, pair.A, pair.B):
        raise InternalInvariantError(f"branch {branch} produced a pair that is not complete")
    return pair


def find_complete_pair(t: Tournament, s: SmoothStructure):
    """Complete pair or C5 witness from a smooth 5-set structure.

    Parameters
    ----------
    t : Tournament
    s : SmoothStructure
        Must verify in smooth mode, have five sets, all-zero ``w``,
        ``lambda <= 1/5`` and ``|V1| >= 6``.

    Returns
    -------
    CompletePair or C5Witness
        A returned pair has both sides at least ``min |V_i| // 6``.
    """
    _require_lambda(s)
    if any(s.spec.w):
        raise PreconditionError("w must be all zero")
    report = verify_structure(t, s, "smooth")
    if not report:
        raise PreconditionError(f"structure does not verify: {report.condition} {report.detail}", payload=report)
    if len(s.sets[0]) < MIN_V1:
        raise PreconditionError(f"|V1| must be at least {MIN_V1}, got {len(s.sets[0])}")
    v1s, v3s, v5s = s.sets[0], s.sets[2], s.sets[4]

    wd = build_common_in_digraph(t, v1s, v5s)
    host = wd.v1
    bad = check_outsimplicial(wd.d)
    if bad is not None:
        u, a, b = (host[i] for i in bad)
        return claim2_extract(t, s, u, a, b, wd)

    for i, j in wd.d.edges():
        out = claim1_check_edge(t, s, host[i], host[j], wd.host_witness(i, j), wd)
        if out is not None:
            return out

    cert = split(wd.d)
    return resolve_split(t, cert.case, [host[i] for i in cert.A], [host[i] for i in cert.B], v3s, v5s)


def resolve_split(t: Tournament, case: str, a, b, v3s, v5s) -> CompletePair:
    """Turn a split of V1 into a complete pair.

    With ``C`` the vertices of the target set (V5 in case I, V3 in case II)
    beaten by all of ``a``: either ``(a, C)`` if ``C`` holds at least half
    the target, else ``(b, V5 - C)`` in case I or ``(V3 - C, b)`` in case
    II.  The latter two rely on the split certificate and on in-neighbour
    containment along edges of the common-in-neighbour digraph; the pair is
    re-checked either way.
    """
    target = v5s if case == CASE_I else v3s
    tag = "caseI" if case == CASE_I else "caseII"
    c = _scan(t, target, outs_from=a)
    if 2 * len(c) >= len(target):
        return _checked_pair(t, a, c, f"{tag}-AC")
    rest = sorted(set(target) - set(c))
    if case == CASE_I:
        return _checked_pair(t, b, rest, "caseI-BV5")
    return _checked_pair(t, rest, b, "caseII-V3B")


def pair_from_transitive(t: Tournament, order) -> CompletePair:
    """Split a transitive set, listed in beating order, into two halves.

    The first ``k // 2`` vertices beat the last ``k // 2``; for ``k < 2``
    there is no pair and :class:`InvalidArgumentError` is raised.
    """
    order = [int(v) for v in order]
    half = len(order) // 2
    if half == 0:
        raise InvalidArgumentError("need at least two vertices")
    return _checked_pair(t, order[:half], order[-half:], "transitive-halves")
