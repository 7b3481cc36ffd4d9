"""Splitting outsimplicial digraphs into two large, well-separated sets.

A digraph is outsimplicial when every out-neighbourhood is a clique of the
underlying graph.  :func:`split` returns disjoint ``A``, ``B`` of size at
least ``floor(n/6)`` that are either edge-free between each other (case I)
or such that every vertex of ``A`` reaches every vertex of ``B`` (case II).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .chordal import centroid_bag, clique_tree, components_without, is_chordal, max_weight_clique_chordal
from .errors import InternalInvariantError, InvalidArgumentError, PreconditionError
from .graphs import OrientedDigraph, reaches_all, scc_condensation, underlying

__all__ = ["SplitCertificate", "check_outsimplicial", "split", "verify_split"]

CASE_I = "I"
CASE_II = "II"


@dataclass(frozen=True)
class SplitCertificate:
    """Output of :func:`split`.

    ``case`` is ``"I"`` (no edge joins A and B) or ``"II"`` (every vertex of
    A reaches every vertex of B).  ``branch`` is ``"clique"`` or
    ``"centroid"``; ``pivot`` lists the condensation components of the heavy
    clique or of the centroid bag that produced the split.
    """

    case: str
    A: tuple[int, ...]
    B: tuple[int, ...]
    branch: str = ""
    pivot: tuple[int, ...] = field(default=())


def check_outsimplicial(d: OrientedDigraph) -> tuple[int, int, int] | None:
    """``None`` if ``d`` is outsimplicial, else the first violating ``(v, a, b)``.

    A violation is a vertex ``v`` with out-neighbours ``a < b`` that are not
    adjacent in either direction; triples are compared lexicographically.
    """
    und = d.adj | d.adj.T
    for v in range(d.n):
        outs = np.flatnonzero(d.adj[v])
        if len(outs) < 2:
            continue
        gap = ~und[np.ix_(outs, outs)]
        np.fill_diagonal(gap, False)
        if gap.any():
            i, j = np.argwhere(np.triu(gap))[0]
            return v, int(outs[i]), int(outs[j])
    return None


def split(d: OrientedDigraph) -> SplitCertificate:
    """Split an outsimplicial digraph on ``n >= 2`` vertices.

    Parameters
    ----------
    d : OrientedDigraph
        Must be outsimplicial.

    Returns
    -------
    SplitCertificate
        With ``|A|, |B| >= n // 6``.

    Raises
    ------
    InvalidArgumentError
        For ``n < 2``.
    PreconditionError
        If ``d`` is not outsimplicial; ``payload`` is the violating triple.
    InternalInvariantError
        If the condensation is not chordal or the sizes come out short.
    """
    n = d.n
    if n < 2:
        raise InvalidArgumentError(f"split needs n >= 2, got {n}")
    bad = check_outsimplicial(d)
    if bad is not None:
        raise PreconditionError(f"digraph is not outsimplicial: {bad}", payload=bad)

    cond = scc_condensation(d)
    und = underlying(cond.quotient)
    weights = cond.weights
    chordal, hole = is_chordal(und)
    if not chordal:
        raise InternalInvariantError(f"condensation of an outsimplicial digraph has hole {hole}")

    clique = max_weight_clique_chordal(und, weights)
    heavy = sum(weights[c] for c in clique)
    if 3 * heavy >= n:
        # Components are topologically indexed, so ascending index is the
        # transitive order of the clique.
        seq = [v for c in sorted(clique) for v in cond.components[c]]
        half = heavy // 2
        cert = SplitCertificate(CASE_II, tuple(sorted(seq[:half])), tuple(sorted(seq[half:])), "clique", tuple(clique))
    else:
        td = clique_tree(und)
        bag = td.bags[centroid_bag(und, td, weights)]
        parts = components_without(und, bag)
        parts.sort(key=lambda p: (sum(weights[c] for c in p), p[0]))
        sizes = [sum(weights[c] for c in p) for p in parts]
        x = sum(sizes)
        prefix = 0
        r = len(parts)
        for i, s in enumerate(sizes, start=1):
            prefix += s
            if 2 * prefix > x:
                r = i
                break
        cut = r - 1 if r == len(parts) else r

        def expand(ps):
            return tuple(sorted(v for p in ps for c in p for v in cond.components[c]))

        cert = SplitCertificate(CASE_I, expand(parts[:cut]), expand(parts[cut:]), "centroid", tuple(bag))

    floor = n // 6
    if len(cert.A) < floor or len(cert.B) < floor:
        raise InternalInvariantError(f"split sizes {len(cert.A)}, {len(cert.B)} below floor {floor}")
    return cert


def verify_split(d: OrientedDigraph, cert: SplitCertificate) -> bool:
    """Re-check every certificate invariant directly against ``d``."""
    a, b = list(cert.A), list(cert.B)
    if len(set(a)) != len(a) or len(set(b)) != len(b) or set(a) & set(b):
        return False
    if any(v < 0 or v >= d.n for v in a + b):
        return False
    floor = d.n // 6
    if len(a) < floor or len(b) < floor:
        return False
    if cert.case == CASE_I:
        return not (d.adj[np.ix_(a, b)].any() or d.adj[np.ix_(b, a)].any())
    if cert.case == CASE_II:
        return reaches_all(d, a, b)
    return False
