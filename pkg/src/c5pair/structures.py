"""(c, lambda, w)-structures: exact verification and a heuristic finder.

Every threshold is compared in exact rational arithmetic by cross
multiplication; nothing here uses floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidArgumentError
from .graphs import Tournament
from .patterns import is_transitive_set

__all__ = [
    "StructureSpec",
    "SmoothStructure",
    "StructureReport",
    "forward_density",
    "verify_structure",
    "find_structure",
    "feedback_order",
]


def _fraction(x) -> Fraction:
    if isinstance(x, float):
        raise InvalidArgumentError("pass rationals as Fraction, int or 'p/q' strings, not float")
    return Fraction(x)


@dataclass(frozen=True)
class StructureSpec:
    c: Fraction
    lam: Fraction
    w: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", _fraction(self.c))
        object.__setattr__(self, "lam", _fraction(self.lam))
        w = self.w
        if isinstance(w, str):
            w = tuple(int(ch) for ch in w)
        object.__setattr__(self, "w", tuple(int(x) for x in w))
        if not 0 < self.c <= 1:
            raise InvalidArgumentError(f"c must lie in (0, 1], got {self.c}")
        if not 0 < self.lam < 1:
            raise InvalidArgumentError(f"lambda must lie in (0, 1), got {self.lam}")
        if not self.w or any(x not in (0, 1) for x in self.w):
            raise InvalidArgumentError(f"w must be a nonempty 0/1 vector, got {self.w}")

    @property
    def w_string(self) -> str:
        return "".join(map(str, self.w))


@dataclass(frozen=True)
class SmoothStructure:
    spec: StructureSpec
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(tuple(int(v) for v in s) for s in self.sets))
        if len(self.sets) != len(self.spec.w):
            raise InvalidArgumentError(f"{len(self.sets)} sets for |w| = {len(self.spec.w)}")


@dataclass(frozen=True)
class StructureReport:
    """Verdict of :func:`verify_structure`.

    ``condition`` names the first failed test (``"size"``, ``"transitive"``,
    ``"density"``, ``"smooth-in"``, ``"smooth-out"``); ``detail`` carries the
    indices, vertex and exact counts involved.
    """

    ok: bool
    condition: str = ""
    detail: dict | None = None

    def __bool__(self):
        return self.ok


def _check_sets(t: Tournament, sets: Sequence[Sequence[int]]) -> None:
    seen: set[int] = set()
    for s in sets:
        for v in s:
            if not 0 <= v < t.n:
                raise InvalidArgumentError(f"vertex {v} out of range")
            if v in seen:
                raise InvalidArgumentError(f"vertex {v} appears twice across the sets")
            seen.add(v)


def forward_density(t: Tournament, a: Sequence[int], b: Sequence[int]) -> Fraction:
    """Fraction of pairs ``(x, y)`` in ``a x b`` with ``x -> y``."""
    a, b = list(a), list(b)
    if not a or not b:
        raise InvalidArgumentError("forward_density needs nonempty sets")
    _check_sets(t, [a, b])
    fwd = int(t.adj[np.ix_(a, b)].sum())
    return Fraction(fwd, len(a) * len(b))


def verify_structure(t: Tournament, s: SmoothStructure, mode: str = "smooth", tr_value: int | None = None) -> StructureReport:
    """Check ``s`` against the definition of a (plain or smooth) structure in ``t``.

    ``mode="plain"`` tests pairwise forward density ``>= 1 - lambda``;
    ``mode="smooth"`` tests instead the per-vertex bounds: a vertex of
    ``S_i`` has at most ``lambda |S_j|`` in-neighbours in a later ``S_j`` and
    a vertex of ``S_j`` at most ``lambda |S_i|`` out-neighbours in an earlier
    ``S_i``.  ``tr_value`` is required when some ``w_i = 1``.
    """
    if mode not in ("plain", "smooth"):
        raise InvalidArgumentError(f"mode must be 'plain' or 'smooth', got {mode!r}")
    _check_sets(t, s.sets)
    spec = s.spec
    cp, cq = spec.c.numerator, spec.c.denominator
    lp, lq = spec.lam.numerator, spec.lam.denominator
    n = t.n

    for i, (wi, si) in enumerate(zip(spec.w, s.sets)):
        if wi == 0:
            if len(si) * cq < cp * n:
                return StructureReport(False, "size", {"i": i, "size": len(si), "bound": f"{spec.c * n}"})
        else:
            if tr_value is None:
                raise InvalidArgumentError("tr_value is required when w has a 1 entry")
            if not is_transitive_set(t, si):
                return StructureReport(False, "transitive", {"i": i})
            if len(si) * cq < cp * tr_value:
                return StructureReport(False, "size", {"i": i, "size": len(si), "bound": f"{spec.c * tr_value}"})

    k = len(s.sets)
    for i in range(k):
        for j in range(i + 1, k):
            si, sj = list(s.sets[i]), list(s.sets[j])
            if not si or not sj:
                continue
            block = t.adj[np.ix_(si, sj)]
            if mode == "plain":
                fwd = int(block.sum())
                if fwd * lq < (lq - lp) * len(si) * len(sj):
                    return StructureReport(
                        False, "density", {"i": i, "j": j, "forward": fwd, "pairs": len(si) * len(sj)}
                    )
                continue
            back_in = (~block).sum(axis=1)  # in-neighbours in S_j of each S_i vertex
            over = np.flatnonzero(back_in * lq > lp * len(sj))
            if len(over):
                v = si[int(over[0])]
                return StructureReport(
                    False, "smooth-in",
                    {"i": i, "j": j, "vertex": v, "count": int(back_in[over[0]]), "bound": f"{spec.lam * len(sj)}"},
                )
            back_out = (~block).sum(axis=0)  # out-neighbours in S_i of each S_j vertex
            over = np.flatnonzero(back_out * lq > lp * len(si))
            if len(over):
                v = sj[int(over[0])]
                return StructureReport(
                    False, "smooth-out",
                    {"i": i, "j": j, "vertex": v, "count": int(back_out[over[0]]), "bound": f"{spec.lam * len(si)}"},
                )
    return StructureReport(True)


def feedback_order(t: Tournament, rng: np.random.Generator | None = None) -> np.ndarray:
    """Vertex order with few backward edges.

    Starts from descending out-degree (ties by id, or randomly when ``rng``
    is given) and applies odd-even adjacent transpositions while any
    adjacent pair points backwards.  Each swap removes exactly one backward
    edge, so the loop terminates.
    """
    deg = t.out_degrees()
    tie = np.arange(t.n) if rng is None else rng.permutation(t.n)
    order = np.lexsort((tie, -deg))
    adj = t.adj
    stable = 0
    parity = 0
    while stable < 2 and t.n > 1:
        left = order[parity:-1:2]
        right = order[parity + 1::2][: len(left)]
        swap = adj[right, left]
        if swap.any():
            pos = np.arange(parity, parity + 2 * len(left), 2)[swap]
            order[pos], order[pos + 1] = order[pos + 1], order[pos].copy()
            stable = 0
        else:
            stable += 1
        parity ^= 1
    return order


def _prune(t: Tournament, windows: list[np.ndarray], lam: Fraction) -> list[np.ndarray]:
    """Drop per-vertex smoothness violators until none remain."""
    lp, lq = lam.numerator, lam.denominator
    k = len(windows)
    adj = t.adj.astype(np.int64)
    while True:
        lab = np.full(t.n, -1)
        for i, win in enumerate(windows):
            lab[win] = i
        onehot = np.zeros((t.n, k), dtype=np.int64)
        inside = lab >= 0
        onehot[np.flatnonzero(inside), lab[inside]] = 1
        sizes = onehot.sum(axis=0)
        outcnt = adj @ onehot
        incnt = adj.T @ onehot
        later = np.arange(k)[None, :] > lab[:, None]
        earlier = np.arange(k)[None, :] < lab[:, None]
        wrong = np.where(later, incnt, 0) + np.where(earlier, outcnt, 0)
        bad = ((wrong * lq > lp * sizes[None, :]).any(axis=1)) & inside
        if not bad.any():
            return windows
        windows = [win[~bad[win]] for win in windows]


def find_structure(t: Tournament, spec: StructureSpec, attempts: int = 8, seed: int = 0) -> SmoothStructure | None:
    """Heuristically search for a smooth structure with all-zero ``w``.

    Attempt 0 is fully deterministic; attempt ``k > 0`` breaks degree ties
    with a generator seeded by ``(seed, k)``.  Any structure returned has
    passed :func:`verify_structure` in smooth mode; ``None`` means every
    attempt failed.
    """
    if any(spec.w):
        raise InvalidArgumentError("find_structure supports all-zero w only")
    k = len(spec.w)
    n = t.n
    if n < k:
        return None
    cp, cq = spec.c.numerator, spec.c.denominator
    size = n // k
    for attempt in range(attempts):
        rng = None if attempt == 0 else np.random.default_rng([seed, attempt])
        order = feedback_order(t, rng)
        windows = [order[i * size:(i + 1) * size].copy() for i in range(k)]
        windows = _prune(t, windows, spec.lam)
        if any(len(win) * cq < cp * n for win in windows):
            continue
        s = SmoothStructure(spec, tuple(tuple(sorted(win.tolist())) for win in windows))
        if verify_structure(t, s, "smooth"):
            return s
    return None
