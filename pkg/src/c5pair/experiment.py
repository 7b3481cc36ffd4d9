"""Grid runner producing the ``eh-stats`` table."""

from __future__ import annotations

import csv
import io
import time
from fractions import Fraction
from typing import Iterable

from .ehpair import CompletePair, find_complete_pair
from .errors import InvalidArgumentError
from .gen import gen_c5free, gen_planted_blocks
from .oracle import verify_complete_pair, verify_c5_witness
from .patterns import max_transitive_greedy
from .structures import StructureSpec, find_structure

COLUMNS = ("kind", "n", "seed", "c", "lambda", "outcome", "sizeA", "sizeB", "tr_lower_bound", "runtime_ms")
KINDS = ("planted", "c5free")


def run_cell(kind: str, n: int, seed: int, c: Fraction, lam: Fraction, noise: Fraction, timing: bool) -> dict:
    start = time.perf_counter()
    if kind == "planted":
        t, s = gen_planted_blocks(n, 5, c, noise, seed, lam)
    elif kind == "c5free":
        t = gen_c5free(n, seed)
        s = find_structure(t, StructureSpec(c, lam, (0,) * 5), attempts=4, seed=seed)
    else:
        raise InvalidArgumentError(f"unknown experiment kind {kind!r}")
    row = {"kind": kind, "n": n, "seed": seed, "c": f"{c.numerator}/{c.denominator}",
           "lambda": f"{lam.numerator}/{lam.denominator}", "sizeA": "", "sizeB": ""}
    if s is None or len(s.sets[0]) < 6:
        row["outcome"] = "no_structure"
    else:
        out = find_complete_pair(t, s)
        if isinstance(out, CompletePair):
            if not verify_complete_pair(t, out.A, out.B):
                raise AssertionError("pipeline emitted an incomplete pair")
            row.update(outcome="complete_pair", sizeA=len(out.A), sizeB=len(out.B))
        else:
            if not verify_c5_witness(t, out):
                raise AssertionError("pipeline emitted a false witness")
            row["outcome"] = "c5_witness"
    row["tr_lower_bound"] = len(max_transitive_greedy(t))
    row["runtime_ms"] = round((time.perf_counter() - start) * 1000) if timing else ""
    return row


def eh_stats(kinds: Iterable[str], ns: Iterable[int], seeds: Iterable[int], c, lam, noise, timing: bool = False) -> list[dict]:
    """Rows ordered by (kind, n, seed)."""
    c, lam, noise = Fraction(c), Fraction(lam), Fraction(noise)
    return [
        run_cell(kind, n, seed, c, lam, noise, timing)
        for kind in sorted(kinds) for n in sorted(ns) for seed in sorted(seeds)
    ]


def to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
