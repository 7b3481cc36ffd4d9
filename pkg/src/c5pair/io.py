"""Text formats for graphs and JSON certificate documents.

Graph files::

    # optional comment lines
    tournament 1          (or: digraph 1)
    <n>
    <n rows of n characters 0/1; row i, column j = 1 means i -> j>

Certificates are JSON objects with a ``type`` field, rationals written as
``"p/q"`` strings, the tool version and the sha256 digest of the
canonical (comment-free) form of the input graph file.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .ehpair import CompletePair
from .errors import InvalidArgumentError
from .graphs import OrientedDigraph, Tournament
from .outsimplicial import SplitCertificate
from .patterns import C5Witness
from .structures import SmoothStructure, StructureSpec

__all__ = [
    "FormatError",
    "dumps_graph",
    "loads_graph",
    "read_graph",
    "write_graph",
    "digest",
    "frac_str",
    "make_document",
    "document_from_result",
    "structure_document",
    "structure_from_document",
    "dumps_document",
    "loads_document",
    "DOCUMENT_TYPES",
]

TOOL = f"c5pair {__version__}"
DOCUMENT_TYPES = ("complete_pair", "c5_witness", "split", "structure", "report")
_HEADERS = {"tournament": Tournament, "digraph": OrientedDigraph}


class FormatError(InvalidArgumentError):
    """Malformed graph file or certificate document."""


def dumps_graph(g: OrientedDigraph, comments: tuple[str, ...] = ()) -> str:
    kind = "tournament" if isinstance(g, Tournament) else "digraph"
    lines = [f"# {c}" for c in comments]
    lines += [f"{kind} 1", str(g.n)]
    lines += ["".join("1" if x else "0" for x in row) for row in g.adj.tolist()]
    return "\n".join(lines) + "\n"


def loads_graph(text: str, expect: str | None = None) -> OrientedDigraph:
    """Parse a graph file; ``expect`` may force ``"tournament"`` or ``"digraph"``."""
    lines = text.splitlines()
    i = 0
    while i < len(lines) and (lines[i].startswith("#") or not lines[i].strip()):
        i += 1
    body = [ln.strip() for ln in lines[i:] if ln.strip()]
    if len(body) < 2:
        raise FormatError("missing header or vertex count")
    head = body[0].split()
    if len(head) != 2 or head[0] not in _HEADERS or head[1] != "1":
        raise FormatError(f"bad header {body[0]!r}")
    if expect is not None and head[0] != expect:
        raise FormatError(f"expected a {expect} file, got {head[0]}")
    try:
        n = int(body[1])
    except ValueError:
        raise FormatError(f"bad vertex count {body[1]!r}") from None
    rows = body[2:]
    if n < 0 or len(rows) != n:
        raise FormatError(f"expected {n} matrix rows, got {len(rows)}")
    if any(len(r) != n or set(r) - {"0", "1"} for r in rows):
        raise FormatError("matrix rows must be n characters from {0,1}")
    m = np.array([[ch == "1" for ch in r] for r in rows], dtype=bool).reshape(n, n)
    try:
        return _HEADERS[head[0]](m)
    except InvalidArgumentError as exc:
        raise FormatError(str(exc)) from None


def read_graph(path, expect: str | None = None) -> OrientedDigraph:
    return loads_graph(Path(path).read_text(), expect)


def write_graph(path, g: OrientedDigraph, comments: tuple[str, ...] = ()) -> str:
    text = dumps_graph(g, comments)
    Path(path).write_text(text)
    return digest(g)


def digest(g: OrientedDigraph) -> str:
    return "sha256:" + hashlib.sha256(dumps_graph(g).encode()).hexdigest()


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def make_document(kind: str, g: OrientedDigraph | None = None, **fields) -> dict:
    if kind not in DOCUMENT_TYPES:
        raise InvalidArgumentError(f"unknown document type {kind}")
    doc = {"type": kind, "tool": TOOL}
    if g is not None:
        doc["input_digest"] = digest(g)
    doc.update(fields)
    return doc


def document_from_result(g: OrientedDigraph, result) -> dict:
    """Certificate document for a pipeline or split result."""
    if isinstance(result, CompletePair):
        return make_document("complete_pair", g, A=list(result.A), B=list(result.B), branch=result.branch)
    if isinstance(result, C5Witness):
        return make_document("c5_witness", g, witness=list(result))
    if isinstance(result, SplitCertificate):
        return make_document(
            "split", g, case=result.case, A=list(result.A), B=list(result.B),
            branch=result.branch, pivot=list(result.pivot),
        )
    raise InvalidArgumentError(f"cannot serialise {type(result).__name__}")


def structure_document(g: OrientedDigraph, s: SmoothStructure) -> dict:
    return make_document(
        "structure", g, c=frac_str(s.spec.c), **{"lambda": frac_str(s.spec.lam)},
        w=s.spec.w_string, sets=[list(x) for x in s.sets],
    )


def structure_from_document(doc: dict, c=None, lam=None, w=None) -> SmoothStructure:
    """Rebuild a structure; ``c``, ``lam``, ``w`` override the stored spec."""
    if doc.get("type") != "structure":
        raise FormatError(f"expected a structure document, got {doc.get('type')!r}")
    try:
        spec = StructureSpec(
            Fraction(c if c is not None else doc["c"]),
            Fraction(lam if lam is not None else doc["lambda"]),
            w if w is not None else doc["w"],
        )
        return SmoothStructure(spec, tuple(tuple(x) for x in doc["sets"]))
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(f"bad structure document: {exc}") from None


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("type") not in DOCUMENT_TYPES:
        raise FormatError("document lacks a known 'type'")
    return doc
