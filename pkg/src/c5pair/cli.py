"""Command-line interface.

Exit codes:

    0   success (c5-free, verified, certificate written)
    2   usage, parse or format error
    10  a C5 witness was found (``check c5``, ``pair find``)
    11  structure finder failed
    12  supplied structure does not verify (``pair find``)
    13  a certificate failed verification
    14  digraph is not outsimplicial (``split``)
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import io as cio
from .ehpair import CompletePair, find_complete_pair
from .errors import InvalidArgumentError, PreconditionError
from .experiment import KINDS, eh_stats, to_csv
from .gen import PRNG_NAME, gen_c5free, gen_outsimplicial, gen_planted_blocks, random_tournament
from .graphs import Tournament
from .oracle import brute_c5, verify_c5_witness, verify_complete_pair
from .outsimplicial import SplitCertificate, check_outsimplicial, split, verify_split
from .patterns import find_c5
from .structures import StructureSpec, find_structure, verify_structure

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_WITNESS = 10
EXIT_NO_STRUCTURE = 11
EXIT_BAD_STRUCTURE = 12
EXIT_VERIFY_FAILED = 13
EXIT_NOT_OUTSIMPLICIAL = 14


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _int_list(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str, expect: str | None = None):
    try:
        return cio.read_graph(path, expect)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from None
    except InvalidArgumentError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _load_doc(path: str) -> dict:
    try:
        return cio.loads_document(Path(path).read_text())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from None
    except InvalidArgumentError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


# -- gen -------------------------------------------------------------------

def cmd_gen(args) -> int:
    comment = (f"c5pair gen {args.kind} n={args.n} seed={args.seed} prng={PRNG_NAME}",)
    structure = None
    if args.kind == "random":
        g = random_tournament(args.n, args.seed)
    elif args.kind == "c5free":
        g = gen_c5free(args.n, args.seed)
    elif args.kind == "planted":
        g, structure = gen_planted_blocks(args.n, args.k, args.c, args.noise, args.seed, args.lam)
        comment = (comment[0] + f" k={args.k} c={cio.frac_str(args.c)} noise={cio.frac_str(args.noise)}",)
    else:
        g = gen_outsimplicial(args.n, args.seed, args.blowup)
        comment = (comment[0] + f" blowup={int(args.blowup)}",)
    _emit(cio.dumps_graph(g, comment), args.output)
    if structure is not None and args.structure_out:
        Path(args.structure_out).write_text(cio.dumps_document(cio.structure_document(g, structure)))
    if args.output:
        print(cio.digest(g))
    return EXIT_OK


# -- check c5 --------------------------------------------------------------

def cmd_check(args) -> int:
    t = _load(args.input, "tournament")
    if args.oracle:
        if t.n > 14:
            raise CliError("--oracle supports n <= 14", EXIT_PARSE)
        w = brute_c5(t)
        if w is not None:
            k = w.index(min(w))
            w = w[k:] + w[:k]
    else:
        w = find_c5(t)
    if w is None:
        print("c5-free")
        return EXIT_OK
    doc = cio.make_document("c5_witness", t, witness=[int(x) for x in w])
    if args.output:
        Path(args.output).write_text(cio.dumps_document(doc))
        print("c5-witness " + " ".join(map(str, doc["witness"])))
    else:
        sys.stdout.write(cio.dumps_document(doc))
    return EXIT_WITNESS


# -- structure -------------------------------------------------------------

def cmd_structure_find(args) -> int:
    t = _load(args.input, "tournament")
    try:
        spec = StructureSpec(args.c, args.lam, args.w)
        s = find_structure(t, spec, attempts=args.attempts, seed=args.seed)
    except InvalidArgumentError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    if s is None:
        raise CliError(f"no smooth structure found in {args.attempts} attempts", EXIT_NO_STRUCTURE)
    _emit(cio.dumps_document(cio.structure_document(t, s)), args.output)
    return EXIT_OK


def _verify_structure_doc(t: Tournament, doc: dict, args) -> tuple[bool, dict]:
    s = cio.structure_from_document(doc, getattr(args, "c", None), getattr(args, "lam", None), getattr(args, "w", None))
    mode = getattr(args, "mode", None) or "smooth"
    tr = getattr(args, "tr", None)
    try:
        report = verify_structure(t, s, mode, tr)
    except InvalidArgumentError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    fields = {"target": "structure", "mode": mode, "ok": report.ok, "condition": report.condition,
              "detail": report.detail}
    return report.ok, fields


# -- generic verification --------------------------------------------------

def _verify(g, doc: dict, args) -> tuple[bool, dict]:
    kind = doc["type"]
    if doc.get("input_digest") not in (None, cio.digest(g)):
        return False, {"target": kind, "ok": False, "condition": "input digest mismatch"}
    try:
        if kind == "structure":
            return _verify_structure_doc(g, doc, args)
        if kind == "complete_pair":
            ok = verify_complete_pair(g, doc["A"], doc["B"])
        elif kind == "c5_witness":
            ok = verify_c5_witness(g, doc["witness"])
        elif kind == "split":
            cert = SplitCertificate(doc["case"], tuple(doc["A"]), tuple(doc["B"]), doc.get("branch", ""))
            ok = verify_split(g, cert)
        else:
            raise CliError(f"cannot verify a {kind} document", EXIT_PARSE)
    except (KeyError, TypeError) as exc:
        raise CliError(f"malformed {kind} document: {exc}", EXIT_PARSE) from None
    return ok, {"target": kind, "ok": ok}


def cmd_verify(args) -> int:
    doc = _load_doc(args.document)
    expect = {"structure": "tournament", "complete_pair": "tournament", "c5_witness": "tournament",
              "split": "digraph"}.get(doc["type"])
    g = _load(args.input, expect)
    ok, fields = _verify(g, doc, args)
    report = cio.make_document("report", g, **fields)
    if args.output:
        Path(args.output).write_text(cio.dumps_document(report))
    print("pass" if ok else "fail")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


# -- pair ------------------------------------------------------------------

def cmd_pair_find(args) -> int:
    t = _load(args.input, "tournament")
    sdoc = _load_doc(args.structure)
    try:
        s = cio.structure_from_document(sdoc)
    except InvalidArgumentError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    if sdoc.get("input_digest") not in (None, cio.digest(t)):
        raise CliError("structure document belongs to a different input", EXIT_BAD_STRUCTURE)
    try:
        out = find_complete_pair(t, s)
    except PreconditionError as exc:
        raise CliError(str(exc), EXIT_BAD_STRUCTURE) from None
    except InvalidArgumentError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    doc = cio.document_from_result(t, out)
    _emit(cio.dumps_document(doc), args.output)
    if isinstance(out, CompletePair):
        if args.output:
            print(f"complete_pair {out.branch} |A|={len(out.A)} |B|={len(out.B)}")
        return EXIT_OK
    if args.output:
        print("c5-witness " + " ".join(map(str, out)))
    return EXIT_WITNESS


# -- split -----------------------------------------------------------------

def cmd_split(args) -> int:
    d = _load(args.input, "digraph")
    bad = check_outsimplicial(d)
    if bad is not None:
        raise CliError(f"not outsimplicial: vertex {bad[0]} has non-adjacent out-neighbours {bad[1]}, {bad[2]}",
                       EXIT_NOT_OUTSIMPLICIAL)
    try:
        cert = split(d)
    except InvalidArgumentError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    doc = cio.document_from_result(d, cert)
    _emit(cio.dumps_document(doc), args.output)
    if args.output:
        print(f"case {cert.case} |A|={len(cert.A)} |B|={len(cert.B)}")
    return EXIT_OK


# -- experiment ------------------------------------------------------------

def cmd_experiment(args) -> int:
    kinds = [k for k in args.gen.split(",") if k]
    for k in kinds:
        if k not in KINDS:
            raise CliError(f"unknown generator kind {k!r}; choose from {', '.join(KINDS)}", EXIT_PARSE)
    try:
        rows = eh_stats(kinds, _int_list(args.n), _int_list(args.seeds), args.c, args.lam, args.noise, args.timing)
    except (InvalidArgumentError, ValueError) as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    _emit(to_csv(rows), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="c5pair", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a tournament or digraph file")
    g.add_argument("kind", choices=("random", "c5free", "planted", "outsimp"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--k", type=int, default=5, help="planted: number of blocks")
    g.add_argument("--c", type=_fraction, default=Fraction(1, 5), help="planted: block fraction")
    g.add_argument("--lambda", dest="lam", type=_fraction, default=Fraction(1, 5))
    g.add_argument("--noise", type=_fraction, default=Fraction(0), help="planted: share of the flip budget used")
    g.add_argument("--blowup", action="store_true", help="outsimp: substitute strong pieces")
    g.add_argument("-o", "--output")
    g.add_argument("--structure-out", help="planted: write the planted structure document here")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="pattern checks")
    c.add_argument("what", choices=("c5",))
    c.add_argument("input")
    c.add_argument("--oracle", action="store_true", help="use brute-force enumeration (n <= 14)")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("structure", help="find or verify smooth structures")
    ssub = s.add_subparsers(dest="action", required=True)
    sf = ssub.add_parser("find")
    sf.add_argument("input")
    sf.add_argument("--c", type=_fraction, required=True)
    sf.add_argument("--lambda", dest="lam", type=_fraction, required=True)
    sf.add_argument("--w", default="00000")
    sf.add_argument("--seed", type=int, required=True)
    sf.add_argument("--attempts", type=int, default=8)
    sf.add_argument("-o", "--output")
    sf.set_defaults(func=cmd_structure_find)
    sv = ssub.add_parser("verify")
    sv.add_argument("input")
    sv.add_argument("document")
    sv.add_argument("--c", type=_fraction)
    sv.add_argument("--lambda", dest="lam", type=_fraction)
    sv.add_argument("--w")
    sv.add_argument("--mode", choices=("smooth", "plain"), default="smooth")
    sv.add_argument("--tr", type=int, help="tr(T) value or lower bound, needed when w has a 1")
    sv.add_argument("-o", "--output")
    sv.set_defaults(func=cmd_verify)

    pr = sub.add_parser("pair", help="complete pair pipeline")
    psub = pr.add_subparsers(dest="action", required=True)
    pf = psub.add_parser("find")
    pf.add_argument("input")
    pf.add_argument("structure")
    pf.add_argument("-o", "--output")
    pf.set_defaults(func=cmd_pair_find)
    pv = psub.add_parser("verify")
    pv.add_argument("input")
    pv.add_argument("document")
    pv.add_argument("-o", "--output")
    pv.set_defaults(func=cmd_verify)

    sp = sub.add_parser("split", help="split an outsimplicial digraph")
    sp.add_argument("input")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_split)

    v = sub.add_parser("verify", help="verify any certificate document against its input")
    v.add_argument("input")
    v.add_argument("document")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("experiment", help="run an experiment grid")
    e.add_argument("name", choices=("eh-stats",))
    e.add_argument("--gen", default="planted", help=f"comma list from {', '.join(KINDS)}")
    e.add_argument("--n", required=True, help="e.g. 150,300 or 100-110")
    e.add_argument("--seeds", required=True, help="e.g. 0-9")
    e.add_argument("--c", type=_fraction, default=Fraction(1, 5))
    e.add_argument("--lambda", dest="lam", type=_fraction, default=Fraction(1, 5))
    e.add_argument("--noise", type=_fraction, default=Fraction(0))
    e.add_argument("--timing", action="store_true", help="fill runtime_ms (makes output non-reproducible)")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"c5pair: {exc}", file=sys.stderr)
        return exc.code
    except InvalidArgumentError as exc:
        print(f"c5pair: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
