"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 inconclusive, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import oracle
from .bounds import bound_chain, chain_to_json, decimal, rho_upper
from .budget import Budget
from .certificates import CertificateFormatError, loads as load_certificate
from .certify import verify_certificate
from .extraction import ContractViolation, ExtractionParams, main_extract
from .graph_core import GraphInputError, parse_graph, to_edge_list, to_graph6
from .ramsey import MODES
from .web_model import Web, WebInputError, find_web, plant_subdivision, validate_web

OK, VERIFY_FAILED, INCONCLUSIVE, INPUT_ERROR = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def parse_lengths(spec: str):
    """"2" -> 2, "1-3" -> (1, 3)."""
    try:
        if "-" in spec:
            lo, hi = (int(x) for x in spec.split("-", 1))
            if not 1 <= lo <= hi:
                raise ValueError
            return lo, hi
        n = int(spec)
        if n < 1:
            raise ValueError
        return n
    except ValueError:
        raise UsageError(f"bad length spec {spec!r}; expected N or LO-HI with 1 <= LO <= HI") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: Optional[str], text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_pair(graph_path: str, web_path: str):
    g = parse_graph(_read(graph_path))
    web = Web.loads(_read(web_path))
    return g, web


def _web_report(violations) -> str:
    return "invalid web:\n" + "\n".join(f"  {v}" for v in violations)


# subcommands


def cmd_gen(args) -> int:
    lengths = parse_lengths(args.len)
    if not 0.0 <= args.noise <= 1.0:
        raise UsageError("noise must lie in [0, 1]")
    g, web = plant_subdivision(args.k, lengths, args.noise, args.seed)
    graph_text = to_graph6(g) if args.format == "graph6" else to_edge_list(g)
    _write(args.graph_out, graph_text)
    _write(args.web_out, web.dumps())
    return OK


def cmd_find_web(args) -> int:
    g = parse_graph(_read(args.graph))
    res = find_web(g, args.r, args.w, Budget(args.budget))
    if res.found:
        _write(args.out, res.witness.dumps())
        return OK
    why = "no such web exists" if res.absent else f"budget exhausted after {res.steps} steps"
    print(why, file=sys.stderr)
    return INCONCLUSIVE


def cmd_extract(args) -> int:
    g, web = _load_pair(args.graph, args.web)
    bad = validate_web(g, web)
    if bad:
        print(_web_report(bad), file=sys.stderr)
        return INPUT_ERROR
    params = ExtractionParams(r=args.r, s=args.s, t=args.t, search_mode=args.mode, budget=args.budget)
    cert = main_extract(g, web, params)
    _write(args.out, cert.dumps())
    if not cert.conclusive:
        print(f"inconclusive: {cert.reason}", file=sys.stderr)
        return INCONCLUSIVE
    return OK


def verify_texts(graph_text: str, web_text: str, cert_text: str) -> tuple[int, str]:
    """The body of ``verify`` on already-read file contents: (exit code, message)."""
    g = parse_graph(graph_text)
    web = Web.loads(web_text)
    bad = validate_web(g, web)
    if bad:
        return INPUT_ERROR, _web_report(bad)
    cert = load_certificate(cert_text)
    verdict = verify_certificate(g, web, cert)
    if verdict.ok:
        return OK, f"ok: {cert.kind}"
    return VERIFY_FAILED, f"rejected: {verdict.clause}"


def cmd_verify(args) -> int:
    code, msg = verify_texts(_read(args.graph), _read(args.web), _read(args.cert))
    print(msg, file=sys.stderr if code == INPUT_ERROR else sys.stdout)
    return code


def cmd_bounds(args) -> int:
    chain = chain_to_json(bound_chain(args.r, args.s, args.t))
    _write(None, json.dumps(chain, indent=1))
    return OK


def cmd_oracle(args) -> int:
    if args.what == "ramsey":
        res = oracle.brute_ramsey_min(args.f, args.g, args.n, args.max_ground)
        out = {"f": args.f, "g": args.g, "n": args.n, "min_ground": res,
               "rho_upper": rho_upper(args.f, args.g, args.n).to_json()}
    elif args.what == "clean":
        g, web = _load_pair(args.graph, args.web)
        S = oracle.brute_clean_set(g, web, args.s)
        out = {"s": args.s, "S": None if S is None else list(S)}
    else:
        g = parse_graph(_read(args.graph))
        rep = oracle.brute_induced(g, args.t)
        out = {"t": args.t, "clique": rep.clique, "biclique": rep.biclique}
    _write(None, json.dumps(out, default=decimal))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="webextract", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    q = sub.add_parser("gen", help="plant a subdivision of K_k in a noisy host")
    q.add_argument("-k", type=int, required=True)
    q.add_argument("-len", "--len", default="2", help="path length N or range LO-HI")
    q.add_argument("-noise", "--noise", type=float, default=0.0)
    q.add_argument("-seed", "--seed", type=int, default=0)
    q.add_argument("--graph-out", default="graph.txt")
    q.add_argument("--web-out", default="web.json")
    q.add_argument("--format", choices=("edges", "graph6"), default="edges")
    q.set_defaults(func=cmd_gen)

    q = sub.add_parser("find-web", help="search a graph for an (r, w)-web")
    q.add_argument("graph")
    q.add_argument("-r", type=int, required=True)
    q.add_argument("-w", type=int, required=True)
    q.add_argument("--budget", type=int)
    q.add_argument("--out", default="-")
    q.set_defaults(func=cmd_find_web)

    q = sub.add_parser("extract", help="run the extraction pipeline")
    q.add_argument("graph")
    q.add_argument("web")
    q.add_argument("-r", type=int, required=True)
    q.add_argument("-s", type=int, required=True)
    q.add_argument("-t", type=int, required=True)
    q.add_argument("--mode", choices=MODES, default="exact")
    q.add_argument("--budget", type=int)
    q.add_argument("--out", default="-")
    q.set_defaults(func=cmd_extract)

    q = sub.add_parser("verify", help="check a certificate")
    q.add_argument("graph")
    q.add_argument("web")
    q.add_argument("cert")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("bounds", help="print the bound chain as JSON")
    q.add_argument("-r", type=int, required=True)
    q.add_argument("-s", type=int, required=True)
    q.add_argument("-t", type=int, required=True)
    q.set_defaults(func=cmd_bounds)

    # not listed in --help; reproduces ground-truth values
    q = sub.add_parser("oracle")
    q.add_argument("what", choices=("ramsey", "clean", "induced"))
    q.add_argument("graph", nargs="?")
    q.add_argument("web", nargs="?")
    q.add_argument("-f", type=int, default=2)
    q.add_argument("-g", type=int, default=2)
    q.add_argument("-n", type=int, default=3)
    q.add_argument("--max-ground", type=int, default=6)
    q.add_argument("-s", type=int, default=3)
    q.add_argument("-t", type=int, default=3)
    q.set_defaults(func=cmd_oracle)
    sub._choices_actions = [a for a in sub._choices_actions if a.dest != "oracle"]
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, GraphInputError, WebInputError, CertificateFormatError,
            ContractViolation, oracle.OracleRefusal) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
