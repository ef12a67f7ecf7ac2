"""Command-line interface.

Exit codes: 0 success / claim holds / free, 1 claim fails / contains,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .decompose import classify_pairs, counting_audit_3, counting_audit_general
from .embed import contains_expansion, contains_subhypergraph
from .formats import emit_uhg, read_uhg
from .gallery import FamilySpec
from .hypercore import Hypergraph, HypergraphError
from .oracle import TuranCertificate, exact_turan, verify_certificate
from .pipeline import run_pipeline


OK, FAIL, ERROR = 0, 1, 2


def _dump(obj, out=None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _find(h: Hypergraph, spec: FamilySpec, through=None) -> dict | None:
    core = spec.core_graph()
    if core is not None:
        emb = contains_expansion(h, core, through=through)
        return None if emb is None else emb.to_dict()
    pattern = spec.build()
    m = contains_subhypergraph(h, pattern, through=through)
    return None if m is None else {"vertex_map": {str(k): v for k, v in sorted(m.items())}}


def cmd_gen(args) -> int:
    spec = FamilySpec.parse(" ".join(args.family))
    if spec.kind == "partial-expansion":
        part = spec.build_partial()
        text = "".join(f"# bare {u} {v}\n" for u, v in part.bare_pairs) + emit_uhg(part.hyperedges)
    else:
        text = emit_uhg(spec.build())
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_check_free(args) -> int:
    h = read_uhg(args.hypergraph)
    spec = FamilySpec.parse(args.family)
    found = _find(h, spec)
    if args.json:
        _dump({"free": found is None, "embedding": found})
    elif found is None:
        print("FREE")
    else:
        print(json.dumps(found))
    return OK if found is None else FAIL


def cmd_embed(args) -> int:
    h = read_uhg(args.hypergraph)
    spec = FamilySpec.parse(args.family)
    through = [int(x) for x in args.through.split(",")] if args.through else None
    found = _find(h, spec, through=through)
    _dump({"family": str(spec), "through": through, "embedding": found})
    return OK if found is not None else FAIL


def cmd_classify(args) -> int:
    h = read_uhg(args.hypergraph)
    if h.r < 3:
        raise HypergraphError("classification needs r >= 3")
    ec = classify_pairs(h, args.t)
    report = counting_audit_3(h, args.t) if h.r == 3 else counting_audit_general(h, args.t)
    out = {
        "n": h.n,
        "r": h.r,
        "t": args.t,
        "edge_classes": {f"E{i}": len(s) for i, s in ec.classes.items()} | {"heavy_rest": len(ec.heavy_rest)},
        "audit": report.to_dict(),
    }
    if h.r == 3:
        out["general_audit"] = counting_audit_general(h, args.t).to_dict()
    _dump(out)
    return OK if report.ok else FAIL


def cmd_turan(args) -> int:
    spec = FamilySpec.parse(args.forbid)
    cert = exact_turan(
        args.n, args.r, spec,
        budget_sec=args.budget_sec,
        symmetry=args.sym == "on",
        seed=args.seed,
        canonical=args.canonical,
    )
    _dump(cert.to_dict(), args.output)
    return OK


def cmd_verify_cert(args) -> int:
    with open(args.certificate) as fh:
        cert = TuranCertificate.from_dict(json.load(fh))
    problems = verify_certificate(cert)
    _dump({"valid": not problems, "problems": problems, "value": cert.value, "exact": cert.exact})
    return OK if not problems else FAIL


def cmd_verify_theorem(args) -> int:
    report = run_pipeline(args.n, args.t, args.r, seed=args.seed)
    _dump(report.to_dict(), args.output)
    return OK if report.holds else FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fanturan", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0, help="seed for every randomized step (default 0)")
    p.add_argument("--budget-sec", type=float, default=None, help="time budget for searches")
    p.add_argument("--json", action="store_true", help="machine-readable output where it is optional")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="write a family member in .uhg format")
    s.add_argument("family", nargs="+", help='family spec, e.g. "fan t=2 r=3" or "star-cover n=12 t=2 r=3"')
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("check-free", help="decide whether a hypergraph avoids a family member")
    s.add_argument("hypergraph")
    s.add_argument("--family", required=True)
    s.set_defaults(func=cmd_check_free)

    s = sub.add_parser("embed", help="print a copy of a family member, if any")
    s.add_argument("hypergraph")
    s.add_argument("--family", required=True)
    s.add_argument("--through", help="comma-separated hyperedge the copy must use")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("classify", help="heaviness classes and counting audit")
    s.add_argument("hypergraph")
    s.add_argument("--t", type=int, required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("turan", help="exact Turán number on small n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, default=3)
    s.add_argument("--forbid", required=True, help='core family, e.g. "fan t=1" or "triangle"')
    s.add_argument("--budget-sec", type=float, default=argparse.SUPPRESS)
    s.add_argument("--sym", choices=("on", "off"), default="on")
    s.add_argument("--canonical", action="store_true", help="isomorph-rejecting level search")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_turan)

    s = sub.add_parser("verify-cert", help="re-check a Turán certificate")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_verify_cert)

    s = sub.add_parser("verify-theorem", help="check the star-cover construction for (n, t, r)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--r", type=int, default=3)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_verify_theorem)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (HypergraphError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
