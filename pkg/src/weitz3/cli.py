"""Command-line front end.

Commands:

    gens --n N                 list the generators of the constants algebra
    check --n N <poly|->       kernel membership test
    decompose --n N <poly|->   rewrite a constant in the generators
    dims --d D                 block multiplicities vs. path counts
    paths --d D                enumerate path words
    kron --m M --n N           Kronecker product block decomposition
    selftest                   run the verification suite

Exit codes: 0 success, 1 domain error (not a constant, failed verification,
mismatched table), 2 usage or syntax error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decompose import decompose, expand, generators
from .derivation import apply_delta, is_constant
from .errors import NotAConstant, PolySyntaxError, SubscriptOutOfRange, Weitz3Error
from .jordan import kron_jordan, mu
from .paths import enumerate_paths, path_counts, word_to_monomial
from .poly import base_ring, parse_poly
from .selftest import run_all


def _read_poly(arg: str, ring):
    text = sys.stdin.read() if arg == "-" else arg
    return parse_poly(text.strip(), ring)


def _cmd_gens(args) -> int:
    gens = generators(args.n)
    if args.json:
        doc = [
            {"gen": nm.kind, "idx": list(nm.indices), "poly": str(p)}
            for nm, p in gens
        ]
        print(json.dumps(doc, indent=2))
    else:
        for nm, p in gens:
            print(f"{nm} = {p}")
    return 0


def _cmd_check(args) -> int:
    ring = base_ring(args.n)
    h = _read_poly(args.poly, ring)
    image = apply_delta(h)
    if image.is_zero():
        print("in kernel; Delta(h) = 0")
        return 0
    print(f"NOT in kernel; Delta(h) = {image}")
    return 1


def _cmd_decompose(args) -> int:
    ring = base_ring(args.n)
    h = _read_poly(args.poly, ring)
    try:
        expr = decompose(h)
    except NotAConstant as exc:
        if args.json:
            print(json.dumps({"error": "not a constant", "witness": str(exc.witness)}))
        else:
            print(f"not a constant; Delta(h) has term {exc.witness}", file=sys.stderr)
        return 1
    verified = expand(expr, args.n) == h
    if args.json:
        print(json.dumps({"terms": expr.to_obj(), "verified": verified}, indent=2))
    else:
        print(expr)
        print(f"verification: {'OK' if verified else 'FAILED'}")
    return 0 if verified else 1


def _cmd_dims(args) -> int:
    m = mu(args.d)
    nu = path_counts(args.d)
    ks = sorted(set(m) | set(nu))
    rows = [{"k": k, "mu": m.get(k, 0), "nu": nu.get(k, 0)} for k in ks]
    ok = all(r["mu"] == r["nu"] for r in rows)
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'k':>4} {'mu':>10} {'nu':>10}")
        for r in rows:
            flag = "" if r["mu"] == r["nu"] else "  MISMATCH"
            print(f"{r['k']:>4} {r['mu']:>10} {r['nu']:>10}{flag}")
        total = sum(r["nu"] for r in rows)
        print(f"total paths of length {args.d}: {total}")
    return 0 if ok else 1


def _cmd_paths(args) -> int:
    words = enumerate_paths(args.d)
    subs = tuple(range(1, args.d + 1))
    if args.json:
        doc = []
        for w in words:
            item = {"word": w}
            if args.monomials:
                item["monomial"] = word_to_monomial(w, subs).format(uppercase=True)
            doc.append(item)
        print(json.dumps(doc, indent=2))
    else:
        for w in words:
            if args.monomials:
                mono = word_to_monomial(w, subs).format(uppercase=True) or "1"
                print(f"{w}  {mono}")
            else:
                print(w)
    return 0


def _cmd_kron(args) -> int:
    jt = kron_jordan(args.m, args.n)
    if args.json:
        print(json.dumps({"blocks": {str(k): v for k, v in jt.blocks.items()}}))
    else:
        print(jt)
    return 0


def _cmd_selftest(args) -> int:
    results = run_all(
        max_kron=args.max_n if args.max_n else 12,
        max_tensor_d=args.max_d if args.max_d else 6,
        polar_count=50 if args.max_d or args.max_n else 200,
        decomp_count=25 if args.max_d or args.max_n else 100,
    )
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weitz3",
        description="Exact computation with constants of the nilpotency-3 "
        "triangular derivation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gens", help="list the generators for n triples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_gens)

    p = sub.add_parser("check", help="test kernel membership")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("poly", help="polynomial text, or - for stdin")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("decompose", help="rewrite a constant in the generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("poly", help="polynomial text, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("dims", help="block multiplicities and path counts")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_dims)

    p = sub.add_parser("paths", help="enumerate path words of length d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--monomials", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_paths)

    p = sub.add_parser("kron", help="Kronecker product block decomposition")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_kron)

    p = sub.add_parser("selftest", help="run the verification suite")
    p.add_argument("--max-d", type=int, default=0, help="cap tensor degree (default 6)")
    p.add_argument("--max-n", type=int, default=0, help="cap Kronecker size (default 12)")
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (PolySyntaxError, SubscriptOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Weitz3Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
