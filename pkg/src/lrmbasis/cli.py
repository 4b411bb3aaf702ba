"""Command-line interface: ``lrmbasis <command> ...``.

Exit status is 0 on success, 1 when a verification fails (the witness is
printed), and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import kernels
from .compositions import Composition, format_subset, parse_composition
from .filtration import SigmaElement, dimension_table, left_mult_matrix
from .group_algebra import b_element, b_product_mackey
from .permutations import Permutation, clrm_prime, lrm_prime, lrm_sequence
from .report import GuardError, check_guard
from .verification import SUITES, run_suite

JOBS_ENV = "LRMBASIS_JOBS"


class UsageError(Exception):
    pass


def _composition(text: str, n: int | None) -> Composition:
    try:
        alpha = parse_composition(text)
    except ValueError as exc:
        raise UsageError(f"bad composition {text!r}: {exc}") from None
    if n is not None and alpha.weight != n:
        raise UsageError(f"composition {text!r} is not a composition of n = {n}")
    return alpha


def _fmt(x) -> str:
    return str(Fraction(x))


def cmd_bexpand(args) -> int:
    alpha = _composition(args.alpha, args.n)
    check_guard(args.n, args.extended, limit=7, extended_limit=7)
    B = b_element(alpha)
    if args.format == "json":
        print(json.dumps({"alpha": list(alpha), "n": args.n, "terms": B.to_json_obj()}))
    else:
        for w, c in B.items():
            print(str(w) if c == 1 else f"{_fmt(c)}·{w}")
    return 0


def cmd_bprod(args) -> int:
    alpha = _composition(args.alpha, args.n)
    beta = _composition(args.beta, args.n)
    check_guard(args.n, args.extended)
    multiset = b_product_mackey(alpha, beta)
    product = b_element(alpha) * b_element(beta)
    if args.format == "json":
        print(json.dumps({
            "alpha": list(alpha), "beta": list(beta),
            "mackey": [{"gamma": list(g), "multiplicity": m} for g, m in sorted(multiset.items())],
            "product": product.to_json_obj(),
        }))
    else:
        for gamma, mult in sorted(multiset.items()):
            print(f"{gamma} ×{mult}")
        print(f"product: {product}")
    return 0


def cmd_lrm(args) -> int:
    try:
        w = Permutation.parse(args.perm)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    seq = lrm_sequence(w)
    if args.format == "json":
        print(json.dumps({"perm": list(w), "lrm": list(seq), "lrm_prime": sorted(lrm_prime(w)),
                          "clrm_prime": list(clrm_prime(w))}))
    else:
        print("LRM       {" + ",".join(map(str, seq)) + "}")
        print(f"LRM'      {format_subset(lrm_prime(w))}")
        print(f"cLRM'     {clrm_prime(w)}")
    return 0


def cmd_dims(args) -> int:
    check_guard(args.n, args.extended)
    table = dimension_table(args.n)
    if args.format == "json":
        print(json.dumps([{"alpha": list(r["alpha"]), "partition": list(r["partition"]),
                           "dim_R": r["dim_R"], "dim_S": r["dim_S"], "dim_S_prime": r["dim_S_prime"]}
                          for r in table]))
        return 0
    head = ("alpha", "partition", "dim R", "dim S", "dim S'")
    rows = [(str(r["alpha"]), str(r["partition"]), str(r["dim_R"]), str(r["dim_S"]),
             str(r["dim_S_prime"])) for r in table]
    widths = [max(len(x) for x in col) for col in zip(head, *rows)]
    for row in (head, *rows):
        print("  ".join(x.ljust(wd) for x, wd in zip(row, widths)).rstrip())
    return 0


def _read_sigma(path: str, n: int) -> SigmaElement:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        return SigmaElement.from_json(text, n)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read descent algebra element from {path}: {exc}") from None


def cmd_eigen(args) -> int:
    check_guard(args.n, args.extended)
    a = _read_sigma(args.lambda_file, args.n)
    result = left_mult_matrix(a)
    evals = sorted(result.eigenvalues().items(), key=lambda t: (-Fraction(t[0]), t[0]))
    ok = result.triangular and result.diagonal_matches
    if args.format == "json":
        print(json.dumps({
            "eigenvalues": [{"value": _fmt(v), "multiplicity": m} for v, m in evals],
            "triangular": result.triangular, "block_scalar": result.block_scalar,
            "diagonal_matches_prediction": result.diagonal_matches,
            "order": [str(w) for w in result.order],
        }))
    else:
        for v, m in evals:
            print(f"{_fmt(v)} ×{m}")
        print(f"triangular: {'yes' if result.triangular else 'no'}")
        print(f"diagonal matches prediction: {'yes' if result.diagonal_matches else 'no'}")
    return 0 if ok else 1


def _suite_job(job):
    name, n, extended, sample, seed = job
    kw = {"extended": extended}
    if sample is not None and name in ("scalar-action", "bimodule", "anagram", "inclusion",
                                       "sigma-inclusion"):
        kw.update(sample=sample, seed=seed)
    return run_suite(name, n, **kw)


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    check_guard(args.n, args.extended)
    jobs = [(name, args.n, args.extended, args.sample, args.seed) for name in names]
    workers = args.jobs or int(os.environ.get(JOBS_ENV, "1") or 1)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_suite_job, jobs))
    else:
        reports = [_suite_job(j) for j in jobs]
    if args.format == "json":
        print(json.dumps({"backend": kernels.BACKEND, "passed": all(r.passed for r in reports),
                          "reports": [r.to_obj() for r in reports]}, indent=2))
    else:
        for r in reports:
            print(r.to_text(verbose=args.verbose))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lrmbasis", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True):
        if need_n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--extended", action="store_true", help="lift the default size guard")

    p = sub.add_parser("bexpand", help="expand B_alpha over permutations")
    common(p)
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_bexpand)

    p = sub.add_parser("bprod", help="Mackey multiset and expanded product B_alpha B_beta")
    common(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=cmd_bprod)

    p = sub.add_parser("lrm", help="left-to-right minima statistics of a permutation")
    common(p, need_n=False)
    p.add_argument("perm")
    p.set_defaults(func=cmd_lrm)

    p = sub.add_parser("dims", help="dimensions of R_alpha, S_alpha and S'_alpha")
    common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("eigen", help="spectrum of left multiplication by a descent algebra element")
    common(p)
    p.add_argument("--lambda-file", required=True,
                   help='JSON list of {"alpha": "2,1,1", "num": 1, "den": 1}; "-" reads stdin')
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("verify", help="run verification suites")
    common(p)
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)")
    p.add_argument("--sample", type=int, default=None, help="random sample size for pairwise suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GuardError) as exc:
        print(f"lrmbasis {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
