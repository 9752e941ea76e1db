"""Command-line front end.

Subcommands: verify (simplicial | relations | hopf | square |
bidegree12), explore mixed, matrices, compositions, normalize, cache.
All sweeps are exhaustive within their bounds and every run is
deterministic; JSON output is byte-identical across runs unless
``--timing`` is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .compositions import enumerate_compositions
from .contingency import enumerate_matrices
from .errors import HopflikeError
from .parsing import parse_composition, parse_word
from .symfunc import default_realization, format_tensor, transition_cache
from . import hopfverify, simplicial


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopflike",
        description="Composition-category kernel with exhaustive identity sweeps.",
    )
    parser.add_argument(
        "--cache",
        help="transition cache file (default: $HOPFLIKE_CACHE, else in-memory)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run an identity sweep")
    vsub = verify.add_subparsers(dest="suite", required=True)

    def output_flags(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument(
            "--timing", action="store_true",
            help="include measured wall time in reports (breaks byte determinism)",
        )

    p = vsub.add_parser("simplicial", help="face/degeneracy identity families")
    p.add_argument("--max-n", type=int, default=6)
    output_flags(p)

    p = vsub.add_parser("relations", help="generator relation families")
    p.add_argument(
        "--family", required=True, choices=("dd", "ss", "tautau", "mixed"),
        help="dd: merge-merge, ss: split-split, tautau: shuffle chains, "
        "mixed: split/shuffle/merge towers (summed reading)",
    )
    p.add_argument("--max-sum", type=int, default=6)
    p.add_argument("--max-len", type=int, default=4)
    output_flags(p)

    p = vsub.add_parser("hopf", help="product/coproduct compatibility")
    p.add_argument("--max-degree", type=int, default=6)
    output_flags(p)

    p = vsub.add_parser("square", help="towers against the coarse route")
    p.add_argument("--alpha", required=True, help="row margins, e.g. '(1,1)'")
    p.add_argument("--beta", required=True, help="column margins, e.g. '(1,1)'")
    p.add_argument("--reading", choices=("summed", "per-k"), default="summed")
    output_flags(p)

    p = vsub.add_parser("bidegree12", help="modified multiplication defect")
    p.add_argument("--max-total", type=int, default=6)
    output_flags(p)

    explore = sub.add_parser("explore", help="exploratory computations")
    esub = explore.add_subparsers(dest="what", required=True)
    p = esub.add_parser("mixed", help="both Hopf-square routes, no verdict")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--beta", required=True, help="two-part shape, e.g. '(1,1)'")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("matrices", help="margin matrices")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument(
        "--mode", choices=("nonnegative", "strictly-positive"),
        default="nonnegative",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("compositions", help="compositions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("normalize", help="parse a word; print its realized map")
    p.add_argument("word")
    p.add_argument("--format", choices=("text", "json"), default="text")

    cache = sub.add_parser("cache", help="transition cache management")
    csub = cache.add_subparsers(dest="action", required=True)
    csub.add_parser("stats", help="show cache path and contents")
    csub.add_parser("clear", help="drop the cache (and its file, if any)")

    return parser


def _emit_reports(reports, args) -> int:
    if args.format == "json":
        payload = [r.to_json_dict() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        for r in reports:
            print(r.to_text())
    return 0 if all(r.passed for r in reports) else 1


def _timed(fn, args):
    start = time.monotonic()
    result = fn()
    elapsed = int((time.monotonic() - start) * 1000)
    reports = result if isinstance(result, list) else [result]
    if args.timing:
        for r in reports:
            r.millis = elapsed
    return reports


def _run_verify(args) -> int:
    if args.suite == "simplicial":
        reports = _timed(
            lambda: simplicial.verify_simplicial_identities(args.max_n), args
        )
    elif args.suite == "relations":
        reports = _timed(
            lambda: hopfverify.check_relation_family(
                args.family, args.max_sum, args.max_len
            ),
            args,
        )
    elif args.suite == "hopf":
        reports = _timed(
            lambda: hopfverify.check_hopf_compat(args.max_degree), args
        )
    elif args.suite == "square":
        alpha = parse_composition(args.alpha)
        beta = parse_composition(args.beta)
        reports = _timed(
            lambda: hopfverify.check_square_condition(alpha, beta, args.reading),
            args,
        )
    elif args.suite == "bidegree12":
        reports = _timed(
            lambda: hopfverify.check_bidegree12(args.max_total), args
        )
    else:  # pragma: no cover - argparse enforces choices
        raise HopflikeError(f"unknown suite {args.suite!r}")
    return _emit_reports(reports, args)


def _run_explore(args) -> int:
    beta = parse_composition(args.beta)
    report = hopfverify.explore_mixed_bidegree(args.a, beta)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(f"suite: {report['suite']}")
        print(f"element: {report['element']}")
        for section in ("upper", "lower", "difference"):
            print(f"{section}:")
            block = report[section]
            if not block:
                print("  (empty)")
            for key in block:
                print(f"  {key}: {block[key]}")
    return 0


def _run_matrices(args) -> int:
    alpha = parse_composition(args.alpha)
    beta = parse_composition(args.beta)
    matrices = enumerate_matrices(alpha, beta, args.mode)
    if args.format == "json":
        print(json.dumps(
            {
                "alpha": str(alpha),
                "beta": str(beta),
                "mode": args.mode,
                "matrices": [str(K) for K in matrices],
            },
            indent=2,
        ))
    else:
        for K in matrices:
            print(K)
        print(f"total: {len(matrices)}")
    return 0


def _run_compositions(args) -> int:
    comps = enumerate_compositions(args.n, args.max_length)
    if args.format == "json":
        print(json.dumps(
            {"n": args.n, "compositions": [str(c) for c in comps]}, indent=2
        ))
    else:
        for c in comps:
            print(c)
        print(f"total: {len(comps)}")
    return 0


def _run_normalize(args) -> int:
    word = parse_word(args.word)
    real = default_realization()
    realized = real.realize_word(word)
    domain_basis = real.tensor_basis(word.target)
    codomain_basis = real.tensor_basis(word.source)
    index = {next(iter(b.coeffs)): k for k, b in enumerate(codomain_basis)}
    matrix = []
    for col in domain_basis:
        image = realized(col).canonical()
        column = [0] * len(codomain_basis)
        for label, coeff in image.coeffs.items():
            column[index[label]] = coeff
        matrix.append(column)
    rows = [
        [matrix[c][r] for c in range(len(domain_basis))]
        for r in range(len(codomain_basis))
    ]
    if args.format == "json":
        print(json.dumps(
            {
                "word": str(word),
                "source": str(word.source),
                "target": str(word.target),
                "map": f"A{word.target} -> A{word.source}",
                "domain_basis": [format_tensor(b) for b in domain_basis],
                "codomain_basis": [format_tensor(b) for b in codomain_basis],
                "matrix": rows,
            },
            indent=2,
        ))
    else:
        print(f"word: {word}")
        print(f"source: {word.source}")
        print(f"target: {word.target}")
        print(f"map: A{word.target} -> A{word.source}")
        print("columns (domain basis): " + ", ".join(
            format_tensor(b) for b in domain_basis
        ))
        print("rows (codomain basis): " + ", ".join(
            format_tensor(b) for b in codomain_basis
        ))
        for row in rows:
            print("  [" + " ".join(f"{v:3d}" for v in row) + "]")
    return 0


def _run_cache(args) -> int:
    cache = transition_cache()
    if args.action == "stats":
        stats = cache.stats()
        print(f"path: {stats['path']}")
        print(f"degrees: {stats['degrees']}")
        print(f"entries: {stats['entries']}")
    else:
        cache.clear()
        print("cache cleared")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_path = args.cache or os.environ.get("HOPFLIKE_CACHE")
    if cache_path:
        transition_cache().set_path(cache_path)
    try:
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "explore":
            return _run_explore(args)
        if args.command == "matrices":
            return _run_matrices(args)
        if args.command == "compositions":
            return _run_compositions(args)
        if args.command == "normalize":
            return _run_normalize(args)
        if args.command == "cache":
            return _run_cache(args)
        raise HopflikeError(f"unknown command {args.command!r}")
    except HopflikeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
