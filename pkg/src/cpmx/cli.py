"""Command-line front end.

Subcommands: index build|info, query, bench build|query|adversarial|profile,
serve.  Exit codes: 2 for usage errors, 1 for domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from .errors import CpmxError
from .index import build_index, load_index, save_index
from .intersect import DEFAULT_INSTANT_CAP, KINDS, build_intersector
from .engine import ecpm
from .text import Text, load_fasta, load_plain, random_dna


def _int_list(value: str) -> list[int]:
    return [int(v) for v in value.split(",") if v]


def _add_text_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--text", help="plain byte file to index")
    parser.add_argument("--fasta", help="FASTA file to index")
    parser.add_argument("--record", type=int, default=0, help="FASTA record index")
    parser.add_argument("--random", type=int, help="generate random DNA of this length")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed")
    parser.add_argument("--strip-newlines", action="store_true")


def _resolve_text(args) -> Text:
    if args.text:
        return load_plain(args.text, strip_newlines=args.strip_newlines)
    if args.fasta:
        return load_fasta(args.fasta, args.record)
    if args.random:
        return random_dna(args.random, args.seed)
    raise SystemExit("one of --text / --fasta / --random is required")


def _emit(content: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(content)
    else:
        sys.stdout.write(content)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cpmx")
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="build or inspect a persisted index")
    index_sub = p_index.add_subparsers(dest="index_command", required=True)
    p_build = index_sub.add_parser("build")
    _add_text_source(p_build)
    p_build.add_argument("--index", required=True, help="output index path")
    p_info = index_sub.add_parser("info")
    p_info.add_argument("--index", required=True)

    p_query = sub.add_parser("query", help="report all rotation occurrences")
    _add_text_source(p_query)
    p_query.add_argument("--pattern", help="pattern string")
    p_query.add_argument("--pattern-file", help="read the pattern from a file")
    p_query.add_argument("--method", choices=KINDS, default="inverse")
    p_query.add_argument("--index", help="load a previously built index")
    p_query.add_argument("--dedup", action="store_true")
    p_query.add_argument("--instant-cap", type=int, default=DEFAULT_INSTANT_CAP)
    p_query.add_argument("--out")
    p_query.add_argument("--format", choices=("csv", "json"), default="csv")

    p_bench = sub.add_parser("bench", help="benchmark harness")
    bench_sub = p_bench.add_subparsers(dest="bench_command", required=True)

    pb = bench_sub.add_parser("build")
    pb.add_argument("--sizes", type=_int_list, required=True)
    pb.add_argument("--methods", default=",".join(KINDS))
    pb.add_argument("--seed", type=int, default=0)
    pb.add_argument("--instant-cap", type=int, default=DEFAULT_INSTANT_CAP)
    pb.add_argument("--out")
    pb.add_argument("--format", choices=("csv", "json"), default="csv")

    pq = bench_sub.add_parser("query")
    pq.add_argument("--random", type=int, required=True, dest="n")
    pq.add_argument("--seed", type=int, default=0)
    pq.add_argument("--method", choices=KINDS, default="inverse")
    pq.add_argument("--pattern-lengths", type=_int_list, required=True)
    pq.add_argument("--trials", type=int, default=10)
    pq.add_argument("--instant-cap", type=int, default=DEFAULT_INSTANT_CAP)
    pq.add_argument("--out")
    pq.add_argument("--format", choices=("csv", "json"), default="csv")

    pa = bench_sub.add_parser("adversarial")
    pa.add_argument("--random", type=int, required=True, dest="n")
    pa.add_argument("--pattern", required=True)
    pa.add_argument("--trials", type=int, default=10)
    pa.add_argument("--out")
    pa.add_argument("--format", choices=("csv", "json"), default="csv")

    pp = bench_sub.add_parser("profile")
    pp.add_argument("--random", type=int, required=True, dest="n")
    pp.add_argument("--seed", type=int, default=0)
    pp.add_argument("--pattern-lengths", type=_int_list, required=True)
    pp.add_argument("--samples", type=int, default=50)
    pp.add_argument("--out")
    pp.add_argument("--format", choices=("csv", "json"), default="csv")

    p_serve = sub.add_parser("serve", help="run the HTTP query service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def _cmd_index(args) -> int:
    if args.index_command == "build":
        text = _resolve_text(args)
        index = build_index(text)
        save_index(index, args.index)
        print(f"indexed {index.n} symbols -> {args.index}")
    else:
        index = load_index(args.index)
        print(f"n={index.n}")
        print(f"arrays=4x{index.n + 1} entries")
    return 0


def _cmd_query(args, parser) -> int:
    if args.pattern is not None:
        pattern = args.pattern.encode()
    elif args.pattern_file:
        with open(args.pattern_file, "rb") as fh:
            pattern = fh.read().rstrip(b"\r\n")
    else:
        parser.error("one of --pattern / --pattern-file is required")
    if not pattern:
        parser.error("pattern must not be empty")
    text = _resolve_text(args)
    if args.index:
        index = load_index(args.index, text=text)
    else:
        index = build_index(text)
    intersector = build_intersector(args.method, index, instant_cap=args.instant_cap)
    occs = ecpm(index, intersector, pattern, dedup=args.dedup)
    if args.format == "json":
        if args.dedup:
            content = json.dumps([{"start": o.start} for o in occs], indent=2) + "\n"
        else:
            content = (
                json.dumps(
                    [{"start": o.start, "rotation": o.rotation} for o in occs], indent=2
                )
                + "\n"
            )
    elif args.dedup:
        content = "".join(f"{o.start}\n" for o in occs)
    else:
        content = "".join(f"{o.start},{o.rotation}\n" for o in occs)
    _emit(content, args.out)
    return 0


def _emit_records(records, args) -> None:
    if args.format == "json":
        _emit(bench_mod.records_to_json(records) + "\n", args.out)
    else:
        _emit(bench_mod.records_to_csv(records), args.out)


def _cmd_bench(args) -> int:
    if args.bench_command == "build":
        records = bench_mod.bench_build(
            [m for m in args.methods.split(",") if m],
            args.sizes,
            args.seed,
            instant_cap=args.instant_cap,
        )
    elif args.bench_command == "query":
        records = bench_mod.bench_query(
            args.method,
            args.n,
            args.pattern_lengths,
            args.trials,
            args.seed,
            instant_cap=args.instant_cap,
        )
    elif args.bench_command == "adversarial":
        records = bench_mod.bench_adversarial(
            args.n, args.pattern.encode(), trials=args.trials
        )
    else:
        records = bench_mod.range_profile(
            args.n, args.pattern_lengths, args.samples, args.seed
        )
    _emit_records(records, args)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "index":
            return _cmd_index(args)
        if args.command == "query":
            return _cmd_query(args, parser)
        if args.command == "bench":
            return _cmd_bench(args)
        if args.command == "serve":
            import uvicorn

            from .service import app

            uvicorn.run(app, host=args.host, port=args.port)
            return 0
    except CpmxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
