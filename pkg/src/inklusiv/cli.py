"""Command line interface.

Exit codes: 0 success, 1 runtime error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import (ScoreConfig, ScoreConfigError, corpus_stats, evaluate,
                    load_benchmark, load_neutral_words)
from .compound import SplitConfig
from .engine import Engine, default_data_dir, load_engine_data
from .rewrite import StyleError, StylePreference, Toggles

ABLATION_CHOICES = ("pair", "neutral", "inflection", "prefix")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inklusiv",
                                     description="Gender-inclusive German checker")
    parser.add_argument("--data-dir", help="override the bundled data directory")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="check a text file")
    p_check.add_argument("file")
    p_check.add_argument("--style", default="neutral",
                         choices=("neutral", "pair", "internal_i", "custom_char"))
    p_check.add_argument("--char", default=None,
                         help="gender character for --style custom_char")
    p_check.add_argument("--json", action="store_true", dest="as_json")

    p_bench = sub.add_parser("bench", help="benchmark harness")
    bench_sub = p_bench.add_subparsers(dest="bench_command", required=True)

    p_run = bench_sub.add_parser("run", help="evaluate on a benchmark file")
    p_run.add_argument("benchmark")
    p_run.add_argument("--score", default="logistic",
                       choices=("logistic", "exponential", "proportional"))
    p_run.add_argument("--top-n", type=int, default=5)

    p_ablate = bench_sub.add_parser("ablate", help="run with one step disabled")
    p_ablate.add_argument("benchmark")
    p_ablate.add_argument("--disable", required=True, choices=ABLATION_CHOICES)
    p_ablate.add_argument("--score", default="logistic",
                          choices=("logistic", "exponential", "proportional"))
    p_ablate.add_argument("--top-n", type=int, default=5)

    p_sweep = bench_sub.add_parser("sweep-s0",
                                   help="sweep the compound split threshold")
    p_sweep.add_argument("benchmark")
    p_sweep.add_argument("--from", dest="s0_from", type=float, default=0.0)
    p_sweep.add_argument("--to", dest="s0_to", type=float, default=1.0)
    p_sweep.add_argument("--step", type=float, default=0.05)

    p_stats = sub.add_parser("corpus-stats", help="style statistics over documents")
    p_stats.add_argument("file")
    p_stats.add_argument("--neutral-words", default=None,
                         help="override the bundled neutral word list")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    return parser


def _make_engine(args, toggles: Toggles = Toggles(),
                 split_config: SplitConfig = SplitConfig()) -> Engine:
    data = load_engine_data(args.data_dir)
    return Engine(data, split_config=split_config, toggles=toggles)


def _load_entries(path: str):
    with open(path, encoding="utf-8") as fh:
        entries, errors = load_benchmark(fh)
    for err in errors:
        print(f"warning: {err}", file=sys.stderr)
    return entries


def _print_report(report) -> None:
    out = report.to_dict()
    out.pop("per_entry")
    print(json.dumps(out, indent=2, ensure_ascii=False))


def _cmd_check(args) -> int:
    try:
        style = StylePreference(mode=args.style, gender_char=args.char)
    except StyleError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    engine = _make_engine(args)
    text = Path(args.file).read_text(encoding="utf-8")
    items = engine.check(text, style)
    if args.as_json:
        print(json.dumps([{
            "span": list(item.span),
            "exclusive_phrase": item.exclusive_phrase,
            "alternatives": [{
                "sentence_text": a.sentence_text,
                "replacement": a.replacement,
                "style": a.style,
                "unverified": a.unverified,
            } for a in item.alternatives],
            "explanation": item.explanation,
            "alternatives_unavailable": item.alternatives_unavailable,
        } for item in items], indent=2, ensure_ascii=False))
    else:
        for item in items:
            print(f"{item.span[0]}-{item.span[1]}  {item.exclusive_phrase}")
            for a in item.alternatives:
                flag = "  (unverified)" if a.unverified else ""
                print(f"    [{a.style}] {a.replacement}{flag}")
    return 0


def _cmd_bench_run(args) -> int:
    cfg = ScoreConfig(n=args.top_n, function=args.score)
    engine = _make_engine(args)
    entries = _load_entries(args.benchmark)
    _print_report(evaluate(engine, entries, cfg))
    return 0


def _cmd_bench_ablate(args) -> int:
    cfg = ScoreConfig(n=args.top_n, function=args.score)
    toggles = Toggles(disable_pair=args.disable == "pair",
                      disable_neutral=args.disable == "neutral",
                      disable_inflection=args.disable == "inflection")
    split = SplitConfig(s0=1.0) if args.disable == "prefix" else SplitConfig()
    engine = _make_engine(args, toggles=toggles, split_config=split)
    entries = _load_entries(args.benchmark)
    _print_report(evaluate(engine, entries, cfg))
    return 0


def _cmd_bench_sweep(args) -> int:
    if args.step <= 0:
        print("error: --step must be > 0", file=sys.stderr)
        return 2
    entries = _load_entries(args.benchmark)
    data = load_engine_data(args.data_dir)
    rows = []
    s0 = args.s0_from
    while s0 <= args.s0_to + 1e-9:
        engine = Engine(data, split_config=SplitConfig(s0=round(s0, 10)))
        report = evaluate(engine, entries)
        rows.append({"s0": round(s0, 10), "labeling": report.labeling,
                     "suggestion_score": report.suggestions_words["suggestion_score"]})
        s0 += args.step
    print(json.dumps(rows, indent=2, ensure_ascii=False))
    return 0


def _cmd_corpus_stats(args) -> int:
    if args.neutral_words:
        words_path = Path(args.neutral_words)
    else:
        base = Path(args.data_dir) if args.data_dir else default_data_dir()
        words_path = base / "neutral_words.txt"
    with open(words_path, encoding="utf-8") as fh:
        neutral_words = load_neutral_words(fh)
    with open(args.file, encoding="utf-8") as fh:
        stats = corpus_stats(fh, neutral_words)
    print(json.dumps(stats, indent=2, ensure_ascii=False))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    engine = _make_engine(args)
    uvicorn.run(create_app(engine), host=args.host, port=args.port)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "bench":
            if args.bench_command == "run":
                return _cmd_bench_run(args)
            if args.bench_command == "ablate":
                return _cmd_bench_ablate(args)
            return _cmd_bench_sweep(args)
        if args.command == "corpus-stats":
            return _cmd_corpus_stats(args)
        return _cmd_serve(args)
    except (OSError, ScoreConfigError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
