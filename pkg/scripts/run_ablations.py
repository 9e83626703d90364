#!/usr/bin/env python3
"""Print a benchmark metrics table for the full engine and each ablation."""

import argparse
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from inklusiv import Engine, Toggles, load_engine_data
from inklusiv.bench import evaluate, load_benchmark
from inklusiv.compound import SplitConfig
from inklusiv.engine import default_data_dir


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--benchmark", default=None)
    ap.add_argument("--data-dir", default=None)
    args = ap.parse_args()

    data = load_engine_data(args.data_dir)
    bench_path = Path(args.benchmark) if args.benchmark \
        else default_data_dir() / "benchmark.json"
    entries, errors = load_benchmark(bench_path.read_text(encoding="utf-8"))
    for err in errors:
        print(f"warning: {err}", file=sys.stderr)

    variants = [
        ("full", Engine(data)),
        ("-pair", Engine(data, toggles=Toggles(disable_pair=True))),
        ("-neutral", Engine(data, toggles=Toggles(disable_neutral=True))),
        ("-inflection", Engine(data, toggles=Toggles(disable_inflection=True))),
        ("-prefix", Engine(data, split_config=SplitConfig(s0=1.0))),
    ]
    header = f"{'variant':<12} {'recall':>7} {'prec':>7} {'f1':>7} " \
             f"{'in-cand':>8} {'top-1':>7} {'score':>7}"
    print(header)
    print("-" * len(header))
    for name, engine in variants:
        r = evaluate(engine, entries)
        w = r.suggestions_words
        print(f"{name:<12} {r.labeling['recall']:>7.3f} "
              f"{r.labeling['precision']:>7.3f} {r.labeling['f1']:>7.3f} "
              f"{w['correct_in_candidates']:>8.3f} "
              f"{w['correct_in_top_1']:>7.3f} {w['suggestion_score']:>7.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
