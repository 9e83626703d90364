#!/usr/bin/env python3
"""Measure check latency against input length to verify near-linear scaling."""

import argparse
from pathlib import Path
import sys
import time

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from inklusiv import Engine, StylePreference, load_engine_data

BASE = ("Die Lehrer und die Schüler treffen heute die Polizisten vor dem "
        "Rathaus. Ein Bericht der Rechnungsprüfer liegt seit gestern vor. ")


def median_time(data, text: str, runs: int) -> float:
    times = []
    style = StylePreference(mode="custom_char", gender_char="*")
    for _ in range(runs):
        engine = Engine(data)  # cold cache per run
        t0 = time.perf_counter()
        engine.check(text, style)
        times.append(time.perf_counter() - t0)
    times.sort()
    return times[len(times) // 2]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--runs", type=int, default=10)
    ap.add_argument("--sizes", default="700,2500,5000,10000,20000")
    ap.add_argument("--data-dir", default=None)
    args = ap.parse_args()

    data = load_engine_data(args.data_dir)
    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"{'chars':>8} {'median ms':>10} {'ms/kchar':>9}")
    prev = None
    for n in sizes:
        text = (BASE * (n // len(BASE) + 1))[:n]
        t = median_time(data, text, args.runs)
        ratio = f"  x{t / prev:.2f}" if prev else ""
        print(f"{n:>8} {t * 1000:>10.1f} {t * 1e6 / n:>9.2f}{ratio}")
        prev = t
    return 0


if __name__ == "__main__":
    sys.exit(main())
