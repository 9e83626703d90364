"""End-to-end acceptance gate.

Each test checks one release criterion and prints a single PASS/FAIL line,
so the whole gate can be read off the captured output at a glance.
"""

import json
import random
import string
import time

import mpmath

from inklusiv import Engine, StylePreference, Toggles
from inklusiv.bench import (ScoreConfig, compose_candidates, evaluate,
                            labeling_metrics, load_benchmark, suggestion_score)
from inklusiv.cli import main
from inklusiv.compound import SplitConfig
from inklusiv.engine import apply_edits
from inklusiv.morph import MorphFeatures
from inklusiv.textpipe import (restore_gender_characters,
                               strip_gender_characters)

STAR = StylePreference(mode="custom_char", gender_char="*")


def _verdict(name: str, ok: bool) -> None:
    print(f"acceptance[{name}]: {'PASS' if ok else 'FAIL'}")
    assert ok, name


def _entries(benchmark_path):
    entries, errors = load_benchmark(benchmark_path.read_text(encoding="utf-8"))
    assert not errors
    return entries


def _mp_logistic(rank: int, p: int) -> float:
    with mpmath.workdps(60):
        r = mpmath.power(rank, mpmath.mpf(1) / p) if rank else mpmath.mpf(0)
        val = 1 - mpmath.power(1 + mpmath.e ** (-r), -100)
        return float(val)


def test_metric_oracle():
    t0 = time.perf_counter()
    cfg = ScoreConfig()
    ok = all(abs(suggestion_score(r, p, cfg) - _mp_logistic(r, p)) <= 1e-9
             for r in range(21) for p in (1, 2, 3))
    rng = random.Random(20240817)
    for _ in range(10_000):
        r, p = rng.randrange(0, 200), rng.randrange(1, 4)
        a, b = suggestion_score(r, p, cfg), suggestion_score(r + 1, p, cfg)
        if not (0.0 <= b <= a <= 1.0):
            ok = False
            break
    elapsed = time.perf_counter() - t0
    _verdict("metric-oracle", ok and elapsed < 1.0)


def test_labeling_oracle():
    # 10-sentence fixture; counts below are tallied by hand
    predicted = [
        [(0, 5)], [], [(0, 3)], [], [(0, 10)],
        [(3, 5)], [(0, 4), (6, 9)], [(1, 2)], [(0, 2), (4, 6)], [(5, 9)],
    ]
    gold = [
        [(0, 5)], [], [], [(2, 7)], [(2, 7)],
        [(0, 8)], [(0, 4)], [(1, 2), (4, 6)], [(0, 2), (4, 6)], [(0, 3)],
    ]
    got = labeling_metrics(predicted, gold)
    # 6 of 10 gold spans covered, 7 of 10 predictions touch gold
    expected = {"recall": 6 / 10, "precision": 7 / 10,
                "f1": 2 * (6 / 10) * (7 / 10) / (6 / 10 + 7 / 10)}
    empty = labeling_metrics([[] for _ in range(10)], [[] for _ in range(10)])
    ok = got == expected \
        and empty == {"recall": 1.0, "precision": 1.0, "f1": 1.0}
    _verdict("labeling-oracle", ok)


def test_published_example_suite(engine, benchmark_path):
    t0 = time.perf_counter()
    report = evaluate(engine, _entries(benchmark_path)[:5])
    elapsed = time.perf_counter() - t0
    ok = report.labeling == {"recall": 1.0, "precision": 1.0, "f1": 1.0} \
        and report.suggestions_words["correct_in_candidates"] == 1.0
    _verdict("published-examples", ok and elapsed < 5.0)


def test_ablation_equivalences(data, benchmark_path, capsys):
    entries = _entries(benchmark_path)
    base = evaluate(Engine(data), entries)
    no_infl = evaluate(Engine(data, toggles=Toggles(disable_inflection=True)),
                       entries)
    ok = no_infl.labeling == base.labeling

    # the CLI prefix ablation must equal an explicit s0 = 1 run
    assert main(["bench", "ablate", str(benchmark_path),
                 "--disable", "prefix"]) == 0
    cli_report = json.loads(capsys.readouterr().out)
    direct = evaluate(Engine(data, split_config=SplitConfig(s0=1.0)), entries)
    direct_dict = direct.to_dict()
    direct_dict.pop("per_entry")
    ok = ok and cli_report == direct_dict

    no_pair = Engine(data, toggles=Toggles(disable_pair=True))
    for entry in entries:
        for style in (STAR, StylePreference(mode="pair")):
            for item in no_pair.check(entry.exclusive_sentence, style):
                ok = ok and all(a.style == "neutral"
                                for a in item.alternatives)
    _verdict("ablation-equivalences", ok)


def test_mini_benchmark_quality(engine, benchmark_path):
    entries = _entries(benchmark_path)
    report = evaluate(engine, entries)
    ok = len(entries) >= 40 \
        and report.labeling["f1"] >= 0.80 \
        and report.suggestions_words["correct_in_candidates"] >= 0.50
    _verdict("mini-benchmark", ok)


def _random_marked_text(rng: random.Random) -> str:
    words = ("Lehrer*innen", "Schüler_innen", "Ärzt:in", "KollegInnen",
             "Pilot/-innen", "Tänzer·innen", "und", "die", "Haus", "geht")
    plain = "".join(rng.choices(string.ascii_letters + "äöüß *:_/·", k=12))
    return " ".join(rng.choices(words, k=rng.randrange(0, 5)) + [plain])


def test_property_suites(data, engine, benchmark_path):
    rng = random.Random(7)
    ok = all(restore_gender_characters(*strip_gender_characters(t)) == t
             for t in (_random_marked_text(rng) for _ in range(10_000)))

    # inflection round-trips over the full shipped dictionary
    for (lemma, pos), rows in data.morph.paradigm_index.items():
        for feats, form in rows:
            if form not in data.morph.inflect(lemma, pos, feats):
                ok = False
            analyses = data.morph.analyze(form)
            if not any(a.lemma == lemma and a.pos == pos
                       and a.features == feats for a in analyses):
                ok = False

    # shell preservation and style soundness on every emitted alternative
    entries = _entries(benchmark_path)
    styles = (STAR, StylePreference(mode="pair"),
              StylePreference(mode="neutral"),
              StylePreference(mode="internal_i"))
    for entry in entries:
        per_span = None
        for style in styles:
            items = engine.check(entry.exclusive_sentence, style)
            if style is STAR:
                per_span = [it.alternatives for it in items]
            for item in items:
                for alt in item.alternatives:
                    rebuilt = apply_edits(entry.exclusive_sentence, 0, alt.edits)
                    # document-level splice; compare up to span-local windows
                    if alt.replacement not in rebuilt:
                        ok = False
                    if alt.style == "neutral" and ("*" in alt.replacement
                                                   or " und " in alt.replacement
                                                   or " oder " in alt.replacement):
                        ok = False
                    if alt.style == "custom_char" and "*" not in alt.replacement:
                        ok = False
                    if alt.style == "internal_i" and "I" not in alt.replacement \
                            and "/" not in alt.replacement:
                        # slash merge is the fallback where no I-suffix exists
                        ok = False
                    if alt.style == "pair" and not any(
                            j in alt.replacement for j in (" und ", " oder ", "/")):
                        ok = False
        if per_span:
            a = compose_candidates(per_span, entry.exclusive_sentence)
            b = compose_candidates(per_span, entry.exclusive_sentence)
            if a != b:
                ok = False
    _verdict("property-suites", ok)


def _timed_check(engine, text: str, runs: int = 10) -> float:
    times = []
    for _ in range(runs):
        eng = Engine(engine.data)  # cold cache each run
        t0 = time.perf_counter()
        eng.check(text, STAR)
        times.append(time.perf_counter() - t0)
    times.sort()
    return times[len(times) // 2]


def test_performance(engine):
    base = ("Die Lehrer und die Schüler treffen heute die Polizisten vor dem "
            "Rathaus. Ein Bericht der Rechnungsprüfer liegt seit gestern vor. ")
    text_700 = (base * 6)[:700]
    t0 = time.perf_counter()
    Engine(engine.data).check(text_700, STAR)
    t_700 = time.perf_counter() - t0

    n = 5000
    text_n = (base * 50)[:n]
    text_2n = (base * 100)[:2 * n]
    t_n = _timed_check(engine, text_n)
    t_2n = _timed_check(engine, text_2n)
    ratio = t_2n / t_n
    ok = t_700 <= 1.5 and ratio <= 2.5
    print(f"  700 chars: {t_700 * 1000:.1f} ms, "
          f"time(2N)/time(N) at N={n}: {ratio:.2f}")
    _verdict("performance", ok)
