import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inklusiv.bench import (BenchmarkEntry, ScoreConfig, ScoreConfigError,
                            compose_candidates, corpus_stats, detect_styles,
                            entry_suggestion_items, evaluate, labeling_metrics,
                            load_benchmark, load_neutral_words,
                            normalize_pairs, normalize_sentence,
                            normalize_stars, suggestion_score)


def _entry(sentence, phrases, target, gca=True):
    return {"exclusive_sentence": sentence, "exclusive_phrases": phrases,
            "inclusive_sentence": target, "gender_chars_allowed": gca,
            "metadata": {"url": "", "crawl_date": "", "corpus_id": "t"}}


def test_load_benchmark_paper_row():
    payload = json.dumps([_entry("Bericht der Rechnungsprüfer",
                                 ["Rechnungsprüfer"],
                                 "Bericht der Rechnungsprüfer*innen")])
    entries, errors = load_benchmark(payload)
    assert not errors and len(entries) == 1
    assert entries[0].exclusive_phrases == ("Rechnungsprüfer",)


def test_load_benchmark_empty_array():
    assert load_benchmark("[]") == ([], [])


def test_load_benchmark_phrase_not_found():
    payload = json.dumps([_entry("Bericht", ["Lehrer"], "Bericht")])
    entries, errors = load_benchmark(payload)
    assert entries == [] and len(errors) == 1


def test_load_benchmark_identity_invariant():
    payload = json.dumps([_entry("Ein Satz.", [], "Ein anderer Satz.")])
    entries, errors = load_benchmark(payload)
    assert entries == [] and errors


def test_load_benchmark_bad_json():
    entries, errors = load_benchmark("{nope")
    assert entries == [] and errors


def test_shipped_benchmark_loads_clean(benchmark_path):
    entries, errors = load_benchmark(benchmark_path.read_text(encoding="utf-8"))
    assert not errors
    assert len(entries) >= 40


def test_normalize_stars_examples():
    assert normalize_stars("Ärzt_in") == "Ärzt*in"
    assert normalize_stars("Lehrer*innen") == "Lehrer*innen"
    assert normalize_stars("SchülerInnen") == "Schüler*innen"
    assert normalize_stars("zum/zur") == "zum*zur"
    assert normalize_stars("eine/n Qualitätsfachmann/frau") \
        == "eine*n Qualitätsfachmann*frau"


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="abcdeIinnSchüler*_:/· ", max_size=40))
def test_normalize_stars_idempotent(text):
    once = normalize_stars(text)
    assert normalize_stars(once) == once


def test_normalize_pairs_sorts_related_limbs():
    assert normalize_pairs("Tänzerinnen und Tänzer ab 16") \
        == normalize_pairs("Tänzer und Tänzerinnen ab 16")
    # unrelated words keep their order
    assert normalize_pairs("Der Tisch und der Stuhl") == "Der Tisch und der Stuhl"
    assert normalize_sentence("zur/zum Ärzt:in") == normalize_sentence("zum/zur Ärzt*in")


def test_labeling_metrics_hand_count():
    # 2 gold, predictions = 1 hit + 1 miss + 1 spurious
    got = labeling_metrics([[(0, 5), (20, 25)]], [[(0, 5), (10, 15)]])
    assert got == {"recall": 0.5, "precision": 0.5, "f1": 0.5}


def test_labeling_metrics_perfect():
    got = labeling_metrics([[(0, 5)]], [[(0, 5)]])
    assert got == {"recall": 1.0, "precision": 1.0, "f1": 1.0}


def test_labeling_metrics_zero_conventions():
    assert labeling_metrics([[]], [[]]) == {"recall": 1.0, "precision": 1.0,
                                            "f1": 1.0}


def test_labeling_metrics_partial_cover_is_miss():
    got = labeling_metrics([[(0, 3)]], [[(0, 5)]])
    assert got["recall"] == 0.0
    assert got["precision"] == 1.0  # overlapping prediction is not spurious


def test_labeling_metrics_micro_average():
    # micro: pools counts over sentences instead of averaging per-sentence
    got = labeling_metrics([[(0, 2)], []], [[(0, 2)], [(0, 2), (4, 6)]])
    assert got["recall"] == pytest.approx(1 / 3)


def test_labeling_metrics_permutation_invariant():
    preds = [[(0, 2)], [], [(1, 4)]]
    golds = [[(0, 2)], [(5, 9)], [(1, 4), (6, 8)]]
    a = labeling_metrics(preds, golds)
    b = labeling_metrics(list(reversed(preds)), list(reversed(golds)))
    assert a == b


def test_suggestion_score_examples():
    cfg = ScoreConfig()
    assert suggestion_score(0, 1, cfg) == pytest.approx(1 - 2 ** -100)
    assert suggestion_score(5, 1, cfg) == pytest.approx(0.4891, abs=1e-3)
    assert suggestion_score(9, 2, cfg) == pytest.approx(0.9922, abs=1e-3)
    prop = ScoreConfig(function="proportional")
    assert suggestion_score(3, 1, prop) == pytest.approx(0.4)
    assert suggestion_score(None, 1, cfg) == 0.0


def test_suggestion_score_validation():
    with pytest.raises(ScoreConfigError):
        ScoreConfig(n=0)
    with pytest.raises(ScoreConfigError):
        ScoreConfig(v=0)
    with pytest.raises(ScoreConfigError):
        ScoreConfig(function="sigmoid")
    with pytest.raises(ScoreConfigError):
        suggestion_score(1, 0, ScoreConfig())


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=49), st.integers(min_value=1, max_value=5),
       st.sampled_from(["logistic", "exponential"]))
def test_suggestion_score_strictly_decreasing(r, p, function):
    cfg = ScoreConfig(function=function)
    a, b = suggestion_score(r, p, cfg), suggestion_score(r + 1, p, cfg)
    assert 0.0 <= b <= a <= 1.0
    if a > 1e-12:  # the logistic tail underflows to exactly 0.0
        assert b < a


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=50), st.integers(min_value=1, max_value=4),
       st.sampled_from(["logistic", "exponential", "proportional"]))
def test_suggestion_score_nondecreasing_in_p(r, p, function):
    cfg = ScoreConfig(function=function)
    assert suggestion_score(r, p + 1, cfg) >= suggestion_score(r, p, cfg)
    if r in (0, 1):
        assert suggestion_score(r, p + 1, cfg) == suggestion_score(r, p, cfg)


def test_compose_single_span(engine):
    from inklusiv.rewrite import StylePreference
    text = "Die Lehrer streiken."
    items = engine.check(text, StylePreference(mode="pair"))
    cands = compose_candidates([items[0].alternatives], text)
    assert len(cands) == len(items[0].alternatives)
    assert cands[0] == items[0].alternatives[0].sentence_text


def test_compose_two_spans_rank_sum(engine):
    from inklusiv.rewrite import StylePreference
    text = "Die Lehrer und die Schüler streiken."
    items = engine.check(text, StylePreference(mode="pair"))
    per_span = [it.alternatives for it in items]
    cands = compose_candidates(per_span, text)
    assert len(cands) <= len(per_span[0]) * len(per_span[1])
    # rank 0 applies the first choice of every span
    from inklusiv.engine import apply_edits
    best_edits = tuple(e for alts in per_span for e in alts[0].edits)
    assert cands[0] == apply_edits(text, 0, best_edits)


def test_compose_zero_spans():
    assert compose_candidates([], "Ein Satz.") == ["Ein Satz."]


def test_compose_deterministic(engine):
    from inklusiv.rewrite import StylePreference
    text = "Die Lehrer und die Polizisten streiken."
    items = engine.check(text, StylePreference(mode="pair"))
    per_span = [it.alternatives for it in items]
    assert compose_candidates(per_span, text) == compose_candidates(per_span, text)


def test_composed_pair_target_reachable(engine):
    from inklusiv.rewrite import StylePreference
    text = "Die Lehrer und die Schüler streiken."
    items = engine.check(text, StylePreference(mode="pair"))
    per_span = [it.alternatives for it in items]
    after = [normalize_sentence(c) for c in compose_candidates(per_span, text)]
    target = normalize_sentence("Die Lehrerinnen und Lehrer und die "
                                "Schülerinnen und Schüler streiken.")
    assert target in after


def test_evaluate_paper_rows(engine, benchmark_path):
    entries, _ = load_benchmark(benchmark_path.read_text(encoding="utf-8"))
    paper = entries[:5]
    report = evaluate(engine, paper)
    assert report.labeling == {"recall": 1.0, "precision": 1.0, "f1": 1.0}
    assert report.suggestions_words["correct_in_candidates"] == 1.0


def test_evaluate_report_invariants(engine, benchmark_path):
    entries, _ = load_benchmark(benchmark_path.read_text(encoding="utf-8"))
    report = evaluate(engine, entries)
    for level in (report.suggestions_words, report.suggestions_lemmas):
        assert level["correct_in_top_1"] <= level["correct_in_top_n"] \
            <= level["correct_in_candidates"]
        for v in level.values():
            assert 0.0 <= v <= 1.0


def test_evaluate_identity_entry(engine):
    entry = BenchmarkEntry(exclusive_sentence="Das Wetter ist heute schön.",
                           exclusive_phrases=(),
                           inclusive_sentence="Das Wetter ist heute schön.",
                           gender_chars_allowed=False)
    report = evaluate(engine, [entry])
    assert report.suggestions_words["correct_in_top_1"] == 1.0


def test_evaluate_absent_target_scores_zero(engine):
    entry = BenchmarkEntry(exclusive_sentence="Die Lehrer streiken.",
                           exclusive_phrases=("Lehrer",),
                           inclusive_sentence="Völlig anderes Ziel.",
                           gender_chars_allowed=True)
    report = evaluate(engine, [entry])
    assert report.suggestions_words["suggestion_score"] == 0.0


def test_evaluate_lemma_multiset_flag(engine, benchmark_path):
    entries, _ = load_benchmark(benchmark_path.read_text(encoding="utf-8"))
    a = evaluate(engine, entries[:10], lemma_multiset=False)
    b = evaluate(engine, entries[:10], lemma_multiset=True)
    assert a.suggestions_words == b.suggestions_words


def test_two_pass_union_includes_both_styles(engine):
    entry = BenchmarkEntry(exclusive_sentence="Die Lehrer streiken.",
                           exclusive_phrases=("Lehrer",),
                           inclusive_sentence="Die Lehrkräfte streiken.",
                           gender_chars_allowed=False)
    items = entry_suggestion_items(engine, entry)
    styles = {a.style for it in items for a in it.alternatives}
    assert "neutral" in styles and "pair" in styles
    assert "custom_char" not in styles


def test_detect_styles_examples(neutral_words_path):
    words = load_neutral_words(neutral_words_path.open(encoding="utf-8"))
    hits = detect_styles("Schülerinnen und Schüler", words)
    assert [style for _s, style in hits] == ["full_pair"]
    hits = detect_styles("Die Studierende kommen an.", words)
    assert ("neutral" in [s for _sp, s in hits])
    assert detect_styles("Der Tisch und der Stuhl", words) == []
    hits = detect_styles("Liebe Lehrer*innen!", words)
    assert [s for _sp, s in hits] == ["gender_char"]
    hits = detect_styles("Liebe LehrerInnen!", words)
    assert [s for _sp, s in hits] == ["internal_i"]


def test_corpus_stats_threshold(neutral_words_path):
    words = load_neutral_words(neutral_words_path.open(encoding="utf-8"))
    stats = corpus_stats(["Liebe Lehrer*innen!"], words)
    assert stats["inclusive_documents"] == 0  # one hit is not enough
    stats = corpus_stats(["LehrerInnen und SchülerInnen kamen."], words)
    assert stats["inclusive_documents"] == 1
    assert stats["inclusive_by_style"]["internal_i"] == 1


def test_corpus_stats_empty_stream(neutral_words_path):
    words = load_neutral_words(neutral_words_path.open(encoding="utf-8"))
    stats = corpus_stats([], words)
    assert stats["documents"] == 0 and stats["inclusive_documents"] == 0


def test_corpus_stats_jsonl_and_monthly(neutral_words_path):
    words = load_neutral_words(neutral_words_path.open(encoding="utf-8"))
    lines = [
        json.dumps({"text": "Lehrer*innen und Schüler*innen", "date": "2020-05-02"}),
        json.dumps({"text": "nichts besonderes", "date": "2020-05-03"}),
        '{"broken json',
    ]
    stats = corpus_stats(lines, words)
    assert stats["documents"] == 2 and stats["skipped"] == 1
    assert stats["monthly"]["2020-05"]["gender_char"] == 1
