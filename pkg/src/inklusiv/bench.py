"""Benchmark data model, labeling and suggestion metrics, style detection,
corpus statistics, and the evaluation/ablation runner."""

from __future__ import annotations

import itertools
import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable

from .engine import Engine, apply_edits
from .rewrite import Alternative, StylePreference
from .textpipe import _INTERNAL_I_RE, _STRIP_RE, LETTER

SCORE_FUNCTIONS = ("proportional", "exponential", "logistic")

REQUIRED_ENTRY_FIELDS = ("exclusive_sentence", "exclusive_phrases",
                         "inclusive_sentence", "gender_chars_allowed")


class ScoreConfigError(ValueError):
    pass


@dataclass(frozen=True)
class BenchmarkEntry:
    exclusive_sentence: str
    exclusive_phrases: tuple[str, ...]
    inclusive_sentence: str
    gender_chars_allowed: bool
    metadata: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ScoreConfig:
    n: int = 5
    k: float = 0.6
    B: float = 1.0
    v: float = 0.01
    function: str = "logistic"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ScoreConfigError("n must be >= 1")
        if self.k <= 0 or self.v <= 0:
            raise ScoreConfigError("k and v must be > 0")
        if self.function not in SCORE_FUNCTIONS:
            raise ScoreConfigError(f"unknown score function: {self.function!r}")


@dataclass
class EntryDiagnostics:
    index: int
    word_rank: int | None = None
    lemma_rank: int | None = None
    word_score: float = 0.0
    lemma_score: float = 0.0
    n_candidates: int = 0
    error: str | None = None


@dataclass
class EvalReport:
    labeling: dict[str, float]
    suggestions_words: dict[str, float]
    suggestions_lemmas: dict[str, float]
    per_entry: list[EntryDiagnostics] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "labeling": self.labeling,
            "suggestions_words": self.suggestions_words,
            "suggestions_lemmas": self.suggestions_lemmas,
            "per_entry": [vars(d) for d in self.per_entry],
        }


# --- benchmark loading -------------------------------------------------------


def load_benchmark(source: IO[str] | str) -> tuple[list[BenchmarkEntry], list[str]]:
    """Parse the benchmark JSON array; schema violations go to the error list."""
    text = source if isinstance(source, str) else source.read()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        return [], [f"invalid JSON: {e}"]
    if not isinstance(raw, list):
        return [], ["top-level value must be an array"]
    entries: list[BenchmarkEntry] = []
    errors: list[str] = []
    for i, obj in enumerate(raw):
        if not isinstance(obj, dict):
            errors.append(f"entry {i}: not an object")
            continue
        missing = [f for f in REQUIRED_ENTRY_FIELDS if f not in obj]
        if missing:
            errors.append(f"entry {i}: missing fields {missing}")
            continue
        sentence = obj["exclusive_sentence"]
        phrases = obj["exclusive_phrases"]
        if not isinstance(sentence, str) or not isinstance(phrases, list) \
                or not all(isinstance(p, str) for p in phrases):
            errors.append(f"entry {i}: wrong field types")
            continue
        bad = [p for p in phrases if p not in sentence]
        if bad:
            errors.append(f"entry {i}: phrases not found in sentence: {bad}")
            continue
        if not phrases and sentence != obj["inclusive_sentence"]:
            errors.append(f"entry {i}: no-phrase entry must have identical sentences")
            continue
        entries.append(BenchmarkEntry(
            exclusive_sentence=sentence,
            exclusive_phrases=tuple(phrases),
            inclusive_sentence=obj["inclusive_sentence"],
            gender_chars_allowed=bool(obj["gender_chars_allowed"]),
            metadata=obj.get("metadata", {}),
        ))
    return entries, errors


# --- normalization -----------------------------------------------------------

# Any recognized marker joining two letters, so merged articles ("zum/zur")
# and non-suffix merges ("Qualitätsfachmann/frau") normalize too.
_ANY_MARKER_RE = re.compile(rf"(?<=[{LETTER}])(?:/-|[*_:/·])(?=[{LETTER}])")


def normalize_stars(text: str) -> str:
    """Convert every gender character to the star; internal I becomes ``*i``."""
    text = _STRIP_RE.sub("*", text)
    text = _ANY_MARKER_RE.sub("*", text)
    return _INTERNAL_I_RE.sub("*i", text)


_UMLAUT_FOLD = str.maketrans({"ä": "a", "ö": "o", "ü": "u", "Ä": "A", "Ö": "O",
                              "Ü": "U"})

_PAIR_JOIN_RE = re.compile(
    rf"([{LETTER}]+) (und|oder|bzw\.) ([{LETTER}]+)")

_ARTICLES = frozenset({
    "der", "die", "das", "dem", "den", "des",
    "ein", "eine", "einem", "einen", "einer", "eines",
    "kein", "keine", "keinem", "keinen", "keiner", "keines",
    "zum", "zur", "beim", "vom", "im", "am",
})

_MERGED_ARTICLE_RE = re.compile(rf"\b([{LETTER}]+)\*([{LETTER}]+)\b")


def _pair_related(a: str, b: str) -> bool:
    """True if one word is the other plus a feminine suffix (umlaut-tolerant)."""
    for x, y in ((a, b), (b, a)):
        for suffix in ("innen", "in"):
            if x.endswith(suffix):
                stem = x[: -len(suffix)]
                if stem == y or stem.translate(_UMLAUT_FOLD) == y \
                        or stem == y.translate(_UMLAUT_FOLD):
                    return True
    return False


def normalize_pairs(text: str) -> str:
    """Order-insensitive spelling for pair joins and merged article pairs."""
    def _sort_join(m: re.Match) -> str:
        a, conj, b = m.group(1), m.group(2), m.group(3)
        if _pair_related(a, b):
            a, b = sorted((a, b))
        return f"{a} {conj} {b}"

    def _sort_articles(m: re.Match) -> str:
        a, b = m.group(1), m.group(2)
        if a.lower() in _ARTICLES and b.lower() in _ARTICLES:
            a, b = sorted((a, b))
        return f"{a}*{b}"

    return _MERGED_ARTICLE_RE.sub(_sort_articles, _PAIR_JOIN_RE.sub(_sort_join, text))


def normalize_sentence(text: str) -> str:
    return normalize_pairs(normalize_stars(text))


# --- labeling metrics --------------------------------------------------------


def labeling_metrics(predicted: Iterable[Iterable[tuple[int, int]]],
                     gold: Iterable[Iterable[tuple[int, int]]]
                     ) -> dict[str, float]:
    """Micro-averaged recall/precision/F1 over character spans.

    A gold span counts as found iff some predicted span covers it fully;
    a predicted span counts as correct iff it overlaps some gold span.
    """
    gold_total = gold_found = pred_total = pred_correct = 0
    for pred_spans, gold_spans in zip(predicted, gold):
        pred_spans, gold_spans = list(pred_spans), list(gold_spans)
        for gs, ge in gold_spans:
            gold_total += 1
            if any(ps <= gs and pe >= ge for ps, pe in pred_spans):
                gold_found += 1
        for ps, pe in pred_spans:
            pred_total += 1
            if any(ps < ge and pe > gs for gs, ge in gold_spans):
                pred_correct += 1
    recall = gold_found / gold_total if gold_total else 1.0
    precision = pred_correct / pred_total if pred_total else 1.0
    f1 = (2 * recall * precision / (recall + precision)
          if recall + precision else 0.0)
    return {"recall": recall, "precision": precision, "f1": f1}


# --- suggestion scoring ------------------------------------------------------


def suggestion_score(rank: int | None, p: int, cfg: ScoreConfig) -> float:
    """Score of the target's rank (0 = best, None = absent) adjusted by the
    p-th root for sentences with p exclusive phrases."""
    if p < 1:
        raise ScoreConfigError("p must be >= 1")
    if rank is None:
        return 0.0
    if rank < 0:
        raise ScoreConfigError("rank must be >= 0")
    r = rank ** (1.0 / p)
    if cfg.function == "proportional":
        return max(0.0, 1.0 - r / cfg.n)
    if cfg.function == "exponential":
        return (1.0 + r) ** (-cfg.k)
    return 1.0 - (1.0 + math.exp(-cfg.B * r)) ** (-1.0 / cfg.v)


def compose_candidates(per_span_alternatives: list[list[Alternative]],
                       input_sentence: str, limit: int = 2000) -> list[str]:
    """All combinations of per-span choices applied simultaneously, ranked by
    rank sum, ties by component ranks then text. Deterministic.

    Spans with no alternatives contribute a keep-as-is choice.
    """
    if not per_span_alternatives:
        return [input_sentence]
    slots = []
    for alts in per_span_alternatives:
        slots.append(list(enumerate(alts)) if alts else [(0, None)])
    combos = []
    for combo in itertools.islice(itertools.product(*slots), limit):
        ranks = tuple(r for r, _ in combo)
        edits = tuple(e for _, a in combo if a is not None for e in a.edits)
        text = apply_edits(input_sentence, 0, edits)
        combos.append((sum(ranks), ranks, text))
    combos.sort()
    out, seen = [], set()
    for _, _, text in combos:
        if text not in seen:
            seen.add(text)
            out.append(text)
    return out


# --- evaluation --------------------------------------------------------------

_EVAL_STAR = StylePreference(mode="custom_char", gender_char="*")
_EVAL_NEUTRAL = StylePreference(mode="neutral")
_EVAL_PAIR = StylePreference(mode="pair")


def entry_suggestion_items(engine: Engine, entry: BenchmarkEntry):
    """Engine output under evaluation style gating: the star style when gender
    characters are allowed, else the union of the neutral and pair passes."""
    if entry.gender_chars_allowed:
        return engine.check(entry.exclusive_sentence, _EVAL_STAR)
    first = engine.check(entry.exclusive_sentence, _EVAL_NEUTRAL)
    second = engine.check(entry.exclusive_sentence, _EVAL_PAIR)
    by_span = {item.span: item for item in first}
    merged = list(first)
    for item in second:
        if item.span not in by_span:
            merged.append(item)
            continue
        target = by_span[item.span]
        known = {a.edits for a in target.alternatives}
        for alt in item.alternatives:
            if alt.edits not in known:
                target.alternatives.append(alt)
    merged.sort(key=lambda it: it.span)
    return merged


def _gold_spans(entry: BenchmarkEntry) -> list[tuple[int, int]]:
    spans = []
    pos = 0
    for phrase in entry.exclusive_phrases:
        at = entry.exclusive_sentence.find(phrase, pos)
        if at < 0:
            at = entry.exclusive_sentence.find(phrase)
        spans.append((at, at + len(phrase)))
        pos = at + len(phrase)
    return spans


def _lemma_profile(engine: Engine, text: str, multiset: bool):
    from .textpipe import annotate
    tokens = annotate(text, engine.data.morph).tokens
    lemmas = [t.lemma for t in tokens if t.text[:1].isalpha()]
    return Counter(lemmas) if multiset else frozenset(lemmas)


def _find_rank(candidates: list[str], target: str) -> int | None:
    try:
        return candidates.index(target)
    except ValueError:
        return None


def evaluate(engine: Engine, entries: list[BenchmarkEntry],
             cfg: ScoreConfig = ScoreConfig(), lemma_multiset: bool = False
             ) -> EvalReport:
    """Run the engine over the benchmark and compute all report metrics."""
    predicted_spans: list[list[tuple[int, int]]] = []
    gold_spans: list[list[tuple[int, int]]] = []
    diags: list[EntryDiagnostics] = []
    for i, entry in enumerate(entries):
        diag = EntryDiagnostics(index=i)
        gold_spans.append(_gold_spans(entry))
        try:
            items = entry_suggestion_items(engine, entry)
            candidates = compose_candidates([it.alternatives for it in items],
                                            entry.exclusive_sentence)
        except Exception as e:  # scored as a miss, recorded for inspection
            diag.error = f"{type(e).__name__}: {e}"
            predicted_spans.append([])
            diags.append(diag)
            continue
        predicted_spans.append([it.span for it in items])
        diag.n_candidates = len(candidates)
        target = normalize_sentence(entry.inclusive_sentence)
        norm_candidates = [normalize_sentence(c) for c in candidates]
        diag.word_rank = _find_rank(norm_candidates, target)
        p = len(entry.exclusive_phrases)
        if p == 0:
            hit = bool(norm_candidates) and norm_candidates[0] == target
            diag.word_rank = 0 if hit else None
            diag.lemma_rank = diag.word_rank
            diag.word_score = 1.0 if hit else 0.0
            diag.lemma_score = diag.word_score
        else:
            target_profile = _lemma_profile(engine, target, lemma_multiset)
            diag.lemma_rank = next(
                (r for r, c in enumerate(norm_candidates)
                 if _lemma_profile(engine, c, lemma_multiset) == target_profile),
                None)
            diag.word_score = suggestion_score(diag.word_rank, p, cfg)
            diag.lemma_score = suggestion_score(diag.lemma_rank, p, cfg)
        diags.append(diag)

    def _level_stats(ranks: list[int | None], scores: list[float]) -> dict:
        total = len(ranks) or 1
        return {
            "correct_in_candidates": sum(r is not None for r in ranks) / total,
            "correct_in_top_n": sum(r is not None and r < cfg.n for r in ranks) / total,
            "correct_in_top_1": sum(r == 0 for r in ranks) / total,
            "suggestion_score": sum(scores) / total,
        }

    report = EvalReport(
        labeling=labeling_metrics(predicted_spans, gold_spans),
        suggestions_words=_level_stats([d.word_rank for d in diags],
                                       [d.word_score for d in diags]),
        suggestions_lemmas=_level_stats([d.lemma_rank for d in diags],
                                        [d.lemma_score for d in diags]),
        per_entry=diags,
    )
    return report


# --- style detection and corpus statistics -----------------------------------

STYLE_NAMES = ("gender_char", "internal_i", "full_pair", "neutral")

_WORD_TOKEN_RE = re.compile(rf"[{LETTER}]+")


def load_neutral_words(source: Iterable[str]) -> frozenset[str]:
    return frozenset(line.strip() for line in source
                     if line.strip() and not line.startswith("#"))


def detect_styles(text: str, neutral_words: frozenset[str]
                  ) -> list[tuple[tuple[int, int], str]]:
    """Occurrences of inclusive-language styles with their character spans."""
    hits: list[tuple[tuple[int, int], str]] = []
    for m in _STRIP_RE.finditer(text):
        start = m.start()
        while start > 0 and _WORD_TOKEN_RE.match(text[start - 1]):
            start -= 1
        end = m.end()
        while end < len(text) and _WORD_TOKEN_RE.match(text[end]):
            end += 1
        hits.append(((start, end), "gender_char"))
    for m in _INTERNAL_I_RE.finditer(text):
        start = m.start()
        while start > 0 and _WORD_TOKEN_RE.match(text[start - 1]):
            start -= 1
        end = m.end()
        while end < len(text) and _WORD_TOKEN_RE.match(text[end]):
            end += 1
        hits.append(((start, end), "internal_i"))
    covered = {span for span, _ in hits}
    for m in _PAIR_JOIN_RE.finditer(text):
        if _pair_related(m.group(1), m.group(3)):
            span = (m.start(), m.end())
            if not any(s[0] < span[1] and span[0] < s[1] for s in covered):
                hits.append((span, "full_pair"))
    for m in _WORD_TOKEN_RE.finditer(text):
        word = m.group()
        for ending in ("e", "en"):
            if word.endswith(ending) and word[: -len(ending)] in neutral_words:
                hits.append(((m.start(), m.end()), "neutral"))
                break
    hits.sort(key=lambda h: h[0])
    return hits


_MONTH_RE = re.compile(r"^(\d{4})-(\d{2})")


def corpus_stats(documents: Iterable[str], neutral_words: frozenset[str]
                 ) -> dict:
    """Per-style hit counts over a document stream.

    Each input line is either a JSON object ``{"text": ..., "date"?: ...}``
    or a plain-text document. A document is inclusive iff at least two hits
    of one single style occur in it.
    """
    totals = {s: 0 for s in STYLE_NAMES}
    inclusive_by_style = {s: 0 for s in STYLE_NAMES}
    monthly: dict[str, dict[str, int]] = {}
    n_docs = n_inclusive = n_skipped = 0
    for line in documents:
        line = line.rstrip("\n")
        if not line.strip():
            continue
        date = None
        text = line
        if line.lstrip().startswith("{"):
            try:
                obj = json.loads(line)
                text = obj["text"]
                date = obj.get("date")
                if not isinstance(text, str):
                    raise TypeError("text must be a string")
            except Exception:
                n_skipped += 1
                continue
        n_docs += 1
        counts = {s: 0 for s in STYLE_NAMES}
        for _span, style in detect_styles(text, neutral_words):
            counts[style] += 1
            totals[style] += 1
        doc_styles = [s for s in STYLE_NAMES if counts[s] >= 2]
        if doc_styles:
            n_inclusive += 1
            for s in doc_styles:
                inclusive_by_style[s] += 1
            if date:
                m = _MONTH_RE.match(str(date))
                if m:
                    month = m.group(0)
                    bucket = monthly.setdefault(month, {s: 0 for s in STYLE_NAMES})
                    for s in doc_styles:
                        bucket[s] += 1
    return {
        "documents": n_docs,
        "skipped": n_skipped,
        "inclusive_documents": n_inclusive,
        "style_hits": totals,
        "inclusive_by_style": inclusive_by_style,
        "monthly": {k: monthly[k] for k in sorted(monthly)},
    }
