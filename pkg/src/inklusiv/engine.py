"""End-to-end checking engine: preprocessing, matching, rewriting, caching."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .compound import SplitConfig, load_frequencies
from .lexicon import Lexicon, LoadReport, load_lexicon
from .matcher import find_matches
from .morph import MorphDict, load_morph_dict
from .rewrite import (Edit, StylePreference, SuggestionItem, Toggles,
                      build_suggestions)
from .textpipe import (DEFAULT_ABBREVIATIONS, GenderCharRecord, SentenceCache,
                       annotate, load_abbreviations, offset_to_original,
                       segment, sentence_digest, strip_gender_characters)

ENGINE_VERSION = "0.1.0"


def default_data_dir() -> Path:
    return Path(str(resources.files("inklusiv") / "data"))


@dataclass
class EngineData:
    morph: MorphDict
    lexicon: Lexicon
    lexicon_report: LoadReport
    frequencies: dict[str, int]
    abbreviations: frozenset[str]
    explanations: dict[str, str]


def load_engine_data(data_dir: str | Path | None = None) -> EngineData:
    base = Path(data_dir) if data_dir is not None else default_data_dir()
    with open(base / "morph_dict.tsv", encoding="utf-8") as fh:
        morph = load_morph_dict(fh)
    with open(base / "lexicon.csv", encoding="utf-8") as fh:
        lexicon, report = load_lexicon(fh, morph)
    with open(base / "frequencies.tsv", encoding="utf-8") as fh:
        frequencies = load_frequencies(fh)
    abbr_path = base / "abbreviations.txt"
    if abbr_path.exists():
        with open(abbr_path, encoding="utf-8") as fh:
            abbreviations = load_abbreviations(fh)
    else:
        abbreviations = DEFAULT_ABBREVIATIONS
    expl_path = base / "explanations.json"
    explanations = {"default": ""}
    if expl_path.exists():
        explanations = json.loads(expl_path.read_text(encoding="utf-8"))
    return EngineData(morph=morph, lexicon=lexicon, lexicon_report=report,
                      frequencies=frequencies, abbreviations=abbreviations,
                      explanations=explanations)


class Engine:
    """Immutable data plus a bounded per-(sentence, style) result cache."""

    def __init__(self, data: EngineData, split_config: SplitConfig = SplitConfig(),
                 toggles: Toggles = Toggles(), cache_capacity: int = 4096) -> None:
        self.data = data
        self.split_config = split_config
        self.toggles = toggles
        self.cache = SentenceCache(cache_capacity)

    def check(self, text: str, style: StylePreference) -> list[SuggestionItem]:
        """Run the full pipeline; reported spans index the original text."""
        normalized, records = strip_gender_characters(text)
        items: list[SuggestionItem] = []
        for sent_start, sent_end in segment(normalized, self.data.abbreviations):
            sentence_text = normalized[sent_start:sent_end]
            local_records = tuple(
                replace(r, offset=r.offset - sent_start)
                for r in records if sent_start <= r.offset < sent_end)
            key = sentence_digest(
                sentence_text,
                f"{style.key()}|s0={self.split_config.s0}|{self.toggles}|"
                + ";".join(f"{r.offset}{r.marker}" for r in local_records))
            cached = self.cache.get(key)
            if cached is not None:
                local_items = cached
            else:
                local_items = self._check_sentence(sentence_text, local_records, style)
                self.cache.put(key, local_items)
            items.extend(self._globalize(local_items, sent_start, sent_end,
                                         records, text))
        return items

    def _check_sentence(self, sentence_text: str,
                        local_records: tuple[GenderCharRecord, ...],
                        style: StylePreference) -> list[SuggestionItem]:
        """Process one normalized sentence in sentence-local coordinates."""
        sentence = annotate(sentence_text, self.data.morph, base_offset=0,
                            records=local_records)
        matches = find_matches(sentence, self.data.lexicon, self.data.morph,
                               self.data.frequencies, self.split_config)
        return build_suggestions(sentence, matches, self.data.lexicon, style,
                                 self.data.morph, self.data.explanations,
                                 self.toggles)

    def _globalize(self, local_items: list[SuggestionItem], sent_start: int,
                   sent_end: int, records, original: str) -> list[SuggestionItem]:
        """Map sentence-local normalized offsets to original-document offsets
        and render alternative sentence texts from the original text."""
        orig_sent_start = offset_to_original(records, sent_start)
        orig_sent_end = offset_to_original(records, sent_end)
        orig_sentence = original[orig_sent_start:orig_sent_end]
        out = []
        for item in local_items:
            span = (offset_to_original(records, item.span[0] + sent_start),
                    offset_to_original(records, item.span[1] + sent_start))
            alternatives = []
            for alt in item.alternatives:
                edits = tuple(
                    Edit(offset_to_original(records, e.start + sent_start),
                         offset_to_original(records, e.end + sent_start),
                         e.text)
                    for e in alt.edits)
                sentence_text = apply_edits(orig_sentence, orig_sent_start, edits)
                alternatives.append(replace(alt, edits=edits,
                                            sentence_text=sentence_text))
            out.append(SuggestionItem(
                span=span,
                exclusive_phrase=original[span[0]:span[1]],
                alternatives=alternatives,
                explanation=item.explanation,
                alternatives_unavailable=item.alternatives_unavailable,
            ))
        return out


def apply_edits(sentence_text: str, base: int, edits: tuple[Edit, ...]) -> str:
    """Apply non-overlapping edits (absolute offsets) to a sentence slice."""
    parts = []
    pos = 0
    for e in sorted(edits, key=lambda x: x.start):
        s, t = e.start - base, e.end - base
        if s < pos:
            continue
        parts.append(sentence_text[pos:s])
        text = e.text
        if s == 0 and text and sentence_text[:1].isupper() and text[0].islower():
            text = text[0].upper() + text[1:]
        parts.append(text)
        pos = t
    parts.append(sentence_text[pos:])
    return "".join(parts)
