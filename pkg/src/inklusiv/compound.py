"""Compound splitting: strip noun prefixes before matching/inflection and
re-attach them afterwards."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO, Iterable

from .morph import MorphDict

DEFAULT_LINKING_ELEMENTS = ("s", "es", "n", "en", "e")


@dataclass(frozen=True)
class SplitCandidate:
    prefix: str
    base: str  # lowercase-initial tail as it occurs inside the word
    score: float


@dataclass(frozen=True)
class SplitConfig:
    s0: float = 0.8
    linking_elements: tuple[str, ...] = DEFAULT_LINKING_ELEMENTS

    def __post_init__(self) -> None:
        if not 0.0 <= self.s0 <= 1.0:
            raise ValueError("s0 must be in [0, 1]")


def load_frequencies(source: IO[str] | Iterable[str]) -> dict[str, int]:
    """Tab-separated ``lemma<TAB>count`` file."""
    freq: dict[str, int] = {}
    for raw in source:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            continue
        try:
            freq[parts[0]] = int(parts[1])
        except ValueError:
            continue
    return freq


def _noun_lemma(morph: MorphDict, capitalized: str) -> str | None:
    for a in morph.analyze(capitalized):
        if a.pos == "noun":
            return a.lemma
    return None


def _prefix_plausibility(prefix: str, morph: MorphDict,
                         linking_elements: tuple[str, ...]) -> float:
    """1.0 for prefixes that are themselves words (optionally plus a linking
    element), 0.5 otherwise."""
    cap = prefix[:1].upper() + prefix[1:]
    if morph.analyze(cap) or morph.analyze(prefix):
        return 1.0
    for link in linking_elements:
        if prefix.endswith(link) and len(prefix) > len(link):
            stem = prefix[:-len(link)]
            cap_stem = stem[:1].upper() + stem[1:]
            if morph.analyze(cap_stem) or morph.analyze(stem):
                return 1.0
    return 0.5


def split_candidates(word: str, morph: MorphDict, corpus_freq: dict[str, int],
                     cfg: SplitConfig = SplitConfig()) -> list[SplitCandidate]:
    """Rank every split position whose capitalized tail is a dictionary noun.

    Score = geometric mean of suffix plausibility (normalized base-lemma
    frequency) and prefix plausibility; descending, ties to longer base.
    """
    if not word.isalpha() or len(word) < 6:
        return []
    max_freq = max(corpus_freq.values(), default=0)
    candidates = []
    for cut in range(1, len(word) - 2):
        prefix, base = word[:cut], word[cut:]
        if len(base) < 3:
            continue
        cap_base = base[:1].upper() + base[1:]
        lemma = _noun_lemma(morph, cap_base)
        if lemma is None:
            continue
        if max_freq > 0:
            suffix_pl = min(1.0, corpus_freq.get(lemma, 0) / max_freq)
        else:
            suffix_pl = 0.0
        prefix_pl = _prefix_plausibility(prefix, morph, cfg.linking_elements)
        score = (suffix_pl * prefix_pl) ** 0.5
        candidates.append(SplitCandidate(prefix=prefix, base=base, score=score))
    candidates.sort(key=lambda c: (-c.score, -len(c.base), c.prefix))
    return candidates


def strip_prefix(word: str, morph: MorphDict, corpus_freq: dict[str, int],
                 cfg: SplitConfig = SplitConfig()) -> tuple[str, str] | None:
    """Top split iff its score strictly exceeds cfg.s0; the base comes back
    re-capitalized as a standalone noun. s0=1 disables the component."""
    candidates = split_candidates(word, morph, corpus_freq, cfg)
    if not candidates:
        return None
    top = candidates[0]
    if top.score > cfg.s0:
        return top.prefix, top.base[:1].upper() + top.base[1:]
    return None


def reattach_prefix(prefix: str, inflected_base: str) -> str:
    """Concatenate, lowering the base initial; capitalization of the whole
    word follows the prefix."""
    if not prefix:
        return inflected_base
    return prefix + inflected_base[:1].lower() + inflected_base[1:]
