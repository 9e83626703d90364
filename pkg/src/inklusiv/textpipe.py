"""Text preprocessing: gender-character handling, segmentation, tokenization,
shallow dependency annotation, and the bounded sentence cache."""

from __future__ import annotations

import hashlib
import re
import threading
from collections import OrderedDict
from dataclasses import dataclass, field, replace
from typing import Iterable

from .morph import (CASE_PRIORITY, NUMBER_PRIORITY, MorphAnalysis, MorphDict,
                    MorphFeatures)

LETTER = "A-Za-zÄÖÜäöüß"

# Marker spellings in priority order ("/-" before "/").
MARKERS = {
    "star": "*",
    "underscore": "_",
    "colon": ":",
    "hyphen_slash": "/-",
    "slash": "/",
    "middle_dot": "·",
}
MARKER_BY_TEXT = {v: k for k, v in MARKERS.items()}

# Marker between a word stem and a feminine suffix (in/In/innen/Innen).
_STRIP_RE = re.compile(
    rf"(?<=[{LETTER}])(?P<marker>/-|[*_:/·])(?=[iI]n(?:nen)?(?![{LETTER}]))"
)
# Word-internal capital I beginning the merged feminine suffix.
_INTERNAL_I_RE = re.compile(rf"(?<=[a-zäöüß])I(?=n(?:nen)?(?![{LETTER}]))")

_TOKEN_RE = re.compile(rf"[{LETTER}0-9]+(?:-[{LETTER}0-9]+)*|\S")
_WORD_RE = re.compile(rf"^[{LETTER}]+$")


class IntegrityError(Exception):
    pass


@dataclass(frozen=True)
class GenderCharRecord:
    """A stripped gender character; ``offset`` indexes the normalized text."""

    offset: int
    marker: str  # one of MARKERS plus "internal_i"
    original_text: str
    token_index: int | None = None
    char_offset_in_token: int | None = None


def strip_gender_characters(text: str) -> tuple[str, list[GenderCharRecord]]:
    """Collapse abbreviated pair notation to the female inflection.

    Markers outside the pair-notation pattern (e.g. arithmetic ``*``) are
    left untouched. The records allow exact restoration.
    """
    records: list[GenderCharRecord] = []
    out: list[str] = []
    pos = 0
    removed = 0
    for m in _STRIP_RE.finditer(text):
        out.append(text[pos:m.start()])
        records.append(GenderCharRecord(
            offset=m.start() - removed,
            marker=MARKER_BY_TEXT[m.group("marker")],
            original_text=m.group("marker"),
        ))
        removed += len(m.group("marker"))
        pos = m.end()
    out.append(text[pos:])
    normalized = "".join(out)

    # Internal I collapses by lowercasing in place (no length change).
    def _lower_i(m: re.Match) -> str:
        records.append(GenderCharRecord(offset=m.start(), marker="internal_i",
                                        original_text="I"))
        return "i"

    normalized = _INTERNAL_I_RE.sub(_lower_i, normalized)
    records.sort(key=lambda r: r.offset)
    return normalized, records


def restore_gender_characters(normalized: str, records: Iterable[GenderCharRecord]) -> str:
    """Reinsert stripped markers at their recorded positions."""
    out = normalized
    # Apply right-to-left so earlier offsets stay valid.
    for rec in sorted(records, key=lambda r: r.offset, reverse=True):
        if rec.offset > len(out):
            raise IntegrityError(f"record offset {rec.offset} out of bounds")
        if rec.marker == "internal_i":
            if rec.offset >= len(out) or out[rec.offset] != "i":
                raise IntegrityError(f"expected 'i' at offset {rec.offset}")
            out = out[:rec.offset] + "I" + out[rec.offset + 1:]
        else:
            out = out[:rec.offset] + rec.original_text + out[rec.offset:]
    return out


def offset_to_original(records: Iterable[GenderCharRecord], pos: int) -> int:
    """Map an offset in the normalized text back into the original text."""
    shift = 0
    for rec in records:
        if rec.marker != "internal_i" and rec.offset < pos:
            shift += len(rec.original_text)
    return pos + shift


# --- sentence segmentation ---------------------------------------------------

_BOUNDARY_RE = re.compile(r"[.!?:](?=\s)")
_UPPER_OR_DIGIT = re.compile(r"[A-ZÄÖÜ0-9]")


def load_abbreviations(source: Iterable[str]) -> frozenset[str]:
    return frozenset(line.strip() for line in source
                     if line.strip() and not line.startswith("#"))


DEFAULT_ABBREVIATIONS = frozenset({
    "bzw.", "bspw.", "ca.", "Dr.", "Nr.", "etc.", "evtl.", "ggf.", "usw.",
    "vgl.", "z.", "B.", "u.", "a.", "d.", "h.", "Abs.", "Art.", "Mio.",
    "Mrd.", "St.", "Hr.", "Fr.", "Prof.", "inkl.", "max.", "min.", "sog.",
})


def segment(text: str, abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS
            ) -> list[tuple[int, int]]:
    """Split into sentence spans with simple punctuation rules.

    Boundaries occur after ``.!?:`` followed by whitespace and an
    uppercase letter or digit, unless the preceding token is a known
    abbreviation, a single letter (initials), or digits (ordinals).
    """
    if not text.strip():
        return []
    cuts = []
    for m in _BOUNDARY_RE.finditer(text):
        end = m.end()
        rest = text[end:].lstrip()
        if not rest or not _UPPER_OR_DIGIT.match(rest[0]):
            continue
        if m.group() == ".":
            word_start = end - 1
            while word_start > 0 and not text[word_start - 1].isspace():
                word_start -= 1
            token = text[word_start:end]
            bare = token[:-1]
            if token in abbreviations or len(bare) == 1 or bare.isdigit():
                continue
        cuts.append(end)
    spans = []
    start = 0
    for cut in cuts:
        spans.append((start, cut))
        start = cut
    spans.append((start, len(text)))
    result = []
    for s, e in spans:
        while s < e and text[s].isspace():
            s += 1
        while e > s and text[e - 1].isspace():
            e -= 1
        if s < e:
            result.append((s, e))
    return result


# --- tokens and shallow annotation ------------------------------------------

@dataclass
class Token:
    text: str
    start: int
    end: int
    lemma: str
    analyses: frozenset[MorphAnalysis] = frozenset()
    head: int | None = None
    dep: str = "none"
    stripped: GenderCharRecord | None = None


@dataclass
class Sentence:
    tokens: list[Token]
    start: int
    end: int
    text: str = ""
    source_hash: str = ""


def _has_pos(token: Token, pos: str) -> bool:
    return any(a.pos == pos for a in token.analyses)


def _is_word(token: Token) -> bool:
    return bool(_WORD_RE.match(token.text))


def _article_features(token: Token) -> list[MorphFeatures]:
    return [a.features for a in token.analyses if a.pos == "article"]


def _choose_lemma(analyses: frozenset[MorphAnalysis], surface: str,
                  article: Token | None) -> str:
    lemmas = sorted({a.lemma for a in analyses})
    if not lemmas:
        return surface
    if len(lemmas) == 1:
        return lemmas[0]
    if article is not None:
        art_feats = _article_features(article)
        compatible = sorted({a.lemma for a in analyses
                             if any(a.features.unifies(f) for f in art_feats)})
        if len(compatible) == 1:
            return compatible[0]
        if compatible:
            lemmas = compatible
    best = min(
        (a for a in analyses if a.lemma in lemmas),
        key=lambda a: (CASE_PRIORITY[a.features.case],
                       NUMBER_PRIORITY[a.features.number], a.lemma),
    )
    return best.lemma


def tokenize(sentence_text: str, base_offset: int = 0) -> list[tuple[str, int, int]]:
    return [(m.group(), base_offset + m.start(), base_offset + m.end())
            for m in _TOKEN_RE.finditer(sentence_text)]


def annotate(sentence_text: str, morph: MorphDict, base_offset: int = 0,
             records: Iterable[GenderCharRecord] = ()) -> Sentence:
    """Tokenize, lemmatize and attach shallow det/amod/subj/relpron links."""
    raw = tokenize(sentence_text, base_offset)
    tokens: list[Token] = []
    recs = sorted(records, key=lambda r: r.offset)
    for text, start, end in raw:
        analyses = morph.analyze(text)
        if not analyses and text[:1].isupper():
            # sentence-initial capitalization of articles, adjectives etc.
            analyses = morph.analyze(text[0].lower() + text[1:])
        stripped = None
        for rec in recs:
            # Record offsets share annotate's coordinate system (base_offset space).
            local = rec.offset
            if start <= local < end:
                stripped = replace(rec, token_index=len(tokens),
                                   char_offset_in_token=local - start)
                break
        tokens.append(Token(text=text, start=start, end=end, lemma=text,
                            analyses=analyses, stripped=stripped))

    n = len(tokens)

    def next_noun(i: int) -> int | None:
        for j in range(i + 1, n):
            t = tokens[j]
            if _has_pos(t, "noun") or (t.analyses == frozenset() and _is_word(t)
                                       and t.text[:1].isupper()):
                return j
            if not (_has_pos(t, "adjective") or _has_pos(t, "participle")
                    or _has_pos(t, "article")):
                return None
        return None

    # det / amod / relpron
    for i, tok in enumerate(tokens):
        if _has_pos(tok, "pronoun") and i > 0 and tokens[i - 1].text == ",":
            for j in range(i - 1, -1, -1):
                if _has_pos(tokens[j], "noun"):
                    tok.head, tok.dep = j, "relpron"
                    break
            if tok.dep == "relpron":
                continue
        if _has_pos(tok, "article"):
            j = next_noun(i)
            if j is not None:
                tok.head, tok.dep = j, "det"
        elif (_has_pos(tok, "adjective") or _has_pos(tok, "participle")):
            j = next_noun(i)
            if j is not None:
                tok.head, tok.dep = j, "amod"

    # lemma disambiguation using an agreeing article
    for i, tok in enumerate(tokens):
        article = None
        for j, other in enumerate(tokens):
            if other.dep == "det" and other.head == i:
                article = other
                break
        tok.lemma = _choose_lemma(tok.analyses, tok.text, article)

    # subj: nominative noun agreeing with a finite verb
    for i, tok in enumerate(tokens):
        verb = next((a for a in tok.analyses if a.pos == "verb"), None)
        if verb is None:
            continue
        for j in range(i - 1, -1, -1):
            cand = tokens[j]
            if cand.dep != "none":
                continue
            ok = any(a.pos == "noun" and a.features.case == "nom"
                     and MorphFeatures(number=a.features.number).unifies(
                         MorphFeatures(number=verb.features.number))
                     for a in cand.analyses)
            # unknown capitalized words (compounds, names) may be subjects too
            if not ok and not cand.analyses and _is_word(cand) \
                    and cand.text[:1].isupper():
                ok = True
            if ok:
                cand.head, cand.dep = i, "subj"
                break

    sent = Sentence(tokens=tokens, start=base_offset,
                    end=base_offset + len(sentence_text), text=sentence_text)
    return sent


def sentence_digest(sentence_text: str, style_key: str) -> str:
    h = hashlib.sha256()
    h.update(sentence_text.encode("utf-8"))
    h.update(b"\x00")
    h.update(style_key.encode("utf-8"))
    return h.hexdigest()


class SentenceCache:
    """Bounded LRU map from sentence digest to processed result."""

    def __init__(self, capacity: int = 1024) -> None:
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.capacity = capacity
        self._data: OrderedDict[str, object] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: str):
        with self._lock:
            if key in self._data:
                self._data.move_to_end(key)
                self.hits += 1
                return self._data[key]
            self.misses += 1
            return None

    def put(self, key: str, value) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.capacity:
                self._data.popitem(last=False)

    def __len__(self) -> int:
        return len(self._data)
