"""The inclusive-language database: exclusive phrases paired with inclusive
alternatives, indexed by the root lemma of the exclusive phrase.

File format: UTF-8 CSV with header
``exclusive,inclusive,female_inflection,plural_only[,explanation_key]``,
booleans as 0/1, comma-containing fields double-quoted.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import IO

from .morph import MorphDict
from .textpipe import Sentence, annotate

REQUIRED_COLUMNS = ("exclusive", "inclusive", "female_inflection", "plural_only")


@dataclass(frozen=True)
class LexiconEntry:
    id: int
    exclusive_phrase: str
    inclusive_phrase: str
    is_female_inflection: bool
    plural_only: bool
    explanation_key: str = "default"


@dataclass
class LoadReport:
    errors: list[str] = field(default_factory=list)
    duplicates: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


class Lexicon:
    def __init__(self, morph: MorphDict) -> None:
        self.morph = morph
        self.entries: list[LexiconEntry] = []
        self.index: dict[str, list[int]] = {}
        self.phrase_analyses: dict[int, Sentence] = {}
        self.inclusive_analyses: dict[int, Sentence] = {}
        self._root_lemma: dict[int, str] = {}

    def root_lemma(self, entry_id: int) -> str:
        return self._root_lemma[entry_id]

    def entry(self, entry_id: int) -> LexiconEntry:
        return self.entries[entry_id]

    def add(self, entry: LexiconEntry) -> None:
        phrase = annotate(entry.exclusive_phrase, self.morph)
        root = _head_noun_lemma(phrase)
        self.entries.append(entry)
        self.phrase_analyses[entry.id] = phrase
        if entry.inclusive_phrase:
            self.inclusive_analyses[entry.id] = annotate(entry.inclusive_phrase,
                                                         self.morph)
        self._root_lemma[entry.id] = root
        self.index.setdefault(root, []).append(entry.id)

    def query(self, root_lemma: str) -> list[LexiconEntry]:
        """All entries whose exclusive phrase has this root lemma, in source order."""
        return [self.entries[i] for i in self.index.get(root_lemma, [])]

    def __len__(self) -> int:
        return len(self.entries)


def _head_noun_lemma(phrase: Sentence) -> str:
    """Head of a phrase: the token that det/amod edges point at, else the
    last noun, else the last token."""
    heads = {t.head for t in phrase.tokens if t.dep in ("det", "amod")}
    if len(heads) == 1:
        return phrase.tokens[heads.pop()].lemma
    for tok in reversed(phrase.tokens):
        if any(a.pos == "noun" for a in tok.analyses):
            return tok.lemma
    return phrase.tokens[-1].lemma if phrase.tokens else ""


_BOOL = {"0": False, "1": True}

_GENDER_MARK_CHARS = set("*_:·") | {"/"}


def load_lexicon(source: IO[str], morph: MorphDict) -> tuple[Lexicon, LoadReport]:
    """Load and preprocess the database; invalid rows go to the report."""
    lexicon = Lexicon(morph)
    report = LoadReport()
    reader = csv.reader(source)
    header = next(reader, None)
    if header is not None and tuple(h.strip() for h in header[:4]) != REQUIRED_COLUMNS:
        report.errors.append("line 1: missing or invalid header row")
        return lexicon, report
    seen: dict[tuple[str, str], int] = {}
    for lineno, row in enumerate(reader, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) not in (4, 5):
            report.errors.append(f"line {lineno}: expected 4 or 5 columns, got {len(row)}")
            continue
        exclusive, inclusive = row[0].strip(), row[1].strip()
        if not exclusive:
            report.errors.append(f"line {lineno}: empty exclusive phrase")
            continue
        if any(c in exclusive for c in _GENDER_MARK_CHARS):
            report.errors.append(f"line {lineno}: exclusive phrase contains gender characters")
            continue
        if row[2] not in _BOOL or row[3] not in _BOOL:
            report.errors.append(f"line {lineno}: booleans must be 0 or 1")
            continue
        female, plural_only = _BOOL[row[2]], _BOOL[row[3]]
        if (female or plural_only) and not inclusive:
            report.errors.append(f"line {lineno}: flagged row needs an inclusive phrase")
            continue
        key = (exclusive, inclusive)
        if key in seen:
            report.duplicates.append(
                f"line {lineno}: duplicate of line {seen[key]}: {exclusive!r}")
        else:
            seen[key] = lineno
        explanation_key = row[4].strip() if len(row) == 5 and row[4].strip() else "default"
        lexicon.add(LexiconEntry(
            id=len(lexicon.entries),
            exclusive_phrase=exclusive,
            inclusive_phrase=inclusive,
            is_female_inflection=female,
            plural_only=plural_only,
            explanation_key=explanation_key,
        ))
    return lexicon, report


def dump_lexicon(lexicon: Lexicon, target: IO[str]) -> None:
    """Serialize back to the source CSV format (round-trip safe)."""
    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(list(REQUIRED_COLUMNS) + ["explanation_key"])
    for e in lexicon.entries:
        writer.writerow([e.exclusive_phrase, e.inclusive_phrase,
                         int(e.is_female_inflection), int(e.plural_only),
                         e.explanation_key])


def loads_lexicon(text: str, morph: MorphDict) -> tuple[Lexicon, LoadReport]:
    return load_lexicon(io.StringIO(text), morph)
