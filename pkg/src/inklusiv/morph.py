"""Dictionary-backed morphological analysis and inflection of German word forms.

The dictionary is a flat tab-separated file, one analysis per line:
``form<TAB>lemma<TAB>pos<TAB>case<TAB>number<TAB>gender``, with ``-`` for
unspecified fields and ``#`` starting comment lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable

CASES = ("nom", "gen", "dat", "acc")
NUMBERS = ("sg", "pl")
GENDERS = ("f", "m", "n")
POS_TAGS = ("noun", "article", "adjective", "pronoun", "verb", "participle", "other")

# Preference order used when context cannot disambiguate.
CASE_PRIORITY = {"nom": 0, "acc": 1, "dat": 2, "gen": 3, None: 4}
NUMBER_PRIORITY = {"sg": 0, "pl": 1, None: 2}


class MorphError(Exception):
    pass


class UnknownLemmaError(MorphError):
    """Raised when (lemma, pos) has no paradigm in the dictionary."""


@dataclass(frozen=True)
class MorphFeatures:
    """Case/number/gender triple; ``None`` means unspecified (wildcard)."""

    case: str | None = None
    number: str | None = None
    gender: str | None = None

    def __post_init__(self) -> None:
        if self.case is not None and self.case not in CASES:
            raise ValueError(f"invalid case: {self.case!r}")
        if self.number is not None and self.number not in NUMBERS:
            raise ValueError(f"invalid number: {self.number!r}")
        if self.gender is not None and self.gender not in GENDERS:
            raise ValueError(f"invalid gender: {self.gender!r}")

    def unifies(self, other: "MorphFeatures") -> bool:
        """True iff the two feature sets are compatible field by field."""
        for a, b in zip((self.case, self.number, self.gender),
                        (other.case, other.number, other.gender)):
            if a is not None and b is not None and a != b:
                return False
        return True


@dataclass(frozen=True)
class MorphAnalysis:
    lemma: str
    pos: str
    features: MorphFeatures


class MorphDict:
    """Bidirectional index over (surface form) <-> (lemma, pos, features)."""

    def __init__(self) -> None:
        self.form_index: dict[str, set[MorphAnalysis]] = {}
        self.paradigm_index: dict[tuple[str, str], set[tuple[MorphFeatures, str]]] = {}
        self.load_errors: list[str] = []

    def add(self, form: str, analysis: MorphAnalysis) -> None:
        self.form_index.setdefault(form, set()).add(analysis)
        key = (analysis.lemma, analysis.pos)
        self.paradigm_index.setdefault(key, set()).add((analysis.features, form))

    def analyze(self, form: str) -> frozenset[MorphAnalysis]:
        return frozenset(self.form_index.get(form, ()))

    def inflect(self, lemma: str, pos: str, target: MorphFeatures) -> list[str]:
        """All forms of (lemma, pos) unifying with ``target``, sorted."""
        key = (lemma, pos)
        if key not in self.paradigm_index:
            raise UnknownLemmaError(f"lemma not in dictionary: {lemma!r} ({pos})")
        forms = {form for feats, form in self.paradigm_index[key]
                 if feats.unifies(target)}
        return sorted(forms)

    def paradigm(self, lemma: str, pos: str) -> set[tuple[MorphFeatures, str]]:
        return set(self.paradigm_index.get((lemma, pos), set()))

    def noun_analyses(self, form: str) -> list[MorphAnalysis]:
        return [a for a in self.analyze(form) if a.pos == "noun"]

    def has_lemma(self, lemma: str, pos: str) -> bool:
        return (lemma, pos) in self.paradigm_index


def _parse_field(value: str) -> str | None:
    return None if value == "-" else value


def load_morph_dict(source: IO[str] | Iterable[str]) -> MorphDict:
    """Parse a tab-separated dictionary stream; malformed lines are skipped
    and reported in ``MorphDict.load_errors``."""
    d = MorphDict()
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 6:
            d.load_errors.append(f"line {lineno}: expected 6 fields, got {len(parts)}")
            continue
        form, lemma, pos, case, number, gender = parts
        if not form or not lemma or pos not in POS_TAGS:
            d.load_errors.append(f"line {lineno}: invalid form/lemma/pos")
            continue
        try:
            feats = MorphFeatures(_parse_field(case), _parse_field(number),
                                  _parse_field(gender))
        except ValueError as exc:
            d.load_errors.append(f"line {lineno}: {exc}")
            continue
        d.add(form, MorphAnalysis(lemma, pos, feats))
    return d


def best_noun_features(analyses: Iterable[MorphAnalysis],
                       constraint: MorphFeatures | None = None) -> MorphFeatures | None:
    """Pick the highest-priority noun reading compatible with ``constraint``.

    Priority: nom < acc < dat < gen, then singular < plural.
    """
    candidates = []
    for a in analyses:
        if a.pos != "noun":
            continue
        if constraint is not None and not a.features.unifies(constraint):
            continue
        candidates.append(a.features)
    if not candidates:
        return None
    return min(candidates, key=lambda f: (CASE_PRIORITY[f.case], NUMBER_PRIORITY[f.number]))
