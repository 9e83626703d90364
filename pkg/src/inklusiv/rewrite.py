"""Grammatical assimilation and style application: turn matches into
full-sentence inclusive alternatives.

All offsets in this module live in the normalized (gender-character-stripped)
document; the engine maps edits back onto the original text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .compound import reattach_prefix
from .lexicon import Lexicon, LexiconEntry
from .matcher import Match
from .morph import (CASE_PRIORITY, NUMBER_PRIORITY, MorphDict, MorphFeatures,
                    UnknownLemmaError)
from .textpipe import MARKERS, Sentence, Token

STYLE_MODES = ("neutral", "pair", "internal_i", "custom_char")

# Case governed by common prepositions (hint for root disambiguation).
PREPOSITION_CASE = {
    "für": "acc", "durch": "acc", "ohne": "acc", "gegen": "acc", "um": "acc",
    "mit": "dat", "bei": "dat", "von": "dat", "zu": "dat", "nach": "dat",
    "aus": "dat", "seit": "dat", "ab": "dat",
    "wegen": "gen", "trotz": "gen", "während": "gen",
}

# Contracted preposition+article forms: lemma -> (feminine, masculine).
CONTRACTED_ARTICLES = {"zum": ("zur", "zum"), "zur": ("zur", "zum")}

# Attributive adjective endings; dict forms are generated from the same tables.
WEAK_ENDINGS = {
    ("nom", "sg", "m"): "e", ("nom", "sg", "f"): "e", ("nom", "sg", "n"): "e",
    ("acc", "sg", "m"): "en", ("acc", "sg", "f"): "e", ("acc", "sg", "n"): "e",
    ("dat", "sg", "m"): "en", ("dat", "sg", "f"): "en", ("dat", "sg", "n"): "en",
    ("gen", "sg", "m"): "en", ("gen", "sg", "f"): "en", ("gen", "sg", "n"): "en",
    ("nom", "pl", None): "en", ("acc", "pl", None): "en",
    ("dat", "pl", None): "en", ("gen", "pl", None): "en",
}
STRONG_ENDINGS = {
    ("nom", "sg", "m"): "er", ("nom", "sg", "f"): "e", ("nom", "sg", "n"): "es",
    ("acc", "sg", "m"): "en", ("acc", "sg", "f"): "e", ("acc", "sg", "n"): "es",
    ("dat", "sg", "m"): "em", ("dat", "sg", "f"): "er", ("dat", "sg", "n"): "em",
    ("gen", "sg", "m"): "en", ("gen", "sg", "f"): "er", ("gen", "sg", "n"): "en",
    ("nom", "pl", None): "e", ("acc", "pl", None): "e",
    ("dat", "pl", None): "en", ("gen", "pl", None): "er",
}

_FEM_SUFFIX_RE = re.compile(r"([iI]n(?:nen)?)$")


class StyleError(ValueError):
    pass


@dataclass(frozen=True)
class StylePreference:
    mode: str
    gender_char: str | None = None

    def __post_init__(self) -> None:
        if self.mode not in STYLE_MODES:
            raise StyleError(f"invalid style mode: {self.mode!r}")
        if self.mode == "custom_char":
            if self.gender_char not in MARKERS.values():
                raise StyleError(f"gender_char must be one of {sorted(MARKERS.values())}")
        elif self.gender_char is not None:
            raise StyleError("gender_char only applies to mode=custom_char")

    def key(self) -> str:
        return f"{self.mode}:{self.gender_char or ''}"


@dataclass(frozen=True)
class Edit:
    start: int
    end: int
    text: str


@dataclass
class Alternative:
    sentence_text: str
    replacement: str
    style: str
    source_entry: int
    unverified: bool = False
    edits: tuple[Edit, ...] = ()


@dataclass
class SuggestionItem:
    span: tuple[int, int]
    exclusive_phrase: str
    alternatives: list[Alternative]
    explanation: str
    alternatives_unavailable: bool = False


@dataclass(frozen=True)
class Toggles:
    disable_pair: bool = False
    disable_neutral: bool = False
    disable_inflection: bool = False


# --- root feature resolution -------------------------------------------------


def _dependents(sentence: Sentence, root_idx: int, dep: str) -> list[int]:
    return [i for i, t in enumerate(sentence.tokens)
            if t.head == root_idx and t.dep == dep]


def _capitalize(word: str) -> str:
    return word[:1].upper() + word[1:]


def resolve_root_features(sentence: Sentence, match: Match, masc_lemma: str,
                          morph: MorphDict) -> tuple[str, str, bool]:
    """(case, number, unverified) of the exclusive root in context."""
    tok = sentence.tokens[match.root_token_index]
    if match.prefix:
        base = _capitalize(tok.text[len(match.prefix):])
        analyses = morph.analyze(base)
    else:
        analyses = tok.analyses
    feats = [a.features for a in analyses
             if a.pos == "noun" and a.lemma == masc_lemma]
    if not feats:
        return "nom", "sg", True

    det_idxs = _dependents(sentence, match.root_token_index, "det")
    det = sentence.tokens[det_idxs[0]] if det_idxs else None
    if det is not None:
        art_feats = [a.features for a in det.analyses if a.pos == "article"]
        compatible = [f for f in feats if any(f.unifies(af) for af in art_feats)]
        if compatible:
            feats = compatible

    # Preposition governs the case of the whole noun group.
    first_idx = min([match.root_token_index] + det_idxs
                    + _dependents(sentence, match.root_token_index, "amod"))
    if first_idx > 0:
        prev = sentence.tokens[first_idx - 1].text.lower()
        hint = PREPOSITION_CASE.get(prev)
        if det is not None and prev not in PREPOSITION_CASE:
            art_lower = {a.lemma for a in det.analyses if a.pos == "article"}
            if art_lower & {"zum", "zur", "beim", "vom", "im", "am"}:
                hint = "dat"
        if hint:
            filtered = [f for f in feats if f.case == hint]
            if filtered:
                feats = filtered
        elif det is None and prev in ("oder", "und", "bzw."):
            # a bare conjunct inherits case and number from the left conjunct's
            # article ("zum Verkäufer oder Fleischer" reads dative singular)
            for j in range(first_idx - 2, -1, -1):
                t = sentence.tokens[j]
                if any(a.pos == "noun" for a in t.analyses) \
                        or (not t.analyses and t.text[:1].isupper()
                            and t.text.isalpha()):
                    left_det = next((d for d in sentence.tokens
                                     if d.dep == "det" and d.head == j), None)
                    if left_det is not None:
                        art_feats = [a.features for a in left_det.analyses
                                     if a.pos == "article"]
                        filtered = [f for f in feats
                                    if any(f.unifies(af) for af in art_feats)]
                        if filtered:
                            feats = filtered
                    break
        elif det is not None and any(
                a.pos == "noun" for a in sentence.tokens[first_idx - 1].analyses):
            # "Bericht der X": noun followed by article reads as genitive attribute.
            filtered = [f for f in feats if f.case == "gen"]
            if filtered:
                feats = filtered
    else:
        art_lemmas = {a.lemma for a in det.analyses if a.pos == "article"} if det else set()
        if art_lemmas & set(CONTRACTED_ARTICLES):
            filtered = [f for f in feats if f.case == "dat"]
            if filtered:
                feats = filtered

    # A subject agrees with its finite verb in number.
    if tok.dep == "subj" and tok.head is not None:
        verb = sentence.tokens[tok.head]
        numbers = {a.features.number for a in verb.analyses if a.pos == "verb"}
        filtered = [f for f in feats if f.case == "nom" and f.number in numbers]
        if filtered:
            feats = filtered

    # Bare (article-less) noun groups read as plural where ambiguous.
    number_pref = (NUMBER_PRIORITY if det is not None
                   else {"pl": 0, "sg": 1, None: 2})
    best = min(feats, key=lambda f: (CASE_PRIORITY[f.case], number_pref[f.number]))
    return best.case or "nom", best.number or "sg", False


# --- inflection helpers ------------------------------------------------------


def _inflect_noun(morph: MorphDict, lemma: str, case: str, number: str
                  ) -> str | None:
    try:
        forms = morph.inflect(lemma, "noun", MorphFeatures(case, number, None))
    except UnknownLemmaError:
        return None
    return forms[0] if forms else None


def _inflect_article(morph: MorphDict, det: Token, case: str, number: str,
                     gender: str) -> str | None:
    lemmas = sorted({a.lemma for a in det.analyses if a.pos == "article"})
    if not lemmas:
        return None
    lemma = lemmas[0]
    if lemma in CONTRACTED_ARTICLES:
        fem, masc = CONTRACTED_ARTICLES[lemma]
        if number == "sg" and case == "dat":
            return fem if gender == "f" else masc
        return None
    if lemma in ("ein", "kein") and number == "pl" and lemma == "ein":
        return ""  # indefinite article has no plural
    try:
        forms = morph.inflect(lemma, "article", MorphFeatures(case, number, gender))
    except UnknownLemmaError:
        return None
    if not forms:
        return None
    form = forms[0]
    return _capitalize(form) if det.text[:1].isupper() else form


def _adjective_stem(token: Token) -> str | None:
    stems = sorted({a.lemma for a in token.analyses
                    if a.pos in ("adjective", "participle")})
    return stems[0] if stems else None


def adjective_form(stem: str, case: str, number: str, gender: str | None,
                   weak: bool) -> str:
    key = (case, number, None if number == "pl" else gender)
    table = WEAK_ENDINGS if weak else STRONG_ENDINGS
    return stem + table[key]


def _inflect_pronoun(morph: MorphDict, token: Token, case: str, number: str,
                     gender: str) -> str | None:
    try:
        forms = morph.inflect("der", "pronoun", MorphFeatures(case, number, gender))
    except UnknownLemmaError:
        return None
    if not forms:
        return None
    form = forms[0]
    return _capitalize(form) if token.text[:1].isupper() else form


def _inflect_verb(morph: MorphDict, token: Token, number: str) -> str | None:
    lemmas = sorted({a.lemma for a in token.analyses if a.pos == "verb"})
    if not lemmas:
        return None
    try:
        forms = morph.inflect(lemmas[0], "verb", MorphFeatures(None, number, None))
    except UnknownLemmaError:
        return None
    return forms[0] if forms else None


# --- operations on inclusive phrases ----------------------------------------

_PARTICIPLE_TAIL_RE = re.compile(r"end(e|en|er|es|em)$")


def nominalize_participle(phrase: str) -> str:
    """Drop trailing 'Personen'/'Organisationen' after a participle and
    nominalize the participle by capitalizing it."""
    words = phrase.split()
    if len(words) >= 2 and words[-1] in ("Personen", "Organisationen") \
            and _PARTICIPLE_TAIL_RE.search(words[-2]):
        words = words[:-2] + [_capitalize(words[-2])]
    return " ".join(words)


def abbreviate_pair(female_inflected: str, male_root: str, marker: str
                    ) -> str | None:
    """Merge female and male inflections into one word.

    ``marker`` is a gender character or ``"internal_i"``. The omission trial
    is not enforced; absent only without a common prefix of length >= 2.
    """
    m = _FEM_SUFFIX_RE.search(female_inflected)
    if m:
        stem, suffix = female_inflected[:m.start()], m.group(1)
        if marker == "internal_i":
            return stem + "I" + suffix[1:]
        return stem + marker + suffix
    cp = 0
    for a, b in zip(female_inflected, male_root):
        if a != b:
            break
        cp += 1
    if cp < 2:
        return None
    char = "/" if marker == "internal_i" else marker
    return male_root + char + female_inflected[cp:]


def merge_dependent_forms(masc: str, fem: str, marker: str) -> str:
    """Merged spelling of a dependent word for the abbreviated styles."""
    char = "/" if marker == "internal_i" else marker
    if fem == masc:
        return masc
    if masc.startswith(fem):
        return fem + char + masc[len(fem):]
    if fem.startswith(masc):
        return masc + char + fem[len(masc):]
    return masc + "/" + fem


def pair_notation(female_inflected: str, male_inflected: str, number: str,
                  fem_article: str | None = None, masc_article: str | None = None,
                  fem_modifiers: tuple[str, ...] = (),
                  masc_modifiers: tuple[str, ...] = ()) -> str:
    """Full pair notation: 'oder' joins singulars, 'und' joins plurals.

    For singulars with dependents, the female side gets freshly inflected
    article/modifiers and the male side keeps the original ones.
    """
    if number == "pl":
        return f"{female_inflected} und {male_inflected}"
    fem_parts = ([fem_article] if fem_article else []) + list(fem_modifiers) \
        + [female_inflected]
    masc_parts = ([masc_article] if masc_article else []) + list(masc_modifiers) \
        + [male_inflected]
    return " ".join(fem_parts) + " oder " + " ".join(masc_parts)


# --- assimilation ------------------------------------------------------------


def _phrase_head_index(phrase: Sentence) -> int:
    heads = {t.head for t in phrase.tokens if t.dep in ("det", "amod")}
    if len(heads) == 1:
        return heads.pop()
    for i in range(len(phrase.tokens) - 1, -1, -1):
        if any(a.pos == "noun" for a in phrase.tokens[i].analyses):
            return i
    return len(phrase.tokens) - 1


def _citation_features(phrase: Sentence, head_idx: int
                       ) -> tuple[str, str | None, str]:
    """(lemma, gender, inherent number) of the inclusive head's citation form."""
    head = phrase.tokens[head_idx]
    noun = [a for a in head.analyses if a.pos == "noun"]
    if not noun:
        return head.text, None, "sg"
    lemma = noun[0].lemma
    gender = next((a.features.gender for a in noun if a.features.gender), None)
    numbers = {a.features.number for a in noun}
    number = "sg" if "sg" in numbers else "pl"
    return lemma, gender, number


def assimilate(sentence: Sentence, match: Match, entry: LexiconEntry,
               lexicon: Lexicon, morph: MorphDict
               ) -> tuple[str, list[Edit], bool]:
    """Inflect a neutral inclusive phrase into the sentence context and
    compute the shell edits (dependents and subject verb).

    Returns (inflected phrase, shell edits excluding the root span, unverified).
    """
    root_idx = match.root_token_index
    root_tok = sentence.tokens[root_idx]
    masc_lemma = lexicon.root_lemma(entry.id)
    case, number, unverified = resolve_root_features(sentence, match, masc_lemma, morph)

    phrase = lexicon.inclusive_analyses[entry.id]
    head_idx = _phrase_head_index(phrase)
    head_lemma, head_gender, inherent_number = _citation_features(phrase, head_idx)
    target_number = inherent_number if entry.plural_only else number

    matched = set(match.matched_token_indices)
    det_idxs = [i for i in _dependents(sentence, root_idx, "det")
                if i not in matched]
    has_det = bool(det_idxs)

    words: list[str] = []
    for i, ptok in enumerate(phrase.tokens):
        if i == head_idx:
            form = _inflect_noun(morph, head_lemma, case, target_number)
            if form is None:
                form, unverified = ptok.text, True
            words.append(form)
        else:
            stem = _adjective_stem(ptok)
            if stem is not None and head_gender is not None:
                words.append(adjective_form(stem, case, target_number,
                                            head_gender, weak=has_det))
            else:
                words.append(ptok.text)
    phrase_text = " ".join(words)
    if target_number == "pl":
        phrase_text = nominalize_participle(phrase_text)
    if match.prefix:
        if len(phrase.tokens) == 1:
            phrase_text = reattach_prefix(match.prefix, phrase_text)
        else:
            unverified = True

    # A singular collective standing in for a bare plural would need a fresh
    # article, which edit-based assimilation cannot insert.
    if entry.plural_only and inherent_number == "sg" and not det_idxs:
        unverified = True

    edits: list[Edit] = []
    gender = head_gender or "n"
    for di in det_idxs:
        det = sentence.tokens[di]
        form = _inflect_article(morph, det, case, target_number, gender)
        if form is None:
            unverified = True
        elif form == "":
            end = det.end
            while end < sentence.end and sentence.text[end - sentence.start] == " ":
                end += 1
            edits.append(Edit(det.start, end, ""))
        elif form != det.text:
            edits.append(Edit(det.start, det.end, form))
    for ai in _dependents(sentence, root_idx, "amod"):
        if ai in matched:
            continue
        amod = sentence.tokens[ai]
        stem = _adjective_stem(amod)
        if stem is None:
            unverified = True
            continue
        form = adjective_form(stem, case, target_number, gender, weak=has_det)
        if amod.text[:1].isupper():
            form = _capitalize(form)
        if form != amod.text:
            edits.append(Edit(amod.start, amod.end, form))
    for ri in _dependents(sentence, root_idx, "relpron"):
        rel = sentence.tokens[ri]
        rel_case = _original_case(rel, "pronoun") or "nom"
        form = _inflect_pronoun(morph, rel, rel_case, target_number, gender)
        if form is None:
            unverified = True
        elif form != rel.text:
            edits.append(Edit(rel.start, rel.end, form))
    if root_tok.dep == "subj" and root_tok.head is not None \
            and target_number != number:
        verb = sentence.tokens[root_tok.head]
        form = _inflect_verb(morph, verb, target_number)
        if form is None:
            unverified = True
        elif form != verb.text:
            edits.append(Edit(verb.start, verb.end, form))
    return phrase_text, edits, unverified


def _original_case(token: Token, pos: str) -> str | None:
    feats = [a.features for a in token.analyses if a.pos == pos]
    if not feats:
        return None
    return min(feats, key=lambda f: CASE_PRIORITY[f.case]).case


# --- alternative builders ----------------------------------------------------


def _female_inflected(entry: LexiconEntry, case: str, number: str,
                      morph: MorphDict, prefix: str | None
                      ) -> tuple[str, bool]:
    citation = entry.inclusive_phrase
    unverified = False
    if " " in citation:
        form = citation
        unverified = True
    else:
        form = _inflect_noun(morph, citation, case, number)
        if form is None:
            form, unverified = citation, True
    if prefix:
        form = reattach_prefix(prefix, form)
    return form, unverified


def _build_neutral(sentence: Sentence, match: Match, entry: LexiconEntry,
                   lexicon: Lexicon, morph: MorphDict, toggles: Toggles
                   ) -> Alternative | None:
    if toggles.disable_inflection:
        phrase_text, edits, unverified = entry.inclusive_phrase, [], False
        if match.prefix and " " not in phrase_text:
            phrase_text = reattach_prefix(match.prefix, phrase_text)
    else:
        phrase_text, edits, unverified = assimilate(sentence, match, entry,
                                                    lexicon, morph)
    # the root edit replaces the whole matched span (multiword phrases too)
    all_edits = tuple(sorted(edits + [Edit(match.span[0], match.span[1], phrase_text)],
                             key=lambda e: e.start))
    return Alternative(sentence_text="", replacement=phrase_text, style="neutral",
                       source_entry=entry.id, unverified=unverified,
                       edits=all_edits)


def _build_pair(sentence: Sentence, match: Match, entry: LexiconEntry,
                lexicon: Lexicon, morph: MorphDict, toggles: Toggles
                ) -> Alternative | None:
    root_idx = match.root_token_index
    root_tok = sentence.tokens[root_idx]
    masc_lemma = lexicon.root_lemma(entry.id)
    case, number, unverified = resolve_root_features(sentence, match, masc_lemma, morph)
    if toggles.disable_inflection:
        female = entry.inclusive_phrase
        if match.prefix:
            female = reattach_prefix(match.prefix, female)
        replacement = pair_notation(female, root_tok.text, number)
        edits = (Edit(root_tok.start, root_tok.end, replacement),)
        return Alternative(sentence_text="", replacement=replacement, style="pair",
                           source_entry=entry.id, unverified=False, edits=edits)

    female, fem_unv = _female_inflected(entry, case, number, morph, match.prefix)
    unverified = unverified or fem_unv
    male = root_tok.text

    if number == "pl":
        replacement = pair_notation(female, male, number)
        edits = (Edit(root_tok.start, root_tok.end, replacement),)
        return Alternative(sentence_text="", replacement=replacement, style="pair",
                           source_entry=entry.id, unverified=unverified, edits=edits)

    det_idxs = _dependents(sentence, root_idx, "det")
    amod_idxs = _dependents(sentence, root_idx, "amod")
    fem_article = masc_article = None
    if det_idxs:
        det = sentence.tokens[det_idxs[0]]
        fem_article = _inflect_article(morph, det, case, "sg", "f")
        if fem_article is None:
            fem_article, unverified = det.text, True
        masc_article = det.text[:1].lower() + det.text[1:]
    fem_mods, masc_mods = [], []
    for ai in amod_idxs:
        amod = sentence.tokens[ai]
        stem = _adjective_stem(amod)
        if stem is None:
            fem_mods.append(amod.text)
            unverified = True
        else:
            fem_mods.append(adjective_form(stem, case, "sg", "f",
                                           weak=bool(det_idxs)))
        masc_mods.append(amod.text[:1].lower() + amod.text[1:])
    replacement = pair_notation(female, male, "sg", fem_article, masc_article,
                                tuple(fem_mods), tuple(masc_mods))
    span_start = min([root_tok.start] +
                     [sentence.tokens[i].start for i in det_idxs + amod_idxs])
    edits = (Edit(span_start, root_tok.end, replacement),)
    return Alternative(sentence_text="", replacement=replacement, style="pair",
                       source_entry=entry.id, unverified=unverified, edits=edits)


def _build_abbreviated(sentence: Sentence, match: Match, entry: LexiconEntry,
                       lexicon: Lexicon, morph: MorphDict, style: StylePreference,
                       toggles: Toggles) -> Alternative | None:
    root_idx = match.root_token_index
    root_tok = sentence.tokens[root_idx]
    masc_lemma = lexicon.root_lemma(entry.id)
    case, number, unverified = resolve_root_features(sentence, match, masc_lemma, morph)
    marker = "internal_i" if style.mode == "internal_i" else style.gender_char

    if toggles.disable_inflection:
        merged = abbreviate_pair(entry.inclusive_phrase, masc_lemma, marker)
        if merged is None:
            return None
        if match.prefix:
            merged = reattach_prefix(match.prefix, merged)
        edits = (Edit(root_tok.start, root_tok.end, merged),)
        return Alternative(sentence_text="", replacement=merged, style=style.mode,
                           source_entry=entry.id, unverified=False, edits=edits)

    female, fem_unv = _female_inflected(entry, case, number, morph, match.prefix)
    unverified = unverified or fem_unv
    merged = abbreviate_pair(female, root_tok.text, marker)
    if merged is None:
        return None
    edits = [Edit(root_tok.start, root_tok.end, merged)]

    for di in _dependents(sentence, root_idx, "det"):
        det = sentence.tokens[di]
        fem_form = _inflect_article(morph, det, case, number, "f")
        if fem_form is None or fem_form == "":
            continue
        new = merge_dependent_forms(det.text, fem_form, marker)
        if new != det.text:
            edits.append(Edit(det.start, det.end, new))
    for ai in _dependents(sentence, root_idx, "amod"):
        amod = sentence.tokens[ai]
        stem = _adjective_stem(amod)
        if stem is None:
            continue
        fem_form = adjective_form(
            stem, case, number, "f",
            weak=bool(_dependents(sentence, root_idx, "det")))
        if amod.text[:1].isupper():
            fem_form = _capitalize(fem_form)
        new = merge_dependent_forms(amod.text, fem_form, marker)
        if new != amod.text:
            edits.append(Edit(amod.start, amod.end, new))
    for ri in _dependents(sentence, root_idx, "relpron"):
        rel = sentence.tokens[ri]
        rel_case = _original_case(rel, "pronoun") or "nom"
        fem_form = _inflect_pronoun(morph, rel, rel_case, number, "f")
        if fem_form is None:
            continue
        new = merge_dependent_forms(rel.text, fem_form, marker)
        if new != rel.text:
            edits.append(Edit(rel.start, rel.end, new))

    # Abbreviated singular dependents are underdetermined; flag for review.
    if number == "sg" and (_dependents(sentence, root_idx, "det")
                           or _dependents(sentence, root_idx, "amod")):
        unverified = True
    return Alternative(sentence_text="", replacement=merged, style=style.mode,
                       source_entry=entry.id, unverified=unverified,
                       edits=tuple(sorted(edits, key=lambda e: e.start)))


def build_suggestions(sentence: Sentence, matches: list[Match], lexicon: Lexicon,
                      style: StylePreference, morph: MorphDict,
                      explanations: dict[str, str],
                      toggles: Toggles = Toggles()) -> list[SuggestionItem]:
    """One SuggestionItem per match; neutral alternatives first, then
    pair/abbreviated ones, each group in lexicon order."""
    items = []
    for match in matches:
        entries = [lexicon.entry(i) for i in match.entry_ids]
        masc_lemma = lexicon.root_lemma(entries[0].id)
        _case, number, _unv = resolve_root_features(sentence, match, masc_lemma, morph)

        neutral = [e for e in entries if not e.is_female_inflection
                   and not toggles.disable_neutral]
        female = [e for e in entries if e.is_female_inflection
                  and not toggles.disable_pair]
        if style.mode == "neutral":
            female = []

        alternatives: list[Alternative] = []
        for e in neutral:
            if e.plural_only and number != "pl":
                continue
            alt = _build_neutral(sentence, match, e, lexicon, morph, toggles)
            if alt is not None:
                alternatives.append(alt)
        for e in female:
            if e.plural_only and number != "pl":
                continue
            if style.mode == "pair":
                alt = _build_pair(sentence, match, e, lexicon, morph, toggles)
            else:
                alt = _build_abbreviated(sentence, match, e, lexicon, morph,
                                         style, toggles)
            if alt is not None:
                alternatives.append(alt)

        explanation = explanations.get(entries[0].explanation_key,
                                       explanations.get("default", ""))
        items.append(SuggestionItem(
            span=match.span,
            exclusive_phrase="",
            alternatives=alternatives,
            explanation=explanation,
            alternatives_unavailable=not alternatives,
        ))
    return items
