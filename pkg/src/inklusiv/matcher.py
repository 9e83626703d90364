"""Find occurrences of lexicon exclusive phrases in annotated sentences,
including compound-prefixed occurrences."""

from __future__ import annotations

from dataclasses import dataclass

from .compound import SplitConfig, strip_prefix
from .lexicon import Lexicon
from .morph import MorphDict
from .textpipe import Sentence, Token


@dataclass(frozen=True)
class Match:
    span: tuple[int, int]
    root_token_index: int
    entry_ids: tuple[int, ...]
    prefix: str | None
    matched_token_indices: tuple[int, ...]


def _noun_lemmas(token: Token) -> set[str]:
    return {a.lemma for a in token.analyses if a.pos == "noun"}


def _dep_edges(sentence: Sentence, indices: set[int], head: int) -> set[tuple[str, str]]:
    """Shallow edges inside a token group, as (dep label, dependent lemma)."""
    edges = set()
    for i in indices:
        tok = sentence.tokens[i]
        if tok.head is not None and tok.head in indices and tok.dep != "none":
            edges.add((tok.dep, tok.lemma))
    return edges


def _match_multiword(sentence: Sentence, root_idx: int, phrase: Sentence,
                     phrase_root_lemma: str) -> tuple[int, ...] | None:
    """Match the non-root phrase tokens against sentence tokens carrying the
    same lemma and the same dep edge to the root."""
    phrase_root = next((i for i, t in enumerate(phrase.tokens)
                        if t.lemma == phrase_root_lemma), None)
    if phrase_root is None:
        return None
    matched = {root_idx}
    for i, ptok in enumerate(phrase.tokens):
        if i == phrase_root:
            continue
        found = None
        for j, stok in enumerate(sentence.tokens):
            if j in matched or stok.lemma != ptok.lemma:
                continue
            same_edge = (ptok.head == phrase_root and stok.head == root_idx
                         and stok.dep == ptok.dep)
            if same_edge:
                found = j
                break
        if found is None:
            return None
        matched.add(found)
    return tuple(sorted(matched))


def find_matches(sentence: Sentence, lexicon: Lexicon, morph: MorphDict,
                 corpus_freq: dict[str, int], cfg: SplitConfig = SplitConfig()
                 ) -> list[Match]:
    """Emit maximal non-overlapping matches of exclusive phrases.

    Tokens that carried a stripped gender character are never matched: they
    are already inclusive.
    """
    raw: list[Match] = []
    for idx, tok in enumerate(sentence.tokens):
        if tok.stripped is not None:
            continue
        lemmas = _noun_lemmas(tok)
        prefix = None
        if not any(lexicon.query(lemma) for lemma in lemmas):
            # Compound path: strip a prefix and match the base lemma.
            if tok.text[:1].isupper() and tok.text.isalpha():
                split = strip_prefix(tok.text, morph, corpus_freq, cfg)
                if split is not None:
                    pfx, base = split
                    base_lemmas = {a.lemma for a in morph.analyze(base)
                                   if a.pos == "noun"}
                    if any(lexicon.query(lemma) for lemma in base_lemmas):
                        lemmas, prefix = base_lemmas, pfx
        for lemma in sorted(lemmas):
            entries = lexicon.query(lemma)
            if not entries:
                continue
            single_ids = []
            for entry in entries:
                phrase = lexicon.phrase_analyses[entry.id]
                if len(phrase.tokens) == 1:
                    single_ids.append(entry.id)
                else:
                    if prefix is not None:
                        continue  # multiword phrases do not combine with compounds
                    toks = _match_multiword(sentence, idx, phrase, lemma)
                    if toks is not None:
                        span = (min(sentence.tokens[i].start for i in toks),
                                max(sentence.tokens[i].end for i in toks))
                        raw.append(Match(span=span, root_token_index=idx,
                                         entry_ids=(entry.id,), prefix=None,
                                         matched_token_indices=toks))
            if single_ids:
                raw.append(Match(span=(tok.start, tok.end), root_token_index=idx,
                                 entry_ids=tuple(single_ids), prefix=prefix,
                                 matched_token_indices=(idx,)))

    # Entries sharing the same matched phrase collapse into one Match.
    merged: dict[tuple, Match] = {}
    for m in raw:
        key = (m.span, m.root_token_index, m.prefix, m.matched_token_indices)
        if key in merged:
            prev = merged[key]
            merged[key] = Match(span=m.span, root_token_index=m.root_token_index,
                                entry_ids=tuple(sorted(set(prev.entry_ids + m.entry_ids))),
                                prefix=m.prefix,
                                matched_token_indices=m.matched_token_indices)
        else:
            merged[key] = m
    raw = list(merged.values())

    # Longest phrase wins; ties go to the leftmost span.
    raw.sort(key=lambda m: (-(m.span[1] - m.span[0]), m.span[0]))
    chosen: list[Match] = []
    for m in raw:
        if any(not (m.span[1] <= c.span[0] or m.span[0] >= c.span[1])
               for c in chosen):
            continue
        chosen.append(m)
    chosen.sort(key=lambda m: m.span[0])
    return chosen
