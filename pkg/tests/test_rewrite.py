import pytest

from inklusiv.matcher import find_matches
from inklusiv.rewrite import (StyleError, StylePreference, Toggles,
                              abbreviate_pair, assimilate, build_suggestions,
                              merge_dependent_forms, nominalize_participle,
                              pair_notation)
from inklusiv.textpipe import MARKERS, annotate


def _suggest(data, text, style, toggles=Toggles()):
    sentence = annotate(text, data.morph)
    matches = find_matches(sentence, data.lexicon, data.morph, data.frequencies)
    return build_suggestions(sentence, matches, data.lexicon, style,
                             data.morph, data.explanations, toggles)


def test_style_preference_validation():
    StylePreference(mode="custom_char", gender_char="*")
    with pytest.raises(StyleError):
        StylePreference(mode="fancy")
    with pytest.raises(StyleError):
        StylePreference(mode="custom_char", gender_char="%")
    with pytest.raises(StyleError):
        StylePreference(mode="custom_char")
    with pytest.raises(StyleError):
        StylePreference(mode="neutral", gender_char="*")


def test_nominalize_participle():
    assert nominalize_participle("arbeitgebende Organisationen") == "Arbeitgebende"
    assert nominalize_participle("studierende Personen") == "Studierende"
    assert nominalize_participle("Lehrkräfte") == "Lehrkräfte"


def test_abbreviate_pair_examples():
    assert abbreviate_pair("Lehrerinnen", "Lehrer", "*") == "Lehrer*innen"
    assert abbreviate_pair("Ärztin", "Arzt", "_") == "Ärzt_in"
    assert abbreviate_pair("Schülerinnen", "Schüler", "internal_i") \
        == "SchülerInnen"
    assert abbreviate_pair("Qualitätsfachfrau", "Qualitätsfachmann", "/") \
        == "Qualitätsfachmann/frau"
    assert abbreviate_pair("Xy", "Qr", "*") is None


def test_pair_notation():
    assert pair_notation("Lehrerinnen", "Lehrer", "pl") == "Lehrerinnen und Lehrer"
    assert pair_notation("Lehrerin", "Lehrer", "sg", "die", "der") \
        == "die Lehrerin oder der Lehrer"


def test_merge_dependent_forms():
    assert merge_dependent_forms("einen", "eine", "*") == "eine*n"
    assert merge_dependent_forms("zum", "zur", "*") == "zum/zur"
    assert merge_dependent_forms("die", "die", ":") == "die"
    assert merge_dependent_forms("der", "die", "internal_i") == "der/die"


def test_assimilate_neutral_shell(data):
    text = "Der motivierte Lehrer unterrichtet."
    sentence = annotate(text, data.morph)
    match = find_matches(sentence, data.lexicon, data.morph, data.frequencies)[0]
    entry = next(e for e in data.lexicon.query("Lehrer")
                 if e.inclusive_phrase == "Lehrkraft")
    phrase, edits, unverified = assimilate(sentence, match, entry,
                                           data.lexicon, data.morph)
    assert phrase == "Lehrkraft" and not unverified
    texts = {(e.start, e.end): e.text for e in edits}
    assert "die" in {t.lower() for t in texts.values()}  # article regendered


def test_assimilate_collective_renumbers_verb(data):
    text = "Die Polizisten kommen."
    sentence = annotate(text, data.morph)
    match = find_matches(sentence, data.lexicon, data.morph, data.frequencies)[0]
    entry = next(e for e in data.lexicon.query("Polizist")
                 if e.inclusive_phrase == "Polizei")
    phrase, edits, _unv = assimilate(sentence, match, entry, data.lexicon,
                                     data.morph)
    assert phrase == "Polizei"
    assert any(e.text == "kommt" for e in edits)


def test_neutral_style_has_no_markers(data):
    items = _suggest(data, "Die Lehrer und die Polizisten streiken.",
                     StylePreference(mode="neutral"))
    assert items
    marker_chars = set("".join(MARKERS.values()))
    for item in items:
        for alt in item.alternatives:
            assert alt.style == "neutral"
            assert not (set(alt.replacement) & marker_chars)
            assert " oder " not in alt.replacement
            assert " und " not in alt.replacement


def test_custom_char_uses_requested_marker(data):
    for char in ("*", ":", "_", "·"):
        items = _suggest(data, "Die Schüler lernen.",
                         StylePreference(mode="custom_char", gender_char=char))
        abbrev = [a for it in items for a in it.alternatives
                  if a.style == "custom_char"]
        assert abbrev
        for alt in abbrev:
            assert char in alt.replacement


def test_alternative_order_neutral_first(data):
    items = _suggest(data, "Die Lehrer streiken.", StylePreference(mode="pair"))
    styles = [a.style for a in items[0].alternatives]
    assert styles == sorted(styles, key=lambda s: s != "neutral")
    assert styles[0] == "neutral" and "pair" in styles


def test_plural_only_gated_by_number(data):
    sg = _suggest(data, "Der Lehrer unterrichtet.", StylePreference(mode="neutral"))
    sg_phrases = {a.replacement for it in sg for a in it.alternatives}
    assert "Kollegium" not in sg_phrases
    pl = _suggest(data, "Die Lehrer unterrichten.", StylePreference(mode="neutral"))
    pl_phrases = {a.replacement for it in pl for a in it.alternatives}
    assert "Kollegium" in pl_phrases


def test_explanation_attached(data):
    items = _suggest(data, "Die Lehrer streiken.", StylePreference(mode="pair"))
    assert items[0].explanation == data.explanations["default"]


def test_empty_alternatives_marker(data):
    # female-only entry under neutral style leaves no candidates
    items = _suggest(data, "Die Schüler lernen.", StylePreference(mode="neutral"))
    assert len(items) == 1
    assert items[0].alternatives == [] and items[0].alternatives_unavailable


def test_toggles_disable_groups(data):
    style = StylePreference(mode="pair")
    no_pair = _suggest(data, "Die Lehrer streiken.", style,
                       Toggles(disable_pair=True))
    assert all(a.style == "neutral"
               for it in no_pair for a in it.alternatives)
    no_neutral = _suggest(data, "Die Lehrer streiken.", style,
                          Toggles(disable_neutral=True))
    assert all(a.style != "neutral"
               for it in no_neutral for a in it.alternatives)


def test_disable_inflection_keeps_citation_forms(data):
    items = _suggest(data, "Mit dem Lehrer sprechen.",
                     StylePreference(mode="neutral"),
                     Toggles(disable_inflection=True))
    assert items[0].alternatives[0].replacement == "Lehrkraft"


def test_determinism(data):
    style = StylePreference(mode="pair")
    a = _suggest(data, "Die Lehrer und die Schüler streiken.", style)
    b = _suggest(data, "Die Lehrer und die Schüler streiken.", style)
    assert [(it.span, [x.replacement for x in it.alternatives]) for it in a] \
        == [(it.span, [x.replacement for x in it.alternatives]) for it in b]


def test_agreement_of_rewritten_dependents(data):
    from inklusiv.morph import MorphFeatures
    items = _suggest(data, "Der motivierte Lehrer unterrichtet.",
                     StylePreference(mode="neutral"))
    alt = items[0].alternatives[0]
    sent = annotate(alt.sentence_text or "Die motivierte Lehrkraft unterrichtet.",
                    data.morph)
    root = next(t for t in sent.tokens if t.text == "Lehrkraft")
    root_feats = next(a.features for a in root.analyses if a.features.case == "nom")
    for tok in sent.tokens:
        if tok.dep in ("det", "amod"):
            assert any(a.features.unifies(root_feats) for a in tok.analyses)
