#!/usr/bin/env python3
"""Generate the shipped German morphological dictionary (TSV).

Paradigms are spelled out from small declension tables so that the engine
never needs to guess at runtime. Output goes to src/inklusiv/data/morph_dict.tsv.
"""

from __future__ import annotations

import sys
from pathlib import Path

CASES = ("nom", "gen", "dat", "acc")

OUT = Path(__file__).resolve().parent.parent / "src" / "inklusiv" / "data" / "morph_dict.tsv"

rows: list[tuple[str, str, str, str, str, str]] = []


def add(form, lemma, pos, case="-", number="-", gender="-"):
    rows.append((form, lemma, pos, case, number, gender))


def noun(lemma, gender, sg: dict, pl: dict | None):
    for case in CASES:
        if case in sg:
            add(sg[case], lemma, "noun", case, "sg", gender)
    if pl:
        for case in CASES:
            if case in pl:
                add(pl[case], lemma, "noun", case, "pl", "-")


def strong_er(lemma, gender="m"):
    # Lehrer type: gen sg +s, dat pl +n, otherwise invariant.
    sg = {c: lemma for c in CASES}
    sg["gen"] = lemma + "s"
    pl = {c: lemma for c in CASES}
    pl["dat"] = lemma + "n"
    noun(lemma, gender, sg, pl)


def fem_in(lemma):
    # Lehrerin type: sg invariant, pl +nen.
    noun(lemma, "f", {c: lemma for c in CASES}, {c: lemma + "nen" for c in CASES})


def weak(lemma, suffix):
    # Polizist/Kollege type n-declension.
    sg = {"nom": lemma, "gen": lemma + suffix, "dat": lemma + suffix, "acc": lemma + suffix}
    pl = {c: lemma + suffix for c in CASES}
    noun(lemma, "m", sg, pl)


def strong(lemma, gender, gen_sg, plural):
    sg = {c: lemma for c in CASES}
    sg["gen"] = gen_sg
    dat_pl = plural if plural.endswith("n") else plural + "n"
    pl = {c: plural for c in CASES}
    pl["dat"] = dat_pl
    noun(lemma, gender, sg, pl)


def fem(lemma, plural=None):
    sg = {c: lemma for c in CASES}
    if plural is None:
        noun(lemma, "f", sg, None)
    else:
        dat_pl = plural if plural.endswith("n") else plural + "n"
        pl = {c: plural for c in CASES}
        pl["dat"] = dat_pl
        noun(lemma, "f", sg, pl)


# --- person nouns (masculine heads + feminine counterparts) -----------------

ER_NOUNS = [
    "Lehrer", "Schüler", "Fleischer", "Verkäufer", "Rechnungsprüfer", "Prüfer",
    "Fleischereifachverkäufer", "Tänzer", "Mitarbeiter", "Teilnehmer", "Leser",
    "Kanzler", "Richter", "Bäcker", "Besucher", "Bewerber", "Nutzer", "Fahrer",
    "Forscher", "Wissenschaftler", "Bürger", "Wähler", "Helfer", "Berater",
    "Trainer", "Sportler", "Sänger", "Spieler", "Künstler", "Minister",
    "Zuschauer", "Redner", "Handwerker", "Techniker", "Arbeitgeber", "Leiter",
    "Meister", "Gründer", "Partner", "Vertreter", "Betreuer", "Sprecher",
]
for n in ER_NOUNS:
    strong_er(n)
    fem_in(n + "in")

WEAK_EN = ["Polizist", "Student", "Journalist", "Präsident", "Pilot", "Bär"]
for n in WEAK_EN:
    weak(n, "en")
    fem_in(n + "in")

WEAK_N = ["Kollege", "Kunde", "Experte"]
for n in WEAK_N:
    weak(n, "n")
    fem_in(n[:-1] + "in")  # Kollegin, Kundin, Expertin

strong("Arzt", "m", "Arztes", "Ärzte")
fem_in("Ärztin")
strong("Anwalt", "m", "Anwalts", "Anwälte")
fem_in("Anwältin")
strong("Professor", "m", "Professors", "Professoren")
fem_in("Professorin")
strong("Autor", "m", "Autors", "Autoren")
fem_in("Autorin")
strong("Ingenieur", "m", "Ingenieurs", "Ingenieure")
fem_in("Ingenieurin")
strong("Chef", "m", "Chefs", "Chefs")
fem_in("Chefin")
strong("Direktor", "m", "Direktors", "Direktoren")
fem_in("Direktorin")
strong("Qualitätsfachmann", "m", "Qualitätsfachmanns", "Qualitätsfachmänner")
fem("Qualitätsfachfrau", "Qualitätsfachfrauen")
strong("Mann", "m", "Mannes", "Männer")
fem("Frau", "Frauen")

# --- neutral replacement nouns ---------------------------------------------

fem("Lehrkraft", "Lehrkräfte")
fem("Fachkraft", "Fachkräfte")
fem("Führungskraft", "Führungskräfte")
strong("Kollegium", "n", "Kollegiums", "Kollegien")
fem("Polizei")
fem("Person", "Personen")
fem("Organisation", "Organisationen")
fem("Kundschaft")
fem("Leserschaft")
fem("Wählerschaft")
fem("Belegschaft")
strong("Publikum", "n", "Publikums", "Publika")
fem("Leitung", "Leitungen")
strong("Team", "n", "Teams", "Teams")
strong("Personal", "n", "Personals", "Personale")

# --- ordinary nouns (prefix vocabulary, fillers) ----------------------------

strong("Sport", "m", "Sports", "Sporte")
fem("Rechnung", "Rechnungen")
fem("Fleischerei", "Fleischereien")
strong("Fach", "n", "Fachs", "Fächer")
fem("Schule", "Schulen")
fem("Musik")
strong("Tanz", "m", "Tanzes", "Tänze")
fem("Stadt", "Städte")
strong("Land", "n", "Landes", "Länder")
strong("Bericht", "m", "Berichts", "Berichte")
fem("Ausbildung", "Ausbildungen")
strong("Tisch", "m", "Tisches", "Tische")
strong("Stuhl", "m", "Stuhls", "Stühle")
fem("Zeitung", "Zeitungen")
strong("Unternehmen", "n", "Unternehmens", "Unternehmen")
strong("Text", "m", "Textes", "Texte")
fem("Gruppe", "Gruppen")
strong("Jahr", "n", "Jahres", "Jahre")
fem("Qualitätskontrolle", "Qualitätskontrollen")
fem("Batterie", "Batterien")
strong("Produktionsprozess", "m", "Produktionsprozesses", "Produktionsprozesse")
fem("Unterstützung")
strong("Zimmer", "n", "Zimmers", "Zimmer")
fem("Showtanzgruppe", "Showtanzgruppen")

# --- articles ---------------------------------------------------------------

DEFINITE = {
    ("nom", "sg", "m"): "der", ("nom", "sg", "f"): "die", ("nom", "sg", "n"): "das",
    ("acc", "sg", "m"): "den", ("acc", "sg", "f"): "die", ("acc", "sg", "n"): "das",
    ("dat", "sg", "m"): "dem", ("dat", "sg", "f"): "der", ("dat", "sg", "n"): "dem",
    ("gen", "sg", "m"): "des", ("gen", "sg", "f"): "der", ("gen", "sg", "n"): "des",
    ("nom", "pl", "-"): "die", ("acc", "pl", "-"): "die",
    ("dat", "pl", "-"): "den", ("gen", "pl", "-"): "der",
}
INDEFINITE = {
    ("nom", "sg", "m"): "ein", ("nom", "sg", "f"): "eine", ("nom", "sg", "n"): "ein",
    ("acc", "sg", "m"): "einen", ("acc", "sg", "f"): "eine", ("acc", "sg", "n"): "ein",
    ("dat", "sg", "m"): "einem", ("dat", "sg", "f"): "einer", ("dat", "sg", "n"): "einem",
    ("gen", "sg", "m"): "eines", ("gen", "sg", "f"): "einer", ("gen", "sg", "n"): "eines",
}
KEIN_EXTRA = {
    ("nom", "pl", "-"): "keine", ("acc", "pl", "-"): "keine",
    ("dat", "pl", "-"): "keinen", ("gen", "pl", "-"): "keiner",
}

for (case, number, gender), form in DEFINITE.items():
    add(form, "der", "article", case, number, gender)
    # Relative pronoun shares the definite-article paradigm.
    add(form, "der", "pronoun", case, number, gender)
for (case, number, gender), form in INDEFINITE.items():
    add(form, "ein", "article", case, number, gender)
for (case, number, gender), form in INDEFINITE.items():
    add("k" + form, "kein", "article", case, number, gender)
for (case, number, gender), form in KEIN_EXTRA.items():
    add(form, "kein", "article", case, number, gender)

# Contracted preposition+article forms; the rewriter knows zum<->zur pairing.
add("zum", "zum", "article", "dat", "sg", "m")
add("zum", "zum", "article", "dat", "sg", "n")
add("zur", "zur", "article", "dat", "sg", "f")
add("beim", "beim", "article", "dat", "sg", "m")
add("beim", "beim", "article", "dat", "sg", "n")
add("vom", "vom", "article", "dat", "sg", "m")
add("vom", "vom", "article", "dat", "sg", "n")
add("im", "im", "article", "dat", "sg", "m")
add("im", "im", "article", "dat", "sg", "n")
add("am", "am", "article", "dat", "sg", "m")
add("am", "am", "article", "dat", "sg", "n")

# --- adjectives and present participles -------------------------------------

WEAK_ENDINGS = {
    ("nom", "sg", "m"): "e", ("nom", "sg", "f"): "e", ("nom", "sg", "n"): "e",
    ("acc", "sg", "m"): "en", ("acc", "sg", "f"): "e", ("acc", "sg", "n"): "e",
    ("dat", "sg", "m"): "en", ("dat", "sg", "f"): "en", ("dat", "sg", "n"): "en",
    ("gen", "sg", "m"): "en", ("gen", "sg", "f"): "en", ("gen", "sg", "n"): "en",
    ("nom", "pl", "-"): "en", ("acc", "pl", "-"): "en",
    ("dat", "pl", "-"): "en", ("gen", "pl", "-"): "en",
}
STRONG_ENDINGS = {
    ("nom", "sg", "m"): "er", ("nom", "sg", "f"): "e", ("nom", "sg", "n"): "es",
    ("acc", "sg", "m"): "en", ("acc", "sg", "f"): "e", ("acc", "sg", "n"): "es",
    ("dat", "sg", "m"): "em", ("dat", "sg", "f"): "er", ("dat", "sg", "n"): "em",
    ("gen", "sg", "m"): "en", ("gen", "sg", "f"): "er", ("gen", "sg", "n"): "en",
    ("nom", "pl", "-"): "e", ("acc", "pl", "-"): "e",
    ("dat", "pl", "-"): "en", ("gen", "pl", "-"): "er",
}

ADJECTIVES = [
    "motiviert", "groß", "neu", "erfahren", "engagiert", "freundlich",
    "talentiert", "jung", "technisch", "wissenschaftlich", "qualifiziert",
]
PARTICIPLES = [
    "arbeitgebend", "studierend", "mitarbeitend", "teilnehmend", "nutzend",
    "forschend", "helfend", "beratend", "kunstschaffend", "verkaufend",
    "lehrend", "lernend", "mitwirkend",
]


def adjective(stem, pos):
    forms: dict[str, set[tuple[str, str, str]]] = {}
    for table in (WEAK_ENDINGS, STRONG_ENDINGS):
        for feats, ending in table.items():
            forms.setdefault(stem + ending, set()).add(feats)
    for form, featset in forms.items():
        for case, number, gender in sorted(featset):
            add(form, stem, pos, case, number, gender)


for a in ADJECTIVES:
    adjective(a, "adjective")
for p in PARTICIPLES:
    adjective(p, "participle")

# --- verbs (3rd person, number agreement only) ------------------------------

VERBS = [
    ("unterrichten", "unterrichtet"), ("streiken", "streikt"), ("kommen", "kommt"),
    ("arbeiten", "arbeitet"), ("suchen", "sucht"), ("machen", "macht"),
    ("sein", "ist"), ("haben", "hat"), ("helfen", "hilft"), ("spielen", "spielt"),
    ("singen", "singt"), ("lernen", "lernt"), ("forschen", "forscht"),
    ("schreiben", "schreibt"), ("backen", "backt"), ("fahren", "fährt"),
    ("prüfen", "prüft"), ("tanzen", "tanzt"), ("trainieren", "trainiert"),
    ("beraten", "berät"), ("demonstrieren", "demonstriert"),
    ("protestieren", "protestiert"), ("feiern", "feiert"),
    ("gewinnen", "gewinnt"), ("entscheiden", "entscheidet"), ("warten", "wartet"),
    ("stammen", "stammt"), ("kaufen", "kauft"), ("verkaufen", "verkauft"),
    ("lehren", "lehrt"), ("leiten", "leitet"), ("treffen", "trifft"),
    ("klatschen", "klatscht"), ("gehen", "geht"), ("wählen", "wählt"),
    ("lesen", "liest"), ("fehlen", "fehlt"), ("protestieren", "protestiert"),
]
for infinitive, sg3 in VERBS:
    add(sg3, infinitive, "verb", "-", "sg", "-")
    # "sein" is suppletive: its infinitive is not a valid plural form
    if infinitive == "sein":
        add("sind", "sein", "verb", "-", "pl", "-")
    else:
        add(infinitive, infinitive, "verb", "-", "pl", "-")


def main() -> int:
    seen = set()
    lines = []
    for row in rows:
        if row in seen:
            continue
        seen.add(row)
        lines.append("\t".join(row))
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("# German morphological dictionary (generated by scripts/build_morph_dict.py)\n"
                   + "\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} analyses to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
