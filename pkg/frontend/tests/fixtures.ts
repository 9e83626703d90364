import type { Alternative, Suggestion } from "../src/types";

export function alt(sentence_text: string, replacement: string,
                    style = "neutral", unverified = false): Alternative {
  return { sentence_text, replacement, style, unverified };
}

export function suggestion(span: [number, number], phrase: string,
                           alternatives: Alternative[]): Suggestion {
  return {
    span,
    exclusive_phrase: phrase,
    alternatives,
    explanation: "Diese Formulierung ist ein generisches Maskulinum.",
    alternatives_unavailable: alternatives.length === 0,
  };
}

// Three documents with server-style suggestions whose spans index the
// document text, used to pin down highlight offsets and span remapping.
export const DOC_FIXTURES = [
  {
    text: "Die Lehrer streiken. Die Schüler lernen.",
    suggestions: [
      suggestion([4, 10], "Lehrer",
                 [alt("Die Lehrkräfte streiken.", "Lehrkräfte")]),
      suggestion([25, 32], "Schüler",
                 [alt("Die Schülerinnen und Schüler lernen.",
                      "Schülerinnen und Schüler", "pair")]),
    ],
  },
  {
    text: "Bericht der Rechnungsprüfer",
    suggestions: [
      suggestion([12, 27], "Rechnungsprüfer",
                 [alt("Bericht der Rechnungsprüfer*innen",
                      "Rechnungsprüfer*innen", "custom_char")]),
    ],
  },
  {
    text: "Erst z. B. nichts. Dann kommen die Polizisten. Danach Ruhe.",
    suggestions: [
      suggestion([35, 45], "Polizisten",
                 [alt("Dann kommt die Polizei.", "Polizei")]),
    ],
  },
] as const;
