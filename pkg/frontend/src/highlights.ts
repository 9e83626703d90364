import type { EditorState } from "./editor.js";

export interface HighlightSegment {
  text: string;
  // index into state.suggestions, or null for plain text
  suggestionIndex: number | null;
}

export interface HighlightView {
  segments: HighlightSegment[];
  noFindings: boolean;
  // spans no longer match the document; cleared, user should re-check
  recheckRequired: boolean;
}

/**
 * Split the document into plain and highlighted segments. Every span must
 * still slice to its exclusive phrase; otherwise the document changed under
 * the suggestions and all highlights are cleared.
 */
export function renderHighlights(state: EditorState): HighlightView {
  const { text, suggestions } = state;
  const valid = suggestions.every(
    (s) => text.slice(s.span[0], s.span[1]) === s.exclusive_phrase);
  if (!valid || state.stale) {
    return { segments: [{ text, suggestionIndex: null }],
             noFindings: false, recheckRequired: true };
  }
  if (suggestions.length === 0) {
    return { segments: [{ text, suggestionIndex: null }],
             noFindings: true, recheckRequired: false };
  }
  const segments: HighlightSegment[] = [];
  let pos = 0;
  suggestions
    .map((s, i) => ({ s, i }))
    .sort((a, b) => a.s.span[0] - b.s.span[0])
    .forEach(({ s, i }) => {
      if (s.span[0] > pos) {
        segments.push({ text: text.slice(pos, s.span[0]), suggestionIndex: null });
      }
      segments.push({ text: text.slice(s.span[0], s.span[1]), suggestionIndex: i });
      pos = s.span[1];
    });
  if (pos < text.length) {
    segments.push({ text: text.slice(pos), suggestionIndex: null });
  }
  return { segments, noFindings: false, recheckRequired: false };
}
