import { sentenceBounds } from "./sentences.js";
import type { Alternative, StylePreference, Suggestion } from "./types.js";

// Re-check scheduling: quickly after an applied replacement, on a longer
// pause while typing. Above the length threshold live re-checking gets too
// slow to feel interactive, so the editor switches to a manual check button.
export const APPLY_RECHECK_DELAY_MS = 350;
export const TYPING_RECHECK_DELAY_MS = 800;
export const MANUAL_CHECK_THRESHOLD = 700;

interface HistoryEntry {
  text: string;
  suggestions: Suggestion[];
}

export interface EditorState {
  text: string;
  style: StylePreference;
  suggestions: Suggestion[];
  history: HistoryEntry[];
  // set when the document changed under existing suggestions
  stale: boolean;
}

export function initialState(style: StylePreference, text = ""): EditorState {
  return { text, style, suggestions: [], history: [], stale: false };
}

export function setSuggestions(state: EditorState,
                               suggestions: Suggestion[]): EditorState {
  return { ...state, suggestions, stale: false };
}

export function editText(state: EditorState, text: string): EditorState {
  if (text === state.text) return state;
  return { ...state, text, suggestions: [], stale: state.suggestions.length > 0 };
}

export function setStyle(state: EditorState,
                         style: StylePreference): EditorState {
  return { ...state, style, suggestions: [], stale: false };
}

export function autoCheckEnabled(state: EditorState): boolean {
  return state.text.length <= MANUAL_CHECK_THRESHOLD;
}

/**
 * Replace the sentence containing the suggestion's span by the alternative's
 * sentence text, drop the applied suggestion, and shift the spans of every
 * suggestion after the replaced sentence. Suggestions inside the replaced
 * sentence are dropped as stale. The prior state goes on the undo stack.
 */
export function applyAlternative(state: EditorState, suggestion: Suggestion,
                                 alternative: Alternative): EditorState {
  if (!suggestion.alternatives.includes(alternative)) {
    throw new Error("alternative does not belong to the suggestion");
  }
  const [sentStart, sentEnd] = sentenceBounds(state.text, suggestion.span);
  const text = state.text.slice(0, sentStart) + alternative.sentence_text
    + state.text.slice(sentEnd);
  const delta = alternative.sentence_text.length - (sentEnd - sentStart);
  const suggestions: Suggestion[] = [];
  for (const s of state.suggestions) {
    if (s === suggestion) continue;
    if (s.span[1] <= sentStart) {
      suggestions.push(s);
    } else if (s.span[0] >= sentEnd) {
      suggestions.push({ ...s, span: [s.span[0] + delta, s.span[1] + delta] });
    }
  }
  return {
    ...state,
    text,
    suggestions,
    history: [...state.history, { text: state.text, suggestions: state.suggestions }],
  };
}

export function canUndo(state: EditorState): boolean {
  return state.history.length > 0;
}

export function undo(state: EditorState): EditorState {
  const prev = state.history[state.history.length - 1];
  if (!prev) return state;
  return {
    ...state,
    text: prev.text,
    suggestions: prev.suggestions,
    stale: false,
    history: state.history.slice(0, -1),
  };
}
