import { CheckClient } from "./api.js";
import { Debouncer } from "./debounce.js";
import {
  APPLY_RECHECK_DELAY_MS,
  EditorState,
  TYPING_RECHECK_DELAY_MS,
  applyAlternative,
  autoCheckEnabled,
  editText,
  initialState,
  setStyle,
  setSuggestions,
  undo,
} from "./editor.js";
import type { Alternative, StylePreference, Suggestion } from "./types.js";

/**
 * Glue between editor state, the debounced re-check schedule, and the HTTP
 * client. At most one check request is in flight; a newer one aborts and
 * supersedes it (latest wins).
 */
export class EditorController {
  state: EditorState;
  checkError: string | null = null;

  private debouncer = new Debouncer();
  private seq = 0;
  private inflight: AbortController | null = null;

  constructor(private client: CheckClient,
              style: StylePreference,
              private onUpdate: () => void = () => {}) {
    this.state = initialState(style);
  }

  handleInput(text: string): void {
    this.state = editText(this.state, text);
    if (autoCheckEnabled(this.state)) {
      this.debouncer.schedule(() => void this.checkNow(), TYPING_RECHECK_DELAY_MS);
    } else {
      this.debouncer.cancel();
    }
    this.onUpdate();
  }

  apply(suggestion: Suggestion, alternative: Alternative): void {
    this.state = applyAlternative(this.state, suggestion, alternative);
    this.debouncer.schedule(() => void this.checkNow(), APPLY_RECHECK_DELAY_MS);
    this.onUpdate();
  }

  undo(): void {
    this.state = undo(this.state);
    this.onUpdate();
  }

  changeStyle(style: StylePreference): void {
    this.state = setStyle(this.state, style);
    void this.checkNow();
  }

  async checkNow(): Promise<void> {
    this.debouncer.cancel();
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    const seq = ++this.seq;
    try {
      const resp = await this.client.check(this.state.text, this.state.style,
                                           controller.signal);
      if (seq !== this.seq) return; // superseded
      this.state = setSuggestions(this.state, resp.suggestions);
      this.checkError = null;
    } catch (err) {
      if (seq !== this.seq || controller.signal.aborted) return;
      // document changes are kept; only the suggestions are now stale
      this.checkError = err instanceof Error ? err.message : String(err);
    } finally {
      if (this.inflight === controller) this.inflight = null;
      this.onUpdate();
    }
  }
}
