import { CheckClient } from "./api.js";
import { EditorController } from "./controller.js";
import { autoCheckEnabled, canUndo } from "./editor.js";
import { renderHighlights } from "./highlights.js";
import type { StyleMode } from "./types.js";

const BASE_URL = (window as { INKLUSIV_API?: string }).INKLUSIV_API
  ?? "http://127.0.0.1:8000";

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

export function mount(): void {
  const textarea = el<HTMLTextAreaElement>("text");
  const output = el<HTMLDivElement>("output");
  const cards = el<HTMLDivElement>("cards");
  const styleSelect = el<HTMLSelectElement>("style");
  const charInput = el<HTMLInputElement>("char");
  const checkButton = el<HTMLButtonElement>("check");
  const undoButton = el<HTMLButtonElement>("undo");
  const status = el<HTMLSpanElement>("status");

  const controller = new EditorController(
    new CheckClient(BASE_URL),
    { mode: "neutral" },
    render,
  );

  function currentStyle() {
    const mode = styleSelect.value as StyleMode;
    return mode === "custom_char"
      ? { mode, gender_char: charInput.value || "*" }
      : { mode };
  }

  function render(): void {
    const view = renderHighlights(controller.state);
    output.replaceChildren(...view.segments.map((seg) => {
      const span = document.createElement("span");
      span.textContent = seg.text;
      if (seg.suggestionIndex !== null) {
        span.className = "hit";
        const idx = seg.suggestionIndex;
        span.onclick = () => showCard(idx);
      }
      return span;
    }));
    checkButton.hidden = autoCheckEnabled(controller.state);
    undoButton.disabled = !canUndo(controller.state);
    status.textContent = controller.checkError
      ? "check failed, document kept"
      : view.recheckRequired
        ? "suggestions out of date"
        : view.noFindings && controller.state.text
          ? "no findings"
          : "";
  }

  function showCard(index: number): void {
    const suggestion = controller.state.suggestions[index];
    if (!suggestion) return;
    cards.replaceChildren();
    const expl = document.createElement("p");
    expl.textContent = suggestion.explanation;
    cards.append(expl);
    if (suggestion.alternatives_unavailable) {
      const note = document.createElement("p");
      note.textContent = "keine Alternativen verfügbar";
      cards.append(note);
      return;
    }
    for (const alt of suggestion.alternatives) {
      const button = document.createElement("button");
      button.textContent = alt.replacement + (alt.unverified ? " (?)" : "");
      button.onclick = () => {
        controller.apply(suggestion, alt);
        textarea.value = controller.state.text;
        cards.replaceChildren();
      };
      cards.append(button);
    }
  }

  textarea.addEventListener("input", () => controller.handleInput(textarea.value));
  styleSelect.addEventListener("change", () => controller.changeStyle(currentStyle()));
  charInput.addEventListener("change", () => controller.changeStyle(currentStyle()));
  checkButton.addEventListener("click", () => void controller.checkNow());
  undoButton.addEventListener("click", () => {
    controller.undo();
    textarea.value = controller.state.text;
  });
}

if (typeof document !== "undefined" && document.getElementById("text")) {
  mount();
}
