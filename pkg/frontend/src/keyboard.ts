// Shortcuts keep review throughput high: a approve, r reject (focus the
// note first), e edit, Ctrl+Enter submit edit, Esc cancel/dismiss.

import { ReviewSession } from "./store.js";

export interface KeyboardDeps {
  session: ReviewSession;
  focusNote: () => void;
  isTypingContext: (target: EventTarget | null) => boolean;
}

export function handleKey(event: KeyboardEvent, deps: KeyboardDeps): void {
  const { session, focusNote, isTypingContext } = deps;
  const state = session.getState();

  if (event.key === "Escape") {
    if (state.editing) session.cancelEdit();
    else session.dismissBanner();
    return;
  }

  if (event.key === "Enter" && (event.ctrlKey || event.metaKey)) {
    if (state.editing) {
      event.preventDefault();
      void session.submitEdit();
    } else if (state.note.trim()) {
      event.preventDefault();
      void session.reject();
    }
    return;
  }

  // Single-letter shortcuts never fire while typing in a field.
  if (isTypingContext(event.target)) return;
  if (state.phase !== "reviewing" || state.busy) return;

  switch (event.key) {
    case "a":
      event.preventDefault();
      void session.approve();
      break;
    case "r":
      event.preventDefault();
      focusNote();
      break;
    case "e":
      event.preventDefault();
      session.startEdit();
      break;
  }
}

export function installKeyboard(doc: Document, deps: KeyboardDeps): void {
  doc.addEventListener("keydown", (event) => handleKey(event, deps));
}
