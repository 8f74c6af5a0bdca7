// Boot: resolve the reviewer token, wire store -> DOM, load the first item.

import { ReviewApi } from "./api.js";
import { collectRefs, render } from "./dom.js";
import { installKeyboard } from "./keyboard.js";
import { ReviewSession } from "./store.js";

function resolveToken(): string {
  const url = new URL(window.location.href);
  const fromUrl = url.searchParams.get("token");
  if (fromUrl) {
    window.sessionStorage.setItem("reviewer-token", fromUrl);
    url.searchParams.delete("token");
    window.history.replaceState(null, "", url.toString());
    return fromUrl;
  }
  const stored = window.sessionStorage.getItem("reviewer-token");
  if (stored) return stored;
  const typed = window.prompt("Reviewer token:") ?? "";
  window.sessionStorage.setItem("reviewer-token", typed);
  return typed;
}

function main(): void {
  const refs = collectRefs(document);
  const api = new ReviewApi("", resolveToken());
  const session = new ReviewSession(api, (state) => render(refs, state));

  refs.draft.addEventListener("input", () => session.setDraft(refs.draft.value));
  refs.note.addEventListener("input", () => session.setNote(refs.note.value));

  const byId = (id: string) => document.getElementById(id)!;
  byId("btn-approve").addEventListener("click", () => void session.approve());
  byId("btn-reject").addEventListener("click", () => void session.reject());
  byId("btn-edit").addEventListener("click", () => session.startEdit());
  byId("btn-save-edit").addEventListener("click", () => void session.submitEdit());
  byId("btn-cancel-edit").addEventListener("click", () => session.cancelEdit());
  byId("btn-next").addEventListener("click", () => void session.loadNext());

  installKeyboard(document, {
    session,
    focusNote: () => refs.note.focus(),
    isTypingContext: (target) =>
      target instanceof HTMLInputElement ||
      target instanceof HTMLTextAreaElement ||
      (target instanceof HTMLElement && target.isContentEditable),
  });

  void session.loadNext();
}

main();
