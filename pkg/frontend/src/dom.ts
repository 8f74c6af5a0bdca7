// Render the session state into the static page skeleton. Every service
// error code gets a distinct, inspectable rendering via data-code.

import { ViewState } from "./store.js";
import { countTokens } from "./tokens.js";

export interface Refs {
  banner: HTMLElement;
  progress: HTMLElement;
  card: HTMLElement;
  image: HTMLImageElement;
  answer: HTMLElement;
  meta: HTMLElement;
  rationale: HTMLElement;
  editor: HTMLElement;
  draft: HTMLTextAreaElement;
  tokenCount: HTMLElement;
  note: HTMLInputElement;
  drained: HTMLElement;
}

export function collectRefs(doc: Document): Refs {
  const byId = <T extends HTMLElement>(id: string): T => {
    const el = doc.getElementById(id);
    if (!el) throw new Error(`missing #${id} in page skeleton`);
    return el as T;
  };
  return {
    banner: byId("banner"),
    progress: byId("progress"),
    card: byId("card"),
    image: byId<HTMLImageElement>("item-image"),
    answer: byId("item-answer"),
    meta: byId("item-meta"),
    rationale: byId("item-rationale"),
    editor: byId("editor"),
    draft: byId<HTMLTextAreaElement>("draft"),
    tokenCount: byId("token-count"),
    note: byId<HTMLInputElement>("note"),
    drained: byId("drained"),
  };
}

export function render(refs: Refs, state: ViewState): void {
  // Banner: one element, kind + stable code drive distinct styling.
  if (state.banner) {
    refs.banner.hidden = false;
    refs.banner.textContent = state.banner.text;
    refs.banner.className = `banner banner-${state.banner.kind}`;
    if (state.banner.code) {
      refs.banner.setAttribute("data-code", state.banner.code);
    } else {
      refs.banner.removeAttribute("data-code");
    }
  } else {
    refs.banner.hidden = true;
    refs.banner.textContent = "";
    refs.banner.className = "banner";
    refs.banner.removeAttribute("data-code");
  }

  if (state.progress) {
    const p = state.progress;
    refs.progress.textContent =
      `open ${p.open} · leased ${p.leased} · final ${p.d3} · quarantined ${p.quarantined}`;
  }

  refs.drained.hidden = state.phase !== "drained";
  refs.card.hidden = state.phase !== "reviewing" && state.phase !== "loading";

  const item = state.item;
  if (item) {
    refs.image.src = item.image_ref;
    refs.image.alt = `event frame for ${item.id}`;
    refs.answer.textContent = item.answer;
    refs.meta.textContent =
      `${item.id} · ${item.language} · revision ${item.revision} · v${item.version}`;
    refs.rationale.textContent = item.rationale;

    refs.editor.hidden = !state.editing;
    refs.rationale.hidden = state.editing;
    if (state.editing) {
      if (refs.draft.value !== state.draft) refs.draft.value = state.draft;
      const tokens = countTokens(state.draft);
      refs.tokenCount.textContent = `${tokens} / ${item.l_max} tokens`;
      refs.tokenCount.className = tokens >= item.l_max ? "tokens over" : "tokens";
    }
    if (refs.note.value !== state.note) refs.note.value = state.note;
  }
}
