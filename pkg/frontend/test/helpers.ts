// Shared test scaffolding: a minimal element stub and a render harness so
// behavioral tests can assert what the reviewer actually sees.

import { Refs, render } from "../src/dom.js";
import { ViewState } from "../src/store.js";

export class StubElement {
  hidden = false;
  textContent = "";
  className = "";
  src = "";
  alt = "";
  value = "";
  private attrs = new Map<string, string>();

  setAttribute(name: string, value: string): void {
    this.attrs.set(name, value);
  }

  removeAttribute(name: string): void {
    this.attrs.delete(name);
  }

  getAttribute(name: string): string | null {
    return this.attrs.get(name) ?? null;
  }
}

export interface Harness {
  refs: Refs;
  banner: StubElement;
  onChange: (state: ViewState) => void;
}

export function renderHarness(): Harness {
  const raw = {
    banner: new StubElement(),
    progress: new StubElement(),
    card: new StubElement(),
    image: new StubElement(),
    answer: new StubElement(),
    meta: new StubElement(),
    rationale: new StubElement(),
    editor: new StubElement(),
    draft: new StubElement(),
    tokenCount: new StubElement(),
    note: new StubElement(),
    drained: new StubElement(),
  };
  const refs = raw as unknown as Refs;
  return {
    refs,
    banner: raw.banner,
    onChange: (state) => render(refs, state),
  };
}
