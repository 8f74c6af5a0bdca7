// Session state machine behind the UI. All writes go through the API
// client's single decision endpoint; every state change flows through
// setState so the DOM layer re-renders from one place.
//
// Behavioral contract:
// - a decision is submittable only at the version of the fetched item
//   (enforced by construction: submissions always carry state.item.version);
// - a stale submission (VersionConflict) refetches the item, tells the
//   reviewer, and preserves any pending draft;
// - network failures are non-destructive: item, draft, and note survive;
// - a failing edit keeps the reviewer in the editor with the verdict shown.

import {
  ApiError,
  DecisionOutcome,
  NetworkError,
  Progress,
  QueueItem,
  ReviewApi,
} from "./api.js";

export type BannerKind =
  | "info"
  | "success"
  | "conflict"
  | "verdict"
  | "network"
  | "service-error";

export interface Banner {
  kind: BannerKind;
  /** Stable error name for service failures; distinct rendering per code. */
  code?: string;
  text: string;
}

export type Phase = "idle" | "loading" | "reviewing" | "drained";

export interface ViewState {
  phase: Phase;
  item: QueueItem | null;
  editing: boolean;
  draft: string;
  note: string;
  banner: Banner | null;
  progress: Progress | null;
  busy: boolean;
}

const INITIAL: ViewState = {
  phase: "idle",
  item: null,
  editing: false,
  draft: "",
  note: "",
  banner: null,
  progress: null,
  busy: false,
};

export type Listener = (state: ViewState) => void;

export class ReviewSession {
  private state: ViewState = { ...INITIAL };

  constructor(
    private readonly api: ReviewApi,
    private readonly listener: Listener = () => {},
  ) {}

  getState(): ViewState {
    return this.state;
  }

  private setState(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    this.listener(this.state);
  }

  /** Fetch the next open item; drafts/notes reset for the new item. */
  async loadNext(): Promise<void> {
    this.setState({ phase: "loading", busy: true, banner: this.state.banner });
    try {
      const item = await this.api.fetchNext();
      if (item === null) {
        this.setState({
          phase: "drained", item: null, editing: false, draft: "", note: "",
          busy: false,
        });
      } else {
        // Keep any pending banner (e.g. a conflict notice) visible across
        // the advance; Esc or the next event replaces it.
        this.setState({
          phase: "reviewing", item, editing: false, draft: item.rationale,
          note: "", busy: false,
        });
      }
    } catch (err) {
      this.fail(err, { phase: this.state.item ? "reviewing" : "idle" });
    }
    await this.refreshProgress();
  }

  async refreshProgress(): Promise<void> {
    try {
      this.setState({ progress: await this.api.progress() });
    } catch {
      // Progress is advisory; never clobber review state over it.
    }
  }

  setDraft(text: string): void {
    this.setState({ draft: text });
  }

  setNote(text: string): void {
    this.setState({ note: text });
  }

  startEdit(): void {
    if (this.state.item) {
      this.setState({ editing: true, draft: this.state.draft || this.state.item.rationale });
    }
  }

  cancelEdit(): void {
    this.setState({ editing: false });
  }

  dismissBanner(): void {
    this.setState({ banner: null });
  }

  async approve(): Promise<void> {
    await this.decide({ action: "approve" });
  }

  async reject(): Promise<void> {
    if (!this.state.note.trim()) {
      this.setState({
        banner: { kind: "info", text: "A reject needs a non-empty note." },
      });
      return;
    }
    await this.decide({ action: "reject", note: this.state.note });
  }

  async submitEdit(): Promise<void> {
    await this.decide({ action: "edit", edited_text: this.state.draft });
  }

  private async decide(
    body: { action: "approve" | "reject" | "edit"; note?: string; edited_text?: string },
  ): Promise<void> {
    const item = this.state.item;
    if (!item || this.state.busy) return;
    this.setState({ busy: true });
    let outcome: DecisionOutcome;
    try {
      outcome = await this.api.submit(item.id, {
        ...body,
        sample_version: item.version,
      });
    } catch (err) {
      if (err instanceof ApiError && err.code === "VersionConflict") {
        await this.recoverFromConflict(item.id);
      } else {
        this.fail(err, {});
      }
      return;
    }

    if (outcome.outcome === "evaluation_failed" && outcome.verdict) {
      // Edited text failed the automatic gate: stay in the editor with the
      // draft intact and the verdict on screen; version advanced server-side.
      this.setState({
        busy: false,
        editing: true,
        item: { ...item, version: outcome.version },
        banner: {
          kind: "verdict",
          text: `Edit failed the quality gate: ${outcome.verdict.violations.join(", ")} ` +
            `(${outcome.verdict.token_count} tokens).`,
        },
      });
      return;
    }

    const verb = outcome.outcome === "accepted" ? "approved into the final set"
      : "quarantined";
    this.setState({
      busy: false,
      banner: { kind: "success", text: `${item.id} ${verb}.` },
    });
    await this.loadNext();
  }

  /** Stale version: refetch, inform, keep the reviewer's pending work. */
  private async recoverFromConflict(itemId: string): Promise<void> {
    const draft = this.state.draft;
    const note = this.state.note;
    try {
      const fresh = await this.api.getItem(itemId);
      if (fresh.decided) {
        this.setState({
          busy: false,
          banner: {
            kind: "conflict",
            code: "VersionConflict",
            text: `${itemId} was already decided elsewhere; loading the next item.`,
          },
        });
        await this.loadNext();
        return;
      }
      this.setState({
        busy: false,
        item: fresh,
        draft,
        note,
        banner: {
          kind: "conflict",
          code: "VersionConflict",
          text: "Someone else touched this item; it was refetched. " +
            "Your draft is preserved - review and resubmit.",
        },
      });
    } catch (err) {
      this.fail(err, {});
    }
  }

  private fail(err: unknown, patch: Partial<ViewState>): void {
    if (err instanceof NetworkError) {
      this.setState({
        ...patch,
        busy: false,
        banner: {
          kind: "network",
          text: "The service is unreachable; nothing was lost. Retry when it is back.",
        },
      });
    } else if (err instanceof ApiError) {
      this.setState({
        ...patch,
        busy: false,
        banner: { kind: "service-error", code: err.code, text: `${err.code}: ${err.detail}` },
      });
    } else {
      this.setState({
        ...patch,
        busy: false,
        banner: { kind: "service-error", code: "UnknownError", text: String(err) },
      });
    }
  }
}
