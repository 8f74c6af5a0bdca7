// Typed client for the review service. The only write it can issue is
// POST /items/{id}/decision; all other calls are reads.

export interface QueueItem {
  id: string;
  image_ref: string;
  answer: string;
  language: string;
  rationale: string;
  revision: number;
  version: number;
  l_max: number;
  last_verdict: VerdictView | null;
  decided: string | null;
}

export interface VerdictView {
  passed: boolean;
  violations: string[];
  token_count: number;
}

export interface Progress {
  open: number;
  leased: number;
  d3: number;
  quarantined: number;
}

export type DecisionAction = "approve" | "reject" | "edit";

export interface DecisionBody {
  action: DecisionAction;
  sample_version: number;
  note?: string;
  edited_text?: string;
}

export interface DecisionOutcome {
  outcome: "accepted" | "quarantined" | "evaluation_failed";
  version: number;
  stage?: string;
  verdict?: VerdictView;
}

/** Service-reported failure; `code` is the stable error name. */
export class ApiError extends Error {
  constructor(
    readonly code: string,
    readonly status: number,
    readonly detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

/** Transport failure: the service never saw (or never answered) the call. */
export class NetworkError extends Error {
  constructor(detail: string) {
    super(`network failure: ${detail}`);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ReviewApi {
  constructor(
    private readonly baseUrl: string,
    private readonly token: string,
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private headers(json = false): Record<string, string> {
    const h: Record<string, string> = { Authorization: `Bearer ${this.token}` };
    if (json) h["Content-Type"] = "application/json";
    return h;
  }

  private async request(url: string, init?: RequestInit): Promise<Response> {
    let resp: Response;
    try {
      resp = await this.fetchFn(`${this.baseUrl}${url}`, init);
    } catch (err) {
      throw new NetworkError(err instanceof Error ? err.message : String(err));
    }
    if (resp.ok || resp.status === 204) return resp;
    let code = "UnknownError";
    let detail = `HTTP ${resp.status}`;
    try {
      const body = await resp.json();
      if (typeof body?.error === "string") code = body.error;
      if (typeof body?.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body; keep the generic detail
    }
    throw new ApiError(code, resp.status, detail);
  }

  /** Lease the oldest open item; null when the queue is drained. */
  async fetchNext(): Promise<QueueItem | null> {
    const resp = await this.request("/queue/next", { headers: this.headers() });
    if (resp.status === 204) return null;
    return (await resp.json()) as QueueItem;
  }

  async getItem(id: string): Promise<QueueItem> {
    const resp = await this.request(`/items/${encodeURIComponent(id)}`, {
      headers: this.headers(),
    });
    return (await resp.json()) as QueueItem;
  }

  async submit(id: string, body: DecisionBody): Promise<DecisionOutcome> {
    const resp = await this.request(`/items/${encodeURIComponent(id)}/decision`, {
      method: "POST",
      headers: this.headers(true),
      body: JSON.stringify(body),
    });
    return (await resp.json()) as DecisionOutcome;
  }

  async progress(): Promise<Progress> {
    const resp = await this.request("/progress");
    return (await resp.json()) as Progress;
  }
}
