// Thin fetch client for the session service. Every document mutation in the
// app funnels through here; the UI itself never touches color math.

import type {
  EditBody,
  EditResponse,
  SelectionBody,
  SelectionJson,
  StateJson,
  SummaryJson,
} from "./types";

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.status = status;
    this.code = code;
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let code = "unknown";
  let message = response.statusText;
  try {
    const body = await response.json();
    if (typeof body.error === "string") code = body.error;
    if (typeof body.message === "string") message = body.message;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, code, message);
}

export type StateQuery = {
  zoom?: number;
  step?: number;
  playhead?: number;
};

export class SessionApi {
  readonly baseUrl: string;
  sessionId: string | null = null;

  constructor(baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
  }

  private sessionPath(suffix: string): string {
    if (!this.sessionId) throw new Error("no session yet");
    return `${this.baseUrl}/sessions/${this.sessionId}${suffix}`;
  }

  async createSession(document: unknown): Promise<SummaryJson> {
    const response = await fetch(`${this.baseUrl}/sessions`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ document }),
    });
    const summary = await unwrap<SummaryJson>(response);
    this.sessionId = summary.session_id;
    return summary;
  }

  async getState(query: StateQuery = {}): Promise<StateJson> {
    const params = new URLSearchParams();
    if (query.zoom !== undefined) params.set("zoom", String(query.zoom));
    if (query.step !== undefined) params.set("step", String(query.step));
    if (query.playhead !== undefined) {
      params.set("playhead", String(query.playhead));
    }
    const qs = params.toString();
    const response = await fetch(this.sessionPath(`/state${qs ? "?" + qs : ""}`));
    return unwrap<StateJson>(response);
  }

  async setSelection(body: SelectionBody): Promise<SelectionJson> {
    const response = await fetch(this.sessionPath("/selection"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    const wrapped = await unwrap<{ selection: SelectionJson }>(response);
    return wrapped.selection;
  }

  async applyEdit(body: EditBody): Promise<EditResponse> {
    const response = await fetch(this.sessionPath("/edits"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return unwrap<EditResponse>(response);
  }

  async undo(): Promise<{ log_depth: number }> {
    const response = await fetch(this.sessionPath("/undo"), { method: "POST" });
    return unwrap<{ log_depth: number }>(response);
  }

  /** Current document as Lottie JSON text, byte-stable where unedited. */
  async exportDocument(): Promise<string> {
    const response = await fetch(this.sessionPath("/export"));
    if (!response.ok) {
      return unwrap<never>(response);
    }
    return response.text();
  }
}
