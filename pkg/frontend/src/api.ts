/** Thin typed client for the af-prov HTTP API.
 *
 * Mutating calls go through a single-flight queue so at most one is in
 * flight per page; responses always reflect the latest requested state.
 */

import type {
  CriticalResponse,
  GroundedResponse,
  OverlayResponse,
  StableResponse,
  SuspendResponse,
} from "./types.js";

export class ApiRequestError extends Error {
  constructor(
    public status: number,
    public code: string,
    detail: string,
  ) {
    super(detail);
  }
}

async function asError(resp: Response): Promise<ApiRequestError> {
  let code = "error";
  let detail = `${resp.status} ${resp.statusText}`;
  try {
    const body = await resp.json();
    if (body && typeof body === "object") {
      code = body.code ?? code;
      detail = body.detail ?? detail;
    }
  } catch {
    // non-JSON error body; keep the status line
  }
  return new ApiRequestError(resp.status, code, detail);
}

export class ApiClient {
  private mutationChain: Promise<unknown> = Promise.resolve();

  constructor(private baseUrl: string = "") {}

  private async getJson<T>(path: string): Promise<T> {
    const resp = await fetch(this.baseUrl + path);
    if (!resp.ok) throw await asError(resp);
    return (await resp.json()) as T;
  }

  private queue<T>(work: () => Promise<T>): Promise<T> {
    const next = this.mutationChain.then(work, work);
    this.mutationChain = next.catch(() => undefined);
    return next;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    return this.queue(async () => {
      const resp = await fetch(this.baseUrl + path, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      });
      if (!resp.ok) throw await asError(resp);
      return (await resp.json()) as T;
    });
  }

  createSession(format: string, content: string): Promise<{ id: string }> {
    return this.postJson("/sessions", { format, content });
  }

  grounded(sid: string): Promise<GroundedResponse> {
    return this.getJson(`/sessions/${sid}/grounded?layout=true`);
  }

  stable(sid: string): Promise<StableResponse> {
    return this.getJson(`/sessions/${sid}/stable`);
  }

  critical(sid: string, index: number): Promise<CriticalResponse> {
    return this.getJson(`/sessions/${sid}/stable/${index}/critical`);
  }

  overlay(sid: string, index: number, delta: number): Promise<OverlayResponse> {
    return this.getJson(`/sessions/${sid}/overlay/${index}/${delta}?layout=true`);
  }

  suspend(sid: string, edges: [string, string][]): Promise<SuspendResponse> {
    return this.postJson(`/sessions/${sid}/suspend`, { edges });
  }
}
