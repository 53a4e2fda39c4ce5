// Submit flow: at most one query in flight, stale responses discarded,
// the previous result kept for side-by-side comparison.

import { ApiClient, ApiRequestError, NetworkError } from "./api.js";
import { serializeQuery, UiQueryState, validate, ValidationIssue } from "./queryState.js";
import { ResultJson, SchemaResponse } from "./types.js";

export type UiError =
  | { kind: "validation"; issues: ValidationIssue[] }
  | { kind: "api"; status: number; code: string; message: string; field?: string }
  | { kind: "network"; message: string };

export type SubmitOutcome =
  | { kind: "ok"; result: ResultJson }
  | { kind: "error"; error: UiError }
  | { kind: "stale" }; // superseded by a newer submit; nothing changed

export class QuerySession {
  current: ResultJson | null = null;
  previous: ResultJson | null = null;
  lastError: UiError | null = null;

  private seq = 0;
  private inFlight: AbortController | null = null;

  constructor(private readonly client: ApiClient) {}

  async submit(state: UiQueryState, schema: SchemaResponse): Promise<SubmitOutcome> {
    const issues = validate(state, schema);
    if (issues.length > 0) {
      this.lastError = { kind: "validation", issues };
      return { kind: "error", error: this.lastError };
    }
    const body = serializeQuery(state, schema);

    const mySeq = ++this.seq;
    this.inFlight?.abort();
    const controller = new AbortController();
    this.inFlight = controller;

    let result: ResultJson;
    try {
      result = await this.client.postQuery(body, { signal: controller.signal });
    } catch (err) {
      if (mySeq !== this.seq) return { kind: "stale" };
      if (err instanceof NetworkError && err.aborted) return { kind: "stale" };
      this.inFlight = null;
      if (err instanceof ApiRequestError) {
        this.lastError = {
          kind: "api",
          status: err.status,
          code: err.body.code,
          message: err.body.message,
          ...(err.body.field !== undefined ? { field: err.body.field } : {}),
        };
      } else {
        this.lastError = { kind: "network", message: String(err) };
      }
      return { kind: "error", error: this.lastError };
    }

    if (mySeq !== this.seq) return { kind: "stale" };
    this.inFlight = null;
    this.previous = this.current;
    this.current = result;
    this.lastError = null;
    return { kind: "ok", result };
  }
}
