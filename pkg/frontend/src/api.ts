// Thin fetch layer over the three service endpoints. The fetch function
// is injectable so tests can count or fake requests.

import { ApiErrorBody, QueryJson, ResultJson, SchemaResponse, StatsResponse } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

// non-2xx with a parseable error body
export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(`${body.code}: ${body.message}`);
    this.name = "ApiRequestError";
  }
}

// connection refused, DNS failure, aborted request, unparseable reply
export class NetworkError extends Error {
  constructor(message: string, readonly aborted = false) {
    super(message);
    this.name = "NetworkError";
  }
}

async function errorFromResponse(resp: Response): Promise<ApiRequestError> {
  let body: ApiErrorBody;
  try {
    body = (await resp.json()) as ApiErrorBody;
  } catch {
    body = { code: "internal_error", message: `HTTP ${resp.status}` };
  }
  return new ApiRequestError(resp.status, body);
}

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    let resp: Response;
    try {
      resp = await this.fetchFn(this.baseUrl + path);
    } catch (err) {
      throw new NetworkError(String(err));
    }
    if (!resp.ok) throw await errorFromResponse(resp);
    return (await resp.json()) as T;
  }

  getSchema(): Promise<SchemaResponse> {
    return this.getJson<SchemaResponse>("/schema");
  }

  getStats(): Promise<StatsResponse> {
    return this.getJson<StatsResponse>("/catalog/stats");
  }

  // Takes the already-serialized query so the exact bytes the form
  // projected are the bytes on the wire.
  async postQuery(
    body: string | QueryJson,
    opts: { limit?: number; signal?: AbortSignal } = {},
  ): Promise<ResultJson> {
    const path = opts.limit === undefined ? "/query" : `/query?limit=${opts.limit}`;
    let resp: Response;
    try {
      resp = await this.fetchFn(this.baseUrl + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: typeof body === "string" ? body : JSON.stringify(body),
        signal: opts.signal,
      });
    } catch (err) {
      const aborted = err instanceof DOMException && err.name === "AbortError";
      throw new NetworkError(String(err), aborted);
    }
    if (!resp.ok) throw await errorFromResponse(resp);
    return (await resp.json()) as ResultJson;
  }
}
