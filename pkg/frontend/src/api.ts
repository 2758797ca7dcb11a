/** Thin HTTP client for the weight engine. All numerical work happens on the
 * server; this module only ships documents and unwraps response envelopes.
 * Each request kind keeps at most one call in flight: starting a new solve
 * aborts the previous one so stale results never reach the UI. */

import {
  ApiEnvelope,
  ConsistencyResult,
  FpcsDocument,
  ScaleEntry,
  SolveResult,
} from "./types.js";

export class ApiRequestError extends Error {
  readonly code: string;
  readonly fieldPath: string | null;
  readonly status: number;

  constructor(code: string, message: string, fieldPath: string | null, status: number) {
    super(message);
    this.code = code;
    this.fieldPath = fieldPath;
    this.status = status;
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface SolveOptions {
  m?: number;
  grid?: number[];
  seed?: number;
  tol?: number;
}

export interface ConsistencyOptions {
  gridPoints?: number;
  threshold?: number;
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;
  private readonly inFlight = new Map<string, AbortController>();

  constructor(baseUrl = "", fetchFn: FetchLike = (url, init) => fetch(url, init)) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn;
  }

  async solve(doc: FpcsDocument, options: SolveOptions = {}): Promise<SolveResult> {
    const body: Record<string, unknown> = { ...doc };
    if (options.grid !== undefined) body.grid = options.grid;
    else body.m = options.m ?? 17;
    if (options.seed !== undefined) body.seed = options.seed;
    if (options.tol !== undefined) body.tol = options.tol;
    return this.post<SolveResult>("/api/solve", body, "solve");
  }

  async consistency(doc: FpcsDocument, options: ConsistencyOptions = {}): Promise<ConsistencyResult> {
    const body: Record<string, unknown> = { ...doc };
    body.grid_points = options.gridPoints ?? 17;
    if (options.threshold !== undefined) body.threshold = options.threshold;
    return this.post<ConsistencyResult>("/api/consistency", body, "consistency");
  }

  async scale(): Promise<ScaleEntry[]> {
    return this.get<ScaleEntry[]>("/api/scale");
  }

  /** True when an aborted request caused the error; callers should ignore it. */
  static isCancellation(error: unknown): boolean {
    return error instanceof DOMException && error.name === "AbortError";
  }

  private async post<T>(path: string, body: unknown, kind: string): Promise<T> {
    this.inFlight.get(kind)?.abort();
    const controller = new AbortController();
    this.inFlight.set(kind, controller);
    try {
      const response = await this.fetchFn(this.baseUrl + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
      return await unwrap<T>(response);
    } finally {
      if (this.inFlight.get(kind) === controller) this.inFlight.delete(kind);
    }
  }

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path);
    return unwrap<T>(response);
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  let envelope: ApiEnvelope<T>;
  try {
    envelope = (await response.json()) as ApiEnvelope<T>;
  } catch {
    throw new ApiRequestError("bad_response", `server returned status ${response.status}`, null, response.status);
  }
  if (!envelope.ok || envelope.result === undefined) {
    const error = envelope.error ?? { code: "unknown", message: "request failed", field_path: null };
    throw new ApiRequestError(error.code, error.message, error.field_path, response.status);
  }
  return envelope.result;
}
