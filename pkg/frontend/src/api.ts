/** Thin fetch client for the review service HTTP API.
 *
 * Every response is validated against the zod schemas in types.ts, so a
 * contract drift fails loudly instead of rendering garbage. The fetch
 * implementation is injectable for tests.
 */

import {
  Decision,
  ExplanationBundle,
  NodeView,
  PredictionPage,
  PredictionRecord,
  ThresholdsView,
  WatchlistResult,
} from "./types.js";

export type FetchLike = (
  url: string,
  init?: {
    method?: string;
    headers?: Record<string, string>;
    body?: string;
  },
) => Promise<{ status: number; json(): Promise<unknown> }>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }

  /** The service answers 409 when a prediction was already decided. */
  get alreadyDecided(): boolean {
    return this.status === 409;
  }
}

export interface ApiClientOptions {
  stewardId?: string;
  fetchImpl?: FetchLike;
}

export class ApiClient {
  private readonly fetchImpl: FetchLike;
  readonly stewardId: string;

  constructor(
    readonly baseUrl: string,
    options: ApiClientOptions = {},
  ) {
    this.stewardId = options.stewardId ?? "steward";
    this.fetchImpl =
      options.fetchImpl ?? (globalThis.fetch as unknown as FetchLike);
  }

  private async request(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<unknown> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: {
        "Content-Type": "application/json",
        "X-Steward-Id": this.stewardId,
      },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await response.json();
    if (response.status >= 400) {
      const detail =
        typeof payload === "object" && payload !== null && "detail" in payload
          ? String((payload as { detail: unknown }).detail)
          : JSON.stringify(payload);
      throw new ApiError(response.status, detail);
    }
    return payload;
  }

  async health(): Promise<{ status: string; version: string }> {
    return (await this.request("GET", "/health")) as {
      status: string;
      version: string;
    };
  }

  async listPredictions(
    options: { status?: string; limit?: number; offset?: number } = {},
  ): Promise<PredictionPage> {
    const params = new URLSearchParams();
    if (options.status) params.set("status", options.status);
    if (options.limit !== undefined) params.set("limit", String(options.limit));
    if (options.offset !== undefined)
      params.set("offset", String(options.offset));
    const query = params.toString();
    const raw = await this.request(
      "GET",
      `/predictions${query ? "?" + query : ""}`,
    );
    return PredictionPage.parse(raw);
  }

  async getPrediction(id: string): Promise<PredictionRecord> {
    return PredictionRecord.parse(
      await this.request("GET", `/predictions/${id}`),
    );
  }

  async getExplanation(id: string): Promise<ExplanationBundle> {
    return ExplanationBundle.parse(
      await this.request("GET", `/predictions/${id}/explanation`),
    );
  }

  async postFeedback(
    id: string,
    decision: Decision,
    note = "",
  ): Promise<PredictionRecord> {
    return PredictionRecord.parse(
      await this.request("POST", `/predictions/${id}/feedback`, {
        decision,
        note,
      }),
    );
  }

  async postWatchlist(nodeIds: number[], topK = 50): Promise<WatchlistResult> {
    return WatchlistResult.parse(
      await this.request("POST", "/watchlist", {
        node_ids: nodeIds,
        top_k: topK,
      }),
    );
  }

  async getThresholds(): Promise<ThresholdsView> {
    return ThresholdsView.parse(await this.request("GET", "/thresholds"));
  }

  async putThresholds(
    autolink: number,
    review: number,
  ): Promise<ThresholdsView> {
    return ThresholdsView.parse(
      await this.request("PUT", "/thresholds", { autolink, review }),
    );
  }

  async getGraphsheet(): Promise<Record<string, unknown>> {
    return (await this.request("GET", "/graphsheet?format=json")) as Record<
      string,
      unknown
    >;
  }

  async getNode(id: number): Promise<NodeView> {
    return NodeView.parse(await this.request("GET", `/nodes/${id}`));
  }
}
