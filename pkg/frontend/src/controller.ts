/** UI state machine, kept free of DOM code so it is testable headlessly.
 *
 * The server log is the single source of truth: the controller never stores
 * decisions locally beyond the optimistic update that a failed request rolls
 * back, and displayed numbers always come from API responses.
 */

import { ApiClient, ApiError } from "./api.js";
import {
  Decision,
  ExplanationBundle,
  PredictionPage,
  ThresholdsView,
} from "./types.js";

export interface ThresholdDraft {
  autolink: number;
  review: number;
}

export interface AppState {
  page: PredictionPage;
  statusFilter: string;
  limit: number;
  offset: number;
  selectedId: string | null;
  bundle: ExplanationBundle | null;
  thresholds: ThresholdsView | null;
  draft: ThresholdDraft;
  banner: string | null;
}

/** Client-side guard mirrored by the server: review must not exceed autolink. */
export function thresholdsValid(draft: ThresholdDraft): boolean {
  return (
    Number.isFinite(draft.autolink) &&
    Number.isFinite(draft.review) &&
    draft.review <= draft.autolink
  );
}

export class AppController {
  readonly state: AppState = {
    page: { total: 0, predictions: [] },
    statusFilter: "Pending",
    limit: 50,
    offset: 0,
    selectedId: null,
    bundle: null,
    thresholds: null,
    draft: { autolink: 24, review: 12 },
    banner: null,
  };

  constructor(private readonly api: ApiClient) {}

  async refresh(): Promise<void> {
    this.state.page = await this.api.listPredictions({
      status: this.state.statusFilter || undefined,
      limit: this.state.limit,
      offset: this.state.offset,
    });
    this.state.thresholds = await this.api.getThresholds();
    this.state.draft = {
      autolink: this.state.thresholds.autolink,
      review: this.state.thresholds.review,
    };
  }

  async setFilter(status: string): Promise<void> {
    this.state.statusFilter = status;
    this.state.offset = 0;
    this.state.page = await this.api.listPredictions({
      status: status || undefined,
      limit: this.state.limit,
      offset: 0,
    });
  }

  async setPage(offset: number): Promise<void> {
    this.state.offset = Math.max(0, offset);
    this.state.page = await this.api.listPredictions({
      status: this.state.statusFilter || undefined,
      limit: this.state.limit,
      offset: this.state.offset,
    });
  }

  async select(id: string): Promise<void> {
    this.state.selectedId = id;
    this.state.bundle = await this.api.getExplanation(id);
  }

  /** Accept/reject with an optimistic status flip, rolled back on failure. */
  async decide(id: string, decision: Decision, note = ""): Promise<void> {
    const record = this.state.page.predictions.find((p) => p.id === id);
    const previous = record?.status;
    if (record) {
      record.status = decision === "accept" ? "Accepted" : "Rejected";
    }
    try {
      await this.api.postFeedback(id, decision, note);
      this.state.banner = null;
    } catch (err) {
      if (record && previous) record.status = previous;
      if (err instanceof ApiError && err.alreadyDecided) {
        this.state.banner = `Already decided by another steward: ${err.detail}`;
        return;
      }
      throw err;
    }
    // decided items leave the Pending filter on the next server read
    await this.setPage(this.state.offset);
  }

  setDraft(draft: Partial<ThresholdDraft>): void {
    this.state.draft = { ...this.state.draft, ...draft };
  }

  get canApplyThresholds(): boolean {
    return thresholdsValid(this.state.draft);
  }

  /** PUT the draft thresholds; refuses client-side when the sliders invert. */
  async applyThresholds(): Promise<void> {
    if (!this.canApplyThresholds) {
      this.state.banner = "Review threshold must not exceed auto-link.";
      return;
    }
    this.state.thresholds = await this.api.putThresholds(
      this.state.draft.autolink,
      this.state.draft.review,
    );
    this.state.banner = null;
    await this.setPage(this.state.offset);
  }

  async addWatchlist(nodeIds: number[], topK: number): Promise<number> {
    const result = await this.api.postWatchlist(nodeIds, topK);
    await this.setPage(0);
    return result.enqueued.length;
  }
}
