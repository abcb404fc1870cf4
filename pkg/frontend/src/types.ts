/** Runtime-validated shapes of the review service's JSON responses. */

import { z } from "zod";

export const PredictionRecord = z.object({
  id: z.string(),
  source: z.number().int(),
  target: z.number().int(),
  probability: z.number(),
  status: z.enum(["Pending", "Accepted", "Rejected"]),
  note: z.string(),
  steward_id: z.string(),
  created_ts: z.number(),
  decided_ts: z.number().nullable(),
});
export type PredictionRecord = z.infer<typeof PredictionRecord>;

export const PredictionPage = z.object({
  total: z.number().int(),
  predictions: z.array(PredictionRecord),
});
export type PredictionPage = z.infer<typeof PredictionPage>;

export const PathEdge = z.object({
  src: z.number().int(),
  dst: z.number().int(),
  relation: z.string(),
  frequency: z.number(),
  rarity: z.number(),
});
export type PathEdge = z.infer<typeof PathEdge>;

export const RankedPath = z.object({
  nodes: z.array(z.number().int()),
  relations: z.array(z.string()),
  score: z.number(),
  breakdown: z.array(PathEdge),
});
export type RankedPath = z.infer<typeof RankedPath>;

export const Snippet = z.object({
  snippet: z.string(),
  source_record_id: z.string(),
  match_terms: z.array(z.string()),
  both_endpoints: z.boolean(),
});
export type Snippet = z.infer<typeof Snippet>;

export const AttributeComparison = z.object({
  value_u: z.unknown(),
  value_v: z.unknown(),
  similarity: z.number(),
});
export type AttributeComparison = z.infer<typeof AttributeComparison>;

export const ExplanationBundle = z.object({
  source: z.number().int(),
  target: z.number().int(),
  score: z.number(),
  paths: z.object({ paths: z.array(RankedPath) }),
  evidence: z.object({ snippets: z.array(Snippet) }),
  comparison: z.object({
    attributes: z.record(AttributeComparison),
    neighbor_jaccard: z.number(),
  }),
});
export type ExplanationBundle = z.infer<typeof ExplanationBundle>;

export const ThresholdsView = z.object({
  autolink: z.number(),
  review: z.number(),
  counts: z.object({
    link: z.number().int(),
    review: z.number().int(),
    nolink: z.number().int(),
  }),
});
export type ThresholdsView = z.infer<typeof ThresholdsView>;

export const WatchlistResult = z.object({
  enqueued: z.array(z.string()),
  skipped: z.number().int(),
});
export type WatchlistResult = z.infer<typeof WatchlistResult>;

export const NodeView = z.object({
  id: z.number().int(),
  kind: z.string(),
  attributes: z.record(z.unknown()),
  degree: z.number().int(),
  neighbors: z.array(z.number().int()),
});
export type NodeView = z.infer<typeof NodeView>;

export type Decision = "accept" | "reject";
