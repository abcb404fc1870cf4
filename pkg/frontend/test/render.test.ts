import { describe, expect, it } from "vitest";

import {
  escapeHtml,
  renderEvidencePane,
  renderExplanation,
  renderQueue,
  renderThresholdPanel,
} from "../src/render.js";
import { AppState } from "../src/controller.js";
import { ExplanationBundle, PredictionPage } from "../src/types.js";

const bundle: ExplanationBundle = {
  source: 3,
  target: 9,
  score: 0.875,
  paths: {
    paths: [
      {
        nodes: [3, 5, 9],
        relations: ["household", "colleague"],
        score: 0.4312,
        breakdown: [
          { src: 3, dst: 5, relation: "household", frequency: 0.125, rarity: 2.0794 },
          { src: 5, dst: 9, relation: "colleague", frequency: 0.5, rarity: 0.6931 },
        ],
      },
    ],
  },
  evidence: {
    snippets: [
      {
        snippet: "met alice smith and grace lee at the quarterly review",
        source_record_id: "r042",
        match_terms: ["alice", "grace"],
        both_endpoints: true,
      },
    ],
  },
  comparison: {
    attributes: {
      city: { value_u: "Springfield", value_v: "Springfeld", similarity: 0.9 },
      gender: { value_u: "F", value_v: "F", similarity: 1.0 },
    },
    neighbor_jaccard: 0.3333,
  },
};

describe("explanation panes", () => {
  const html = renderExplanation(bundle);

  it("renders the header fields", () => {
    expect(html).toContain("3");
    expect(html).toContain("9");
    expect(html).toContain("87.5%");
  });

  it("renders the path pane as an inline chain with full breakdown", () => {
    expect(html).toContain("&mdash;household&rarr; 5");
    expect(html).toContain("&mdash;colleague&rarr; 9");
    expect(html).toContain("score 0.4312");
    // every breakdown field: endpoints, relation, frequency, rarity
    expect(html).toContain("3&ndash;5");
    expect(html).toContain("frequency 0.1250");
    expect(html).toContain("rarity 2.0794");
    expect(html).toContain("frequency 0.5000");
    expect(html).toContain("rarity 0.6931");
  });

  it("renders every snippet field with highlighted endpoint terms", () => {
    expect(html).toContain("<mark>alice</mark>");
    expect(html).toContain("<mark>grace</mark>");
    expect(html).toContain("r042");
    expect(html).toContain("alice, grace");
    expect(html).toContain("mentions both endpoints");
  });

  it("renders the comparison table and jaccard", () => {
    expect(html).toContain("Springfield");
    expect(html).toContain("Springfeld");
    expect(html).toContain("0.900");
    expect(html).toContain("gender");
    expect(html).toContain("1.000");
    expect(html).toContain("Neighbor Jaccard: 0.333");
  });

  it("renders empty evidence as an explicit none-found state", () => {
    const empty = { ...bundle, evidence: { snippets: [] } };
    const pane = renderEvidencePane(empty);
    expect(pane).toContain("No verification evidence found");
    const full = renderExplanation(empty);
    expect(full).toContain("No verification evidence found");
  });

  it("renders empty paths and empty comparison explicitly", () => {
    const empty: ExplanationBundle = {
      ...bundle,
      paths: { paths: [] },
      comparison: { attributes: {}, neighbor_jaccard: 0 },
    };
    const html2 = renderExplanation(empty);
    expect(html2).toContain("No existing paths found");
    expect(html2).toContain("No shared attributes to compare");
  });

  it("escapes html in attribute values", () => {
    const nasty = {
      ...bundle,
      comparison: {
        attributes: {
          note: { value_u: "<img src=x>", value_v: "b", similarity: 0.1 },
        },
        neighbor_jaccard: 0,
      },
    };
    expect(renderExplanation(nasty)).not.toContain("<img");
    expect(escapeHtml(`<a b="c">`)).toBe("&lt;a b=&quot;c&quot;&gt;");
  });
});

describe("queue", () => {
  const page: PredictionPage = {
    total: 2,
    predictions: [
      {
        id: "p000001-000002",
        source: 1,
        target: 2,
        probability: 0.8,
        status: "Pending",
        note: "",
        steward_id: "",
        created_ts: 1,
        decided_ts: null,
      },
      {
        id: "p000003-000004",
        source: 3,
        target: 4,
        probability: 0.6,
        status: "Accepted",
        note: "ok",
        steward_id: "s1",
        created_ts: 1,
        decided_ts: 2,
      },
    ],
  };

  it("renders rows in the order the server sent", () => {
    const html = renderQueue(page, null);
    expect(html.indexOf("p000001-000002")).toBeLessThan(
      html.indexOf("p000003-000004"),
    );
    expect(html).toContain("80.0%");
    expect(html).toContain("2 prediction(s) total");
  });

  it("only pending rows get decision buttons", () => {
    const html = renderQueue(page, null);
    expect(html).toContain('data-action="accept" data-id="p000001-000002"');
    expect(html).not.toContain('data-action="accept" data-id="p000003-000004"');
  });

  it("renders an explicit empty state", () => {
    expect(renderQueue({ total: 0, predictions: [] }, null)).toContain(
      "No predictions in this view",
    );
  });
});

describe("threshold panel", () => {
  const base: AppState = {
    page: { total: 0, predictions: [] },
    statusFilter: "Pending",
    limit: 50,
    offset: 0,
    selectedId: null,
    bundle: null,
    thresholds: {
      autolink: 24,
      review: 12,
      counts: { link: 3, review: 2, nolink: 5 },
    },
    draft: { autolink: 24, review: 12 },
    banner: null,
  };

  it("enables apply and shows server counts for a valid draft", () => {
    const html = renderThresholdPanel(base);
    expect(html).toContain('<button id="apply-thresholds" >Apply</button>');
    expect(html).toContain("auto-link: 3");
    expect(html).toContain("clerical review: 2");
    expect(html).toContain("no link: 5");
  });

  it("disables apply and shows the validation message when inverted", () => {
    const html = renderThresholdPanel({
      ...base,
      draft: { autolink: 10, review: 20 },
    });
    expect(html).toContain("disabled");
    expect(html).toContain("Review threshold must not exceed auto-link");
  });
});
