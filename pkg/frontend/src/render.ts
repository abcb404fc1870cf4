/** Pure HTML-string renderers for every pane.
 *
 * Nothing here touches the DOM or recomputes a score: each renderer maps an
 * API response to markup, so the panes can be asserted on without a browser.
 */

import { AppState, thresholdsValid } from "./controller.js";
import {
  ExplanationBundle,
  PredictionPage,
  PredictionRecord,
  RankedPath,
  Snippet,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function pct(x: number): string {
  return `${(100 * x).toFixed(1)}%`;
}

export function renderQueue(
  page: PredictionPage,
  selectedId: string | null,
): string {
  if (page.predictions.length === 0) {
    return `<p class="empty">No predictions in this view.</p>`;
  }
  const rows = page.predictions
    .map((p) => renderQueueRow(p, p.id === selectedId))
    .join("");
  return (
    `<table class="queue"><thead><tr>` +
    `<th>Pair</th><th>Probability</th><th>Status</th><th></th>` +
    `</tr></thead><tbody>${rows}</tbody></table>` +
    `<p class="total">${page.total} prediction(s) total</p>`
  );
}

function renderQueueRow(p: PredictionRecord, selected: boolean): string {
  const actions =
    p.status === "Pending"
      ? `<button data-action="accept" data-id="${escapeHtml(p.id)}">Accept</button>` +
        `<button data-action="reject" data-id="${escapeHtml(p.id)}">Reject</button>`
      : escapeHtml(p.status);
  return (
    `<tr class="${selected ? "selected" : ""}" data-id="${escapeHtml(p.id)}">` +
    `<td><a data-action="select" data-id="${escapeHtml(p.id)}" href="#">` +
    `${p.source} &ndash; ${p.target}</a></td>` +
    `<td>${pct(p.probability)}</td>` +
    `<td class="status-${p.status.toLowerCase()}">${escapeHtml(p.status)}</td>` +
    `<td>${actions}</td></tr>`
  );
}

/** Inline node-edge chain: 12 —colleague→ 97 —household→ 3. */
function renderPath(path: RankedPath): string {
  const parts: string[] = [String(path.nodes[0])];
  path.relations.forEach((rel, i) => {
    parts.push(
      ` &mdash;${escapeHtml(rel)}&rarr; ${String(path.nodes[i + 1])}`,
    );
  });
  const breakdown = path.breakdown
    .map(
      (e) =>
        `<li>${e.src}&ndash;${e.dst} <code>${escapeHtml(e.relation)}</code>` +
        ` frequency ${e.frequency.toFixed(4)},` +
        ` rarity ${e.rarity.toFixed(4)}</li>`,
    )
    .join("");
  return (
    `<li class="path"><span class="chain">${parts.join("")}</span>` +
    ` <span class="score">score ${path.score.toFixed(4)}</span>` +
    `<ul class="breakdown">${breakdown}</ul></li>`
  );
}

export function renderPathsPane(bundle: ExplanationBundle): string {
  if (bundle.paths.paths.length === 0) {
    return (
      `<h3>Connecting paths</h3>` +
      `<p class="empty">No existing paths found between the endpoints.</p>`
    );
  }
  return (
    `<h3>Connecting paths</h3>` +
    `<ol class="paths">${bundle.paths.paths.map(renderPath).join("")}</ol>`
  );
}

function highlightTerms(snippet: string, terms: string[]): string {
  let html = escapeHtml(snippet);
  for (const term of terms) {
    const pattern = new RegExp(
      `\\b(${term.replace(/[.*+?^${}()|[\]\\]/g, "\\$&")})\\b`,
      "gi",
    );
    html = html.replace(pattern, "<mark>$1</mark>");
  }
  return html;
}

function renderSnippet(s: Snippet): string {
  return (
    `<li class="snippet${s.both_endpoints ? " both" : ""}">` +
    `<blockquote>${highlightTerms(s.snippet, s.match_terms)}</blockquote>` +
    `<p class="meta">record <code>${escapeHtml(s.source_record_id)}</code>` +
    ` &middot; terms: ${s.match_terms.map(escapeHtml).join(", ")}` +
    ` &middot; ${s.both_endpoints ? "mentions both endpoints" : "mentions one endpoint"}` +
    `</p></li>`
  );
}

export function renderEvidencePane(bundle: ExplanationBundle): string {
  if (bundle.evidence.snippets.length === 0) {
    return (
      `<h3>Verification evidence</h3>` +
      `<p class="empty">No verification evidence found in the source text.</p>`
    );
  }
  return (
    `<h3>Verification evidence</h3>` +
    `<ul class="snippets">` +
    bundle.evidence.snippets.map(renderSnippet).join("") +
    `</ul>`
  );
}

export function renderComparisonPane(bundle: ExplanationBundle): string {
  const keys = Object.keys(bundle.comparison.attributes).sort();
  const rows = keys
    .map((key) => {
      const a = bundle.comparison.attributes[key]!;
      return (
        `<tr><td>${escapeHtml(key)}</td>` +
        `<td>${escapeHtml(String(a.value_u))}</td>` +
        `<td>${escapeHtml(String(a.value_v))}</td>` +
        `<td>${a.similarity.toFixed(3)}</td></tr>`
      );
    })
    .join("");
  const table =
    keys.length === 0
      ? `<p class="empty">No shared attributes to compare.</p>`
      : `<table class="comparison"><thead><tr>` +
        `<th>Attribute</th><th>Node ${bundle.source}</th>` +
        `<th>Node ${bundle.target}</th><th>Similarity</th>` +
        `</tr></thead><tbody>${rows}</tbody></table>`;
  return (
    `<h3>Attribute comparison</h3>` +
    table +
    `<p class="jaccard">Neighbor Jaccard: ` +
    `${bundle.comparison.neighbor_jaccard.toFixed(3)}</p>`
  );
}

export function renderExplanation(bundle: ExplanationBundle | null): string {
  if (!bundle) {
    return `<p class="empty">Select a prediction to see its explanation.</p>`;
  }
  return (
    `<h2>Why ${bundle.source} &ndash; ${bundle.target}?</h2>` +
    `<p class="score">Predicted link probability: ${pct(bundle.score)}</p>` +
    `<section class="pane">${renderPathsPane(bundle)}</section>` +
    `<section class="pane">${renderEvidencePane(bundle)}</section>` +
    `<section class="pane">${renderComparisonPane(bundle)}</section>`
  );
}

export function renderThresholdPanel(state: AppState): string {
  const valid = thresholdsValid(state.draft);
  const counts = state.thresholds?.counts;
  const preview = counts
    ? `<p class="counts">auto-link: ${counts.link} &middot; ` +
      `clerical review: ${counts.review} &middot; ` +
      `no link: ${counts.nolink}</p>`
    : "";
  const error = valid
    ? ""
    : `<p class="error" role="alert">` +
      `Review threshold must not exceed auto-link.</p>`;
  return (
    `<h3>Match thresholds</h3>` +
    `<label>Auto-link <input type="range" id="autolink" min="0" max="60"` +
    ` step="0.5" value="${state.draft.autolink}">` +
    ` <output>${state.draft.autolink}</output></label>` +
    `<label>Clerical review <input type="range" id="review" min="0" max="60"` +
    ` step="0.5" value="${state.draft.review}">` +
    ` <output>${state.draft.review}</output></label>` +
    error +
    `<button id="apply-thresholds" ${valid ? "" : "disabled"}>Apply</button>` +
    preview
  );
}

export function renderBanner(banner: string | null): string {
  return banner
    ? `<div class="banner" role="alert">${escapeHtml(banner)}</div>`
    : "";
}
