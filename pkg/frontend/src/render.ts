/** Pure view functions: SessionState + last API payload in, HTML string
 * out. No statistics are computed here beyond the presentational
 * quartile/percentage aggregation in the distribution view.
 */

import { domainDistribution, methodOverlap } from "./distribution.js";
import { formatPercent, formatPvalue, formatTfidf } from "./format.js";
import { domainColor } from "./palette.js";
import type {
  EnrichmentRow,
  StorysetInfo,
  SubtreeNode,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function domainCell(domain: string): string {
  return (
    `<td class="domain" data-domain="${escapeHtml(domain)}" ` +
    `style="color:${domainColor(domain)}">${escapeHtml(domain)}</td>`
  );
}

/** Ranked enrichment table; significance is re-evaluated at `alpha` from
 * the raw p-values, so moving the slider re-renders without a request.
 */
export function renderResultsTable(
  rows: EnrichmentRow[],
  alpha: number,
): string {
  const body = rows
    .map((row) => {
      const significant = row.p_value < alpha;
      return (
        `<tr class="${significant ? "significant" : ""}" ` +
        `data-theme="${escapeHtml(row.theme)}" data-p="${row.p_value}">` +
        `<td>${row.rank}</td>` +
        `<td class="theme">${escapeHtml(row.theme)}</td>` +
        domainCell(row.domain) +
        `<td>${row.k}/${row.K}</td>` +
        `<td>${formatPvalue(row.p_value)}</td>` +
        `<td>${formatTfidf(row.tfidf)}</td>` +
        `</tr>`
      );
    })
    .join("");
  return (
    `<table class="results" data-alpha="${alpha}">` +
    `<thead><tr><th>Rank</th><th>Theme</th><th>Domain</th>` +
    `<th>k/K</th><th>P value</th><th>TF-IDF</th></tr></thead>` +
    `<tbody>${body}</tbody></table>`
  );
}

/** Method comparison: top-m overlap badge plus scatter points of
 * -log10(p) against TF-IDF, colored by domain.
 */
export function renderComparison(rows: EnrichmentRow[], m: number): string {
  if (rows.length === 0) {
    return `<p class="empty-state">No results to compare yet.</p>`;
  }
  const window = Math.min(m, rows.length);
  const overlap = methodOverlap(rows, window);
  const points = rows
    .map((row) => {
      const x = row.tfidf;
      const y = row.p_value > 0 ? -Math.log10(row.p_value) : Infinity;
      return (
        `<circle class="pt" data-theme="${escapeHtml(row.theme)}" ` +
        `cx="${x.toFixed(4)}" cy="${y.toFixed(4)}" r="3" ` +
        `fill="${domainColor(row.domain)}"/>`
      );
    })
    .join("");
  return (
    `<div class="comparison">` +
    `<span class="overlap-badge">${overlap.shared}/${overlap.m}</span>` +
    `<svg class="scatter" viewBox="0 0 10 10">${points}</svg>` +
    `</div>`
  );
}

/** Stacked percentage bars, one per rank quartile, colored by domain. */
export function renderDistribution(rows: EnrichmentRow[]): string {
  if (rows.length === 0) {
    return `<p class="empty-state">No results to aggregate yet.</p>`;
  }
  const bars = domainDistribution(rows)
    .map((shares, index) => {
      const segments = Object.entries(shares)
        .sort(([a], [b]) => (a < b ? -1 : 1))
        .map(
          ([domain, share]) =>
            `<div class="segment" data-domain="${escapeHtml(domain)}" ` +
            `style="height:${share.toFixed(2)}%;` +
            `background:${domainColor(domain)}" ` +
            `title="${escapeHtml(domain)}: ${formatPercent(share)}"></div>`,
        )
        .join("");
      return `<div class="bar" data-quartile="${index + 1}">${segments}</div>`;
    })
    .join("");
  return `<div class="distribution">${bars}</div>`;
}

export function renderSubtree(node: SubtreeNode): string {
  const children = node.children.map(renderSubtree).join("");
  return (
    `<li data-theme="${escapeHtml(node.name)}">` +
    `<span style="color:${domainColor(node.domain)}">` +
    `${escapeHtml(node.name)}</span>` +
    (children ? `<ul>${children}</ul>` : "") +
    `</li>`
  );
}

/** Storyset composer summary: live n and N, with the all-certain warning
 * when the test set is the whole background.
 */
export function renderComposerSummary(
  test: StorysetInfo | null,
  background: StorysetInfo | null,
): string {
  if (!test || !background) {
    return `<p class="hint">Select a test and a background storyset.</p>`;
  }
  const warning =
    test.size === background.size &&
    test.story_ids.every((id) => background.story_ids.includes(id))
      ? `<p class="warning">Test equals background: every p-value will be 1.</p>`
      : "";
  return (
    `<p class="sizes">n=${test.size}, N=${background.size}</p>` + warning
  );
}

export function renderResultsTsv(rows: EnrichmentRow[], alpha: number): string {
  const header = "rank\ttheme\tdomain\tk\tK\tn\tN\tp_value\ttfidf\tsignificant";
  const lines = rows.map((row) =>
    [
      row.rank,
      row.theme,
      row.domain,
      row.k,
      row.K,
      row.n,
      row.N,
      formatPvalue(row.p_value),
      formatTfidf(row.tfidf),
      row.p_value < alpha ? "true" : "false",
    ].join("\t"),
  );
  return [header, ...lines].join("\n") + "\n";
}
