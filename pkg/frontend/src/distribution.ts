/** Client-side rank-quartile domain aggregation for the stacked-bar view.
 *
 * This is presentational: it only regroups rows already returned by the
 * enrichment endpoint. The binning must agree with the service's own
 * aggregation — rank-based quantile split with whole p-value tie groups
 * pulled down to the lowest bin any member landed in.
 */

import type { EnrichmentRow } from "./types.js";

export type DomainShares = Record<string, number>;

function byPvalue(a: EnrichmentRow, b: EnrichmentRow): number {
  if (a.p_value !== b.p_value) return a.p_value - b.p_value;
  if (a.k !== b.k) return b.k - a.k;
  return a.theme < b.theme ? -1 : a.theme > b.theme ? 1 : 0;
}

export function domainDistribution(
  rows: EnrichmentRow[],
  quartiles = 4,
): DomainShares[] {
  if (rows.length === 0) {
    throw new Error("no enrichment results to aggregate");
  }
  const ordered = [...rows].sort(byPvalue);
  const m = ordered.length;
  const assigned = ordered.map((_, i) =>
    Math.min(Math.floor((i * quartiles) / m), quartiles - 1),
  );
  let i = 0;
  while (i < m) {
    let j = i;
    while (j + 1 < m && ordered[j + 1]!.p_value === ordered[i]!.p_value) {
      j += 1;
    }
    const low = Math.min(...assigned.slice(i, j + 1));
    for (let idx = i; idx <= j; idx += 1) {
      assigned[idx] = low;
    }
    i = j + 1;
  }

  const bins: EnrichmentRow[][] = Array.from({ length: quartiles }, () => []);
  ordered.forEach((row, idx) => bins[assigned[idx]!]!.push(row));

  return bins.map((members) => {
    const shares: DomainShares = {};
    if (members.length === 0) {
      return shares;
    }
    for (const row of members) {
      shares[row.domain] = (shares[row.domain] ?? 0) + 1;
    }
    for (const domain of Object.keys(shares)) {
      shares[domain] = (100 * shares[domain]!) / members.length;
    }
    return shares;
  });
}

/** Overlap of the top-m themes under the two ranking methods. */
export function methodOverlap(
  rows: EnrichmentRow[],
  m: number,
): { shared: number; m: number; jaccard: number } {
  if (m < 1 || m > rows.length) {
    throw new Error(`cannot compare top ${m} of ${rows.length} results`);
  }
  const byP = [...rows].sort(byPvalue).slice(0, m);
  const byTfidf = [...rows]
    .sort((a, b) =>
      a.tfidf !== b.tfidf
        ? b.tfidf - a.tfidf
        : a.theme < b.theme
          ? -1
          : a.theme > b.theme
            ? 1
            : 0,
    )
    .slice(0, m);
  const pSet = new Set(byP.map((r) => r.theme));
  const shared = byTfidf.filter((r) => pSet.has(r.theme)).length;
  const union = 2 * m - shared;
  return { shared, m, jaccard: union === 0 ? 1 : shared / union };
}
