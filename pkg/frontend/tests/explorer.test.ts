/** Integration tests against a live service instance (started by the
 * global setup over the bundled example dataset).
 */

import { afterEach, beforeAll, describe, expect, it, vi } from "vitest";

import { ApiError, ThemexClient } from "../src/api.js";
import { domainDistribution } from "../src/distribution.js";
import { DOMAIN_COLORS, domainColor } from "../src/palette.js";
import {
  highlightedRows,
  initialState,
  receiveResults,
  setAlpha,
  type SessionState,
} from "../src/state.js";
import {
  renderComparison,
  renderDistribution,
  renderResultsTable,
  renderSubtree,
} from "../src/render.js";
import type { EnrichmentResponse } from "../src/types.js";

const BASE = `http://127.0.0.1:${process.env.THEMEX_TEST_PORT ?? 8932}`;

const client = new ThemexClient(BASE);
let response: EnrichmentResponse;
let session: SessionState;

beforeAll(async () => {
  response = await client.enrich({
    test: "klingon-tos-tas",
    background: "tos-tas",
    top: 20,
  });
  session = receiveResults(initialState(), response);
});

afterEach(() => {
  vi.restoreAllMocks();
});

describe("results table view", () => {
  it("renders 20 rows with the expected rank-1 theme", () => {
    const html = renderResultsTable(highlightedRows(session), session.alpha);
    const rows = html.match(/<tr class=/g) ?? [];
    expect(rows).toHaveLength(20);
    const firstRow = html.slice(html.indexOf("<tbody>"));
    expect(firstRow.indexOf("über-belligerent alien")).toBeGreaterThan(-1);
    expect(response.results[0]?.rank).toBe(1);
    expect(response.results[0]?.theme).toBe("über-belligerent alien");
    expect(response.results[0]?.k).toBe(5);
    expect(response.results[0]?.K).toBe(5);
  });

  it("colors every domain cell with the fixed palette", () => {
    const html = renderResultsTable(highlightedRows(session), session.alpha);
    for (const row of response.results) {
      expect(html).toContain(
        `data-domain="${row.domain}" style="color:${domainColor(row.domain)}"`,
      );
      expect(DOMAIN_COLORS[row.domain]).toBeDefined();
    }
    expect(DOMAIN_COLORS["the human condition"]).toBe("#d62728");
    expect(DOMAIN_COLORS["society"]).toBe("#2ca02c");
    expect(DOMAIN_COLORS["the pursuit of knowledge"]).toBe("#1f77b4");
    expect(DOMAIN_COLORS["alternate reality"]).toBe("#e8c100");
  });

  it("re-highlights at a new alpha without any network request", () => {
    const fetchSpy = vi.spyOn(globalThis, "fetch");
    const strict = setAlpha(session, 0.0001);
    const lax = setAlpha(session, 0.5);
    const strictRows = highlightedRows(strict);
    const laxRows = highlightedRows(lax);
    renderResultsTable(strictRows, strict.alpha);
    renderResultsTable(laxRows, lax.alpha);
    expect(fetchSpy).not.toHaveBeenCalled();
    const strictCount = strictRows.filter((r) => r.significant).length;
    const laxCount = laxRows.filter((r) => r.significant).length;
    expect(strictCount).toBeLessThan(laxCount);
    // statistics are untouched; only the significance flag moves
    strictRows.forEach((row, i) => {
      expect(row.p_value).toBe(response.results[i]?.p_value);
      expect(row.tfidf).toBe(response.results[i]?.tfidf);
    });
  });

  it("rejects alpha outside (0,1) without changing state", () => {
    expect(setAlpha(session, 0)).toBe(session);
    expect(setAlpha(session, 1)).toBe(session);
    expect(setAlpha(session, 0.1).alpha).toBe(0.1);
  });
});

describe("method comparison view", () => {
  it("shows a 20/20 overlap badge on the fixture", () => {
    const html = renderComparison(highlightedRows(session), 20);
    expect(html).toContain(`<span class="overlap-badge">20/20</span>`);
  });

  it("renders an empty state without results", () => {
    expect(renderComparison([], 20)).toContain("empty-state");
  });

  it("colors scatter points by domain", () => {
    const html = renderComparison(highlightedRows(session), 20);
    for (const row of response.results) {
      expect(html).toContain(`fill="${domainColor(row.domain)}"`);
    }
  });
});

describe("domain distribution view", () => {
  it("produces four bars whose segments each sum to 100%", () => {
    const bins = domainDistribution(highlightedRows(session));
    expect(bins).toHaveLength(4);
    for (const shares of bins) {
      const total = Object.values(shares).reduce((a, b) => a + b, 0);
      if (Object.keys(shares).length > 0) {
        expect(total).toBeCloseTo(100, 6);
      }
    }
    const html = renderDistribution(highlightedRows(session));
    expect(html.match(/data-quartile=/g) ?? []).toHaveLength(4);
  });

  it("matches the service-side aggregation on the fixture", () => {
    // Frozen output of the engine's own aggregation over these 20 rows.
    expect(domainDistribution(highlightedRows(session))).toEqual([
      { "alternate reality": 40, society: 40, "the human condition": 20 },
      {
        society: 40,
        "alternate reality": 20,
        "the pursuit of knowledge": 20,
        "the human condition": 20,
      },
      { society: 60, "the pursuit of knowledge": 20, "alternate reality": 20 },
      { society: 40, "the human condition": 60 },
    ]);
  });

  it("splits quartiles by rank with ties pulled to the lower bin", () => {
    const rows = highlightedRows(session);
    const bins = domainDistribution(rows);
    const sizes = bins.map((b) => Object.keys(b).length > 0);
    expect(sizes[0]).toBe(true);
    // every row is assigned exactly once
    const assignedTotal = bins
      .map((shares) => Object.values(shares).reduce((a, b) => a + b, 0))
      .filter((t) => t > 0).length;
    expect(assignedTotal).toBeGreaterThan(0);
  });
});

describe("ontology drill-down", () => {
  it("fetches a subtree for a clicked theme", async () => {
    const node = await client.subtree("diplomacy");
    expect(node.name).toBe("diplomacy");
    const html = renderSubtree(node);
    expect(html).toContain("diplomatic negotiating");
  });

  it("maps unknown themes to a typed 404 error", async () => {
    await expect(client.subtree("no-such-theme")).rejects.toMatchObject({
      code: "UnknownTheme",
      status: 404,
    });
    expect(ApiError.prototype).toBeInstanceOf(Error);
  });
});

describe("storyset composer", () => {
  it("exposes live n and N for the fixture presets", async () => {
    const sets = await client.storysets();
    const test = sets.find((s) => s.name === "klingon-tos-tas");
    const background = sets.find((s) => s.name === "tos-tas");
    expect(test?.size).toBe(8);
    expect(background?.size).toBe(102);
  });

  it("creates a deduplicated storyset from picked ids", async () => {
    const name = `picks-${Date.now()}`;
    const created = await client.createStoryset(name, {
      story_ids: ["s001", "s002", "s002", "s003"],
    });
    expect(created.size).toBe(3);
  });

  it("surfaces all-certain results when test equals background", async () => {
    const everything = await client.enrich({
      test: "tos-tas",
      background: "tos-tas",
    });
    for (const row of everything.results) {
      expect(row.p_value).toBe(1);
      expect(row.significant).toBe(false);
    }
  });
});

describe("request supersession", () => {
  it("aborts a stale enrichment when a new one is issued", async () => {
    const fresh = new ThemexClient(BASE);
    const first = fresh.enrich({
      test: "klingon-tos-tas",
      background: "tos-tas",
    });
    const second = fresh.enrich({
      test: "klingon-tos-tas",
      background: "tos-tas",
      top: 5,
    });
    await expect(first).rejects.toThrow();
    const kept = await second;
    expect(kept.results).toHaveLength(5);
  });
});
