/** Browser wiring: connects the DOM controls to the API client and the
 * pure render functions. All logic lives in the imported modules so it
 * stays testable without a browser.
 */

import { ApiError, ThemexClient } from "./api.js";
import {
  canRun,
  highlightedRows,
  initialState,
  receiveResults,
  selectStorysets,
  selectTheme,
  setAlpha,
  type SessionState,
} from "./state.js";
import {
  renderComparison,
  renderComposerSummary,
  renderDistribution,
  renderResultsTable,
  renderResultsTsv,
  renderSubtree,
} from "./render.js";
import type { StorysetInfo } from "./types.js";

const client = new ThemexClient(
  (window as { THEMEX_API_BASE?: string }).THEMEX_API_BASE ??
    window.location.origin,
);

let state: SessionState = initialState();
let storysets: StorysetInfo[] = [];

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function redraw(): void {
  const rows = highlightedRows(state);
  el("results").innerHTML = renderResultsTable(rows, state.alpha);
  el("comparison").innerHTML = renderComparison(rows, 20);
  el("distribution").innerHTML =
    rows.length > 0
      ? renderDistribution(rows)
      : `<p class="empty-state">No results to aggregate yet.</p>`;
  const test = storysets.find((s) => s.name === state.test) ?? null;
  const background =
    storysets.find((s) => s.name === state.background) ?? null;
  el("composer-summary").innerHTML = renderComposerSummary(test, background);
  el<HTMLButtonElement>("run").disabled = !canRun(state, storysets);
  el("alpha-value").textContent = state.alpha.toFixed(3);

  for (const row of el("results").querySelectorAll<HTMLElement>("tr[data-theme]")) {
    row.addEventListener("click", () => {
      void openSubtree(row.dataset.theme ?? "");
    });
  }
}

async function openSubtree(theme: string): Promise<void> {
  state = selectTheme(state, theme);
  try {
    const node = await client.subtree(theme);
    el("subtree").innerHTML = `<ul>${renderSubtree(node)}</ul>`;
  } catch (error) {
    if (error instanceof ApiError) {
      el("subtree").innerHTML = `<p class="error">${error.message}</p>`;
    }
  }
}

async function refreshStorysets(): Promise<void> {
  storysets = await client.storysets();
  for (const id of ["test-select", "background-select"]) {
    const select = el<HTMLSelectElement>(id);
    const current = select.value;
    select.innerHTML =
      `<option value="">—</option>` +
      storysets
        .map((s) => `<option value="${s.name}">${s.name} (${s.size})</option>`)
        .join("");
    select.value = current;
  }
}

async function run(): Promise<void> {
  if (!state.test || !state.background) return;
  try {
    const response = await client.enrich({
      test: state.test,
      background: state.background,
      alpha: state.alpha,
      levels: state.levels,
      include_latent: state.includeLatent,
      method: state.method,
    });
    state = receiveResults(state, response);
    redraw();
  } catch (error) {
    if (error instanceof ApiError) {
      el("results").innerHTML = `<p class="error">${error.message}</p>`;
    } else if ((error as Error).name !== "AbortError") {
      throw error;
    }
  }
}

function bind(): void {
  el<HTMLInputElement>("alpha").addEventListener("input", (event) => {
    const value = Number((event.target as HTMLInputElement).value);
    state = setAlpha(state, value);
    redraw(); // re-highlight from cached p-values; no request
  });
  for (const id of ["test-select", "background-select"] as const) {
    el<HTMLSelectElement>(id).addEventListener("change", () => {
      state = selectStorysets(
        state,
        el<HTMLSelectElement>("test-select").value || null,
        el<HTMLSelectElement>("background-select").value || null,
      );
      redraw();
    });
  }
  el("run").addEventListener("click", () => void run());
  el("download").addEventListener("click", () => {
    const tsv = renderResultsTsv(highlightedRows(state), state.alpha);
    const blob = new Blob([tsv], { type: "text/tab-separated-values" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "results.tsv";
    link.click();
    URL.revokeObjectURL(link.href);
  });
}

void (async () => {
  bind();
  await refreshStorysets();
  redraw();
})();
