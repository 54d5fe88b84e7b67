/** Session state for the explorer: what the researcher has selected plus
 * the last enrichment payload. Views are pure functions of this state, so
 * re-highlighting at a new alpha never needs a round trip — raw p-values
 * are kept verbatim from the last response.
 */

import type {
  EnrichmentResponse,
  EnrichmentRow,
  Level,
  Method,
  StorysetInfo,
} from "./types.js";

export interface SessionState {
  test: string | null;
  background: string | null;
  alpha: number;
  levels: Level[];
  includeLatent: boolean;
  method: Method;
  /** Last enrichment payload, untouched. */
  lastResponse: EnrichmentResponse | null;
  /** Theme opened for subtree drill-down, if any. */
  selectedTheme: string | null;
}

export function initialState(): SessionState {
  return {
    test: null,
    background: null,
    alpha: 0.05,
    levels: ["central", "peripheral"],
    includeLatent: true,
    method: "both",
    lastResponse: null,
    selectedTheme: null,
  };
}

/** Alpha is confined to the open interval (0, 1). */
export function setAlpha(state: SessionState, alpha: number): SessionState {
  if (!(alpha > 0 && alpha < 1)) {
    return state;
  }
  return { ...state, alpha };
}

export function selectStorysets(
  state: SessionState,
  test: string | null,
  background: string | null,
): SessionState {
  return { ...state, test, background };
}

export function selectTheme(
  state: SessionState,
  theme: string | null,
): SessionState {
  return { ...state, selectedTheme: theme };
}

export function receiveResults(
  state: SessionState,
  response: EnrichmentResponse,
): SessionState {
  return { ...state, lastResponse: response };
}

/** Run is enabled only when a test/background pair is selected and the
 * test can be a subset of the background (judged from the storyset
 * listing, so an impossible pair is rejected before any request).
 */
export function canRun(
  state: SessionState,
  available: StorysetInfo[],
): boolean {
  if (state.test === null || state.background === null) {
    return false;
  }
  const test = available.find((s) => s.name === state.test);
  const background = available.find((s) => s.name === state.background);
  if (!test || !background || test.size === 0) {
    return false;
  }
  const backgroundIds = new Set(background.story_ids);
  return test.story_ids.every((id) => backgroundIds.has(id));
}

/** Re-evaluate significance of cached rows at the session's current alpha
 * without contacting the service. Only the flag changes; every statistic
 * stays byte-identical to the API payload.
 */
export function highlightedRows(state: SessionState): EnrichmentRow[] {
  if (state.lastResponse === null) {
    return [];
  }
  return state.lastResponse.results.map((row) => ({
    ...row,
    significant: row.p_value < state.alpha,
  }));
}
