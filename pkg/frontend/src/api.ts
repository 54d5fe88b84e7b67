/** Thin typed client for the themex JSON API.
 *
 * Every statistic shown in the UI comes straight out of these responses;
 * the client performs no computation beyond JSON parsing. Enrichment
 * requests are superseding: issuing a new one aborts any still in flight.
 */

import type {
  ApiErrorBody,
  EnrichmentResponse,
  Level,
  Method,
  NegativeControlReport,
  StoryProfile,
  StorysetInfo,
  SubtreeNode,
  ThemePage,
} from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.code = body.code;
    this.status = status;
  }
}

export interface EnrichmentParams {
  test: string;
  background: string;
  alpha?: number;
  levels?: Level[];
  include_latent?: boolean;
  method?: Method;
  top?: number | null;
  min_K?: number;
}

export class ThemexClient {
  private readonly base: string;
  private inflightEnrichment: AbortController | null = null;

  constructor(baseUrl: string) {
    this.base = baseUrl.replace(/\/+$/, "");
  }

  private async request<T>(
    path: string,
    init: RequestInit = {},
  ): Promise<T> {
    const response = await fetch(`${this.base}${path}`, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, body as ApiErrorBody);
    }
    return body as T;
  }

  routes(): Promise<{ routes: string[] }> {
    return this.request("/api/v1");
  }

  themes(params: {
    domain?: string;
    q?: string;
    page?: number;
    per_page?: number;
  } = {}): Promise<ThemePage> {
    const qs = new URLSearchParams();
    for (const [key, value] of Object.entries(params)) {
      if (value !== undefined) qs.set(key, String(value));
    }
    const suffix = qs.size > 0 ? `?${qs}` : "";
    return this.request(`/api/v1/ontology/themes${suffix}`);
  }

  subtree(theme: string, depth?: number): Promise<SubtreeNode> {
    const suffix = depth === undefined ? "" : `?depth=${depth}`;
    return this.request(
      `/api/v1/ontology/themes/${encodeURIComponent(theme)}/subtree${suffix}`,
    );
  }

  storysets(): Promise<StorysetInfo[]> {
    return this.request("/api/v1/storysets");
  }

  createStoryset(
    name: string,
    source: { story_ids: string[] } | { collection: string },
  ): Promise<StorysetInfo> {
    return this.request("/api/v1/storysets", {
      method: "POST",
      body: JSON.stringify({ name, ...source }),
    });
  }

  story(id: string): Promise<StoryProfile> {
    return this.request(`/api/v1/stories/${encodeURIComponent(id)}`);
  }

  /** Run enrichment, aborting any previous still-running request. */
  enrich(params: EnrichmentParams): Promise<EnrichmentResponse> {
    this.inflightEnrichment?.abort();
    const controller = new AbortController();
    this.inflightEnrichment = controller;
    return this.request<EnrichmentResponse>("/api/v1/enrichment", {
      method: "POST",
      body: JSON.stringify(params),
      signal: controller.signal,
    }).finally(() => {
      if (this.inflightEnrichment === controller) {
        this.inflightEnrichment = null;
      }
    });
  }

  negativeControl(params: {
    background: string;
    n: number;
    trials: number;
    alpha?: number;
    seed?: number;
  }): Promise<NegativeControlReport> {
    return this.request("/api/v1/negative-control", {
      method: "POST",
      body: JSON.stringify(params),
    });
  }
}
