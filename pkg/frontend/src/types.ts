/** Wire types for the themex JSON API (/api/v1). */

export type Level = "central" | "peripheral";
export type Method = "hypergeometric" | "tfidf" | "both";

export interface ThemeSummary {
  name: string;
  domain: string;
  parent: string | null;
  definition: string;
}

export interface ThemePage {
  total: number;
  page: number;
  per_page: number;
  items: ThemeSummary[];
}

export interface SubtreeNode {
  name: string;
  domain: string;
  children: SubtreeNode[];
}

export interface StorysetInfo {
  name: string;
  size: number;
  story_ids: string[];
}

export interface StoryProfileEntry {
  theme: string;
  level: Level;
}

export interface StoryProfile {
  id: string;
  title: string;
  collections: string[];
  observed: StoryProfileEntry[];
  latent: StoryProfileEntry[];
}

export interface EnrichmentRow {
  rank: number;
  theme: string;
  domain: string;
  k: number;
  K: number;
  n: number;
  N: number;
  p_value: number;
  tfidf: number;
  significant: boolean;
}

export interface EnrichmentQueryEcho {
  test: string;
  background: string;
  alpha: number;
  levels: Level[];
  include_latent: boolean;
  method: Method;
  top: number | null;
  min_K: number;
}

export interface EnrichmentResponse {
  query: EnrichmentQueryEcho;
  results: EnrichmentRow[];
}

export interface NegativeControlReport {
  trials: number;
  n: number;
  alpha: number;
  counts: number[];
  mean: number;
  sd: number;
  sd_defined: boolean;
  seed: number;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}
