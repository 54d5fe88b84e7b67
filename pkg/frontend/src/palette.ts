/** Fixed domain color mapping used across every view. */

export const DOMAIN_COLORS: Readonly<Record<string, string>> = {
  "the human condition": "#d62728", // red
  society: "#2ca02c", // green
  "the pursuit of knowledge": "#1f77b4", // blue
  "alternate reality": "#e8c100", // yellow
};

const FALLBACK_COLOR = "#7f7f7f"; // grey for the root or unknown domains

export function domainColor(domain: string): string {
  return DOMAIN_COLORS[domain] ?? FALLBACK_COLOR;
}
