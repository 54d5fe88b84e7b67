/** Number formatting that mirrors the service's TSV conventions (four
 * significant digits, scientific notation outside [1e-4, 1e4)). Raw
 * values are always carried alongside in the DOM, never replaced.
 */

export function formatPvalue(p: number): string {
  if (p === 0) return "0";
  const exponent = Math.floor(Math.log10(Math.abs(p)));
  let s =
    exponent < -4 || exponent >= 4 ? p.toExponential(3) : p.toPrecision(4);
  if (s.includes("e")) {
    const [mantissaRaw = "", expRaw = ""] = s.split("e");
    const mantissa = mantissaRaw.replace(/\.?0+$/, "");
    const sign = expRaw.startsWith("-") ? "-" : "+";
    const digits = expRaw.replace(/[+-]/, "").padStart(2, "0");
    s = `${mantissa}e${sign}${digits}`;
  } else if (s.includes(".")) {
    s = s.replace(/\.?0+$/, "");
  }
  return s;
}

export function formatTfidf(score: number): string {
  return score.toFixed(3);
}

export function formatPercent(share: number): string {
  return `${share.toFixed(1)}%`;
}
