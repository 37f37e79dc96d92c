/** Number rendering: every displayed metric is the service value at four
 * decimals, never a client-side recomputation. */

export function formatMetric(value: number): string {
  return value.toFixed(4);
}

export function formatCount(value: number): string {
  return String(value);
}
