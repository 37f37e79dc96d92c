/** Comparison model: one row per recommender per experiment, plus the
 * labels and exclusions the compare view needs. */

import { ExperimentConfig, ExperimentRecord, MetricName, METRIC_NAMES } from "./types";

export interface ComparisonRow {
  experimentId: string;
  experimentLabel: string;
  recommender: string;
  metrics: Record<MetricName, number>;
}

export interface Exclusion {
  id: string;
  reason: string;
}

export interface Comparison {
  rows: ComparisonRow[];
  excluded: Exclusion[];
  labels: Record<string, string>;
}

const LABEL_FIELDS: (keyof ExperimentConfig)[] = [
  "input_path",
  "delimiter",
  "min_user_ratings",
  "min_item_ratings",
  "delta_seconds",
  "split_strategy",
  "test_ratio",
  "k",
  "recommenders",
  "smoothing_alpha",
  "seed",
];

/** Label experiments by the config fields on which they differ ("k=3" vs
 * "k=5"); identical configs fall back to id prefixes. */
export function experimentLabels(records: ExperimentRecord[]): Record<string, string> {
  const labels: Record<string, string> = {};
  if (records.length === 1) {
    labels[records[0].id] = records[0].id.slice(0, 8);
    return labels;
  }
  const differing = LABEL_FIELDS.filter((field) => {
    const seen = new Set(records.map((r) => JSON.stringify(r.config[field])));
    return seen.size > 1;
  });
  for (const record of records) {
    if (differing.length === 0) {
      labels[record.id] = record.id.slice(0, 8);
    } else {
      labels[record.id] = differing
        .map((field) => {
          const value = record.config[field];
          const text = field === "input_path" ? String(value).split("/").pop() : JSON.stringify(value);
          return `${field}=${String(text).replace(/"/g, "")}`;
        })
        .join(", ");
    }
  }
  return labels;
}

export function buildComparison(records: ExperimentRecord[]): Comparison {
  if (records.length < 1 || records.length > 4) {
    throw new Error("select between 1 and 4 experiments to compare");
  }
  const done = records.filter((r) => r.status === "done" && r.reports);
  const excluded = records
    .filter((r) => !(r.status === "done" && r.reports))
    .map((r) => ({ id: r.id, reason: r.status === "failed" ? `failed: ${r.error ?? "unknown"}` : r.status }));
  const labels = experimentLabels(done);
  const rows: ComparisonRow[] = [];
  for (const record of done) {
    for (const report of record.reports ?? []) {
      rows.push({
        experimentId: record.id,
        experimentLabel: labels[record.id],
        recommender: report.recommender,
        metrics: report.metrics,
      });
    }
  }
  return { rows, excluded, labels };
}

export { METRIC_NAMES };
