/** HTML fragments for the results and compare views. Kept as pure string
 * builders so the table the browser shows is exactly what the tests see. */

import { barColor } from "./chart";
import { formatMetric } from "./format";
import { Comparison } from "./table";
import { ExperimentRecord, METRIC_NAMES, Profile, RecommenderReport } from "./types";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function statusBadge(status: string): string {
  return `<span class="badge badge-${escapeHtml(status)}">${escapeHtml(status)}</span>`;
}

export function profileHtml(profile: Profile): string {
  return (
    '<dl class="profile">' +
    `<dt>users</dt><dd>${profile.num_users}</dd>` +
    `<dt>items</dt><dd>${profile.num_items}</dd>` +
    `<dt>ratings</dt><dd>${profile.num_ratings}</dd>` +
    `<dt>sequences</dt><dd>${profile.num_sequences}</dd>` +
    `<dt>avg length</dt><dd>${formatMetric(profile.avg_sequence_length)}</dd>` +
    `<dt>sparsity</dt><dd>${formatMetric(profile.sparsity)}</dd>` +
    "</dl>"
  );
}

function metricsHeader(first: string): string {
  const heads = METRIC_NAMES.map((name) => `<th>${name}</th>`).join("");
  return `<tr><th>${escapeHtml(first)}</th>${heads}</tr>`;
}

/** Results table for one finished experiment: a row per recommender, the
 * service numbers at four decimals. */
export function resultsTableHtml(reports: RecommenderReport[]): string {
  const rows = reports
    .map((report) => {
      const cells = METRIC_NAMES.map(
        (name) => `<td>${formatMetric(report.metrics[name])}</td>`,
      ).join("");
      return `<tr><td>${escapeHtml(report.recommender)}</td>${cells}</tr>`;
    })
    .join("");
  return `<table class="metrics-table"><thead>${metricsHeader("recommender")}</thead><tbody>${rows}</tbody></table>`;
}

export function comparisonTableHtml(comparison: Comparison): string {
  const heads = METRIC_NAMES.map((name) => `<th>${name}</th>`).join("");
  const rows = comparison.rows
    .map((row) => {
      const cells = METRIC_NAMES.map((name) => `<td>${formatMetric(row.metrics[name])}</td>`).join("");
      return (
        `<tr><td>${escapeHtml(row.experimentLabel)}</td>` +
        `<td><span class="swatch" style="background:${barColor(row.recommender)}"></span>` +
        `${escapeHtml(row.recommender)}</td>${cells}</tr>`
      );
    })
    .join("");
  return (
    '<table class="metrics-table"><thead>' +
    `<tr><th>experiment</th><th>recommender</th>${heads}</tr>` +
    `</thead><tbody>${rows}</tbody></table>`
  );
}

export function exclusionsHtml(comparison: Comparison): string {
  if (comparison.excluded.length === 0) {
    return "";
  }
  const items = comparison.excluded
    .map((e) => `<li><code>${escapeHtml(e.id.slice(0, 8))}</code>: ${escapeHtml(e.reason)}</li>`)
    .join("");
  return `<div class="excluded"><p>Not comparable:</p><ul>${items}</ul></div>`;
}

export function experimentListItemHtml(record: ExperimentRecord): string {
  const dataset = record.config.input_path.split("/").pop() ?? record.config.input_path;
  const summary =
    `${dataset} · k=${record.config.k} · ${record.config.split_strategy} ` +
    `· seed=${record.config.seed}`;
  return (
    `<label class="experiment-item"><input type="checkbox" value="${escapeHtml(record.id)}" ` +
    `${record.status === "done" ? "" : "disabled"}>` +
    `<code>${escapeHtml(record.id.slice(0, 8))}</code> ${statusBadge(record.status)} ` +
    `<span class="summary">${escapeHtml(summary)}</span></label>`
  );
}

export function errorBannerHtml(message: string): string {
  return (
    `<div class="banner banner-error"><span>${escapeHtml(message)}</span>` +
    '<button type="button" data-action="retry">Retry</button></div>'
  );
}
