/** Grouped bar charts as self-contained SVG strings: one chart per metric,
 * one group per experiment, one bar per recommender. */

import { formatMetric } from "./format";
import { Comparison } from "./table";
import { MetricName } from "./types";

const BAR_COLORS: Record<string, string> = {
  most_popular: "#4e79a7",
  random: "#f28e2b",
  unigram: "#59a14f",
  bigram: "#e15759",
};
const FALLBACK_COLOR = "#9c755f";

const CHART_WIDTH = 420;
const CHART_HEIGHT = 180;
const MARGIN = { top: 24, right: 8, bottom: 34, left: 8 };

export function barColor(recommender: string): string {
  return BAR_COLORS[recommender] ?? FALLBACK_COLOR;
}

function escapeXml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function groupedBarChartSvg(metric: MetricName, comparison: Comparison): string {
  const groupIds = [...new Set(comparison.rows.map((r) => r.experimentId))];
  const plotWidth = CHART_WIDTH - MARGIN.left - MARGIN.right;
  const plotHeight = CHART_HEIGHT - MARGIN.top - MARGIN.bottom;
  const maxValue = Math.max(...comparison.rows.map((r) => r.metrics[metric]), 0) || 1;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${CHART_WIDTH} ${CHART_HEIGHT}" ` +
      `class="metric-chart" role="img" aria-label="${escapeXml(metric)}">`,
  );
  parts.push(`<text x="${MARGIN.left}" y="14" class="chart-title">${escapeXml(metric)}</text>`);

  const groupWidth = plotWidth / Math.max(groupIds.length, 1);
  groupIds.forEach((groupId, groupIndex) => {
    const rows = comparison.rows.filter((r) => r.experimentId === groupId);
    const label = rows[0]?.experimentLabel ?? groupId.slice(0, 8);
    const barWidth = (groupWidth * 0.8) / Math.max(rows.length, 1);
    rows.forEach((row, barIndex) => {
      const value = row.metrics[metric];
      const height = (value / maxValue) * plotHeight;
      const x = MARGIN.left + groupIndex * groupWidth + groupWidth * 0.1 + barIndex * barWidth;
      const y = MARGIN.top + plotHeight - height;
      parts.push(
        `<rect x="${x.toFixed(1)}" y="${y.toFixed(1)}" width="${(barWidth * 0.92).toFixed(1)}" ` +
          `height="${height.toFixed(1)}" fill="${barColor(row.recommender)}">` +
          `<title>${escapeXml(`${label} / ${row.recommender}: ${formatMetric(value)}`)}</title></rect>`,
      );
    });
    const labelX = MARGIN.left + groupIndex * groupWidth + groupWidth / 2;
    parts.push(
      `<text x="${labelX.toFixed(1)}" y="${CHART_HEIGHT - 16}" text-anchor="middle" class="chart-label">` +
        `${escapeXml(label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("");
}
