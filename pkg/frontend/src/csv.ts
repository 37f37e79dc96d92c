/** CSV export of the comparison table, and a parser for round-trip checks. */

import { formatMetric } from "./format";
import { Comparison } from "./table";
import { METRIC_NAMES } from "./types";

function escapeCell(cell: string): string {
  if (/[",\n]/.test(cell)) {
    return '"' + cell.replace(/"/g, '""') + '"';
  }
  return cell;
}

export function comparisonToCsv(comparison: Comparison): string {
  const header = ["experiment", "recommender", ...METRIC_NAMES];
  const lines = [header.join(",")];
  for (const row of comparison.rows) {
    const cells = [
      escapeCell(row.experimentLabel),
      escapeCell(row.recommender),
      ...METRIC_NAMES.map((name) => formatMetric(row.metrics[name])),
    ];
    lines.push(cells.join(","));
  }
  return lines.join("\n") + "\n";
}

export function parseCsv(text: string): string[][] {
  const rows: string[][] = [];
  let row: string[] = [];
  let cell = "";
  let quoted = false;
  let i = 0;
  while (i < text.length) {
    const ch = text[i];
    if (quoted) {
      if (ch === '"' && text[i + 1] === '"') {
        cell += '"';
        i += 2;
        continue;
      }
      if (ch === '"') {
        quoted = false;
        i += 1;
        continue;
      }
      cell += ch;
      i += 1;
      continue;
    }
    if (ch === '"') {
      quoted = true;
    } else if (ch === ",") {
      row.push(cell);
      cell = "";
    } else if (ch === "\n") {
      row.push(cell);
      rows.push(row);
      row = [];
      cell = "";
    } else if (ch !== "\r") {
      cell += ch;
    }
    i += 1;
  }
  if (cell !== "" || row.length > 0) {
    row.push(cell);
    rows.push(row);
  }
  return rows;
}
