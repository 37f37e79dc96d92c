/** DOM wiring for the experiment UI: configuration form, live status,
 * results view and the compare view. All numbers shown come from the
 * service; this file only formats and arranges them. */

import { ApiClient, ServiceError, ValidationError } from "./api";
import { groupedBarChartSvg } from "./chart";
import { comparisonToCsv } from "./csv";
import { pollUntilSettled } from "./poll";
import {
  comparisonTableHtml,
  errorBannerHtml,
  exclusionsHtml,
  experimentListItemHtml,
  profileHtml,
  resultsTableHtml,
  statusBadge,
} from "./render";
import { buildComparison } from "./table";
import { ExperimentRecord, FieldError, METRIC_NAMES } from "./types";
import { FormValues, formToConfig, validateForm } from "./validate";

const api = new ApiClient("");

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) {
    throw new Error(`missing element #${id}`);
  }
  return element as T;
}

function readForm(): FormValues {
  const value = (id: string) => (byId<HTMLInputElement>(id)).value;
  const recommenders = Array.from(
    document.querySelectorAll<HTMLInputElement>("input[name=recommenders]:checked"),
  ).map((input) => input.value);
  return {
    input_path: value("input_path"),
    delimiter: value("delimiter"),
    min_user_ratings: value("min_user_ratings"),
    min_item_ratings: value("min_item_ratings"),
    delta_seconds: value("delta_seconds"),
    split_strategy: value("split_strategy"),
    test_ratio: value("test_ratio"),
    k: value("k"),
    recommenders,
    smoothing_alpha: value("smoothing_alpha"),
    seed: value("seed"),
  };
}

function showFieldErrors(errors: FieldError[]): void {
  document.querySelectorAll<HTMLElement>("[data-error-for]").forEach((span) => {
    span.textContent = "";
  });
  for (const error of errors) {
    const span = document.querySelector<HTMLElement>(`[data-error-for="${error.field}"]`);
    if (span) {
      span.textContent = error.message;
    }
  }
}

function refreshValidation(): FieldError[] {
  const errors = validateForm(readForm());
  showFieldErrors(errors);
  byId<HTMLButtonElement>("submit").disabled = errors.length > 0;
  return errors;
}

function showBanner(message: string, retry: () => void): void {
  const host = byId<HTMLElement>("banner-host");
  host.innerHTML = errorBannerHtml(message);
  host.querySelector("[data-action=retry]")?.addEventListener("click", () => {
    host.innerHTML = "";
    retry();
  });
}

async function loadDatasets(): Promise<void> {
  try {
    const datasets = await api.listDatasets();
    const select = byId<HTMLSelectElement>("input_path");
    select.innerHTML = datasets
      .map((d) => `<option value="${d.path}">${d.name}</option>`)
      .join("");
    refreshValidation();
  } catch {
    showBanner("Cannot reach the experiment service.", () => void loadDatasets());
  }
}

async function refreshExperimentList(): Promise<void> {
  try {
    const records = await api.listExperiments();
    byId<HTMLElement>("experiment-list").innerHTML = records
      .map((record) => experimentListItemHtml(record))
      .join("");
  } catch {
    showBanner("Cannot reach the experiment service.", () => void refreshExperimentList());
  }
}

function renderResults(record: ExperimentRecord): void {
  const host = byId<HTMLElement>("results");
  if (record.status === "failed") {
    host.innerHTML = `<p>${statusBadge("failed")} ${record.error ?? ""}</p>`;
    return;
  }
  if (!record.reports || !record.profile) {
    host.innerHTML = "";
    return;
  }
  host.innerHTML =
    `<h3>Results <code>${record.id.slice(0, 8)}</code></h3>` +
    profileHtml(record.profile) +
    resultsTableHtml(record.reports);
}

async function submitExperiment(event: Event): Promise<void> {
  event.preventDefault();
  const errors = refreshValidation();
  if (errors.length > 0) {
    return; // never send an invalid config
  }
  const status = byId<HTMLElement>("submit-status");
  try {
    const id = await api.createExperiment(formToConfig(readForm()));
    status.innerHTML = `<code>${id.slice(0, 8)}</code> ${statusBadge("pending")}`;
    await refreshExperimentList();
    const record = await pollUntilSettled(api, id, {
      onUpdate: (snapshot) => {
        status.innerHTML = `<code>${id.slice(0, 8)}</code> ${statusBadge(snapshot.status)}`;
      },
    });
    renderResults(record);
    await refreshExperimentList();
  } catch (error) {
    if (error instanceof ValidationError) {
      showFieldErrors(error.fieldErrors); // the service stays authoritative
    } else if (error instanceof ServiceError) {
      showBanner(`Service error: ${error.message}`, () => void submitExperiment(event));
    } else {
      showBanner("Cannot reach the experiment service.", () => void submitExperiment(event));
    }
  }
}

function selectedExperimentIds(): string[] {
  return Array.from(
    document.querySelectorAll<HTMLInputElement>("#experiment-list input:checked"),
  ).map((input) => input.value);
}

let lastCsv = "";

async function compareSelected(): Promise<void> {
  const ids = selectedExperimentIds();
  const host = byId<HTMLElement>("compare");
  if (ids.length < 1 || ids.length > 4) {
    host.innerHTML = "<p>Select between 1 and 4 finished experiments.</p>";
    return;
  }
  try {
    const records = await Promise.all(ids.map((id) => api.getExperiment(id)));
    const comparison = buildComparison(records);
    const charts = METRIC_NAMES.map((metric) => groupedBarChartSvg(metric, comparison)).join("");
    host.innerHTML =
      "<h3>Comparison</h3>" +
      exclusionsHtml(comparison) +
      comparisonTableHtml(comparison) +
      '<p><button type="button" id="export-csv">Export CSV</button></p>' +
      `<div class="charts">${charts}</div>`;
    lastCsv = comparisonToCsv(comparison);
    byId<HTMLButtonElement>("export-csv").addEventListener("click", () => {
      const blob = new Blob([lastCsv], { type: "text/csv" });
      const anchor = document.createElement("a");
      anchor.href = URL.createObjectURL(blob);
      anchor.download = "comparison.csv";
      anchor.click();
      URL.revokeObjectURL(anchor.href);
    });
  } catch {
    showBanner("Cannot reach the experiment service.", () => void compareSelected());
  }
}

export function start(): void {
  byId<HTMLFormElement>("experiment-form").addEventListener("submit", (e) => void submitExperiment(e));
  byId<HTMLButtonElement>("compare-button").addEventListener("click", () => void compareSelected());
  byId<HTMLButtonElement>("refresh-button").addEventListener("click", () => void refreshExperimentList());
  document
    .querySelectorAll<HTMLElement>("#experiment-form input, #experiment-form select")
    .forEach((input) => input.addEventListener("input", refreshValidation));
  refreshValidation();
  void loadDatasets();
  void refreshExperimentList();
}

if (typeof document !== "undefined" && document.getElementById("experiment-form")) {
  start();
}
