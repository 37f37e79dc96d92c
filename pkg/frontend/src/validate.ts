/** Client-side validation mirroring the service rules field for field.
 *
 * The service stays authoritative: these checks only gate the submit
 * button and surface problems early, with the same field names the
 * service would report.
 */

import { FieldError, RECOMMENDER_KINDS } from "./types";

export const DELIMITERS = ["comma", "space", "tab"];
export const STRATEGIES = ["random", "timestamp"];
export const MAX_SEED = 2 ** 64 - 1;

/** Raw form values before coercion; numbers arrive as strings from inputs. */
export interface FormValues {
  input_path: string;
  delimiter: string;
  min_user_ratings: string;
  min_item_ratings: string;
  delta_seconds: string;
  split_strategy: string;
  test_ratio: string;
  k: string;
  recommenders: string[];
  smoothing_alpha: string;
  seed: string;
}

function isInteger(text: string): boolean {
  return /^-?\d+$/.test(text.trim());
}

function isNumber(text: string): boolean {
  return text.trim() !== "" && Number.isFinite(Number(text));
}

export function validateForm(values: FormValues): FieldError[] {
  const errors: FieldError[] = [];
  const bad = (field: string, message: string) => errors.push({ field, message });

  if (!values.input_path) {
    bad("input_path", "select a dataset");
  }
  if (!DELIMITERS.includes(values.delimiter)) {
    bad("delimiter", `must be one of ${DELIMITERS.join(", ")}`);
  }
  for (const field of ["min_user_ratings", "min_item_ratings"] as const) {
    if (!isInteger(values[field]) || Number(values[field]) < 0) {
      bad(field, "must be a non-negative integer");
    }
  }
  if (!isInteger(values.delta_seconds) || Number(values.delta_seconds) < 1) {
    bad("delta_seconds", "must be a positive integer number of seconds");
  }
  if (!STRATEGIES.includes(values.split_strategy)) {
    bad("split_strategy", `must be one of ${STRATEGIES.join(", ")}`);
  }
  if (!isNumber(values.test_ratio) || Number(values.test_ratio) <= 0 || Number(values.test_ratio) >= 1) {
    bad("test_ratio", "must be strictly between 0 and 1");
  }
  if (!isInteger(values.k) || Number(values.k) < 1) {
    bad("k", "must be a positive integer");
  }
  const kinds = values.recommenders;
  if (
    kinds.length === 0 ||
    new Set(kinds).size !== kinds.length ||
    kinds.some((kind) => !RECOMMENDER_KINDS.includes(kind as never))
  ) {
    bad("recommenders", "pick at least one recommender");
  }
  if (!isNumber(values.smoothing_alpha) || Number(values.smoothing_alpha) < 0) {
    bad("smoothing_alpha", "must be a non-negative number");
  }
  if (!isInteger(values.seed) || Number(values.seed) < 0 || Number(values.seed) > MAX_SEED) {
    bad("seed", "must be an unsigned 64-bit integer");
  }
  return errors;
}

/** Coerce validated form values into the config payload the service expects. */
export function formToConfig(values: FormValues): Record<string, unknown> {
  return {
    input_path: values.input_path,
    delimiter: values.delimiter,
    min_user_ratings: Number(values.min_user_ratings),
    min_item_ratings: Number(values.min_item_ratings),
    delta_seconds: Number(values.delta_seconds),
    split_strategy: values.split_strategy,
    test_ratio: Number(values.test_ratio),
    k: Number(values.k),
    recommenders: [...values.recommenders],
    smoothing_alpha: Number(values.smoothing_alpha),
    seed: Number(values.seed),
  };
}
