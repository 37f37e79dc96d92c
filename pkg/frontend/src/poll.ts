/** Status polling: one request in flight per experiment, fixed interval. */

import { ApiClient } from "./api";
import { ExperimentRecord } from "./types";

export const POLL_INTERVAL_MS = 1000;

export interface PollOptions {
  intervalMs?: number;
  onUpdate?: (record: ExperimentRecord) => void;
  sleep?: (ms: number) => Promise<void>;
}

function defaultSleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

/** Resolve once the experiment reaches done or failed. The awaited fetch
 * inside the loop guarantees at most one in-flight poll per experiment. */
export async function pollUntilSettled(
  api: ApiClient,
  id: string,
  options: PollOptions = {},
): Promise<ExperimentRecord> {
  const interval = options.intervalMs ?? POLL_INTERVAL_MS;
  const sleep = options.sleep ?? defaultSleep;
  for (;;) {
    const record = await api.getExperiment(id);
    options.onUpdate?.(record);
    if (record.status === "done" || record.status === "failed") {
      return record;
    }
    await sleep(interval);
  }
}
