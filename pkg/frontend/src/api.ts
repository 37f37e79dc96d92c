/** Thin fetch wrappers over the service's JSON endpoints. */

import { DatasetEntry, ExperimentRecord, FieldError, Profile } from "./types";

export class ValidationError extends Error {
  constructor(public readonly fieldErrors: FieldError[]) {
    super(fieldErrors.map((e) => `${e.field}: ${e.message}`).join("; "));
  }
}

export class ServiceError extends Error {
  constructor(public readonly status: number, detail: string) {
    super(detail);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    const body = await response.json().catch(() => null);
    if (response.status === 422 && body && Array.isArray((body as { detail?: unknown }).detail)) {
      throw new ValidationError((body as { detail: FieldError[] }).detail);
    }
    if (!response.ok) {
      const detail =
        body && typeof (body as { detail?: unknown }).detail === "string"
          ? (body as { detail: string }).detail
          : `HTTP ${response.status}`;
      throw new ServiceError(response.status, detail);
    }
    return body;
  }

  async createExperiment(config: Record<string, unknown>): Promise<string> {
    const body = (await this.request("/api/experiments", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(config),
    })) as { id: string };
    return body.id;
  }

  async getExperiment(id: string): Promise<ExperimentRecord> {
    return (await this.request(`/api/experiments/${id}`)) as ExperimentRecord;
  }

  async listExperiments(): Promise<ExperimentRecord[]> {
    return (await this.request("/api/experiments")) as ExperimentRecord[];
  }

  async listDatasets(): Promise<DatasetEntry[]> {
    return (await this.request("/api/datasets")) as DatasetEntry[];
  }

  async datasetProfile(name: string): Promise<Profile> {
    return (await this.request(`/api/datasets/${encodeURIComponent(name)}/profile`)) as Profile;
  }
}
