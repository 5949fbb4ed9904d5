/**
 * Typed client for the placerank HTTP service. This module is the UI's
 * only data source: every number shown on screen originates from these
 * payloads, never from client-side computation.
 */

export interface Scope {
  destination_country: string;
  placement_unit: string;
  position: string;
}

export interface Profile {
  age_years: number | null;
  education_level: string;
  psych_result: string;
  experience_years: number;
}

export interface CandidateInput {
  full_name: string;
  gender: string;
  birth_date: string;
  address: string;
  phone: string;
  email: string | null;
  agency_name: string;
  destination_country: string;
  placement_unit: string;
  position: string;
  intake_date: string;
  profile: Profile;
}

export interface Candidate extends CandidateInput {
  id: number;
}

export interface DisplayBlock {
  crisp: string[];
  normalized: string[];
  weighted: string[];
  preference: string;
}

export interface ResultRow {
  rank: number;
  candidate_id: number;
  name: string;
  raw: string[];
  crisp: number[];
  normalized: number[];
  weighted: number[];
  preference: number;
  display: DisplayBlock;
}

export interface ExclusionRow {
  candidate_id: number;
  name: string;
  criterion_code: string;
  reason: string;
}

export interface CriterionConfig {
  code: string;
  name: string;
  kind: string;
  weight: number;
  rules: unknown[];
}

export interface SelectionPayload {
  batch_id: number | null;
  created_at: string | null;
  scope: Scope;
  criteria: CriterionConfig[];
  rows: ResultRow[];
  exclusions: ExclusionRow[];
}

export type WeightOverrides = Record<string, number | string>;

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
    public field?: string,
  ) {
    super(detail);
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let detail = `${response.status} ${response.statusText}`;
  let field: string | undefined;
  try {
    const body = await response.json();
    if (typeof body.detail === "string") detail = body.detail;
    if (typeof body.field === "string") field = body.field;
  } catch {
    // keep the status line
  }
  return new ApiError(response.status, detail, field);
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  listCandidates(filters: Partial<Scope> = {}): Promise<Candidate[]> {
    const params = new URLSearchParams();
    if (filters.destination_country) params.set("country", filters.destination_country);
    if (filters.placement_unit) params.set("placement", filters.placement_unit);
    if (filters.position) params.set("position", filters.position);
    const query = params.toString();
    return this.request<Candidate[]>(`/candidates${query ? "?" + query : ""}`);
  }

  createCandidate(candidate: CandidateInput): Promise<Candidate> {
    return this.request<Candidate>("/candidates", {
      method: "POST",
      body: JSON.stringify(candidate),
    });
  }

  updateCandidate(id: number, candidate: CandidateInput): Promise<Candidate> {
    return this.request<Candidate>(`/candidates/${id}`, {
      method: "PUT",
      body: JSON.stringify(candidate),
    });
  }

  deleteCandidate(id: number): Promise<{ deleted: number }> {
    return this.request<{ deleted: number }>(`/candidates/${id}`, { method: "DELETE" });
  }

  getCriteria(): Promise<CriterionConfig[]> {
    return this.request<CriterionConfig[]>("/criteria");
  }

  /** Persisted selection; overrides (if any) are frozen into the batch. */
  runSelection(scope: Scope, weights: WeightOverrides = {}): Promise<SelectionPayload> {
    return this.request<SelectionPayload>("/selections", {
      method: "POST",
      body: JSON.stringify({ scope, weights }),
    });
  }

  /** Ephemeral re-ranking; nothing is persisted server-side. */
  runWhatIf(scope: Scope, weights: WeightOverrides = {}): Promise<SelectionPayload> {
    return this.request<SelectionPayload>("/selections/whatif", {
      method: "POST",
      body: JSON.stringify({ scope, weights }),
    });
  }

  reportUrl(batchId: number, format: "json" | "csv" | "text"): string {
    return `${this.baseUrl}/selections/${batchId}/report?format=${format}`;
  }
}
