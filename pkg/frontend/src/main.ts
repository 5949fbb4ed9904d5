/**
 * DOM wiring. State flows one way: user action -> service request ->
 * payload -> render. The client never ranks, rounds, or normalizes;
 * a dead service makes every action fail visibly in the status banner.
 */

import {
  ApiClient,
  ApiError,
  type Candidate,
  type CandidateInput,
  type CriterionConfig,
  type Scope,
  type SelectionPayload,
} from "./api.js";
import {
  distinctValues,
  emptyResultsPlaceholder,
  renderCandidateGrid,
  renderExclusions,
  renderResultsTable,
  renderScopeOptions,
  renderSliders,
  validateCandidateForm,
} from "./render.js";

const api = new ApiClient("");

interface SessionState {
  candidates: Candidate[];
  criteria: CriterionConfig[];
  weights: Record<string, number>;
  lastPayload: SelectionPayload | null;
  lastBatchId: number | null;
  editingId: number | null;
}

const state: SessionState = {
  candidates: [],
  criteria: [],
  weights: {},
  lastPayload: null,
  lastBatchId: null,
  editingId: null,
};

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing element #${id}`);
  return element as T;
}

function setStatus(message: string, isError = false): void {
  const banner = byId<HTMLDivElement>("status");
  banner.textContent = message;
  banner.className = isError ? "status error" : "status";
}

function debounce<A extends unknown[]>(fn: (...args: A) => void, delayMs: number) {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    clearTimeout(timer);
    timer = setTimeout(() => fn(...args), delayMs);
  };
}

function currentScope(): Scope {
  return {
    destination_country: byId<HTMLSelectElement>("scope-country").value,
    placement_unit: byId<HTMLSelectElement>("scope-placement").value,
    position: byId<HTMLSelectElement>("scope-position").value,
  };
}

function dirtyWeights(): Record<string, number> {
  const overrides: Record<string, number> = {};
  for (const criterion of state.criteria) {
    const weight = state.weights[criterion.code];
    if (weight !== undefined && weight !== criterion.weight) {
      overrides[criterion.code] = weight;
    }
  }
  return overrides;
}

function showPayload(payload: SelectionPayload): void {
  state.lastPayload = payload;
  byId<HTMLDivElement>("results").innerHTML = renderResultsTable(payload);
  byId<HTMLDivElement>("exclusions").innerHTML = renderExclusions(payload.exclusions);
  for (const row of byId<HTMLDivElement>("results").querySelectorAll(".result-row")) {
    row.classList.add("moved");
  }
  if (payload.batch_id !== null) {
    state.lastBatchId = payload.batch_id;
    const link = byId<HTMLAnchorElement>("csv-link");
    link.href = api.reportUrl(payload.batch_id, "csv");
    link.classList.remove("hidden");
    byId<HTMLSpanElement>("batch-label").textContent = `batch ${payload.batch_id}`;
  }
  byId<HTMLDivElement>("whatif-panel").classList.remove("disabled");
  const dirty = Object.keys(dirtyWeights()).length > 0;
  byId<HTMLButtonElement>("persist-btn").disabled = !dirty;
  byId<HTMLSpanElement>("dirty-flag").textContent = dirty
    ? "weights differ from the saved configuration"
    : "";
}

function refreshScopeSelects(): void {
  const pairs: Array<[string, keyof Candidate]> = [
    ["scope-country", "destination_country"],
    ["scope-placement", "placement_unit"],
    ["scope-position", "position"],
  ];
  for (const [elementId, key] of pairs) {
    const select = byId<HTMLSelectElement>(elementId);
    const previous = select.value;
    select.innerHTML = renderScopeOptions(distinctValues(state.candidates, key), previous);
  }
}

async function refreshCandidates(): Promise<void> {
  state.candidates = await api.listCandidates();
  byId<HTMLDivElement>("candidate-grid").innerHTML = renderCandidateGrid(state.candidates);
  refreshScopeSelects();
}

async function refreshCriteria(): Promise<void> {
  state.criteria = await api.getCriteria();
  for (const criterion of state.criteria) {
    if (state.weights[criterion.code] === undefined) {
      state.weights[criterion.code] = criterion.weight;
    }
  }
  byId<HTMLDivElement>("sliders").innerHTML = renderSliders(state.criteria, state.weights);
}

async function runRanking(persist: boolean): Promise<void> {
  const scope = currentScope();
  const overrides = dirtyWeights();
  try {
    const payload = persist
      ? await api.runSelection(scope, overrides)
      : await api.runWhatIf(scope, overrides);
    showPayload(payload);
    setStatus(persist ? "Ranking saved." : "Preview ranking (not saved).");
  } catch (error) {
    if (error instanceof ApiError && error.status === 422) {
      byId<HTMLDivElement>("results").innerHTML = emptyResultsPlaceholder();
      byId<HTMLDivElement>("exclusions").innerHTML = "";
      byId<HTMLDivElement>("whatif-panel").classList.add("disabled");
      setStatus(error.detail, true);
    } else {
      setStatus(error instanceof Error ? error.message : String(error), true);
    }
  }
}

const debouncedWhatIf = debounce(() => {
  if (state.lastPayload !== null) void runRanking(false);
}, 250);

function clearFieldErrors(): void {
  for (const note of document.querySelectorAll(".field-error")) note.textContent = "";
}

function showFieldError(field: string, message: string): void {
  const note = document.querySelector<HTMLElement>(`.field-error[data-field="${field}"]`);
  if (note) note.textContent = message;
  else setStatus(`${field}: ${message}`, true);
}

function readCandidateForm(): CandidateInput {
  const value = (id: string) => byId<HTMLInputElement>(id).value;
  const ageText = value("f-age").trim();
  return {
    full_name: value("f-name"),
    gender: byId<HTMLSelectElement>("f-gender").value,
    birth_date: value("f-birth"),
    address: value("f-address"),
    phone: value("f-phone"),
    email: value("f-email").trim() === "" ? null : value("f-email"),
    agency_name: value("f-agency"),
    destination_country: value("f-country"),
    placement_unit: value("f-placement"),
    position: value("f-position"),
    intake_date: value("f-intake"),
    profile: {
      age_years: ageText === "" ? null : Number(ageText),
      education_level: byId<HTMLSelectElement>("f-education").value,
      psych_result: byId<HTMLSelectElement>("f-psych").value,
      experience_years: Number(value("f-experience") || "0"),
    },
  };
}

function fillCandidateForm(candidate: Candidate): void {
  const set = (id: string, text: string) => {
    byId<HTMLInputElement>(id).value = text;
  };
  set("f-name", candidate.full_name);
  byId<HTMLSelectElement>("f-gender").value = candidate.gender;
  set("f-birth", candidate.birth_date);
  set("f-address", candidate.address);
  set("f-phone", candidate.phone);
  set("f-email", candidate.email ?? "");
  set("f-agency", candidate.agency_name);
  set("f-country", candidate.destination_country);
  set("f-placement", candidate.placement_unit);
  set("f-position", candidate.position);
  set("f-intake", candidate.intake_date);
  set("f-age", candidate.profile.age_years === null ? "" : String(candidate.profile.age_years));
  byId<HTMLSelectElement>("f-education").value = candidate.profile.education_level;
  byId<HTMLSelectElement>("f-psych").value = candidate.profile.psych_result;
  set("f-experience", String(candidate.profile.experience_years));
  state.editingId = candidate.id;
  byId<HTMLButtonElement>("form-submit").textContent = `Save changes to #${candidate.id}`;
  byId<HTMLButtonElement>("form-cancel").classList.remove("hidden");
}

function resetCandidateForm(): void {
  byId<HTMLFormElement>("candidate-form").reset();
  state.editingId = null;
  byId<HTMLButtonElement>("form-submit").textContent = "Add candidate";
  byId<HTMLButtonElement>("form-cancel").classList.add("hidden");
  clearFieldErrors();
}

async function submitCandidateForm(event: Event): Promise<void> {
  event.preventDefault();
  clearFieldErrors();
  const input = readCandidateForm();
  const errors = validateCandidateForm(input);
  if (Object.keys(errors).length > 0) {
    for (const [field, message] of Object.entries(errors)) showFieldError(field, message);
    return;
  }
  try {
    if (state.editingId === null) {
      const created = await api.createCandidate(input);
      setStatus(`Candidate #${created.id} added.`);
    } else {
      await api.updateCandidate(state.editingId, input);
      setStatus(`Candidate #${state.editingId} updated.`);
    }
    resetCandidateForm();
    await refreshCandidates();
  } catch (error) {
    if (error instanceof ApiError && error.status === 409) {
      showFieldError("full_name", "duplicate candidate (same name and birth date)");
    } else if (error instanceof ApiError && error.status === 400 && error.field) {
      showFieldError(error.field, error.detail);
    } else {
      setStatus(error instanceof Error ? error.message : String(error), true);
    }
  }
}

async function onGridClick(event: Event): Promise<void> {
  const target = event.target as HTMLElement;
  const idText = target.dataset.id;
  if (!idText) return;
  const id = Number(idText);
  if (target.classList.contains("edit")) {
    const candidate = state.candidates.find((c) => c.id === id);
    if (candidate) fillCandidateForm(candidate);
  } else if (target.classList.contains("remove")) {
    try {
      await api.deleteCandidate(id);
      setStatus(`Candidate #${id} deleted.`);
      await refreshCandidates();
    } catch (error) {
      setStatus(error instanceof Error ? error.message : String(error), true);
    }
  }
}

function onSliderInput(event: Event): void {
  const input = event.target as HTMLInputElement;
  const code = input.dataset.code;
  if (!code) return;
  state.weights[code] = Number(input.value);
  const label = document.querySelector<HTMLElement>(`.slider-value[data-code="${code}"]`);
  if (label) label.textContent = input.value;
  debouncedWhatIf();
}

function resetWeights(): void {
  for (const criterion of state.criteria) state.weights[criterion.code] = criterion.weight;
  byId<HTMLDivElement>("sliders").innerHTML = renderSliders(state.criteria, state.weights);
  if (state.lastPayload !== null) void runRanking(false);
}

async function init(): Promise<void> {
  byId<HTMLDivElement>("results").innerHTML = emptyResultsPlaceholder();
  byId<HTMLFormElement>("candidate-form").addEventListener("submit", submitCandidateForm);
  byId<HTMLButtonElement>("form-cancel").addEventListener("click", resetCandidateForm);
  byId<HTMLDivElement>("candidate-grid").addEventListener("click", onGridClick);
  byId<HTMLButtonElement>("rank-btn").addEventListener("click", () => void runRanking(true));
  byId<HTMLButtonElement>("persist-btn").addEventListener("click", () => void runRanking(true));
  byId<HTMLButtonElement>("reset-weights").addEventListener("click", resetWeights);
  byId<HTMLDivElement>("sliders").addEventListener("input", onSliderInput);
  try {
    await refreshCriteria();
    await refreshCandidates();
    setStatus("Connected. Pick a scope and run the ranking.");
  } catch (error) {
    setStatus(
      `Service unreachable: ${error instanceof Error ? error.message : String(error)}`,
      true,
    );
  }
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", () => void init());
}
