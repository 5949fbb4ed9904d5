/**
 * Pure HTML builders. Every value cell is copied verbatim from the
 * service payload (the `display` strings for numbers); nothing is
 * computed, rounded, or re-ordered here.
 */

import type {
  Candidate,
  CandidateInput,
  CriterionConfig,
  ExclusionRow,
  SelectionPayload,
} from "./api.js";

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

/** Distinct values in first-seen order (the server lists insertion order). */
export function distinctValues(candidates: Candidate[], key: keyof Candidate): string[] {
  const seen: string[] = [];
  for (const candidate of candidates) {
    const value = String(candidate[key]);
    if (!seen.includes(value)) seen.push(value);
  }
  return seen;
}

export function renderScopeOptions(values: string[], selected: string): string {
  return values
    .map((value) => {
      const mark = value === selected ? " selected" : "";
      return `<option value="${escapeHtml(value)}"${mark}>${escapeHtml(value)}</option>`;
    })
    .join("");
}

export function renderResultsTable(payload: SelectionPayload): string {
  const codes = payload.criteria.map((c) => c.code);
  const group = (title: string, span: number) =>
    `<th colspan="${span}" class="group">${escapeHtml(title)}</th>`;
  const head1 =
    `<tr><th rowspan="2">rank</th><th rowspan="2">id</th><th rowspan="2">name</th>` +
    group("crisp", codes.length) +
    group("normalized", codes.length) +
    group("weighted", codes.length) +
    `<th rowspan="2">V</th></tr>`;
  const head2 =
    "<tr>" +
    codes.map((c) => `<th>${escapeHtml(c)}</th>`).join("") +
    codes.map((c) => `<th>R${escapeHtml(c)}</th>`).join("") +
    codes.map((_, j) => `<th>RxW${j + 1}</th>`).join("") +
    "</tr>";
  const body = payload.rows
    .map((row) => {
      const cells = (values: string[]) =>
        values.map((v) => `<td class="num">${escapeHtml(v)}</td>`).join("");
      return (
        `<tr class="result-row" data-id="${row.candidate_id}">` +
        `<td class="num">${row.rank}</td>` +
        `<td class="num">${row.candidate_id}</td>` +
        `<td>${escapeHtml(row.name)}</td>` +
        cells(row.display.crisp) +
        cells(row.display.normalized) +
        cells(row.display.weighted) +
        `<td class="num pref">${escapeHtml(row.display.preference)}</td>` +
        "</tr>"
      );
    })
    .join("");
  return `<table class="results"><thead>${head1}${head2}</thead><tbody>${body}</tbody></table>`;
}

export function renderExclusions(exclusions: ExclusionRow[]): string {
  if (exclusions.length === 0) return "";
  const items = exclusions
    .map(
      (e) =>
        `<li><strong>${escapeHtml(e.name)}</strong> (id ${e.candidate_id}), ` +
        `${escapeHtml(e.criterion_code)}: ${escapeHtml(e.reason)}</li>`,
    )
    .join("");
  return `<h3>Excluded</h3><ul class="exclusions">${items}</ul>`;
}

export function renderCandidateGrid(candidates: Candidate[]): string {
  if (candidates.length === 0) {
    return `<p class="placeholder">No candidates yet. Add one below.</p>`;
  }
  const rows = candidates
    .map(
      (c) =>
        `<tr data-id="${c.id}"><td class="num">${c.id}</td>` +
        `<td>${escapeHtml(c.full_name)}</td>` +
        `<td>${escapeHtml(c.gender)}</td>` +
        `<td>${escapeHtml(c.birth_date)}</td>` +
        `<td>${escapeHtml(c.destination_country)} / ${escapeHtml(c.placement_unit)} / ${escapeHtml(c.position)}</td>` +
        `<td class="num">${c.profile.age_years ?? "auto"}</td>` +
        `<td>${escapeHtml(c.profile.education_level)}</td>` +
        `<td>${escapeHtml(c.profile.psych_result)}</td>` +
        `<td class="num">${c.profile.experience_years}</td>` +
        `<td><button type="button" class="edit" data-id="${c.id}">edit</button> ` +
        `<button type="button" class="remove" data-id="${c.id}">delete</button></td></tr>`,
    )
    .join("");
  return (
    `<table class="grid"><thead><tr><th>id</th><th>name</th><th>gender</th>` +
    `<th>born</th><th>scope</th><th>age</th><th>education</th><th>psych</th>` +
    `<th>exp</th><th></th></tr></thead><tbody>${rows}</tbody></table>`
  );
}

export function renderSliders(
  criteria: CriterionConfig[],
  weights: Record<string, number>,
): string {
  return criteria
    .map((c) => {
      const value = weights[c.code] ?? c.weight;
      return (
        `<label class="slider-row">` +
        `<span class="slider-name">${escapeHtml(c.code)} ${escapeHtml(c.name)}</span>` +
        `<input type="range" min="0.05" max="1" step="0.05" value="${value}" data-code="${escapeHtml(c.code)}">` +
        `<span class="slider-value" data-code="${escapeHtml(c.code)}">${value}</span>` +
        `</label>`
      );
    })
    .join("");
}

export function emptyResultsPlaceholder(): string {
  return `<p class="placeholder">Pick a country, placement unit and position, then run the ranking.</p>`;
}

/** Client-side mirror of the server's field rules; the server stays authoritative. */
export function validateCandidateForm(input: CandidateInput): Record<string, string> {
  const errors: Record<string, string> = {};
  if (input.full_name.trim() === "") errors.full_name = "name must not be empty";
  if (input.birth_date === "") errors.birth_date = "required";
  if (input.intake_date === "") errors.intake_date = "required";
  if (input.birth_date !== "" && input.intake_date !== "" && input.birth_date >= input.intake_date) {
    errors.birth_date = "must be before the intake date";
  }
  if (input.destination_country.trim() === "") errors.destination_country = "required";
  if (input.placement_unit.trim() === "") errors.placement_unit = "required";
  if (input.position.trim() === "") errors.position = "required";
  if (input.profile.experience_years < 0) errors.experience_years = "must be >= 0";
  if (input.profile.age_years !== null && input.profile.age_years < 0) {
    errors.age_years = "must be >= 0";
  }
  return errors;
}
