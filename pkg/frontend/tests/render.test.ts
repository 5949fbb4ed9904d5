import { describe, expect, test } from "vitest";

import type { Candidate, SelectionPayload } from "../src/api.js";
import {
  distinctValues,
  escapeHtml,
  renderCandidateGrid,
  renderExclusions,
  renderResultsTable,
  renderScopeOptions,
  renderSliders,
  validateCandidateForm,
} from "../src/render.js";

// A payload in the shape the service returns for the five-candidate
// example; only the first two rows are spelled out here.
const payload: SelectionPayload = {
  batch_id: 1,
  created_at: "2013-04-29T00:00:00+00:00",
  scope: {
    destination_country: "Malaysia",
    placement_unit: "Nada Persada",
    position: "PRT",
  },
  criteria: [
    { code: "C1", name: "Age", kind: "benefit", weight: 0.5, rules: [] },
    { code: "C2", name: "Education", kind: "benefit", weight: 0.75, rules: [] },
    { code: "C3", name: "Psych", kind: "benefit", weight: 1.0, rules: [] },
    { code: "C4", name: "Experience", kind: "benefit", weight: 0.75, rules: [] },
  ],
  rows: [
    {
      rank: 1,
      candidate_id: 5,
      name: "MINA",
      raw: ["23", "DI-DIII", "recommended", "6"],
      crisp: [0.75, 0.5, 1.0, 0.5],
      normalized: [0.75, 1.0, 1.0, 1.0],
      weighted: [0.375, 0.75, 1.0, 0.75],
      preference: 2.875,
      display: {
        crisp: ["0.75", "0.50", "1.00", "0.50"],
        normalized: ["0.75", "1.00", "1.00", "1.00"],
        weighted: ["0.38", "0.75", "1.00", "0.75"],
        preference: "2.88",
      },
    },
    {
      rank: 2,
      candidate_id: 4,
      name: "DEDE",
      raw: ["20", "SMA", "recommended", "2"],
      crisp: [1.0, 0.25, 1.0, 0.25],
      normalized: [1.0, 0.5, 1.0, 0.5],
      weighted: [0.5, 0.375, 1.0, 0.375],
      preference: 2.25,
      display: {
        crisp: ["1.00", "0.25", "1.00", "0.25"],
        normalized: ["1.00", "0.50", "1.00", "0.50"],
        weighted: ["0.50", "0.38", "1.00", "0.38"],
        preference: "2.25",
      },
    },
  ],
  exclusions: [],
};

function cellTexts(html: string): string[] {
  return [...html.matchAll(/<td[^>]*>([^<]*)<\/td>/g)].map((m) => m[1]);
}

describe("renderResultsTable", () => {
  test("rows appear in payload order with payload display strings", () => {
    const html = renderResultsTable(payload);
    const cells = cellTexts(html);
    expect(cells.slice(0, 16)).toEqual([
      "1", "5", "MINA",
      "0.75", "0.50", "1.00", "0.50",
      "0.75", "1.00", "1.00", "1.00",
      "0.38", "0.75", "1.00", "0.75",
      "2.88",
    ]);
  });

  test("every numeric cell equals a display string character for character", () => {
    const html = renderResultsTable(payload);
    for (const row of payload.rows) {
      const strings = [
        ...row.display.crisp,
        ...row.display.normalized,
        ...row.display.weighted,
        row.display.preference,
      ];
      for (const s of strings) {
        expect(html).toContain(`>${s}</td>`);
      }
    }
  });

  test("headers follow the criterion codes", () => {
    const html = renderResultsTable(payload);
    for (const header of ["C1", "RC1", "RxW1", "C4", "RC4", "RxW4"]) {
      expect(html).toContain(`<th>${header}</th>`);
    }
    expect(html).toContain(">V</th>");
  });

  test("names are escaped", () => {
    const hostile = structuredClone(payload);
    hostile.rows[0].name = "<img src=x>";
    expect(renderResultsTable(hostile)).not.toContain("<img");
  });
});

describe("renderExclusions", () => {
  test("empty list renders nothing", () => {
    expect(renderExclusions([])).toBe("");
  });

  test("lists names with reasons", () => {
    const html = renderExclusions([
      { candidate_id: 9, name: "OLDTIMER", criterion_code: "C1", reason: "no rule matches 43" },
    ]);
    expect(html).toContain("OLDTIMER");
    expect(html).toContain("C1");
    expect(html).toContain("no rule matches 43");
  });
});

describe("scope options", () => {
  const candidates = [
    { destination_country: "Malaysia" },
    { destination_country: "Malaysia" },
    { destination_country: "Taiwan" },
  ] as Candidate[];

  test("distinct values keep first-seen order", () => {
    expect(distinctValues(candidates, "destination_country")).toEqual(["Malaysia", "Taiwan"]);
  });

  test("selected option is marked", () => {
    const html = renderScopeOptions(["Malaysia", "Taiwan"], "Taiwan");
    expect(html).toContain('<option value="Taiwan" selected>');
  });
});

describe("renderSliders", () => {
  test("one slider per criterion with the current weight", () => {
    const html = renderSliders(payload.criteria, { C1: 1.0, C2: 0.75, C3: 1.0, C4: 0.75 });
    expect(html.match(/type="range"/g)).toHaveLength(4);
    expect(html).toContain('data-code="C1"');
    expect(html).toContain('value="1"');
  });
});

describe("renderCandidateGrid", () => {
  test("placeholder when empty", () => {
    expect(renderCandidateGrid([])).toContain("No candidates yet");
  });
});

describe("validateCandidateForm", () => {
  const valid = {
    full_name: "MINA",
    gender: "female",
    birth_date: "1990-01-21",
    address: "",
    phone: "",
    email: null,
    agency_name: "",
    destination_country: "Malaysia",
    placement_unit: "Nada Persada",
    position: "PRT",
    intake_date: "2013-04-29",
    profile: {
      age_years: 23,
      education_level: "DI-DIII",
      psych_result: "recommended",
      experience_years: 6,
    },
  };

  test("accepts a complete candidate", () => {
    expect(validateCandidateForm(valid)).toEqual({});
  });

  test("blocks empty name client-side", () => {
    const errors = validateCandidateForm({ ...valid, full_name: "   " });
    expect(errors.full_name).toBeTruthy();
  });

  test("birth date must precede intake date", () => {
    const errors = validateCandidateForm({ ...valid, birth_date: "2014-01-01" });
    expect(errors.birth_date).toBeTruthy();
  });

  test("negative experience rejected", () => {
    const errors = validateCandidateForm({
      ...valid,
      profile: { ...valid.profile, experience_years: -1 },
    });
    expect(errors.experience_years).toBeTruthy();
  });
});

describe("escapeHtml", () => {
  test("escapes markup characters", () => {
    expect(escapeHtml(`<a href="x">&`)).toBe("&lt;a href=&quot;x&quot;&gt;&amp;");
  });
});
