/**
 * Drives the UI's own client and renderers against a live service
 * process, seeded with the five-candidate example.
 */

import { type ChildProcess, spawn } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { afterAll, beforeAll, describe, expect, test } from "vitest";

import { ApiClient, ApiError, type CandidateInput } from "../src/api.js";
import { renderResultsTable } from "../src/render.js";

const PORT = 8900 + (process.pid % 500);
const BASE = `http://127.0.0.1:${PORT}`;
const SCOPE = {
  destination_country: "Malaysia",
  placement_unit: "Nada Persada",
  position: "PRT",
};

const FIXTURE: Array<[string, string, string, number, string, number]> = [
  ["TERE", "female", "1992-04-26", 20, "SMA", 0],
  ["yeli", "female", "1988-01-09", 25, "SMP", 3],
  ["mona", "female", "1991-06-30", 22, "SMA", 3],
  ["DEDE", "male", "1992-04-28", 20, "SMA", 2],
  ["MINA", "female", "1990-01-21", 23, "DI-DIII", 6],
];

function candidate(entry: (typeof FIXTURE)[number]): CandidateInput {
  const [name, gender, birth, age, education, experience] = entry;
  return {
    full_name: name,
    gender,
    birth_date: birth,
    address: "",
    phone: "",
    email: null,
    agency_name: "PT Citra Karya S",
    ...SCOPE,
    intake_date: "2013-04-29",
    profile: {
      age_years: age,
      education_level: education,
      psych_result: "recommended",
      experience_years: experience,
    },
  };
}

let server: ChildProcess;
let dataDir: string;
const api = new ApiClient(BASE);

async function waitForService(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt += 1) {
    try {
      await api.getCriteria();
      return;
    } catch {
      await new Promise((resolve) => setTimeout(resolve, 200));
    }
  }
  throw new Error(`service did not come up on ${BASE}`);
}

beforeAll(async () => {
  dataDir = mkdtempSync(join(tmpdir(), "placerank-ui-"));
  server = spawn(
    "python3",
    ["-m", "placerank", "--data-dir", dataDir, "serve", "--port", String(PORT)],
    { stdio: "ignore" },
  );
  await waitForService();
  for (const entry of FIXTURE) {
    await api.createCandidate(candidate(entry));
  }
}, 60_000);

afterAll(() => {
  server?.kill();
  if (dataDir) rmSync(dataDir, { recursive: true, force: true });
});

describe("against the live service", () => {
  test("default ranking matches the golden order", { timeout: 30_000 }, async () => {
    const payload = await api.runSelection(SCOPE);
    expect(payload.rows.map((r) => r.name)).toEqual(["MINA", "DEDE", "mona", "TERE", "yeli"]);
    expect(payload.rows.map((r) => r.display.preference)).toEqual([
      "2.88", "2.25", "2.13", "1.88", "1.63",
    ]);
    expect(payload.batch_id).toBe(1);

    // the rendered table shows exactly those payload strings, in order
    const html = renderResultsTable(payload);
    const names = [...html.matchAll(/<td>([^<]*)<\/td>/g)].map((m) => m[1]);
    expect(names).toEqual(["MINA", "DEDE", "mona", "TERE", "yeli"]);
    expect(html).toContain(">2.88</td>");
  });

  test("all sliders at 1.0 re-rank via whatif with V 3.75 for MINA", { timeout: 30_000 }, async () => {
    const payload = await api.runWhatIf(SCOPE, { C1: 1.0, C2: 1.0, C3: 1.0, C4: 1.0 });
    expect(payload.batch_id).toBeNull();
    expect(payload.rows[0].name).toBe("MINA");
    expect(payload.rows[0].display.preference).toBe("3.75");
    expect(renderResultsTable(payload)).toContain(">3.75</td>");
  });

  test("duplicate entry surfaces as a 409 for inline display", { timeout: 30_000 }, async () => {
    const error = await api
      .createCandidate(candidate(FIXTURE[0]))
      .then(() => null, (e: unknown) => e);
    expect(error).toBeInstanceOf(ApiError);
    expect((error as ApiError).status).toBe(409);
  });

  test("CSV download proxies the service report", { timeout: 30_000 }, async () => {
    const response = await fetch(api.reportUrl(1, "csv"));
    expect(response.ok).toBe(true);
    const lines = (await response.text()).split("\n");
    expect(lines[1]).toBe(
      "1,5,MINA,0.75,0.50,1.00,0.50,0.75,1.00,1.00,1.00,0.38,0.75,1.00,0.75,2.88",
    );
  });
});
