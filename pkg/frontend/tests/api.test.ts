import { afterEach, describe, expect, test, vi } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

function stubFetch(status: number, body: unknown) {
  const calls: Array<{ url: string; init?: RequestInit }> = [];
  const fake = vi.fn(async (url: string | URL | Request, init?: RequestInit) => {
    calls.push({ url: String(url), init });
    return new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });
  });
  vi.stubGlobal("fetch", fake);
  return calls;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

const scope = {
  destination_country: "Malaysia",
  placement_unit: "Nada Persada",
  position: "PRT",
};

describe("ApiClient", () => {
  test("listCandidates builds filter query", async () => {
    const calls = stubFetch(200, []);
    await new ApiClient("http://svc").listCandidates({
      destination_country: "Malaysia",
      placement_unit: "Nada Persada",
    });
    expect(calls[0].url).toBe(
      "http://svc/candidates?country=Malaysia&placement=Nada+Persada",
    );
  });

  test("runWhatIf posts scope and weights", async () => {
    const calls = stubFetch(200, { rows: [] });
    await new ApiClient().runWhatIf(scope, { C1: 1.0, C4: "SP" });
    expect(calls[0].url).toBe("/selections/whatif");
    expect(calls[0].init?.method).toBe("POST");
    expect(JSON.parse(String(calls[0].init?.body))).toEqual({
      scope,
      weights: { C1: 1.0, C4: "SP" },
    });
  });

  test("runSelection posts to the persisting endpoint", async () => {
    const calls = stubFetch(200, { rows: [] });
    await new ApiClient().runSelection(scope);
    expect(calls[0].url).toBe("/selections");
  });

  test("non-ok responses raise ApiError with detail and field", async () => {
    stubFetch(409, { detail: "candidate 1 already has name 'TERE'", field: undefined });
    const client = new ApiClient();
    const error = await client
      .createCandidate({} as never)
      .then(() => null, (e: unknown) => e);
    expect(error).toBeInstanceOf(ApiError);
    expect((error as ApiError).status).toBe(409);
    expect((error as ApiError).detail).toContain("already has name");
  });

  test("a dead network layer makes requests fail visibly", async () => {
    vi.stubGlobal("fetch", vi.fn(async () => {
      throw new TypeError("fetch failed");
    }));
    await expect(new ApiClient().getCriteria()).rejects.toThrow("fetch failed");
  });

  test("reportUrl points at the service report endpoint", () => {
    expect(new ApiClient("http://svc").reportUrl(7, "csv")).toBe(
      "http://svc/selections/7/report?format=csv",
    );
  });
});
