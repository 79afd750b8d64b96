import { describe, expect, it } from "vitest";

import { ApiClient, FetchLike, ServiceUnreachableError } from "../src/api.js";
import { recordedFetch } from "./fakefetch.js";
import { OUTERMOST_STATES, RUNNING_EXAMPLE } from "./fixtures.js";

describe("wire client", () => {
  it("posts every request to <base>/api as JSON", async () => {
    const seen: Array<{ url: string; init?: RequestInit }> = [];
    const fetchFn: FetchLike = async (url, init) => {
      seen.push({ url, init });
      return {
        json: async () => ({ ok: true, service: "examples", payload: { examples: [] } }),
      } as unknown as Response;
    };

    await new ApiClient("http://localhost:8315", fetchFn).examples();

    expect(seen).toHaveLength(1);
    expect(seen[0].url).toBe("http://localhost:8315/api");
    expect(seen[0].init?.method).toBe("POST");
    expect(JSON.parse(String(seen[0].init?.body))).toEqual({ service: "examples" });
  });

  it("returns diagnose payloads with their wire fields intact", async () => {
    const fake = recordedFetch();
    const client = new ApiClient("", fake.fetch);

    const response = await client.diagnose(
      RUNNING_EXAMPLE,
      OUTERMOST_STATES[1],
      "outermost",
    );

    expect(response.ok).toBe(true);
    if (response.ok) {
      expect(response.payload).toEqual({
        kind: "CorrectStep",
        ruleId: "eval.sum.rule",
        message: "Calculate the sum of a list of numbers",
        stepsRemaining: 10,
        expected: [],
      });
    }
  });

  it("names the onefirst and stepsremaining services on the wire", async () => {
    const fake = recordedFetch();
    const client = new ApiClient("", fake.fetch);

    await client.hint("15", "outermost");
    await client.stepsRemaining("15", "outermost");

    expect(fake.calls).toEqual(["onefirst|outermost|15|", "stepsremaining|outermost|15|"]);
  });

  it("wraps a rejected fetch in ServiceUnreachableError", async () => {
    const failing: FetchLike = () => Promise.reject(new TypeError("fetch failed"));
    const client = new ApiClient("", failing);

    await expect(client.examples()).rejects.toThrow(ServiceUnreachableError);
    await expect(client.examples()).rejects.toThrow("service unreachable: fetch failed");
  });
});
