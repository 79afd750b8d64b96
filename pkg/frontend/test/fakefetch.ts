/**
 * Replayed-fetch helpers for the tests.
 *
 * The recorded fake answers only requests captured in fixtures.ts and
 * rejects everything else, so a passing test proves the screens never
 * compute a judgment locally.
 */

import { FetchLike } from "../src/api.js";
import { RECORDED } from "./fixtures.js";

export interface RecordedFetch {
  fetch: FetchLike;
  /** Fixture keys of every request made, in order. */
  calls: string[];
}

function keyOf(init?: RequestInit): string {
  const body = JSON.parse(String(init?.body ?? "{}")) as Record<string, unknown>;
  return [
    body.service ?? "",
    body.strategy ?? "",
    body.expr ?? "",
    body.submitted ?? "",
  ].join("|");
}

export function recordedFetch(): RecordedFetch {
  const calls: string[] = [];
  const fetchFn: FetchLike = async (_url, init) => {
    const key = keyOf(init);
    calls.push(key);
    const recorded = RECORDED[key];
    if (recorded === undefined) {
      throw new Error(`unrecorded request: ${key}`);
    }
    return { json: async () => recorded } as unknown as Response;
  };
  return { fetch: fetchFn, calls };
}

/** Fails the first `failures` requests, then delegates to `inner`. */
export function flakyFetch(inner: FetchLike, failures: number): FetchLike {
  let remaining = failures;
  return (url, init) => {
    if (remaining > 0) {
      remaining -= 1;
      return Promise.reject(new TypeError("fetch failed"));
    }
    return inner(url, init);
  };
}

export interface GatedFetch {
  fetch: FetchLike;
  /** Lets the requests queued so far proceed. */
  release(): void;
}

/** Holds every request until release() is called. */
export function gatedFetch(inner: FetchLike): GatedFetch {
  let open!: () => void;
  const gate = new Promise<void>((resolve) => {
    open = resolve;
  });
  const fetchFn: FetchLike = async (url, init) => {
    await gate;
    return inner(url, init);
  };
  return { fetch: fetchFn, release: open };
}
