import { describe, expect, it, vi } from "vitest";
import {
  debounce,
  ExplorerClient,
  ServiceRequestError,
  ServiceUnreachableError,
} from "./api";

function jsonResponse(body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status: 200,
    headers: { "Content-Type": "application/json" },
  });
}

describe("debounce", () => {
  it("fires once on the trailing edge after the wait", () => {
    vi.useFakeTimers();
    const fn = vi.fn();
    const d = debounce(fn, 150);
    d();
    vi.advanceTimersByTime(100);
    d();
    d();
    vi.advanceTimersByTime(149);
    expect(fn).not.toHaveBeenCalled();
    vi.advanceTimersByTime(1);
    expect(fn).toHaveBeenCalledTimes(1);
    vi.useRealTimers();
  });

  it("passes the latest arguments", () => {
    vi.useFakeTimers();
    const fn = vi.fn();
    const d = debounce(fn, 150);
    d(1);
    d(2);
    vi.advanceTimersByTime(150);
    expect(fn).toHaveBeenCalledWith(2);
    vi.useRealTimers();
  });
});

describe("ExplorerClient", () => {
  it("posts JSON to the route and parses the response", async () => {
    const fetchFn = vi.fn(async () => jsonResponse({ ts: [1, 2] }));
    const client = new ExplorerClient("http://svc", fetchFn as typeof fetch);
    const resp = await client.saddle(0.05, 0.4);
    expect(resp).toEqual({ ts: [1, 2] });
    const [url, init] = fetchFn.mock.calls[0] as unknown as [
      string,
      RequestInit,
    ];
    expect(url).toBe("http://svc/saddle");
    expect(JSON.parse(init.body as string)).toEqual({ px: 0.05, pz: 0.4 });
  });

  it("aborts the previous in-flight request on the same channel", async () => {
    const seenSignals: AbortSignal[] = [];
    const fetchFn = vi.fn(
      (_url: string, init?: RequestInit) =>
        new Promise<Response>((resolve, reject) => {
          const signal = init!.signal!;
          seenSignals.push(signal);
          signal.addEventListener("abort", () =>
            reject(new DOMException("aborted", "AbortError")),
          );
          setTimeout(() => resolve(jsonResponse({ n: seenSignals.length })), 5);
        }),
    );
    const client = new ExplorerClient("http://svc", fetchFn as typeof fetch);
    const first = client.saddle(0.01, 0.1);
    const second = client.saddle(0.02, 0.2);
    expect(await first).toBeUndefined(); // superseded
    expect(await second).toEqual({ n: 2 });
    expect(seenSignals[0].aborted).toBe(true);
    expect(seenSignals[1].aborted).toBe(false);
  });

  it("does not cancel across different channels", async () => {
    const fetchFn = vi.fn(async (url: string) =>
      jsonResponse({ route: url }),
    );
    const client = new ExplorerClient("http://svc", fetchFn as typeof fetch);
    const [a, b] = await Promise.all([
      client.saddle(0.01, 0.1),
      client.contourAuto(0.01, 0.1),
    ]);
    expect(a).toEqual({ route: "http://svc/saddle" });
    expect(b).toEqual({ route: "http://svc/contour/auto" });
  });

  it("throws ServiceUnreachableError on network failure", async () => {
    const fetchFn = vi.fn(async () => {
      throw new TypeError("fetch failed");
    });
    const client = new ExplorerClient("http://svc", fetchFn as typeof fetch);
    await expect(client.saddle(0.05, 0.4)).rejects.toBeInstanceOf(
      ServiceUnreachableError,
    );
    await expect(client.config()).rejects.toBeInstanceOf(
      ServiceUnreachableError,
    );
  });

  it("throws ServiceRequestError with status on non-2xx", async () => {
    const fetchFn = vi.fn(
      async () => new Response("bad momentum", { status: 422 }),
    );
    const client = new ExplorerClient("http://svc", fetchFn as typeof fetch);
    const err = await client.saddle(0.05, 0.4).catch((e) => e);
    expect(err).toBeInstanceOf(ServiceRequestError);
    expect((err as ServiceRequestError).status).toBe(422);
  });
});
