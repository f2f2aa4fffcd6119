/**
 * Explorer-service client: typed POST wrappers with per-channel
 * cancellation (an in-flight request is aborted when superseded) and a
 * trailing-edge debounce used while sliders/nodes are dragged.
 */

import type {
  BranchmapResponse,
  ContourAutoResponse,
  SaddleResponse,
  ServiceConfig,
  TcaResponse,
  TrajectoryResponse,
  ValidateResponse,
} from "./types";

export class ServiceUnreachableError extends Error {
  constructor(cause: unknown) {
    super(`explorer service unreachable: ${String(cause)}`);
    this.name = "ServiceUnreachableError";
  }
}

export class ServiceRequestError extends Error {
  constructor(public status: number, detail: string) {
    super(`service returned ${status}: ${detail}`);
    this.name = "ServiceRequestError";
  }
}

/** Trailing-edge debounce; the wrapped call runs once the events pause. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = undefined;
      fn(...args);
    }, waitMs);
  };
}

export class ExplorerClient {
  private controllers = new Map<string, AbortController>();

  constructor(
    readonly baseUrl: string,
    private fetchFn: typeof fetch = fetch,
  ) {}

  /** POST to `route`, aborting any previous in-flight call on the same
   * channel (default: the route itself). Returns undefined if aborted. */
  private async post<T>(
    route: string,
    body: unknown,
    channel: string = route,
  ): Promise<T | undefined> {
    this.controllers.get(channel)?.abort();
    const controller = new AbortController();
    this.controllers.set(channel, controller);
    let resp: Response;
    try {
      resp = await this.fetchFn(this.baseUrl + route, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
    } catch (err) {
      if (controller.signal.aborted) return undefined;
      throw new ServiceUnreachableError(err);
    }
    if (controller.signal.aborted) return undefined;
    if (!resp.ok) {
      throw new ServiceRequestError(resp.status, await resp.text());
    }
    return (await resp.json()) as T;
  }

  async config(): Promise<ServiceConfig> {
    let resp: Response;
    try {
      resp = await this.fetchFn(this.baseUrl + "/config");
    } catch (err) {
      throw new ServiceUnreachableError(err);
    }
    if (!resp.ok) {
      throw new ServiceRequestError(resp.status, await resp.text());
    }
    return (await resp.json()) as ServiceConfig;
  }

  saddle(px: number, pz: number) {
    return this.post<SaddleResponse>("/saddle", { px, pz });
  }

  tca(px: number, pz: number) {
    return this.post<TcaResponse>("/tca", { px, pz });
  }

  branchmap(
    px: number,
    pz: number,
    region: { re_min: number; re_max: number; im_min: number; im_max: number },
    nRe: number,
    nIm: number,
  ) {
    return this.post<BranchmapResponse>("/branchmap", {
      px,
      pz,
      ...region,
      n_re: nRe,
      n_im: nIm,
    });
  }

  contourAuto(px: number, pz: number) {
    return this.post<ContourAutoResponse>("/contour/auto", { px, pz });
  }

  contourValidate(px: number, pz: number, nodes: [number, number][]) {
    return this.post<ValidateResponse>("/contour/validate", {
      px,
      pz,
      nodes,
    });
  }

  trajectory(
    px: number,
    pz: number,
    nodes: [number, number][],
    nSamples = 400,
  ) {
    return this.post<TrajectoryResponse>("/trajectory", {
      px,
      pz,
      nodes,
      n_trajectory_samples: nSamples,
    });
  }
}
