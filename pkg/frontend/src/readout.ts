/**
 * Amplitude/validation readout logic. The invariant enforced here: a
 * yield computed from a contour the validator marked discontinuous is
 * never displayed without the warning badge.
 */

import type { ValidateResponse } from "./types";

export interface Readout {
  /** log10 of |a|^2, or null when unavailable. */
  log10Yield: number | null;
  /** true when the discontinuity warning badge must be shown. */
  badge: boolean;
  message: string;
}

export function buildReadout(resp: ValidateResponse): Readout {
  const v = resp.validation;
  if (!v.continuous) {
    return {
      log10Yield: null,
      badge: true,
      message: `contour crosses a branch cut (${v.n_flips} crossing${
        v.n_flips === 1 ? "" : "s"
      }) — amplitude not valid`,
    };
  }
  if (resp.amplitude === null) {
    return { log10Yield: null, badge: false, message: "no amplitude returned" };
  }
  const log10 = (2 * resp.amplitude.log_amplitude) / Math.LN10;
  return {
    log10Yield: log10,
    badge: false,
    message: `log10 yield = ${log10.toFixed(3)} (SFA ${(
      (2 * resp.amplitude.sfa_log_amplitude) /
      Math.LN10
    ).toFixed(3)})`,
  };
}
