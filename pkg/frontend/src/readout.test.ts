import { describe, expect, it } from "vitest";
import { buildReadout } from "./readout";
import type { ValidateResponse } from "./types";

function resp(
  continuous: boolean,
  nFlips: number,
  amplitude: ValidateResponse["amplitude"],
): ValidateResponse {
  return {
    validation: {
      continuous,
      n_flips: nFlips,
      max_jump: continuous ? 1e-6 : 1.7,
      nearest_singularity_distance: 0.3,
    },
    coulomb_action: continuous ? [1.0, 2.0] : null,
    amplitude,
  };
}

const AMP = {
  bound_phase: [0.1, 0.2] as [number, number],
  kinetic_action: [3.0, -1.0] as [number, number],
  coulomb_action: [-12.1, 3.5] as [number, number],
  log_amplitude: -4.421317049835942,
  yield: Math.exp(2 * -4.421317049835942),
  sfa_log_amplitude: -7.915418919458244,
  sfa_yield: Math.exp(2 * -7.915418919458244),
};

describe("buildReadout", () => {
  it("shows log10 yield without a badge for a continuous contour", () => {
    const r = buildReadout(resp(true, 0, AMP));
    expect(r.badge).toBe(false);
    expect(r.log10Yield).toBeCloseTo((2 * AMP.log_amplitude) / Math.LN10, 12);
    expect(r.message).toContain("log10 yield");
  });

  it("never shows a yield from a discontinuous contour without the badge", () => {
    // even if the service were to return an amplitude alongside a failed
    // validation, the readout must badge it and suppress the number
    const r = buildReadout(resp(false, 2, AMP));
    expect(r.badge).toBe(true);
    expect(r.log10Yield).toBeNull();
    expect(r.message).toContain("2 crossings");
  });

  it("handles a continuous contour with no amplitude", () => {
    const r = buildReadout(resp(true, 0, null));
    expect(r.badge).toBe(false);
    expect(r.log10Yield).toBeNull();
  });
});
