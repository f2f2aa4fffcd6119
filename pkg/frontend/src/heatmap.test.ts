import { describe, expect, it } from "vitest";
import {
  divergingColor,
  hitTestNode,
  pixelToPlane,
  planeToPixel,
  resolutionForRegion,
} from "./heatmap";
import type { Node, Region } from "./state";

const REGION: Region = { reMin: 0, reMax: 100, imMin: -20, imMax: 20 };

describe("divergingColor", () => {
  it("is blue at the low end, red at the high end, white midway", () => {
    expect(divergingColor(-1, -1, 1)).toEqual({ r: 30, g: 60, b: 255 });
    expect(divergingColor(1, -1, 1)).toEqual({ r: 255, g: 60, b: 30 });
    expect(divergingColor(0, -1, 1)).toEqual({ r: 255, g: 255, b: 255 });
  });

  it("clamps out-of-range values and greys non-finite ones", () => {
    expect(divergingColor(-99, -1, 1)).toEqual(divergingColor(-1, -1, 1));
    expect(divergingColor(99, -1, 1)).toEqual(divergingColor(1, -1, 1));
    expect(divergingColor(NaN, -1, 1)).toEqual({ r: 40, g: 40, b: 40 });
  });
});

describe("plane/pixel transforms", () => {
  it("round-trips interior points", () => {
    const t: Node = [37.5, -5.25];
    const [x, y] = planeToPixel(t, REGION, 640, 400);
    const back = pixelToPlane(x, y, REGION, 640, 400);
    expect(back[0]).toBeCloseTo(t[0], 10);
    expect(back[1]).toBeCloseTo(t[1], 10);
  });

  it("maps corners with the y axis flipped", () => {
    expect(planeToPixel([0, -20], REGION, 640, 400)).toEqual([0, 400]);
    expect(planeToPixel([100, 20], REGION, 640, 400)).toEqual([640, 0]);
  });
});

describe("resolutionForRegion", () => {
  it("scales with the region and pixels-per-unit", () => {
    expect(resolutionForRegion(REGION, 3, [1200, 800])).toEqual([300, 120]);
  });

  it("clamps to the service cap and a floor of 2", () => {
    expect(resolutionForRegion(REGION, 100, [1200, 800])).toEqual([1200, 800]);
    expect(
      resolutionForRegion(
        { reMin: 0, reMax: 0.001, imMin: 0, imMax: 0.001 },
        3,
        [1200, 800],
      ),
    ).toEqual([2, 2]);
  });
});

describe("hitTestNode", () => {
  const nodes: Node[] = [
    [10, 10],
    [50, 0],
    [90, -10],
  ];

  it("returns the nearest node within the pick radius", () => {
    const [x, y] = planeToPixel(nodes[1], REGION, 640, 400);
    expect(hitTestNode(nodes, [x + 3, y - 4], REGION, 640, 400)).toBe(1);
  });

  it("returns -1 when nothing is near the pointer", () => {
    expect(hitTestNode(nodes, [5, 5], REGION, 640, 400)).toBe(-1);
  });
});
