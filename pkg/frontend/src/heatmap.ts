/**
 * Canvas heatmap of sqrt(r(t)^2) over the complex time plane, with branch
 * cuts, gate markers and the contour polyline overlaid. Pure helpers
 * (color map, coordinate transforms) are exported for tests.
 */

import type { BranchmapResponse, CAPointJson, CutJson } from "./types";
import type { Node, Region } from "./state";

export interface RGB {
  r: number;
  g: number;
  b: number;
}

/** Diverging blue-white-red map for a value in [lo, hi], clamped. */
export function divergingColor(v: number, lo: number, hi: number): RGB {
  if (!Number.isFinite(v)) return { r: 40, g: 40, b: 40 };
  const u = Math.max(0, Math.min(1, (v - lo) / (hi - lo)));
  if (u < 0.5) {
    const s = u / 0.5;
    return {
      r: Math.round(30 + 225 * s),
      g: Math.round(60 + 195 * s),
      b: 255,
    };
  }
  const s = (u - 0.5) / 0.5;
  return {
    r: 255,
    g: Math.round(255 - 195 * s),
    b: Math.round(255 - 225 * s),
  };
}

/** Affine map from a complex-plane point to canvas pixels. */
export function planeToPixel(
  t: Node,
  region: Region,
  width: number,
  height: number,
): [number, number] {
  const x = ((t[0] - region.reMin) / (region.reMax - region.reMin)) * width;
  const y =
    height - ((t[1] - region.imMin) / (region.imMax - region.imMin)) * height;
  return [x, y];
}

export function pixelToPlane(
  px: number,
  py: number,
  region: Region,
  width: number,
  height: number,
): Node {
  const re = region.reMin + (px / width) * (region.reMax - region.reMin);
  const im =
    region.imMin + ((height - py) / height) * (region.imMax - region.imMin);
  return [re, im];
}

/** Heatmap resolution for the current zoom, capped by the service. */
export function resolutionForRegion(
  region: Region,
  pixelsPerUnit: number,
  cap: [number, number],
): [number, number] {
  const nRe = Math.round((region.reMax - region.reMin) * pixelsPerUnit);
  const nIm = Math.round((region.imMax - region.imMin) * pixelsPerUnit);
  return [
    Math.max(2, Math.min(cap[0], nRe)),
    Math.max(2, Math.min(cap[1], nIm)),
  ];
}

export interface HeatmapOptions {
  showRe: boolean;
  showCuts: boolean;
  showGates: boolean;
}

export function renderBranchmap(
  canvas: HTMLCanvasElement,
  data: BranchmapResponse,
  region: Region,
  contour: Node[],
  opts: HeatmapOptions,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const { width, height } = canvas;
  const field = data.field;
  const grid = opts.showRe ? field.re : field.im;
  const flat = grid.flat().filter((v) => Number.isFinite(v));
  const lo = Math.min(...flat);
  const hi = Math.max(...flat);
  const img = ctx.createImageData(width, height);
  const nIm = field.im_axis.length;
  const nRe = field.re_axis.length;
  for (let py = 0; py < height; py++) {
    const gi = Math.min(
      nIm - 1,
      Math.floor(((height - 1 - py) / height) * nIm),
    );
    for (let px = 0; px < width; px++) {
      const gj = Math.min(nRe - 1, Math.floor((px / width) * nRe));
      const flagged = field.flags[gi][gj] === 1;
      const c = flagged
        ? { r: 0, g: 0, b: 0 }
        : divergingColor(grid[gi][gj], lo, hi);
      const k = 4 * (py * width + px);
      img.data[k] = c.r;
      img.data[k + 1] = c.g;
      img.data[k + 2] = c.b;
      img.data[k + 3] = 255;
    }
  }
  ctx.putImageData(img, 0, 0);

  if (opts.showCuts) {
    for (const cut of data.cuts) drawCut(ctx, cut, region, width, height);
  }
  if (opts.showGates) {
    for (const g of data.gates) drawGate(ctx, g, region, width, height);
  }
  drawContour(ctx, contour, region, width, height);
}

function drawCut(
  ctx: CanvasRenderingContext2D,
  cut: CutJson,
  region: Region,
  w: number,
  h: number,
): void {
  ctx.strokeStyle = cut.crosses_real_axis ? "#ff5030" : "#f0c000";
  ctx.lineWidth = 2;
  ctx.beginPath();
  cut.points.forEach((p, i) => {
    const [x, y] = planeToPixel(p, region, w, h);
    if (i === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  });
  ctx.stroke();
}

function drawGate(
  ctx: CanvasRenderingContext2D,
  gate: CAPointJson,
  region: Region,
  w: number,
  h: number,
): void {
  const [x, y] = planeToPixel(gate.t, region, w, h);
  ctx.fillStyle = gate.re_v2 > 0 ? "#00c060" : "#9040ff";
  ctx.beginPath();
  ctx.arc(x, y, 5, 0, 2 * Math.PI);
  ctx.fill();
}

function drawContour(
  ctx: CanvasRenderingContext2D,
  nodes: Node[],
  region: Region,
  w: number,
  h: number,
): void {
  if (nodes.length < 2) return;
  ctx.strokeStyle = "#ffffff";
  ctx.lineWidth = 2.5;
  ctx.beginPath();
  nodes.forEach((n, i) => {
    const [x, y] = planeToPixel(n, region, w, h);
    if (i === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  });
  ctx.stroke();
  for (const n of nodes) {
    const [x, y] = planeToPixel(n, region, w, h);
    ctx.fillStyle = "#ffffff";
    ctx.strokeStyle = "#202020";
    ctx.beginPath();
    ctx.arc(x, y, 6, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
  }
}

/** Index of the contour node within `radiusPx` of the pointer, or -1. */
export function hitTestNode(
  nodes: Node[],
  pointerPx: [number, number],
  region: Region,
  width: number,
  height: number,
  radiusPx = 10,
): number {
  let best = -1;
  let bestD = radiusPx;
  nodes.forEach((n, i) => {
    const [x, y] = planeToPixel(n, region, width, height);
    const d = Math.hypot(x - pointerPx[0], y - pointerPx[1]);
    if (d <= bestD) {
      best = i;
      bestD = d;
    }
  });
  return best;
}
