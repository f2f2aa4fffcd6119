/**
 * Dashboard wiring: momentum sliders, branch-cut heatmap with draggable
 * contour nodes, live complex-z trajectory panel, and the
 * amplitude/validation readout.
 *
 * Data flow: momentum change -> refetch /branchmap, /tca, /contour/auto;
 * node drag -> refetch /contour/validate and /trajectory (debounced
 * 150 ms, superseded requests aborted). Service unreachable -> offline
 * banner and disabled controls.
 */

import { debounce, ExplorerClient, ServiceUnreachableError } from "./api";
import {
  hitTestNode,
  pixelToPlane,
  renderBranchmap,
  resolutionForRegion,
} from "./heatmap";
import { buildReadout } from "./readout";
import { ViewState, type Node, type Region } from "./state";
import type { BranchmapResponse, ServiceConfig } from "./types";

const SERVICE_URL =
  new URLSearchParams(window.location.search).get("service") ??
  "http://127.0.0.1:8710";

const client = new ExplorerClient(SERVICE_URL);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const canvas = el<HTMLCanvasElement>("heatmap");
const trajCanvas = el<HTMLCanvasElement>("trajectory");
const pxSlider = el<HTMLInputElement>("px-slider");
const pzSlider = el<HTMLInputElement>("pz-slider");
const pxLabel = el<HTMLSpanElement>("px-label");
const pzLabel = el<HTMLSpanElement>("pz-label");
const readoutBox = el<HTMLDivElement>("readout");
const badgeBox = el<HTMLDivElement>("badge");
const banner = el<HTMLDivElement>("offline-banner");
const resetBtn = el<HTMLButtonElement>("reset-contour");
const toggleRe = el<HTMLInputElement>("toggle-re");
const editMsg = el<HTMLDivElement>("edit-message");
const gateInfo = el<HTMLSpanElement>("gate-info");

let config: ServiceConfig | undefined;
let state: ViewState | undefined;
let lastBranchmap: BranchmapResponse | undefined;

function setOffline(offline: boolean): void {
  banner.style.display = offline ? "block" : "none";
  for (const control of [pxSlider, pzSlider, resetBtn, toggleRe]) {
    control.disabled = offline;
  }
}

function guard<A extends unknown[]>(
  fn: (...args: A) => Promise<void>,
): (...args: A) => void {
  return (...args: A) => {
    fn(...args).catch((err) => {
      if (err instanceof ServiceUnreachableError) setOffline(true);
      else console.error(err);
    });
  };
}

function redraw(): void {
  if (!state || !lastBranchmap) return;
  renderBranchmap(canvas, lastBranchmap, state.region, state.nodes, {
    showRe: state.toggles.showRe,
    showCuts: state.toggles.showCuts,
    showGates: state.toggles.showGates,
  });
}

function drawTrajectory(z: [number, number][]): void {
  const ctx = trajCanvas.getContext("2d");
  if (!ctx) return;
  const { width, height } = trajCanvas;
  ctx.fillStyle = "#101018";
  ctx.fillRect(0, 0, width, height);
  const res = z.map((p) => p[0]);
  const ims = z.map((p) => p[1]);
  const reMin = Math.min(...res);
  const reMax = Math.max(...res);
  const imMin = Math.min(...ims);
  const imMax = Math.max(...ims);
  const sx = (v: number) =>
    ((v - reMin) / (reMax - reMin || 1)) * (width - 20) + 10;
  const sy = (v: number) =>
    height - (((v - imMin) / (imMax - imMin || 1)) * (height - 20) + 10);
  // Im z = 0 guide line
  ctx.strokeStyle = "#404050";
  ctx.beginPath();
  ctx.moveTo(0, sy(0));
  ctx.lineTo(width, sy(0));
  ctx.stroke();
  ctx.strokeStyle = "#30c0ff";
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  z.forEach((p, i) => {
    if (i === 0) ctx.moveTo(sx(p[0]), sy(p[1]));
    else ctx.lineTo(sx(p[0]), sy(p[1]));
  });
  ctx.stroke();
}

const refetchContourFeedback = debounce(
  guard(async () => {
    if (!state) return;
    const nodes = state.nodes.map((n) => [n[0], n[1]] as [number, number]);
    const [validated, traj] = await Promise.all([
      client.contourValidate(state.px, state.pz, nodes),
      client.trajectory(state.px, state.pz, nodes),
    ]);
    if (validated) {
      const readout = buildReadout(validated);
      readoutBox.textContent = readout.message;
      badgeBox.style.display = readout.badge ? "inline-block" : "none";
    }
    if (traj) drawTrajectory(traj.z);
    setOffline(false);
  }),
  150,
);

const refetchMomentum = debounce(
  guard(async () => {
    if (!state || !config) return;
    const [saddle, auto, tca] = await Promise.all([
      client.saddle(state.px, state.pz),
      client.contourAuto(state.px, state.pz),
      client.tca(state.px, state.pz),
    ]);
    if (!saddle || !auto) return;
    if (tca) {
      const open = tca.roots.filter((r) => r.re_v2 > 0).length;
      gateInfo.textContent =
        `${tca.roots.length} closest-approach roots, ${open} open gates`;
    }
    // the contour is anchored at the regularized start t_kappa, not ts
    state.setAutoContour(
      auto.contour.nodes.map((n) => [n[0], n[1]] as Node),
      [saddle.t_kappa[0], saddle.t_kappa[1]],
    );
    const w = config.omega;
    const region: Region = {
      reMin: saddle.t0 - Math.PI / w,
      reMax: saddle.t0 + (5.5 * Math.PI) / w,
      imMin: -1.5 * saddle.tau_T,
      imMax: 1.5 * saddle.tau_T,
    };
    state.region = region;
    const [nRe, nIm] = resolutionForRegion(region, 3.0, config.max_grid);
    const map = await client.branchmap(
      state.px,
      state.pz,
      {
        re_min: region.reMin,
        re_max: region.reMax,
        im_min: region.imMin,
        im_max: region.imMax,
      },
      nRe,
      nIm,
    );
    if (!map) return;
    lastBranchmap = map;
    redraw();
    refetchContourFeedback();
    setOffline(false);
  }),
  150,
);

function onMomentumInput(): void {
  if (!state || !config) return;
  const fw = config.F / config.omega;
  state.px = Number(pxSlider.value) * fw;
  state.pz = Number(pzSlider.value) * fw;
  pxLabel.textContent = `${pxSlider.value} F/w (${state.px.toFixed(4)} a.u.)`;
  pzLabel.textContent = `${pzSlider.value} F/w (${state.pz.toFixed(4)} a.u.)`;
  refetchMomentum();
}

let dragging = -1;

canvas.addEventListener("pointerdown", (ev) => {
  if (!state) return;
  const rect = canvas.getBoundingClientRect();
  const px = ((ev.clientX - rect.left) / rect.width) * canvas.width;
  const py = ((ev.clientY - rect.top) / rect.height) * canvas.height;
  dragging = hitTestNode(state.nodes, [px, py], state.region, canvas.width,
                         canvas.height);
  if (dragging >= 0) canvas.setPointerCapture(ev.pointerId);
});

canvas.addEventListener("pointermove", (ev) => {
  if (!state || dragging < 0) return;
  const rect = canvas.getBoundingClientRect();
  const px = ((ev.clientX - rect.left) / rect.width) * canvas.width;
  const py = ((ev.clientY - rect.top) / rect.height) * canvas.height;
  const target = pixelToPlane(px, py, state.region, canvas.width,
                              canvas.height);
  const res = state.moveNode(dragging, target);
  editMsg.textContent = res.ok ? "" : (res.message ?? "");
  if (res.ok) {
    redraw();
    refetchContourFeedback();
  }
});

canvas.addEventListener("pointerup", () => {
  dragging = -1;
});

resetBtn.addEventListener("click", () => {
  if (!state) return;
  state.resetContour();
  editMsg.textContent = "";
  redraw();
  refetchContourFeedback();
});

toggleRe.addEventListener("change", () => {
  if (!state) return;
  state.toggles.showRe = toggleRe.checked;
  redraw();
});

pxSlider.addEventListener("input", onMomentumInput);
pzSlider.addEventListener("input", onMomentumInput);

guard(async () => {
  config = await client.config();
  const fw = config.F / config.omega;
  state = new ViewState(0.001, 0.0635 * fw, {
    reMin: 0,
    reMax: 1,
    imMin: -1,
    imMax: 1,
  });
  pxSlider.value = (state.px / fw).toFixed(4);
  pzSlider.value = (state.pz / fw).toFixed(4);
  setOffline(false);
  onMomentumInput();
})();
