/**
 * ViewState: momentum, user-editable contour node list, zoom region and
 * display toggles. Contour invariants are enforced on every edit:
 *
 *  - the node list always starts at the fixed anchor node (the regularized
 *    saddle start t_kappa) and ends on the real axis;
 *  - after the initial descent leg, Re(t) is monotone non-decreasing.
 *
 * Edits violating an invariant are rejected with a message; the state is
 * left unchanged.
 */

export type Node = [number, number]; // [Re t, Im t]

export interface Region {
  reMin: number;
  reMax: number;
  imMin: number;
  imMax: number;
}

export interface DisplayToggles {
  showRe: boolean; // Re vs Im of sqrt(r^2) in the heatmap
  showCuts: boolean;
  showGates: boolean;
  showClassicalMarkers: boolean;
}

export interface EditResult {
  ok: boolean;
  message?: string;
}

const EPS = 1e-12;

export function validateNodes(nodes: Node[], ts: Node): EditResult {
  if (nodes.length < 2) {
    return { ok: false, message: "contour needs at least 2 nodes" };
  }
  const [r0, i0] = nodes[0];
  if (Math.abs(r0 - ts[0]) > EPS || Math.abs(i0 - ts[1]) > EPS) {
    return { ok: false, message: "contour must start at the fixed anchor node" };
  }
  const last = nodes[nodes.length - 1];
  if (Math.abs(last[1]) > EPS) {
    return { ok: false, message: "contour must end on the real axis" };
  }
  for (let k = 1; k < nodes.length - 1; k++) {
    if (nodes[k + 1][0] < nodes[k][0] - EPS) {
      return {
        ok: false,
        message: `nodes must be Re-monotone after the descent (node ${k + 1})`,
      };
    }
  }
  return { ok: true };
}

export class ViewState {
  px: number;
  pz: number;
  ts: Node = [0, 0];
  nodes: Node[] = [];
  autoNodes: Node[] = [];
  region: Region;
  toggles: DisplayToggles = {
    showRe: true,
    showCuts: true,
    showGates: true,
    showClassicalMarkers: true,
  };
  lastEditMessage = "";

  constructor(px: number, pz: number, region: Region) {
    this.px = px;
    this.pz = pz;
    this.region = region;
  }

  /** Install the auto contour fetched from the service (trusted). */
  setAutoContour(nodes: Node[], ts: Node): void {
    this.ts = [ts[0], ts[1]];
    this.autoNodes = nodes.map((n) => [n[0], n[1]] as Node);
    this.nodes = nodes.map((n) => [n[0], n[1]] as Node);
    this.lastEditMessage = "";
  }

  /** Move one node; rejected (state unchanged) if an invariant breaks. */
  moveNode(index: number, to: Node): EditResult {
    if (index <= 0 || index >= this.nodes.length) {
      return this.reject("start and end nodes are fixed");
    }
    const trial = this.nodes.map((n) => [n[0], n[1]] as Node);
    trial[index] =
      index === this.nodes.length - 1 ? [to[0], 0] : [to[0], to[1]];
    const res = validateNodes(trial, this.ts);
    if (!res.ok) return this.reject(res.message ?? "invalid edit");
    this.nodes = trial;
    this.lastEditMessage = "";
    return { ok: true };
  }

  /** Insert a node after `index`; rejected if an invariant breaks. */
  insertNode(index: number, at: Node): EditResult {
    if (index < 0 || index >= this.nodes.length - 1) {
      return this.reject("insert position out of range");
    }
    const trial = this.nodes.map((n) => [n[0], n[1]] as Node);
    trial.splice(index + 1, 0, [at[0], at[1]]);
    const res = validateNodes(trial, this.ts);
    if (!res.ok) return this.reject(res.message ?? "invalid edit");
    this.nodes = trial;
    this.lastEditMessage = "";
    return { ok: true };
  }

  removeNode(index: number): EditResult {
    if (index <= 0 || index >= this.nodes.length - 1) {
      return this.reject("start and end nodes cannot be removed");
    }
    const trial = this.nodes.filter((_, k) => k !== index);
    const res = validateNodes(trial, this.ts);
    if (!res.ok) return this.reject(res.message ?? "invalid edit");
    this.nodes = trial;
    this.lastEditMessage = "";
    return { ok: true };
  }

  /** Reset to the auto contour, byte-identical to what the service sent. */
  resetContour(): void {
    this.nodes = this.autoNodes.map((n) => [n[0], n[1]] as Node);
    this.lastEditMessage = "";
  }

  private reject(message: string): EditResult {
    this.lastEditMessage = message;
    return { ok: false, message };
  }
}
