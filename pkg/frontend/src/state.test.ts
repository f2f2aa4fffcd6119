import { describe, expect, it } from "vitest";
import { validateNodes, ViewState, type Node } from "./state";

const TS: Node = [5.6, 19.3];
const AUTO: Node[] = [
  [5.6, 19.3],
  [5.6, 0.0],
  [40.0, 0.0],
  [120.0, 0.0],
];

function freshState(): ViewState {
  const st = new ViewState(0.05, 0.4, {
    reMin: 0,
    reMax: 150,
    imMin: -25,
    imMax: 25,
  });
  st.setAutoContour(AUTO, TS);
  return st;
}

describe("validateNodes", () => {
  it("accepts the auto contour", () => {
    expect(validateNodes(AUTO, TS).ok).toBe(true);
  });

  it("rejects a contour not starting at ts", () => {
    const nodes: Node[] = [[5.7, 19.3], [5.7, 0], [120, 0]];
    const res = validateNodes(nodes, TS);
    expect(res.ok).toBe(false);
    expect(res.message).toMatch(/start at the/);
  });

  it("rejects a contour ending off the real axis", () => {
    const nodes: Node[] = [[5.6, 19.3], [5.6, 0], [120, 2.0]];
    expect(validateNodes(nodes, TS).ok).toBe(false);
  });

  it("rejects Re-backtracking after the descent leg", () => {
    const nodes: Node[] = [[5.6, 19.3], [40, 5], [30, 2], [120, 0]];
    const res = validateNodes(nodes, TS);
    expect(res.ok).toBe(false);
    expect(res.message).toMatch(/monotone/);
  });
});

describe("ViewState edits", () => {
  it("moves an interior node and keeps the edit", () => {
    const st = freshState();
    const res = st.moveNode(1, [6.0, 3.0]);
    expect(res.ok).toBe(true);
    expect(st.nodes[1]).toEqual([6.0, 3.0]);
    expect(st.lastEditMessage).toBe("");
  });

  it("pins the last node to the real axis", () => {
    const st = freshState();
    const res = st.moveNode(st.nodes.length - 1, [130, 4.0]);
    expect(res.ok).toBe(true);
    expect(st.nodes[st.nodes.length - 1]).toEqual([130, 0]);
  });

  it("rejects moving the start node", () => {
    const st = freshState();
    const before = st.nodes.map((n) => [...n]);
    expect(st.moveNode(0, [7, 7]).ok).toBe(false);
    expect(st.nodes).toEqual(before);
    expect(st.lastEditMessage).not.toBe("");
  });

  it("rejects an invariant-breaking move and leaves state unchanged", () => {
    const st = freshState();
    const before = st.nodes.map((n) => [...n]);
    const res = st.moveNode(2, [1.0, 0.5]); // Re behind previous node
    expect(res.ok).toBe(false);
    expect(st.nodes).toEqual(before);
  });

  it("inserts and removes interior nodes under validation", () => {
    const st = freshState();
    expect(st.insertNode(1, [20, 1.0]).ok).toBe(true);
    expect(st.nodes.length).toBe(5);
    expect(st.removeNode(2).ok).toBe(true);
    expect(st.nodes.length).toBe(4);
    expect(st.removeNode(0).ok).toBe(false);
  });

  it("reset reproduces the auto contour byte-identically", () => {
    const st = freshState();
    const autoJson = JSON.stringify(AUTO);
    st.moveNode(1, [6.5, 2.0]);
    st.insertNode(1, [20, 1.0]);
    expect(JSON.stringify(st.nodes)).not.toBe(autoJson);
    st.resetContour();
    expect(JSON.stringify(st.nodes)).toBe(autoJson);
    // and the reset copy is independent of autoNodes
    st.moveNode(1, [6.5, 2.0]);
    expect(JSON.stringify(st.autoNodes)).toBe(autoJson);
  });
});
