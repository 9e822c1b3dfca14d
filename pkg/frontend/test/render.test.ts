import * as THREE from "three";
import { describe, expect, it } from "vitest";

import {
  METHOD_COLORS,
  buildScene,
  sampleAtScrub,
} from "../src/render.js";
import {
  createState,
  loadTrajectory,
  setScrub,
  setShowScrewAxis,
  toggleMethod,
} from "../src/state.js";
import { parseTrajectory } from "../src/trajectory.js";

import { readGolden } from "./goldens.js";

const SEP = parseTrajectory(readGolden("identity_sep.traj"));
const SCLERP = parseTrajectory(readGolden("translation_sclerp.traj"));
const KENLERP = parseTrajectory(readGolden("screw_kenlerp.traj"));

const names = (scene: THREE.Scene): string[] =>
  scene.children.map((c) => c.name).sort();

describe("sampleAtScrub", () => {
  it("snaps to the nearest grid sample", () => {
    expect(sampleAtScrub(SCLERP.samples, 0)).toBe(SCLERP.samples[0]);
    expect(sampleAtScrub(SCLERP.samples, 1)).toBe(SCLERP.samples[4]);
    expect(sampleAtScrub(SCLERP.samples, 0.49)).toBe(SCLERP.samples[2]);
    expect(sampleAtScrub(SCLERP.samples, 0.13)).toBe(SCLERP.samples[1]);
  });
});

describe("buildScene", () => {
  it("draws only the grid and world axes for an empty state", () => {
    const scene = buildScene(createState());
    expect(names(scene)).toEqual(["grid", "world-axes"]);
  });

  it("adds a path and a gizmo per active method plus endpoints", () => {
    let state = loadTrajectory(createState(), SCLERP);
    state = loadTrajectory(state, KENLERP);
    const scene = buildScene(state);
    expect(names(scene)).toEqual([
      "endpoint-from",
      "endpoint-to",
      "gizmo-kenlerp",
      "gizmo-sclerp",
      "grid",
      "path-kenlerp",
      "path-sclerp",
      "screw-axis",
      "world-axes",
    ]);
  });

  it("omits hidden methods", () => {
    let state = loadTrajectory(createState(), SCLERP);
    state = loadTrajectory(state, KENLERP);
    state = toggleMethod(state, "sclerp");
    const scene = buildScene(state);
    expect(scene.getObjectByName("path-sclerp")).toBeUndefined();
    expect(scene.getObjectByName("path-kenlerp")).toBeDefined();
  });

  it("omits the screw axis for a pure translation or when disabled", () => {
    let state = loadTrajectory(createState(), SCLERP);
    expect(buildScene(state).getObjectByName("screw-axis")).toBeUndefined();
    state = loadTrajectory(state, KENLERP);
    expect(buildScene(state).getObjectByName("screw-axis")).toBeDefined();
    state = setShowScrewAxis(state, false);
    expect(buildScene(state).getObjectByName("screw-axis")).toBeUndefined();
  });

  it("keeps the advertised color per method", () => {
    let state = loadTrajectory(createState(), SEP);
    state = loadTrajectory(state, SCLERP);
    const scene = buildScene(state);
    for (const method of ["sep", "sclerp"] as const) {
      const line = scene.getObjectByName(`path-${method}`) as THREE.Line;
      const material = line.material as THREE.LineBasicMaterial;
      expect(material.color.getHex()).toBe(METHOD_COLORS[method]);
    }
  });

  it("stores one vertex per sample in the path geometry", () => {
    const state = loadTrajectory(createState(), KENLERP);
    const scene = buildScene(state);
    const line = scene.getObjectByName("path-kenlerp") as THREE.Line;
    const position = (line.geometry as THREE.BufferGeometry).getAttribute(
      "position",
    );
    expect(position.count).toBe(KENLERP.samples.length);
    expect(position.getX(4)).toBeCloseTo(KENLERP.samples[4].pos[0], 12);
    expect(position.getY(4)).toBeCloseTo(KENLERP.samples[4].pos[1], 12);
  });

  it("parks the gizmo on the endpoints at the scrub extremes", () => {
    let state = loadTrajectory(createState(), KENLERP);
    state = setScrub(state, 0);
    let gizmo = buildScene(state).getObjectByName("gizmo-kenlerp")!;
    expect(gizmo.position.toArray()).toEqual(KENLERP.samples[0].pos);

    state = setScrub(state, 1);
    gizmo = buildScene(state).getObjectByName("gizmo-kenlerp")!;
    const last = KENLERP.samples[KENLERP.samples.length - 1];
    expect(gizmo.position.toArray()).toEqual(last.pos);
    const q = gizmo.quaternion;
    expect(q.w).toBeCloseTo(last.rot[0], 12);
    expect(q.z).toBeCloseTo(last.rot[3], 12);
  });

  it("runs the screw line through the turn center of the golden case", () => {
    // quarter turn about z with translation (1, -1, 0) pivots about
    // the vertical line through (1, 0, 0)
    const state = loadTrajectory(createState(), KENLERP);
    const line = buildScene(state).getObjectByName("screw-axis") as THREE.Line;
    const position = (line.geometry as THREE.BufferGeometry).getAttribute(
      "position",
    );
    const a = new THREE.Vector3(
      position.getX(0),
      position.getY(0),
      position.getZ(0),
    );
    const b = new THREE.Vector3(
      position.getX(1),
      position.getY(1),
      position.getZ(1),
    );
    const center = new THREE.Vector3(1, 0, 0);
    const lineSeg = new THREE.Line3(a, b);
    const closest = new THREE.Vector3();
    lineSeg.closestPointToPoint(center, false, closest);
    expect(closest.distanceTo(center)).toBeLessThan(1e-9);
  });
});
