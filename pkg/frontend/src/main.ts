/**
 * Browser entry point: renderer, orbit camera, control panel wiring and
 * the live-recompute loop against the bundled server.
 */

import * as THREE from "three";
import { OrbitControls } from "three/examples/jsm/controls/OrbitControls.js";

import { syncToggles, wireControls } from "./controls.js";
import { buildScene } from "./render.js";
import {
  RecomputeQueue,
  ViewerState,
  createState,
  loadTrajectoryBytes,
  loadTrajectory,
} from "./state.js";
import { MethodName, parseTrajectory } from "./trajectory.js";

let state: ViewerState = createState();
let scene = buildScene(state);

const container = document.getElementById("scene") as HTMLDivElement;
const renderer = new THREE.WebGLRenderer({ antialias: true });
renderer.setSize(container.clientWidth, container.clientHeight);
container.appendChild(renderer.domElement);

const camera = new THREE.PerspectiveCamera(
  50,
  container.clientWidth / container.clientHeight,
  0.01,
  200,
);
camera.position.set(6, 5, 6);
const orbit = new OrbitControls(camera, renderer.domElement);
orbit.target.set(0, 0, 0);

window.addEventListener("resize", () => {
  camera.aspect = container.clientWidth / container.clientHeight;
  camera.updateProjectionMatrix();
  renderer.setSize(container.clientWidth, container.clientHeight);
});

function redraw(): void {
  scene = buildScene(state);
  syncToggles(document, state);
}

function update(next: ViewerState): void {
  state = next;
  redraw();
}

/**
 * Live recompute: ask the server to rerun the CLI for the current
 * endpoints.  The kenlerp curve follows the beta slider; the other three
 * methods only depend on the endpoints.  Latest-wins coalescing keeps
 * slider drags responsive.
 */
async function recomputeMethod(method: MethodName): Promise<void> {
  if (!state.endpoints) return;
  const poseText = (p: { pos: number[]; rot: number[] }) =>
    [...p.pos, ...p.rot].join(" ");
  const response = await fetch("/api/interp", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({
      from: poseText(state.endpoints.from),
      to: poseText(state.endpoints.to),
      method,
      beta: state.betaLive,
      samples: 101,
    }),
  });
  if (!response.ok) {
    const detail = (await response.json().catch(() => null)) as {
      error?: string;
    } | null;
    update({
      ...state,
      banner:
        response.status === 503
          ? "live recompute unavailable; file loading still works"
          : `recompute failed: ${detail?.error ?? response.statusText}`,
    });
    return;
  }
  update(loadTrajectory(state, parseTrajectory(await response.text())));
}

const queue = new RecomputeQueue<number>(async () => {
  await recomputeMethod("kenlerp");
});

function recomputeAll(): void {
  for (const method of ["sep", "dlb", "sclerp"] as MethodName[]) {
    void recomputeMethod(method);
  }
  queue.schedule(state.betaLive);
}

wireControls(document, {
  getState: () => state,
  update,
  recompute: () => queue.schedule(state.betaLive),
  loadFileText: (text) => update(loadTrajectoryBytes(state, text)),
});

const applyButton = document.getElementById(
  "apply-endpoints",
) as HTMLButtonElement;
applyButton.addEventListener("click", () => recomputeAll());

renderer.setAnimationLoop(() => {
  orbit.update();
  renderer.render(scene, camera);
});

redraw();
