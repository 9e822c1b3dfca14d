/**
 * Scene construction: viewer state in, three.js scene graph out.  Pure
 * with respect to the state (no DOM, no WebGL context), so the whole
 * layout is unit-testable; main.ts owns the renderer and camera loop.
 *
 * World is right-handed, y-up.  Method colors are fixed so screenshots
 * and the legend stay comparable across sessions.
 */

import * as THREE from "three";

import { relativeScrewAxis } from "./screw.js";
import { ViewerState } from "./state.js";
import {
  MethodName,
  QuatWxyz,
  TrajectorySample,
  Vec3,
} from "./trajectory.js";

export const METHOD_COLORS: Record<MethodName, number> = {
  sep: 0x4e79a7,
  dlb: 0xf28e2b,
  sclerp: 0x59a14f,
  kenlerp: 0xe15759,
};

const GIZMO_SIZE = 0.45;
const ENDPOINT_GIZMO_SIZE = 0.3;
const AXIS_LINE_HALF_LENGTH = 12;

function toThreeQuat(q: QuatWxyz): THREE.Quaternion {
  return new THREE.Quaternion(q[1], q[2], q[3], q[0]);
}

function poseGizmo(pos: Vec3, rot: QuatWxyz, size: number): THREE.AxesHelper {
  const gizmo = new THREE.AxesHelper(size);
  gizmo.position.set(pos[0], pos[1], pos[2]);
  gizmo.quaternion.copy(toThreeQuat(rot));
  return gizmo;
}

function pathLine(samples: TrajectorySample[], color: number): THREE.Line {
  const points = samples.map((s) => new THREE.Vector3(...s.pos));
  const geometry = new THREE.BufferGeometry().setFromPoints(points);
  return new THREE.Line(geometry, new THREE.LineBasicMaterial({ color }));
}

/** Sample at the grid point nearest to the scrub parameter. */
export function sampleAtScrub(
  samples: TrajectorySample[],
  tScrub: number,
): TrajectorySample {
  const index = Math.round(tScrub * (samples.length - 1));
  return samples[Math.min(samples.length - 1, Math.max(0, index))];
}

export function buildScene(state: ViewerState): THREE.Scene {
  const scene = new THREE.Scene();
  const grid = new THREE.GridHelper(20, 20, 0x888888, 0x444444);
  grid.name = "grid";
  scene.add(grid);
  const worldAxes = new THREE.AxesHelper(1.5);
  worldAxes.name = "world-axes";
  scene.add(worldAxes);

  for (const method of state.active) {
    const traj = state.loaded[method];
    if (!traj) continue;
    const color = METHOD_COLORS[method];

    const line = pathLine(traj.samples, color);
    line.name = `path-${method}`;
    scene.add(line);

    const current = sampleAtScrub(traj.samples, state.tScrub);
    const gizmo = poseGizmo(current.pos, current.rot, GIZMO_SIZE);
    gizmo.name = `gizmo-${method}`;
    scene.add(gizmo);
  }

  if (state.endpoints) {
    const from = poseGizmo(
      state.endpoints.from.pos,
      state.endpoints.from.rot,
      ENDPOINT_GIZMO_SIZE,
    );
    from.name = "endpoint-from";
    scene.add(from);
    const to = poseGizmo(
      state.endpoints.to.pos,
      state.endpoints.to.rot,
      ENDPOINT_GIZMO_SIZE,
    );
    to.name = "endpoint-to";
    scene.add(to);

    if (state.showScrewAxis) {
      const axis = relativeScrewAxis(state.endpoints.from, state.endpoints.to);
      if (axis) {
        const ends = [-AXIS_LINE_HALF_LENGTH, AXIS_LINE_HALF_LENGTH].map(
          (s) =>
            new THREE.Vector3(
              axis.point[0] + s * axis.dir[0],
              axis.point[1] + s * axis.dir[1],
              axis.point[2] + s * axis.dir[2],
            ),
        );
        const geometry = new THREE.BufferGeometry().setFromPoints(ends);
        const line = new THREE.Line(
          geometry,
          new THREE.LineDashedMaterial({ color: 0xbbbbbb, dashSize: 0.2 }),
        );
        line.name = "screw-axis";
        scene.add(line);
      }
    }
  }
  return scene;
}
