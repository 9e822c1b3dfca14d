/**
 * Display-side geometry for the screw-axis overlay: given the two endpoint
 * poses, find the axis line of the rigid motion between them.  This is
 * rendering support only; all trajectory math stays in the core behind
 * the CLI.
 */

import { PoseRecord, QuatWxyz, Vec3 } from "./trajectory.js";

export interface ScrewAxis {
  /** unit direction of the axis */
  dir: Vec3;
  /** the axis point closest to the origin's rotation plane solution */
  point: Vec3;
  /** rotation angle about the axis, in (0, pi] */
  theta: number;
  /** translation along the axis */
  pitch: number;
}

export function qMul(a: QuatWxyz, b: QuatWxyz): QuatWxyz {
  const [aw, ax, ay, az] = a;
  const [bw, bx, by, bz] = b;
  return [
    aw * bw - ax * bx - ay * by - az * bz,
    aw * bx + ax * bw + ay * bz - az * by,
    aw * by - ax * bz + ay * bw + az * bx,
    aw * bz + ax * by - ay * bx + az * bw,
  ];
}

export function qConj(q: QuatWxyz): QuatWxyz {
  return [q[0], -q[1], -q[2], -q[3]];
}

export function qRotate(q: QuatWxyz, v: Vec3): Vec3 {
  const r = qMul(qMul(q, [0, v[0], v[1], v[2]]), qConj(q));
  return [r[1], r[2], r[3]];
}

export function applyPose(pose: PoseRecord, p: Vec3): Vec3 {
  const r = qRotate(pose.rot, p);
  return [r[0] + pose.pos[0], r[1] + pose.pos[1], r[2] + pose.pos[2]];
}

const cross = (a: Vec3, b: Vec3): Vec3 => [
  a[1] * b[2] - a[2] * b[1],
  a[2] * b[0] - a[0] * b[2],
  a[0] * b[1] - a[1] * b[0],
];

const sub = (a: Vec3, b: Vec3): Vec3 => [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
const dot = (a: Vec3, b: Vec3): number =>
  a[0] * b[0] + a[1] * b[1] + a[2] * b[2];

/**
 * Screw axis of the world-frame motion taking `from` to `to`
 * (T = T_to compose T_from^-1), or null when the relative rotation is too
 * small to define an axis (a straight translation has no useful overlay).
 */
export function relativeScrewAxis(
  from: PoseRecord,
  to: PoseRecord,
): ScrewAxis | null {
  let rel = qMul(to.rot, qConj(from.rot));
  if (rel[0] < 0) rel = [-rel[0], -rel[1], -rel[2], -rel[3]];
  const s = Math.hypot(rel[1], rel[2], rel[3]);
  if (s < 1e-6) return null;
  const theta = 2 * Math.atan2(s, rel[0]);
  const dir: Vec3 = [rel[1] / s, rel[2] / s, rel[3] / s];

  // translation of the relative transform: t = pos_to - R * pos_from
  const rotated = qRotate(rel, from.pos);
  const t = sub(to.pos, rotated);
  const pitch = dot(t, dir);
  const tPerp: Vec3 = [
    t[0] - pitch * dir[0],
    t[1] - pitch * dir[1],
    t[2] - pitch * dir[2],
  ];
  // solve (I - R) c = t_perp in the plane perpendicular to the axis
  const k = 1 / (2 * Math.tan(theta / 2));
  const lever = cross(dir, tPerp);
  const point: Vec3 = [
    0.5 * tPerp[0] + k * lever[0],
    0.5 * tPerp[1] + k * lever[1],
    0.5 * tPerp[2] + k * lever[2],
  ];
  return { dir, point, theta, pitch };
}

/** Distance from a point to the (infinite) axis line. */
export function distanceToAxis(axis: ScrewAxis, p: Vec3): number {
  const rel = sub(p, axis.point);
  const along = dot(rel, axis.dir);
  const perp = sub(rel, [
    along * axis.dir[0],
    along * axis.dir[1],
    along * axis.dir[2],
  ]);
  return Math.hypot(perp[0], perp[1], perp[2]);
}
