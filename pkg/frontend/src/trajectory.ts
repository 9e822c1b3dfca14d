/**
 * Reader/writer for the version-1 trajectory file format emitted by the
 * dqinterp CLI.  The parser is deliberately strict: field order is fixed,
 * sample t values must be strictly ascending, and every rotation must be
 * unit within 1e-6.  A rejected file never mutates viewer state.
 */

export const FORMAT_VERSION = 1;

export const METHOD_NAMES = ["sep", "dlb", "sclerp", "kenlerp"] as const;
export type MethodName = (typeof METHOD_NAMES)[number];

export type Vec3 = [number, number, number];
/** Scalar-first rotation quaternion (w, x, y, z). */
export type QuatWxyz = [number, number, number, number];

export interface PoseRecord {
  pos: Vec3;
  rot: QuatWxyz;
}

export interface TrajectorySample {
  t: number;
  pos: Vec3;
  rot: QuatWxyz;
}

export interface TrajectoryMetrics {
  pathLength: number;
  totalRotation: number;
  maxLinearStep: number;
  maxAngularStep: number;
}

export interface TrajectoryFile {
  version: number;
  method: MethodName;
  beta: number;
  from: PoseRecord;
  to: PoseRecord;
  samples: TrajectorySample[];
  metrics: TrajectoryMetrics;
}

export class TrajectoryFormatError extends Error {}

const METRIC_KEYS = [
  "path_length",
  "total_rotation",
  "max_linear_step",
  "max_angular_step",
] as const;

function parseFloats(text: string, count: number, label: string): number[] {
  const parts = text.trim().length === 0 ? [] : text.trim().split(/\s+/);
  if (parts.length !== count) {
    throw new TrajectoryFormatError(
      `${label}: expected ${count} numbers, got ${parts.length}`,
    );
  }
  return parts.map((p) => {
    const v = Number(p);
    if (!Number.isFinite(v)) {
      throw new TrajectoryFormatError(`${label}: '${p}' is not a number`);
    }
    return v;
  });
}

function checkedQuat(values: number[], label: string): QuatWxyz {
  const [w, x, y, z] = values;
  const norm = Math.sqrt(w * w + x * x + y * y + z * z);
  if (Math.abs(norm - 1.0) > 1e-6) {
    throw new TrajectoryFormatError(`${label}: rotation is not unit`);
  }
  return [w, x, y, z];
}

function parsePoseLine(text: string, label: string): PoseRecord {
  const v = parseFloats(text, 7, label);
  return {
    pos: [v[0], v[1], v[2]],
    rot: checkedQuat(v.slice(3), label),
  };
}

export function parseTrajectory(text: string): TrajectoryFile {
  const lines = text.split("\n");
  if (lines.length > 0 && lines[lines.length - 1] === "") lines.pop();
  let i = 0;

  const expect = (prefix: string): string => {
    const got = i < lines.length ? lines[i] : "<end of file>";
    if (i >= lines.length || !lines[i].startsWith(prefix)) {
      throw new TrajectoryFormatError(`expected '${prefix}...', got '${got}'`);
    }
    i += 1;
    return got.slice(prefix.length);
  };

  const head: Record<string, string> = {};
  for (const key of ["version", "method", "beta", "from", "to"]) {
    head[key] = expect(`${key}: `);
  }
  expect("samples:");
  const samples: TrajectorySample[] = [];
  while (i < lines.length && lines[i].startsWith("  - t: ")) {
    const t = parseFloats(lines[i].slice("  - t: ".length), 1, "sample t")[0];
    i += 1;
    const pos = parseFloats(expect("    pos: "), 3, "sample pos");
    const rot = checkedQuat(
      parseFloats(expect("    rot: "), 4, "sample rot"),
      "sample rot",
    );
    samples.push({ t, pos: [pos[0], pos[1], pos[2]], rot });
  }
  expect("metrics:");
  const metrics: number[] = [];
  for (const key of METRIC_KEYS) {
    metrics.push(parseFloats(expect(`  ${key}: `), 1, key)[0]);
  }
  if (i !== lines.length) {
    throw new TrajectoryFormatError(`trailing content: '${lines[i]}'`);
  }

  if (head["version"] !== String(FORMAT_VERSION)) {
    throw new TrajectoryFormatError(
      `unsupported version '${head["version"]}'`,
    );
  }
  const method = head["method"];
  if (!(METHOD_NAMES as readonly string[]).includes(method)) {
    throw new TrajectoryFormatError(`unknown method '${method}'`);
  }
  if (samples.length < 2) {
    throw new TrajectoryFormatError("need at least 2 samples");
  }
  for (let k = 1; k < samples.length; k += 1) {
    if (samples[k].t <= samples[k - 1].t) {
      throw new TrajectoryFormatError(
        "sample t values must be strictly ascending",
      );
    }
  }
  return {
    version: FORMAT_VERSION,
    method: method as MethodName,
    beta: parseFloats(head["beta"], 1, "beta")[0],
    from: parsePoseLine(head["from"], "from"),
    to: parsePoseLine(head["to"], "to"),
    samples,
    metrics: {
      pathLength: metrics[0],
      totalRotation: metrics[1],
      maxLinearStep: metrics[2],
      maxAngularStep: metrics[3],
    },
  };
}

/** Shortest round-trip decimal; negative zero collapses to "0". */
export function formatNumber(x: number): string {
  return String(x === 0 ? 0 : x);
}

function formatPose(pose: PoseRecord): string {
  return [...pose.pos, ...pose.rot].map(formatNumber).join(" ");
}

/**
 * Inverse of parseTrajectory up to number spelling: JavaScript prints 3.0
 * as "3", so the bytes differ from CLI output while every value round
 * trips exactly.
 */
export function serializeTrajectory(traj: TrajectoryFile): string {
  const lines = [
    `version: ${traj.version}`,
    `method: ${traj.method}`,
    `beta: ${formatNumber(traj.beta)}`,
    `from: ${formatPose(traj.from)}`,
    `to: ${formatPose(traj.to)}`,
    "samples:",
  ];
  for (const s of traj.samples) {
    lines.push(`  - t: ${formatNumber(s.t)}`);
    lines.push(`    pos: ${s.pos.map(formatNumber).join(" ")}`);
    lines.push(`    rot: ${s.rot.map(formatNumber).join(" ")}`);
  }
  lines.push("metrics:");
  lines.push(`  path_length: ${formatNumber(traj.metrics.pathLength)}`);
  lines.push(`  total_rotation: ${formatNumber(traj.metrics.totalRotation)}`);
  lines.push(`  max_linear_step: ${formatNumber(traj.metrics.maxLinearStep)}`);
  lines.push(
    `  max_angular_step: ${formatNumber(traj.metrics.maxAngularStep)}`,
  );
  return lines.join("\n") + "\n";
}
