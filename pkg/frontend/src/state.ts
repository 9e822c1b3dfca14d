/**
 * Viewer state and its reducers.  All updates go through pure functions
 * that clamp instead of reject, so no interaction sequence can push the
 * scrub parameter or the beta bias outside their ranges.  Trajectories are
 * keyed by method; loading a second file for a method replaces the first.
 */

import {
  MethodName,
  PoseRecord,
  TrajectoryFile,
  parseTrajectory,
} from "./trajectory.js";

export const BETA_MAX = 4.0;

export interface OrbitCamera {
  /** azimuth around the y axis, radians */
  theta: number;
  /** elevation from the horizontal plane, radians */
  phi: number;
  radius: number;
  target: [number, number, number];
}

export interface ViewerState {
  loaded: Partial<Record<MethodName, TrajectoryFile>>;
  active: MethodName[];
  tScrub: number;
  betaLive: number;
  betaMax: number;
  endpoints: { from: PoseRecord; to: PoseRecord } | null;
  camera: OrbitCamera;
  banner: string | null;
  showScrewAxis: boolean;
  playing: boolean;
}

export function createState(): ViewerState {
  return {
    loaded: {},
    active: [],
    tScrub: 0,
    betaLive: 0.5,
    betaMax: BETA_MAX,
    endpoints: null,
    camera: { theta: Math.PI / 4, phi: Math.PI / 6, radius: 8, target: [0, 0, 0] },
    banner: null,
    showScrewAxis: true,
    playing: false,
  };
}

const clamp = (v: number, lo: number, hi: number): number =>
  Math.min(hi, Math.max(lo, Number.isFinite(v) ? v : lo));

export function setScrub(state: ViewerState, t: number): ViewerState {
  return { ...state, tScrub: clamp(t, 0, 1) };
}

export function setBeta(state: ViewerState, beta: number): ViewerState {
  return { ...state, betaLive: clamp(beta, 0, state.betaMax) };
}

export function setPlaying(state: ViewerState, playing: boolean): ViewerState {
  return { ...state, playing };
}

export function setShowScrewAxis(state: ViewerState, on: boolean): ViewerState {
  return { ...state, showScrewAxis: on };
}

/**
 * Register parsed bytes.  On malformed input the previous state is
 * returned untouched apart from the error banner.
 */
export function loadTrajectoryBytes(
  state: ViewerState,
  text: string,
): ViewerState {
  let traj: TrajectoryFile;
  try {
    traj = parseTrajectory(text);
  } catch (err) {
    const message = err instanceof Error ? err.message : String(err);
    return { ...state, banner: `rejected trajectory file: ${message}` };
  }
  return loadTrajectory(state, traj);
}

export function loadTrajectory(
  state: ViewerState,
  traj: TrajectoryFile,
): ViewerState {
  const active = state.active.includes(traj.method)
    ? state.active
    : [...state.active, traj.method];
  return {
    ...state,
    loaded: { ...state.loaded, [traj.method]: traj },
    active,
    endpoints: { from: traj.from, to: traj.to },
    banner: null,
  };
}

/**
 * Toggle a method's visibility.  The last visible method cannot be turned
 * off: rendering always has at least one active method while anything is
 * loaded.
 */
export function toggleMethod(
  state: ViewerState,
  method: MethodName,
): ViewerState {
  if (!(method in state.loaded)) return state;
  if (state.active.includes(method)) {
    if (state.active.length === 1) return state;
    return { ...state, active: state.active.filter((m) => m !== method) };
  }
  return { ...state, active: [...state.active, method] };
}

/** Same 7-number format the CLI accepts: "px py pz qw qx qy qz". */
export function parsePoseString(text: string): PoseRecord {
  const parts = text.trim().split(/\s+/);
  if (parts.length !== 7) {
    throw new Error(`expected 7 numbers, got ${parts.length}`);
  }
  const v = parts.map((p) => {
    const x = Number(p);
    if (!Number.isFinite(x)) throw new Error(`'${p}' is not a number`);
    return x;
  });
  const norm = Math.hypot(v[3], v[4], v[5], v[6]);
  if (Math.abs(norm - 1.0) > 1e-3) {
    throw new Error(`rotation norm ${norm.toFixed(6)} is too far from unit`);
  }
  return {
    pos: [v[0], v[1], v[2]],
    rot: [v[3] / norm, v[4] / norm, v[5] / norm, v[6] / norm],
  };
}

export function setEndpoints(
  state: ViewerState,
  fromText: string,
  toText: string,
): ViewerState {
  // throws on invalid entry; the caller highlights the field and keeps
  // the previous state
  const from = parsePoseString(fromText);
  const to = parsePoseString(toText);
  return { ...state, endpoints: { from, to }, banner: null };
}

/**
 * Latest-wins coalescing for slider-driven recomputes: while one request
 * is in flight further values overwrite a single pending slot, so
 * intermediate positions may be skipped but the final one always runs.
 */
export class RecomputeQueue<T> {
  private pending: T | null = null;
  private running = false;

  constructor(private readonly run: (value: T) => Promise<void>) {}

  schedule(value: T): void {
    this.pending = value;
    if (!this.running) void this.drain();
  }

  get busy(): boolean {
    return this.running;
  }

  private async drain(): Promise<void> {
    this.running = true;
    try {
      while (this.pending !== null) {
        const next = this.pending;
        this.pending = null;
        await this.run(next);
      }
    } finally {
      this.running = false;
    }
  }
}
