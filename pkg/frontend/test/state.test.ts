import { describe, expect, it } from "vitest";

import {
  BETA_MAX,
  RecomputeQueue,
  ViewerState,
  createState,
  loadTrajectory,
  loadTrajectoryBytes,
  parsePoseString,
  setBeta,
  setEndpoints,
  setPlaying,
  setScrub,
  setShowScrewAxis,
  toggleMethod,
} from "../src/state.js";
import { MethodName, parseTrajectory } from "../src/trajectory.js";

import { readGolden } from "./goldens.js";

const SEP = parseTrajectory(readGolden("identity_sep.traj"));
const SCLERP = parseTrajectory(readGolden("translation_sclerp.traj"));
const KENLERP = parseTrajectory(readGolden("screw_kenlerp.traj"));

describe("scrub and beta clamping", () => {
  it("keeps the scrub parameter inside [0, 1]", () => {
    const s = createState();
    expect(setScrub(s, 0.25).tScrub).toBe(0.25);
    expect(setScrub(s, -3).tScrub).toBe(0);
    expect(setScrub(s, 7).tScrub).toBe(1);
    expect(setScrub(s, Number.NaN).tScrub).toBe(0);
  });

  it("keeps beta inside [0, betaMax]", () => {
    const s = createState();
    expect(s.betaMax).toBe(BETA_MAX);
    expect(setBeta(s, 1.5).betaLive).toBe(1.5);
    expect(setBeta(s, -1).betaLive).toBe(0);
    expect(setBeta(s, 99).betaLive).toBe(BETA_MAX);
    expect(setBeta(s, Number.POSITIVE_INFINITY).betaLive).toBe(0);
  });
});

describe("loading trajectories", () => {
  it("activates the loaded method and records endpoints", () => {
    const s = loadTrajectory(createState(), SCLERP);
    expect(s.active).toEqual(["sclerp"]);
    expect(s.loaded.sclerp).toBe(SCLERP);
    expect(s.endpoints?.to.pos).toEqual([3, 0, 0]);
    expect(s.banner).toBeNull();
  });

  it("replaces an earlier file for the same method", () => {
    const first = loadTrajectory(createState(), KENLERP);
    const variant = { ...KENLERP, beta: 2.0 };
    const second = loadTrajectory(first, variant);
    expect(second.loaded.kenlerp?.beta).toBe(2.0);
    expect(second.active).toEqual(["kenlerp"]);
  });

  it("accepts raw bytes", () => {
    const s = loadTrajectoryBytes(createState(), readGolden("identity_sep.traj"));
    expect(s.active).toEqual(["sep"]);
    expect(s.loaded.sep?.samples).toHaveLength(3);
  });

  it("keeps prior state and raises a banner on malformed bytes", () => {
    const before = loadTrajectory(createState(), SEP);
    const after = loadTrajectoryBytes(before, "version: 9\ngarbage\n");
    expect(after.banner).toMatch(/^rejected trajectory file: /);
    expect(after.loaded).toEqual(before.loaded);
    expect(after.active).toEqual(before.active);
    expect(after.tScrub).toBe(before.tScrub);
  });
});

describe("toggleMethod", () => {
  it("ignores methods that are not loaded", () => {
    const s = createState();
    expect(toggleMethod(s, "dlb")).toBe(s);
  });

  it("hides and restores a loaded method", () => {
    let s = loadTrajectory(createState(), SEP);
    s = loadTrajectory(s, SCLERP);
    s = toggleMethod(s, "sep");
    expect(s.active).toEqual(["sclerp"]);
    s = toggleMethod(s, "sep");
    expect(s.active).toEqual(["sclerp", "sep"]);
  });

  it("refuses to hide the last visible method", () => {
    const s = loadTrajectory(createState(), SEP);
    expect(toggleMethod(s, "sep").active).toEqual(["sep"]);
  });
});

describe("pose entry", () => {
  it("parses the seven-number pose format", () => {
    const pose = parsePoseString("1 -2 0.5 1 0 0 0");
    expect(pose.pos).toEqual([1, -2, 0.5]);
    expect(pose.rot).toEqual([1, 0, 0, 0]);
  });

  it("renormalizes a slightly off-unit rotation", () => {
    const pose = parsePoseString("0 0 0 0.7071 0 0 0.7071");
    const norm = Math.hypot(...pose.rot);
    expect(Math.abs(norm - 1)).toBeLessThan(1e-15);
  });

  it("rejects bad entries", () => {
    expect(() => parsePoseString("1 2 3")).toThrow(/7 numbers/);
    expect(() => parsePoseString("1 2 3 one 0 0 0")).toThrow(/not a number/);
    expect(() => parsePoseString("0 0 0 2 0 0 0")).toThrow(/unit/);
  });

  it("updates endpoints only when both poses parse", () => {
    const s = createState();
    const updated = setEndpoints(s, "0 0 0 1 0 0 0", "1 1 1 1 0 0 0");
    expect(updated.endpoints?.to.pos).toEqual([1, 1, 1]);
    expect(() => setEndpoints(s, "0 0 0 1 0 0 0", "nope")).toThrow();
  });
});

describe("state invariants under random interaction", () => {
  const mulberry32 = (seed: number) => () => {
    seed |= 0;
    seed = (seed + 0x6d2b79f5) | 0;
    let t = Math.imul(seed ^ (seed >>> 15), 1 | seed);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };

  const METHODS: MethodName[] = ["sep", "dlb", "sclerp", "kenlerp"];

  const checkInvariants = (s: ViewerState): void => {
    expect(s.tScrub).toBeGreaterThanOrEqual(0);
    expect(s.tScrub).toBeLessThanOrEqual(1);
    expect(s.betaLive).toBeGreaterThanOrEqual(0);
    expect(s.betaLive).toBeLessThanOrEqual(s.betaMax);
    expect(new Set(s.active).size).toBe(s.active.length);
    for (const m of s.active) expect(s.loaded[m]).toBeDefined();
    if (Object.keys(s.loaded).length > 0) {
      expect(s.active.length).toBeGreaterThanOrEqual(1);
    }
  };

  it("holds after 1000 random actions", () => {
    const rand = mulberry32(0x5eed);
    const wild = [Number.NaN, Number.POSITIVE_INFINITY, -1e9, 1e9];
    let s = createState();
    for (let step = 0; step < 1000; step += 1) {
      const roll = rand();
      if (roll < 0.2) {
        const raw = rand() < 0.1 ? wild[Math.floor(rand() * 4)] : rand() * 3 - 1;
        s = setScrub(s, raw);
      } else if (roll < 0.4) {
        const raw = rand() < 0.1 ? wild[Math.floor(rand() * 4)] : rand() * 9 - 2;
        s = setBeta(s, raw);
      } else if (roll < 0.55) {
        s = toggleMethod(s, METHODS[Math.floor(rand() * 4)]);
      } else if (roll < 0.7) {
        const traj = [SEP, SCLERP, KENLERP][Math.floor(rand() * 3)];
        s = loadTrajectory(s, traj);
      } else if (roll < 0.8) {
        s = loadTrajectoryBytes(s, "not a trajectory\n");
      } else if (roll < 0.9) {
        s = setPlaying(s, rand() < 0.5);
      } else {
        s = setShowScrewAxis(s, rand() < 0.5);
      }
      checkInvariants(s);
    }
  });
});

describe("RecomputeQueue", () => {
  const flush = () => new Promise<void>((res) => setTimeout(res, 0));

  it("skips stale values and always runs the latest", async () => {
    const ran: number[] = [];
    let release: () => void = () => undefined;
    const queue = new RecomputeQueue<number>(async (v) => {
      ran.push(v);
      await new Promise<void>((res) => {
        release = res;
      });
    });

    queue.schedule(1);
    expect(queue.busy).toBe(true);
    queue.schedule(2);
    queue.schedule(3);
    expect(ran).toEqual([1]);

    release();
    await flush();
    expect(ran).toEqual([1, 3]);

    release();
    await flush();
    expect(queue.busy).toBe(false);
  });

  it("restarts for work scheduled after going idle", async () => {
    const ran: number[] = [];
    const queue = new RecomputeQueue<number>(async (v) => {
      ran.push(v);
    });
    queue.schedule(4);
    await flush();
    queue.schedule(5);
    await flush();
    expect(ran).toEqual([4, 5]);
    expect(queue.busy).toBe(false);
  });
});
