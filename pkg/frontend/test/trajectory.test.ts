import { describe, expect, it } from "vitest";

import {
  TrajectoryFormatError,
  formatNumber,
  parseTrajectory,
  serializeTrajectory,
} from "../src/trajectory.js";

import { GOLDEN_NAMES, readGolden } from "./goldens.js";

describe("parseTrajectory", () => {
  it("reads every golden file", () => {
    for (const name of GOLDEN_NAMES) {
      const traj = parseTrajectory(readGolden(name));
      expect(traj.version).toBe(1);
      expect(traj.samples.length).toBeGreaterThanOrEqual(2);
      expect(traj.samples[0].t).toBe(0);
      expect(traj.samples[traj.samples.length - 1].t).toBe(1);
    }
  });

  it("extracts metadata and metrics", () => {
    const traj = parseTrajectory(readGolden("screw_kenlerp.traj"));
    expect(traj.method).toBe("kenlerp");
    expect(traj.beta).toBe(0.5);
    expect(traj.metrics.totalRotation).toBeCloseTo(Math.PI / 2, 9);
    expect(traj.from.pos).toEqual([0, 0, 0]);
    expect(traj.to.rot[0]).toBeCloseTo(Math.SQRT1_2, 12);
  });

  it("round trips all numbers through serialize within 1e-12", () => {
    for (const name of GOLDEN_NAMES) {
      const original = parseTrajectory(readGolden(name));
      const back = parseTrajectory(serializeTrajectory(original));
      expect(back.method).toBe(original.method);
      expect(back.beta).toBe(original.beta);
      for (let k = 0; k < original.samples.length; k += 1) {
        expect(back.samples[k].t).toBeCloseTo(original.samples[k].t, 12);
        for (let c = 0; c < 3; c += 1) {
          expect(back.samples[k].pos[c]).toBeCloseTo(
            original.samples[k].pos[c],
            12,
          );
        }
        for (let c = 0; c < 4; c += 1) {
          expect(back.samples[k].rot[c]).toBeCloseTo(
            original.samples[k].rot[c],
            12,
          );
        }
      }
      expect(back.metrics.pathLength).toBeCloseTo(
        original.metrics.pathLength,
        12,
      );
    }
  });

  const corrupt = (
    text: string,
    search: string,
    replacement: string,
  ): string => text.replace(search, replacement);

  it("rejects a corrupted version field", () => {
    const text = corrupt(readGolden("identity_sep.traj"), "version: 1",
      "version: 7");
    expect(() => parseTrajectory(text)).toThrow(TrajectoryFormatError);
  });

  it("rejects an unknown method", () => {
    const text = corrupt(readGolden("identity_sep.traj"), "method: sep",
      "method: spline");
    expect(() => parseTrajectory(text)).toThrow(TrajectoryFormatError);
  });

  it("rejects a non-unit sample rotation", () => {
    const text = corrupt(readGolden("identity_sep.traj"),
      "    rot: 1.0 0.0 0.0 0.0", "    rot: 1.5 0.0 0.0 0.0");
    expect(() => parseTrajectory(text)).toThrow(/not unit/);
  });

  it("rejects unsorted sample parameters", () => {
    const text = corrupt(readGolden("identity_sep.traj"), "  - t: 0.5",
      "  - t: 0.0");
    expect(() => parseTrajectory(text)).toThrow(/ascending/);
  });

  it("rejects trailing content", () => {
    const text = readGolden("identity_sep.traj") + "note: hi\n";
    expect(() => parseTrajectory(text)).toThrow(/trailing/);
  });

  it("rejects a truncated file", () => {
    const text = readGolden("identity_sep.traj");
    expect(() =>
      parseTrajectory(text.slice(0, text.indexOf("metrics:"))),
    ).toThrow(TrajectoryFormatError);
  });

  it("rejects junk numbers", () => {
    const text = corrupt(readGolden("identity_sep.traj"), "beta: 0.0",
      "beta: fast");
    expect(() => parseTrajectory(text)).toThrow(/not a number/);
  });
});

describe("formatNumber", () => {
  it("collapses negative zero", () => {
    expect(formatNumber(-0)).toBe("0");
  });

  it("is shortest round-trip", () => {
    expect(Number(formatNumber(0.1))).toBe(0.1);
    expect(Number(formatNumber(Math.PI))).toBe(Math.PI);
  });
});
