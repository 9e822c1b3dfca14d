/**
 * Bridge to the core: live recompute spawns the installed dqinterp CLI
 * and parses its trajectory output.  Node-side only (the browser reaches
 * it through POST /api/interp on the bundled server).  Arguments are
 * validated and passed as an argv array, never through a shell.
 */

import { execFile } from "node:child_process";

import {
  METHOD_NAMES,
  MethodName,
  TrajectoryFile,
  parseTrajectory,
} from "./trajectory.js";

export interface InterpRequest {
  from: string;
  to: string;
  method: MethodName;
  beta: number;
  samples: number;
}

export class CoreUnavailableError extends Error {}

const POSE_PATTERN = /^\s*(-?[\d.eE+-]+\s+){6}-?[\d.eE+-]+\s*$/;
const MAX_SAMPLES = 100_001;

export function validateRequest(req: InterpRequest): string | null {
  if (!(METHOD_NAMES as readonly string[]).includes(req.method)) {
    return `unknown method '${req.method}'`;
  }
  if (!POSE_PATTERN.test(req.from) || !POSE_PATTERN.test(req.to)) {
    return "poses must be 7 whitespace-separated numbers";
  }
  if (!Number.isFinite(req.beta) || req.beta < 0 || req.beta > 4) {
    return "beta must lie in [0, 4]";
  }
  if (!Number.isInteger(req.samples) || req.samples < 2
      || req.samples > MAX_SAMPLES) {
    return `samples must be an integer in [2, ${MAX_SAMPLES}]`;
  }
  return null;
}

export function runInterpCli(req: InterpRequest): Promise<string> {
  const problem = validateRequest(req);
  if (problem) return Promise.reject(new Error(problem));
  const argv = [
    "-m", "dqinterp", "interp",
    "--from", req.from,
    "--to", req.to,
    "--method", req.method,
    "--beta", String(req.beta),
    "--samples", String(req.samples),
  ];
  return new Promise((resolve, reject) => {
    execFile(
      "python3",
      argv,
      { maxBuffer: 64 * 1024 * 1024 },
      (error, stdout, stderr) => {
        if (error) {
          if ((error as NodeJS.ErrnoException).code === "ENOENT") {
            reject(new CoreUnavailableError("core CLI is not installed"));
          } else {
            reject(new Error(stderr.trim() || error.message));
          }
          return;
        }
        resolve(stdout);
      },
    );
  });
}

export async function liveRecompute(
  req: InterpRequest,
): Promise<TrajectoryFile> {
  return parseTrajectory(await runInterpCli(req));
}
