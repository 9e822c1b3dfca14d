/**
 * Static file server plus the one JSON endpoint the browser needs for
 * live recompute.  Run with `npm run serve`, then open
 * http://localhost:8173/.
 */

import { fileURLToPath } from "node:url";
import path from "node:path";

import express from "express";

import {
  CoreUnavailableError,
  InterpRequest,
  runInterpCli,
} from "./corebridge.js";

const HERE = path.dirname(fileURLToPath(import.meta.url));
const ROOT = path.resolve(HERE, "..");

export function createApp(): express.Express {
  const app = express();
  app.use(express.json());

  app.post("/api/interp", (req, res) => {
    const body = req.body as Partial<InterpRequest>;
    const request: InterpRequest = {
      from: String(body.from ?? ""),
      to: String(body.to ?? ""),
      method: body.method as InterpRequest["method"],
      beta: Number(body.beta ?? 0),
      samples: Number(body.samples ?? 101),
    };
    runInterpCli(request)
      .then((text) => res.type("text/plain").send(text))
      .catch((err: unknown) => {
        if (err instanceof CoreUnavailableError) {
          res.status(503).json({ error: err.message });
        } else {
          const message = err instanceof Error ? err.message : String(err);
          res.status(400).json({ error: message });
        }
      });
  });

  app.use("/dist", express.static(path.join(ROOT, "dist")));
  app.use(
    "/vendor/three",
    express.static(path.join(ROOT, "node_modules", "three")),
  );
  app.use(express.static(path.join(ROOT, "public")));
  return app;
}

const entry = process.argv[1] ? path.resolve(process.argv[1]) : "";
if (entry === fileURLToPath(import.meta.url)) {
  const port = Number(process.env.PORT ?? 8173);
  createApp().listen(port, () => {
    console.log(`viewer at http://localhost:${port}/`);
  });
}
