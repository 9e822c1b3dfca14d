/**
 * DOM wiring for the control panel.  Deliberately thin: every event maps
 * to a state reducer and a redraw callback; validation and clamping live
 * in state.ts where they are unit-tested.
 */

import {
  ViewerState,
  parsePoseString,
  setBeta,
  setEndpoints,
  setPlaying,
  setScrub,
  setShowScrewAxis,
  toggleMethod,
} from "./state.js";
import { METHOD_NAMES, MethodName } from "./trajectory.js";

export interface ControlHooks {
  getState(): ViewerState;
  update(next: ViewerState): void;
  /** fired when endpoints or beta change and a recompute is wanted */
  recompute(): void;
  loadFileText(text: string): void;
}

const PLAYBACK_SAMPLES_PER_SECOND = 60;

export function wireControls(doc: Document, hooks: ControlHooks): void {
  const el = <T extends HTMLElement>(id: string): T => {
    const found = doc.getElementById(id);
    if (!found) throw new Error(`missing #${id}`);
    return found as T;
  };

  const tSlider = el<HTMLInputElement>("t-scrub");
  tSlider.addEventListener("input", () => {
    hooks.update(setScrub(hooks.getState(), Number(tSlider.value)));
  });

  const betaSlider = el<HTMLInputElement>("beta-live");
  const betaReadout = el<HTMLSpanElement>("beta-readout");
  betaSlider.addEventListener("input", () => {
    const next = setBeta(hooks.getState(), Number(betaSlider.value));
    betaReadout.textContent = next.betaLive.toFixed(2);
    hooks.update(next);
    hooks.recompute();
  });

  const playButton = el<HTMLButtonElement>("play");
  let timer: ReturnType<typeof setInterval> | null = null;
  playButton.addEventListener("click", () => {
    const playing = !hooks.getState().playing;
    hooks.update(setPlaying(hooks.getState(), playing));
    playButton.textContent = playing ? "pause" : "play";
    if (timer) {
      clearInterval(timer);
      timer = null;
    }
    if (playing) {
      timer = setInterval(() => {
        const state = hooks.getState();
        const samples =
          state.active.length > 0
            ? (state.loaded[state.active[0]]?.samples.length ?? 101)
            : 101;
        const step = 1 / (samples - 1);
        const next = state.tScrub >= 1 ? 0 : state.tScrub + step;
        hooks.update(setScrub(state, next));
        tSlider.value = String(hooks.getState().tScrub);
      }, 1000 / PLAYBACK_SAMPLES_PER_SECOND);
    }
  });

  for (const method of METHOD_NAMES) {
    el<HTMLInputElement>(`toggle-${method}`).addEventListener("change", () => {
      hooks.update(toggleMethod(hooks.getState(), method as MethodName));
      syncToggles(doc, hooks.getState());
    });
  }

  el<HTMLInputElement>("show-axis").addEventListener("change", (ev) => {
    const on = (ev.target as HTMLInputElement).checked;
    hooks.update(setShowScrewAxis(hooks.getState(), on));
  });

  const fromField = el<HTMLInputElement>("pose-from");
  const toField = el<HTMLInputElement>("pose-to");
  const applyButton = el<HTMLButtonElement>("apply-endpoints");
  const markValidity = (field: HTMLInputElement): boolean => {
    try {
      parsePoseString(field.value);
      field.classList.remove("invalid");
      return true;
    } catch {
      field.classList.add("invalid");
      return false;
    }
  };
  for (const field of [fromField, toField]) {
    field.addEventListener("input", () => markValidity(field));
  }
  applyButton.addEventListener("click", () => {
    if (!markValidity(fromField) || !markValidity(toField)) return;
    hooks.update(
      setEndpoints(hooks.getState(), fromField.value, toField.value),
    );
    hooks.recompute();
  });

  const fileInput = el<HTMLInputElement>("file-input");
  fileInput.addEventListener("change", async () => {
    for (const file of Array.from(fileInput.files ?? [])) {
      hooks.loadFileText(await file.text());
    }
    fileInput.value = "";
  });
  doc.addEventListener("dragover", (ev) => ev.preventDefault());
  doc.addEventListener("drop", async (ev) => {
    ev.preventDefault();
    for (const file of Array.from(ev.dataTransfer?.files ?? [])) {
      hooks.loadFileText(await file.text());
    }
  });
}

export function syncToggles(doc: Document, state: ViewerState): void {
  for (const method of METHOD_NAMES) {
    const box = doc.getElementById(`toggle-${method}`) as HTMLInputElement;
    if (!box) continue;
    box.disabled = !(method in state.loaded);
    box.checked = state.active.includes(method);
  }
  const banner = doc.getElementById("banner");
  if (banner) {
    banner.textContent = state.banner ?? "";
    banner.style.display = state.banner ? "block" : "none";
  }
}
