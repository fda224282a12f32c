// Browser entry point: boundary editors, a hexagon breathing slider, and
// the rendered picture.  All geometry comes from the backend.

import { httpApi } from "./api";
import {
  ExplorerState,
  initialState,
  onBoundaryEdit,
  onBreathe,
  sliderClamp,
  SLIDER_STEPS,
} from "./state";
import { buildSvg } from "./svg";

const api = httpApi("");
let state: ExplorerState = initialState();
let baseHoneycomb = state.honeycomb;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function renderState(): void {
  const banner = el<HTMLDivElement>("banner");
  banner.textContent = state.banner ?? "";
  banner.style.display = state.banner ? "block" : "none";

  const picture = el<HTMLDivElement>("picture");
  if (state.screen) {
    picture.innerHTML = buildSvg(state.screen, state.showOrigin).markup;
  } else {
    picture.innerHTML = "";
  }

  const readout = el<HTMLDivElement>("readout");
  if (state.boundary) {
    readout.textContent =
      `lam = (${state.boundary.lam.join(", ")})   ` +
      `mu = (${state.boundary.mu.join(", ")})   ` +
      `nu = (${state.boundary.nu.join(", ")})`;
  } else {
    readout.textContent = "";
  }

  const hexSelect = el<HTMLSelectElement>("hexagon");
  const slider = el<HTMLInputElement>("breathe");
  hexSelect.innerHTML = "";
  for (const hx of state.hexagons) {
    const opt = document.createElement("option");
    opt.value = hx.id;
    opt.textContent = `${hx.id} (t in [${hx.t_min}, ${hx.t_max}])`;
    hexSelect.appendChild(opt);
  }
  const enabled = state.hexagons.length > 0;
  hexSelect.disabled = !enabled;
  slider.disabled = !enabled;
  slider.min = String(-Number(SLIDER_STEPS));
  slider.max = String(Number(SLIDER_STEPS));
}

async function applyBoundary(): Promise<void> {
  state = await onBoundaryEdit(api, state, {
    lam: el<HTMLInputElement>("lam").value,
    mu: el<HTMLInputElement>("mu").value,
    nu: el<HTMLInputElement>("nu").value,
  });
  baseHoneycomb = state.honeycomb;
  el<HTMLInputElement>("breathe").value = "0";
  renderState();
}

async function applyBreathe(): Promise<void> {
  if (!baseHoneycomb) return;
  const hexId = el<HTMLSelectElement>("hexagon").value;
  const hex = state.hexagons.find((h) => h.id === hexId);
  if (!hex) return;
  const tick = Number(el<HTMLInputElement>("breathe").value);
  const t = sliderClamp(hex).stepOf(tick);
  const fromBase = { ...state, honeycomb: baseHoneycomb };
  state = await onBreathe(api, fromBase, hexId, t);
  renderState();
}

function wire(): void {
  el<HTMLButtonElement>("apply").addEventListener("click", () => {
    void applyBoundary();
  });
  el<HTMLInputElement>("breathe").addEventListener("input", () => {
    void applyBreathe();
  });
  el<HTMLSelectElement>("mode").addEventListener("change", (ev) => {
    state.mode = (ev.target as HTMLSelectElement).value as "sum" | "triple";
  });
  el<HTMLInputElement>("origin").addEventListener("change", (ev) => {
    state.showOrigin = (ev.target as HTMLInputElement).checked;
    renderState();
  });
  void applyBoundary();
}

wire();
