// Explorer state machine.  The displayed picture always matches the
// displayed spectra: every transition either installs a fresh backend
// response or an infeasibility banner, never a stale honeycomb.  Stale
// responses are discarded by sequence number.

import type {
  Api,
  BoundaryReadout,
  HexagonRange,
  HoneycombJson,
  ScreenGeometry,
} from "./api";
import { parseRational, parseSpectrum, scale, format } from "./rational";

export const SLIDER_STEPS = 64n; // granularity: 1/64 of the range

export type Mode = "sum" | "triple";

export interface ExplorerState {
  mode: Mode;
  lam: string;
  mu: string;
  nu: string;
  honeycomb: HoneycombJson | null;
  boundary: BoundaryReadout | null;
  screen: ScreenGeometry | null;
  hexagons: HexagonRange[];
  banner: string | null;
  showOrigin: boolean;
  seq: number;      // request sequence; stale responses are dropped
  busy: boolean;
}

export function initialState(): ExplorerState {
  return {
    mode: "sum",
    lam: "2,1,0",
    mu: "2,1,0",
    nu: "3,2,1",
    honeycomb: null,
    boundary: null,
    screen: null,
    hexagons: [],
    banner: null,
    showOrigin: false,
    seq: 0,
    busy: false,
  };
}

export type Field = "lam" | "mu" | "nu";

export async function onBoundaryEdit(
  api: Api,
  state: ExplorerState,
  edits: Partial<Record<Field, string>>,
): Promise<ExplorerState> {
  const next = { ...state, ...edits, seq: state.seq + 1 };
  const mySeq = next.seq;
  let lam: string[];
  let mu: string[];
  let nu: string[];
  try {
    lam = parseSpectrum(next.lam);
    mu = parseSpectrum(next.mu);
    nu = parseSpectrum(next.nu);
    if (lam.length !== mu.length || mu.length !== nu.length) {
      throw new Error("spectra must have equal lengths");
    }
  } catch (err) {
    return {
      ...next,
      honeycomb: null,
      boundary: null,
      screen: null,
      hexagons: [],
      banner: `parse error: ${(err as Error).message}`,
    };
  }

  const verdict = await api.feasible(lam, mu, nu, next.mode);
  if (!verdict.feasible) {
    let why = "infeasible";
    if (verdict.reason?.kind === "trace") {
      why = "infeasible: the trace identity fails";
    } else if (verdict.reason?.kind === "horn") {
      why = `infeasible: violates ${verdict.reason.inequality}`;
    }
    if (state.seq + 1 !== mySeq) return state;
    return {
      ...next,
      honeycomb: null,
      boundary: null,
      screen: null,
      hexagons: [],
      banner: why,
    };
  }

  const lift = await api.lift(lam, mu, nu, next.mode);
  if (!lift.feasible || !lift.honeycomb) {
    return {
      ...next,
      honeycomb: null,
      boundary: null,
      screen: null,
      hexagons: [],
      banner: "infeasible",
    };
  }
  return {
    ...next,
    honeycomb: lift.honeycomb,
    boundary: lift.boundary ?? null,
    screen: lift.screen ?? null,
    hexagons: lift.hexagons ?? [],
    banner: null,
  };
}

export interface SliderClamp {
  min: number; // slider ticks, inclusive
  max: number;
  stepOf(tick: number): string; // exact rational t for a tick
}

export function sliderClamp(hexagon: HexagonRange): SliderClamp {
  const lo = hexagon.t_min !== null ? parseRational(hexagon.t_min) : null;
  const hi = hexagon.t_max !== null ? parseRational(hexagon.t_max) : null;
  if (lo === null || hi === null) {
    throw new Error("unbounded breathing range");
  }
  return {
    min: -Number(SLIDER_STEPS),
    max: Number(SLIDER_STEPS),
    stepOf(tick: number): string {
      // tick in [-64, 64]: negative ticks interpolate toward t_min,
      // positive toward t_max, 0 is the current honeycomb.
      if (tick === 0) return "0";
      const steps = BigInt(Math.trunc(Math.abs(tick)));
      const bound = tick < 0 ? lo : hi;
      return format(scale(bound, steps, SLIDER_STEPS));
    },
  };
}

export async function onBreathe(
  api: Api,
  state: ExplorerState,
  hexagonId: string,
  t: string,
): Promise<ExplorerState> {
  if (!state.honeycomb) return state;
  const mySeq = state.seq + 1;
  const next = { ...state, seq: mySeq };
  const out = await api.breathe(state.honeycomb, hexagonId, t);
  if (out.error === "OUT_OF_CONE") {
    return {
      ...next,
      banner: `breathing clamped: max |t| = ${out.max_t}`,
    };
  }
  if (!out.honeycomb) {
    return { ...next, banner: "breathe failed" };
  }
  return {
    ...next,
    honeycomb: out.honeycomb,
    boundary: out.boundary ?? next.boundary,
    screen: out.screen ?? next.screen,
    hexagons: out.hexagons ?? next.hexagons,
    banner: null,
  };
}
