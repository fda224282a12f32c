// Typed client for the honeycombs JSON/HTTP backend.  The UI never does
// arithmetic on honeycomb coordinates; everything geometric arrives from
// these endpoints.

export interface ScreenLine {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  multiplicity: number;
}

export interface ScreenGeometry {
  segments: ScreenLine[];
  rays: ScreenLine[];
}

export interface BoundaryReadout {
  lam: string[];
  mu: string[];
  nu: string[];
}

export interface HexagonRange {
  id: string;
  t_min: string | null;
  t_max: string | null;
}

export interface HoneycombJson {
  n: number;
  coords: Record<string, string>;
}

export interface LiftResponse {
  feasible: boolean;
  reason?: { kind: string; inequality?: string };
  honeycomb?: HoneycombJson;
  boundary?: BoundaryReadout;
  screen?: ScreenGeometry;
  hexagons?: HexagonRange[];
}

export interface BreatheResponse {
  error?: string;
  max_t?: string;
  blocking_edge?: string;
  honeycomb?: HoneycombJson;
  boundary?: BoundaryReadout;
  screen?: ScreenGeometry;
  hexagons?: HexagonRange[];
}

export interface FeasibleResponse {
  feasible: boolean;
  reason?: { kind: string; inequality?: string };
}

export interface GraphInfo {
  n: number;
  vertices: number;
  internal_edges: number;
  boundary_edges: number;
  hexagons: number;
  hexagon_ids: string[];
}

export interface Api {
  feasible(lam: string[], mu: string[], nu: string[],
           mode: "sum" | "triple"): Promise<FeasibleResponse>;
  lift(lam: string[], mu: string[], nu: string[],
       mode: "sum" | "triple"): Promise<LiftResponse>;
  breathe(honeycomb: HoneycombJson, hexagon: string,
          t: string): Promise<BreatheResponse>;
  render(honeycomb: HoneycombJson, origin: boolean): Promise<string>;
  graph(n: number): Promise<GraphInfo>;
}

export function httpApi(base: string): Api {
  async function post<T>(path: string, payload: unknown): Promise<T> {
    const resp = await fetch(base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    if (!resp.ok) {
      const body = await resp.text();
      throw new Error(`${path} failed (${resp.status}): ${body}`);
    }
    return (await resp.json()) as T;
  }

  return {
    feasible: (lam, mu, nu, mode) =>
      post("/api/feasible", { lam, mu, nu, mode }),
    lift: (lam, mu, nu, mode) => post("/api/lift", { lam, mu, nu, mode }),
    breathe: (honeycomb, hexagon, t) =>
      post("/api/breathe", { honeycomb, hexagon, t }),
    render: async (honeycomb, origin) => {
      const resp = await fetch(base + "/api/render", {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ honeycomb, origin }),
      });
      if (!resp.ok) throw new Error(`render failed (${resp.status})`);
      return await resp.text();
    },
    graph: async (n) => {
      const resp = await fetch(`${base}/api/graph?n=${n}`);
      if (!resp.ok) throw new Error(`graph failed (${resp.status})`);
      return (await resp.json()) as GraphInfo;
    },
  };
}
