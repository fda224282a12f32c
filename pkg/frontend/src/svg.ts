// Client-side SVG construction from backend-supplied screen geometry.
// The element layout mirrors the backend renderer so the two outputs are
// structurally comparable; the client only formats and styles.

import type { ScreenGeometry } from "./api";

function fmt(x: number): string {
  const s = x.toFixed(4);
  return s === "-0.0000" ? "0.0000" : s;
}

export interface SvgDocument {
  markup: string;
  elements: string[];
}

export function buildSvg(
  geometry: ScreenGeometry,
  origin: boolean,
  size = 400,
): SvgDocument {
  const lines = [...geometry.segments, ...geometry.rays];
  const pts: Array<[number, number]> = [];
  for (const l of lines) {
    pts.push([l.x1, l.y1], [l.x2, l.y2]);
  }
  if (origin || pts.length === 0) pts.push([0, 0]);
  const xs = pts.map((p) => p[0]);
  const ys = pts.map((p) => p[1]);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = Math.max(maxX - minX, 1e-9);
  const spanY = Math.max(maxY - minY, 1e-9);
  const margin = 0.1 * Math.max(spanX, spanY);
  const vbX = minX - margin;
  const vbY = -(maxY + margin);
  const vbW = spanX + 2 * margin;
  const vbH = spanY + 2 * margin;
  const stroke = Math.max(spanX, spanY) / 120;
  const dotR = 1.6 * stroke;

  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" version="1.1" ` +
      `width="${fmt(size)}" height="${fmt((size * vbH) / vbW)}" ` +
      `viewBox="${fmt(vbX)} ${fmt(vbY)} ${fmt(vbW)} ${fmt(vbH)}">`,
  );
  for (const l of lines) {
    out.push(
      `<line x1="${fmt(l.x1)}" y1="${fmt(-l.y1)}" x2="${fmt(l.x2)}" ` +
        `y2="${fmt(-l.y2)}" stroke="#1a1a1a" ` +
        `stroke-width="${fmt(stroke)}" />`,
    );
  }
  const seen = new Set<string>();
  const dots: Array<[number, number]> = [];
  for (const s of geometry.segments) {
    dots.push([s.x1, s.y1], [s.x2, s.y2]);
  }
  for (const r of geometry.rays) {
    dots.push([r.x1, r.y1]);
  }
  for (const [x, y] of dots) {
    const key = `${fmt(x)},${fmt(y)}`;
    if (seen.has(key)) continue;
    seen.add(key);
    out.push(
      `<circle cx="${fmt(x)}" cy="${fmt(-y)}" r="${fmt(dotR)}" ` +
        `fill="#1a1a1a" />`,
    );
  }
  for (const l of lines) {
    if (l.multiplicity > 1) {
      const mx = (l.x1 + l.x2) / 2;
      const my = (l.y1 + l.y2) / 2;
      out.push(
        `<text x="${fmt(mx + 2 * stroke)}" y="${fmt(-my)}" ` +
          `font-size="${fmt(8 * stroke)}">${l.multiplicity}</text>`,
      );
    }
  }
  if (origin) {
    out.push(
      `<circle cx="0.0000" cy="0.0000" r="${fmt(2.2 * stroke)}" ` +
        `fill="#000000" />`,
    );
  }
  out.push("</svg>");
  return { markup: out.join("\n") + "\n", elements: svgElements(out.join("\n")) };
}

export function svgElements(svg: string): string[] {
  return svg
    .split("\n")
    .map((line) => line.trim())
    .filter(
      (line) =>
        line.startsWith("<line") ||
        line.startsWith("<circle") ||
        line.startsWith("<text"),
    );
}

// Order-insensitive structural comparison of two element lists.
export function sameStructure(a: string[], b: string[]): boolean {
  if (a.length !== b.length) return false;
  const sa = [...a].sort();
  const sb = [...b].sort();
  return sa.every((v, i) => v === sb[i]);
}
