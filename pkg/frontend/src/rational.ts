// Exact rational slider bookkeeping on bigint pairs.  This arithmetic is
// for slider positions and clamp checks only, never for honeycomb
// coordinates (those stay on the backend).

export interface Rational {
  num: bigint;
  den: bigint; // > 0
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export function rational(num: bigint, den: bigint = 1n): Rational {
  if (den === 0n) throw new Error("zero denominator");
  if (den < 0n) {
    num = -num;
    den = -den;
  }
  const g = gcd(num, den) || 1n;
  return { num: num / g, den: den / g };
}

export function parseRational(text: string): Rational {
  const t = text.trim();
  const m = t.match(/^(-?\d+)(?:\/(\d+))?$/);
  if (!m) throw new Error(`not a rational: ${text}`);
  return rational(BigInt(m[1]), m[2] ? BigInt(m[2]) : 1n);
}

export function parseSpectrum(text: string): string[] {
  const parts = text.split(",").map((p) => p.trim()).filter((p) => p);
  if (!parts.length) throw new Error("empty spectrum");
  const values = parts.map(parseRational);
  for (let i = 1; i < values.length; i++) {
    if (lessThan(values[i - 1], values[i])) {
      throw new Error("spectrum must be weakly decreasing");
    }
  }
  return values.map(format);
}

export function format(r: Rational): string {
  return r.den === 1n ? r.num.toString() : `${r.num}/${r.den}`;
}

export function lessThan(a: Rational, b: Rational): boolean {
  return a.num * b.den < b.num * a.den;
}

export function scale(r: Rational, k: bigint, over: bigint): Rational {
  return rational(r.num * k, r.den * over);
}

export function toNumber(r: Rational): number {
  return Number(r.num) / Number(r.den);
}
