"""Deterministic SVG rendering of honeycombs and diagrams."""

from __future__ import annotations

from fractions import Fraction

from .diagram import Diagram, to_diagram
from .honeycomb import Honeycomb
from .plane import project_to_screen

RAY_DISPLAY_LENGTH = Fraction(3)


def _fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def render_svg(obj: Honeycomb | Diagram, origin: bool = False,
               size: float = 400.0) -> str:
    """SVG picture: pieces as lines, piece endpoints as dots, multiplicity
    labels above 1, optional origin marker.  Byte-deterministic for a
    fixed input."""
    d = to_diagram(obj) if isinstance(obj, Honeycomb) else obj

    lines: list[tuple[float, float, float, float, int]] = []
    dots: list[tuple[float, float]] = []
    for start, end, mult in d.segments:
        x1, y1 = project_to_screen(start)
        x2, y2 = project_to_screen(end)
        lines.append((x1, y1, x2, y2, mult))
        dots.extend([(x1, y1), (x2, y2)])
    for start, direction, mult in d.rays:
        tip = start.translate(direction, RAY_DISPLAY_LENGTH)
        x1, y1 = project_to_screen(start)
        x2, y2 = project_to_screen(tip)
        lines.append((x1, y1, x2, y2, mult))
        dots.append((x1, y1))

    pts = [(x1, y1) for x1, y1, _, _, _ in lines]
    pts += [(x2, y2) for _, _, x2, y2, _ in lines]
    if origin or not pts:
        pts.append((0.0, 0.0))
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span_x = max(max_x - min_x, 1e-9)
    span_y = max(max_y - min_y, 1e-9)
    margin = 0.1 * max(span_x, span_y)
    vb_x = min_x - margin
    vb_y = -(max_y + margin)          # flip: screen y grows northward
    vb_w = span_x + 2 * margin
    vb_h = span_y + 2 * margin
    stroke = max(span_x, span_y) / 120.0
    dot_r = 1.6 * stroke

    out = []
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(size)}" height="{_fmt(size * vb_h / vb_w)}" '
        f'viewBox="{_fmt(vb_x)} {_fmt(vb_y)} {_fmt(vb_w)} {_fmt(vb_h)}">')
    for x1, y1, x2, y2, mult in lines:
        out.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(-y1)}" x2="{_fmt(x2)}" '
            f'y2="{_fmt(-y2)}" stroke="#1a1a1a" '
            f'stroke-width="{_fmt(stroke)}" />')
    seen = set()
    for x, y in dots:
        key = (_fmt(x), _fmt(y))
        if key in seen:
            continue
        seen.add(key)
        out.append(f'<circle cx="{key[0]}" cy="{_fmt(-y)}" '
                   f'r="{_fmt(dot_r)}" fill="#1a1a1a" />')
    for x1, y1, x2, y2, mult in lines:
        if mult > 1:
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            out.append(
                f'<text x="{_fmt(mx + 2 * stroke)}" y="{_fmt(-my)}" '
                f'font-size="{_fmt(8 * stroke)}">{mult}</text>')
    if origin:
        out.append(f'<circle cx="0.0000" cy="0.0000" '
                   f'r="{_fmt(2.2 * stroke)}" fill="#000000" />')
    out.append('</svg>')
    return "\n".join(out) + "\n"


def svg_elements(svg: str) -> list[str]:
    """Structural element list for pixel-independent comparisons."""
    return [line.strip() for line in svg.splitlines()
            if line.strip().startswith(("<line", "<circle", "<text"))]
