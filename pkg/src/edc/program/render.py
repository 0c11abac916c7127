"""SVG drawing of an executed trace in plate style:
solid circles, dotted imaginary lines, letter labels."""

from dataclasses import dataclass
from xml.sax.saxutils import escape

from ..geom import Circle, Point
from .ir import Collinear
from .ruler import Line


class EmptyTrace(Exception):
    pass


@dataclass(frozen=True)
class Style:
    width: int = 600
    labels: str = "named"        # "named" (skip _aux points), "all" or "none"
    aux_points: bool = True      # draw unlabeled dots for auxiliary points
    stroke: float = 1.0
    font_size: float = 12.0
    dotted_assertions: bool = True   # collinear assertions drawn as dotted lines


def _f(v):
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _bounds(trace):
    xs, ys = [], []
    for v in trace.values.values():
        if isinstance(v, Circle):
            (cx, cy), r = v
            xs += [cx - r, cx + r]
            ys += [cy - r, cy + r]
        elif isinstance(v, Point):
            xs.append(v.x)
            ys.append(v.y)
        elif isinstance(v, Line):
            for p in v:
                xs.append(p[0])
                ys.append(p[1])
    return min(xs), min(ys), max(xs), max(ys)


def render_svg(trace, style=Style()):
    """SVG 1.1 document as bytes; identical trace and style give identical bytes."""
    if trace is None or len(trace.values) == 0:
        raise EmptyTrace("nothing to draw")
    x0, y0, x1, y1 = _bounds(trace)
    w, h = max(x1 - x0, 1e-9), max(y1 - y0, 1e-9)
    side = max(w, h)
    mx, my = 0.05 * side, 0.05 * side
    vb_w, vb_h = w + 2 * mx, h + 2 * my
    unit = vb_w / style.width      # drawing units per pixel
    height = max(1, round(style.width * vb_h / vb_w))
    sw = style.stroke * unit
    fs = style.font_size * unit
    dot = 2.0 * unit

    def X(x):
        return _f(x)

    def Y(y):
        return _f(-y)    # plane y up, SVG y down

    out = ['<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{style.width}" height="{height}" '
           f'viewBox="{_f(x0 - mx)} {_f(-(y1 + my))} {_f(vb_w)} {_f(vb_h)}">',
           f'<g fill="none" stroke="black" stroke-width="{_f(sw)}">']
    for name, v in trace.values.items():
        if isinstance(v, Circle):
            out.append(f'<circle id="{escape(name)}" cx="{X(v.center.x)}" '
                       f'cy="{Y(v.center.y)}" r="{_f(v.radius)}"/>')
    dash = f'stroke-dasharray="{_f(2 * sw)} {_f(3 * sw)}"'
    for name, v in trace.values.items():
        if isinstance(v, Line):
            out.append(f'<polyline id="{escape(name)}" {dash} points="{X(v.p[0])},{Y(v.p[1])} '
                       f'{X(v.q[0])},{Y(v.q[1])}"/>')
    if style.dotted_assertions:
        for a in trace.program.assertions:
            if isinstance(a, Collinear):
                pts = sorted((trace.values[n] for n in (a.a, a.b, a.c)))
                coords = " ".join(f"{X(p.x)},{Y(p.y)}" for p in pts)
                out.append(f'<polyline {dash} points="{coords}"/>')
    out.append('</g>')
    out.append('<g fill="black" stroke="none" font-family="sans-serif" '
               f'font-size="{_f(fs)}">')
    for name, v in trace.values.items():
        if not isinstance(v, Point):
            continue
        aux = name.startswith("_")
        if aux and not style.aux_points:
            continue
        d = dot if not aux else dot / 2
        out.append(f'<path stroke="black" stroke-width="{_f(sw)}" '
                   f'd="M{X(v.x - d)} {Y(v.y)}H{X(v.x + d)}M{X(v.x)} {Y(v.y - d)}V{Y(v.y + d)}"/>')
        if style.labels == "all" or (style.labels == "named" and not aux):
            out.append(f'<text x="{X(v.x + 0.6 * fs)}" y="{Y(v.y + 0.3 * fs)}">'
                       f'{escape(name)}</text>')
    out.append('</g>')
    out.append('</svg>')
    return ("\n".join(out) + "\n").encode("utf-8")
