"""Minimal SVG rendering of a polygon and its two-disk cover."""
from __future__ import annotations

from .polygon import ConvexPolygon
from .stream import CoverSolution


def render_svg(p: ConvexPolygon, sol: CoverSolution, size: int = 512) -> str:
    pts = list(p.vertices) + sol.rect.corners()
    for d in sol.disks:
        pts += [(d.center.x - d.radius, d.center.y - d.radius), (d.center.x + d.radius, d.center.y + d.radius)]
    xs = [q[0] for q in pts]
    ys = [q[1] for q in pts]
    x0, y0 = min(xs), min(ys)
    span = max(max(xs) - x0, max(ys) - y0) or 1.0
    pad = 0.05 * span
    scale = size / (span + 2 * pad)

    # flip y so the picture matches the usual math orientation
    def tx(x, y):
        return (x - x0 + pad) * scale, size - (y - y0 + pad) * scale

    def ring(points):
        return " ".join("%.3f,%.3f" % tx(x, y) for x, y in points)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<polygon points="{ring(sol.rect.corners())}" fill="none" stroke="#888" stroke-dasharray="4 3"/>',
        f'<polygon points="{ring(p.vertices)}" fill="#cde" stroke="#135" stroke-width="1.5"/>',
    ]
    for d, colour in zip(sol.disks, ("#c33", "#36c")):
        cx, cy = tx(d.center.x, d.center.y)
        parts.append(
            f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{d.radius * scale:.3f}" '
            f'fill="{colour}" fill-opacity="0.12" stroke="{colour}"/>'
        )
        parts.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="2" fill="{colour}"/>')
    parts.append(
        f'<text x="6" y="16" font-family="monospace" font-size="12">'
        f"{sol.method} r={sol.radius:.6g}</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
