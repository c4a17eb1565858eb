"""Landscape image generation (PNG via Pillow, SVG as text).

Output bytes are deterministic for fixed inputs: no timestamps, fixed
palette order, fixed legend layout.
"""

from __future__ import annotations

import io
from typing import Optional

from PIL import Image, ImageDraw

from .landscape import ERROR_LABEL, FALLBACK_LABEL, ViewLandscape

DEFAULT_PALETTE = (
    "#4daf4a", "#ffd92f", "#377eb8", "#e78ac3",
    "#ff7f00", "#a65628", "#66c2a5", "#8da0cb",
)
FALLBACK_COLOR = "#c8c8c8"
ERROR_COLOR = "#d73027"

_LEGEND_W = 220
_LEGEND_ROW = 24


def _colors(l: ViewLandscape, palette) -> list[str]:
    palette = list(palette or DEFAULT_PALETTE)
    out = []
    vi = 0
    for name in l.label_names:
        if name == FALLBACK_LABEL:
            out.append(FALLBACK_COLOR)
        elif name == ERROR_LABEL:
            out.append(ERROR_COLOR)
        else:
            out.append(palette[vi % len(palette)])
            vi += 1
    return out


def _present_labels(l: ViewLandscape) -> list[int]:
    import numpy as np

    counts = np.bincount(l.labels.ravel(), minlength=len(l.label_names))
    return [k for k in range(len(l.label_names)) if counts[k] > 0]


def render_landscape(l: ViewLandscape, format: str = "png", palette=None,
                     overlay: Optional[tuple[float, float]] = None) -> bytes:
    """Render a landscape to image bytes; ``overlay`` marks a viewport (w, h)."""
    if format == "png":
        return _render_png(l, palette, overlay)
    if format == "svg":
        return _render_svg(l, palette, overlay)
    raise ValueError(f"unsupported image format {format!r}")


def _render_png(l: ViewLandscape, palette, overlay) -> bytes:
    r = l.region
    s = r.step
    plot_w = int(round((r.w_max - r.w_min)))
    plot_h = int(round((r.h_max - r.h_min)))
    colors = _colors(l, palette)
    img = Image.new("RGB", (plot_w + _LEGEND_W, max(plot_h, _LEGEND_ROW * (len(l.label_names) + 1))),
                    "#ffffff")
    draw = ImageDraw.Draw(img)
    for j in range(l.ny):
        y1 = plot_h - int(j * s)  # height axis grows upward
        y0 = max(plot_h - int((j + 1) * s), 0)
        row = l.labels[j]
        i = 0
        while i < l.nx:
            k = row[i]
            i2 = i
            while i2 + 1 < l.nx and row[i2 + 1] == k:
                i2 += 1
            draw.rectangle([int(i * s), y0, min(int((i2 + 1) * s), plot_w) - 1, y1 - 1],
                           fill=colors[k])
            i = i2 + 1
    if overlay is not None:
        ow, oh = overlay
        x = int(ow - r.w_min)
        y = plot_h - int(oh - r.h_min)
        draw.line([(x, 0), (x, plot_h)], fill="#000000")
        draw.line([(0, y), (plot_w, y)], fill="#000000")
    for row_i, k in enumerate(_present_labels(l)):
        y = 8 + row_i * _LEGEND_ROW
        draw.rectangle([plot_w + 10, y, plot_w + 26, y + 16], fill=colors[k],
                       outline="#000000")
        draw.text((plot_w + 34, y + 2), l.label_names[k], fill="#000000")
    buf = io.BytesIO()
    img.save(buf, format="PNG")
    return buf.getvalue()


def _render_svg(l: ViewLandscape, palette, overlay) -> bytes:
    r = l.region
    s = r.step
    plot_w = r.w_max - r.w_min
    plot_h = r.h_max - r.h_min
    colors = _colors(l, palette)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{plot_w + _LEGEND_W:g}" height="{plot_h:g}" '
        f'viewBox="0 0 {plot_w + _LEGEND_W:g} {plot_h:g}">',
        f'<rect width="{plot_w + _LEGEND_W:g}" height="{plot_h:g}" fill="#ffffff"/>',
    ]
    for j in range(l.ny):
        y = plot_h - (j + 1) * s
        row = l.labels[j]
        i = 0
        while i < l.nx:
            k = row[i]
            i2 = i
            while i2 + 1 < l.nx and row[i2 + 1] == k:
                i2 += 1
            parts.append(f'<rect x="{i * s:g}" y="{max(y, 0):g}" '
                         f'width="{(i2 - i + 1) * s:g}" height="{min(s, s + y):g}" '
                         f'fill="{colors[k]}"/>')
            i = i2 + 1
    if overlay is not None:
        ow, oh = overlay
        x = ow - r.w_min
        y = plot_h - (oh - r.h_min)
        parts.append(f'<line x1="{x:g}" y1="0" x2="{x:g}" y2="{plot_h:g}" stroke="#000"/>')
        parts.append(f'<line x1="0" y1="{y:g}" x2="{plot_w:g}" y2="{y:g}" stroke="#000"/>')
    for row_i, k in enumerate(_present_labels(l)):
        y = 12 + row_i * _LEGEND_ROW
        parts.append(f'<rect x="{plot_w + 10:g}" y="{y:g}" width="16" height="16" '
                     f'fill="{colors[k]}" stroke="#000"/>')
        parts.append(f'<text x="{plot_w + 34:g}" y="{y + 13:g}" font-size="13" '
                     f'font-family="sans-serif">{l.label_names[k]}</text>')
    parts.append("</svg>")
    return "\n".join(parts).encode("utf-8")
