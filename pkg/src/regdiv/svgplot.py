"""Minimal self-contained SVG line plot, no plotting dependency.

Fixed 800x400 viewBox, linear scaling, one polyline; coordinates are
formatted to two decimals so identical inputs give identical bytes.
"""

from __future__ import annotations

VIEW_W = 800
VIEW_H = 400
_LEFT, _RIGHT = 52.0, 788.0
_TOP, _BOTTOM = 16.0, 364.0


def polyline_plot(values: list[int], *, title: str = "") -> str:
    """SVG polyline through (1, values[0]), (2, values[1]), ..."""
    if not values:
        raise ValueError("need at least one value to plot")
    count = len(values)
    vmax = max(values)
    xspan = max(count - 1, 1)
    yspan = max(vmax, 1)

    def sx(n: int) -> float:
        return _LEFT + (n - 1) * (_RIGHT - _LEFT) / xspan

    def sy(v: int) -> float:
        return _BOTTOM - v * (_BOTTOM - _TOP) / yspan

    points = " ".join(f"{sx(n):.2f},{sy(v):.2f}" for n, v in enumerate(values, start=1))

    xticks = sorted({1, (1 + count) // 2, count})
    yticks = sorted({0, vmax // 2, vmax})
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW_W} {VIEW_H}">',
        f'  <rect x="0" y="0" width="{VIEW_W}" height="{VIEW_H}" fill="white"/>',
        f'  <line x1="{_LEFT:.2f}" y1="{_BOTTOM:.2f}" x2="{_RIGHT:.2f}" y2="{_BOTTOM:.2f}" stroke="black" stroke-width="1"/>',
        f'  <line x1="{_LEFT:.2f}" y1="{_BOTTOM:.2f}" x2="{_LEFT:.2f}" y2="{_TOP:.2f}" stroke="black" stroke-width="1"/>',
    ]
    for t in xticks:
        x = sx(t)
        parts.append(
            f'  <line x1="{x:.2f}" y1="{_BOTTOM:.2f}" x2="{x:.2f}" y2="{_BOTTOM + 4:.2f}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'  <text x="{x:.2f}" y="{_BOTTOM + 16:.2f}" font-size="11" text-anchor="middle">{t}</text>'
        )
    for t in yticks:
        y = sy(t)
        parts.append(
            f'  <line x1="{_LEFT - 4:.2f}" y1="{y:.2f}" x2="{_LEFT:.2f}" y2="{y:.2f}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'  <text x="{_LEFT - 7:.2f}" y="{y + 4:.2f}" font-size="11" text-anchor="end">{t}</text>'
        )
    if title:
        parts.append(
            f'  <text x="{VIEW_W / 2:.2f}" y="{_TOP - 3:.2f}" font-size="13" text-anchor="middle">{title}</text>'
        )
    parts.append(
        f'  <polyline fill="none" stroke="#1f77b4" stroke-width="1.5" points="{points}"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
