"""Chamber structure of the movable cone and its deterministic SVG rendering.

The images of the nef cone under alternating words in the two involutions
tile the movable cone; the walls of that tiling are the rays w(h1), w(h2)
over all words w.  Walls are computed exactly (primitive integer directions,
deduplicated, ordered counterclockwise) and drawn to a self-contained SVG
whose bytes depend only on (n, depth): floats are formatted with a fixed
"%.4f" pattern and every element carries its exact data in attributes, so the
output is stable enough to freeze as a golden file.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .cones import FlopWord, eigenrays
from .divisors import DivisorClass
from .intersection import FamilyContext
from .quadfield import QuadElem


@dataclass(frozen=True)
class ChamberWall:
    """One wall ray with the shortest word producing it.

    ``generator`` records which nef edge the word moved: 1 for w(h1),
    2 for w(h2).
    """

    ray: DivisorClass
    word: FlopWord
    generator: int


def _alternating_words(depth: int):
    yield ()
    for length in range(1, depth + 1):
        for first in (1, 2):
            word = [first]
            for _ in range(length - 1):
                word.append(3 - word[-1])
            yield tuple(word)


def _ccw_compare(w1: ChamberWall, w2: ChamberWall) -> int:
    # negative when w1 precedes w2, i.e. when w2 lies counterclockwise of w1
    cross = w1.ray.x * w2.ray.y - w1.ray.y * w2.ray.x
    return (cross < 0) - (cross > 0)


def chamber_walls(ctx: FamilyContext, depth: int) -> tuple[ChamberWall, ...]:
    """All distinct wall rays for words of length <= depth, counterclockwise.

    The walls interleave strictly between the two eigenrays; exactly two new
    rays appear per extra unit of depth, so the result has 2 + 2*depth
    entries.
    """
    if not isinstance(depth, int) or depth < 0:
        raise ValueError("depth must be a nonnegative integer")
    h1, h2 = DivisorClass(1, 0), DivisorClass(0, 1)
    seen: dict[tuple, ChamberWall] = {}
    for letters in _alternating_words(depth):
        word = FlopWord(letters)
        action = word.action(ctx)
        for generator, edge in ((1, h1), (2, h2)):
            ray = action.apply(edge).primitive()
            key = ray.coords
            if key not in seen:
                seen[key] = ChamberWall(ray=ray, word=word, generator=generator)
    walls = sorted(seen.values(), key=functools.cmp_to_key(_ccw_compare))
    return tuple(walls)


# -- SVG rendering ---------------------------------------------------------------

_SIZE = 640
_CENTER = _SIZE / 2
_RADIUS = 280.0


def _fmt(value: float) -> str:
    return f"{value:.4f}"


def _screen(ux: float, uy: float, radius: float = _RADIUS) -> tuple[str, str]:
    # math coords to screen coords: y axis flips
    return _fmt(_CENTER + radius * ux), _fmt(_CENTER - radius * uy)


def _unit(x: float, y: float) -> tuple[float, float]:
    h = math.hypot(x, y)
    return x / h, y / h


def _sector_path(u1: tuple[float, float], u2: tuple[float, float]) -> str:
    x1, y1 = _screen(*u1)
    x2, y2 = _screen(*u2)
    r = _fmt(_RADIUS)
    c = _fmt(_CENTER)
    # sweep 0 traces counterclockwise in math coordinates; both cones < 180 deg
    return (f"M {c} {c} L {x1} {y1} A {r} {r} 0 0 0 {x2} {y2} Z")


def chamber_svg_text(ctx: FamilyContext, depth: int) -> str:
    """The SVG document as a string; `render_chamber_svg` writes it to disk."""
    n, d = ctx.n, ctx.d
    walls = chamber_walls(ctx, depth)
    v_minus, v_plus = eigenrays(ctx)
    sqrt_d = math.sqrt(d)
    u_minus = _unit(n + sqrt_d, -1.0)
    u_plus = _unit(-1.0, n + sqrt_d)

    lines = []
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}" data-n="{n}" data-depth="{depth}">')
    lines.append(f"  <title>chamber walls for n={n}, words up to length {depth}</title>")
    lines.append(f'  <rect width="{_SIZE}" height="{_SIZE}" fill="#ffffff"/>')

    lines.append(f'  <path d="{_sector_path(u_minus, u_plus)}" fill="#f3e8ff" '
                 'stroke="none" data-cone="movable"/>')
    lines.append(f'  <path d="{_sector_path((1.0, 0.0), (0.0, 1.0))}" fill="#dbeafe" '
                 'stroke="none" data-cone="nef"/>')

    for wall in walls:
        ux, uy = _unit(float(wall.ray.x), float(wall.ray.y))
        x2, y2 = _screen(ux, uy)
        word_text = str(wall.word)
        lines.append(
            f'  <line x1="{_fmt(_CENTER)}" y1="{_fmt(_CENTER)}" x2="{x2}" y2="{y2}" '
            f'stroke="#1f2937" stroke-width="1.5" '
            f'data-x="{wall.ray.x}" data-y="{wall.ray.y}" '
            f'data-word="{word_text}" data-generator="h{wall.generator}"/>')

    for name, u, ray in (("v_minus", u_minus, v_minus), ("v_plus", u_plus, v_plus)):
        x2, y2 = _screen(u[0], u[1], _RADIUS + 20)
        lines.append(
            f'  <line x1="{_fmt(_CENTER)}" y1="{_fmt(_CENTER)}" x2="{x2}" y2="{y2}" '
            f'stroke="#b91c1c" stroke-width="1.5" stroke-dasharray="6 4" '
            f'data-ray="{name}" data-x="{ray.x}" data-y="{ray.y}"/>')

    for label, u in (("h1", (1.0, 0.0)), ("h2", (0.0, 1.0)),
                     ("v-", u_minus), ("v+", u_plus)):
        x, y = _screen(u[0], u[1], _RADIUS + 34)
        lines.append(f'  <text x="{x}" y="{y}" font-family="monospace" font-size="14" '
                     f'fill="#111827" text-anchor="middle">{label}</text>')

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_chamber_svg(ctx: FamilyContext, depth: int, path) -> None:
    """Write the chamber fan SVG for words of length <= depth to `path`."""
    text = chamber_svg_text(ctx, depth)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
