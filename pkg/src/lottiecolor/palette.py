"""Timeline mosaic model: time-sampled columns of merged, sorted color blocks.

Block heights encode covered area as ``alpha * sqrt(area)`` (a 2D-to-1D
perceptual mapping), columns sample the timeline at a uniform frame step,
and block order comes from a sort captured once at build time — later edits
re-color blocks in place and never re-rank them.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field, replace

from .colorspace import Lab, Rgba, delta_e, rgb_to_lab
from .errors import OutOfBounds, UnknownColor
from .lottie import ColorAddress
from .occurrences import OccurrenceSet

__all__ = [
    "ColorBlock",
    "PaletteColumn",
    "ScenePalette",
    "FrozenOrder",
    "build_palette",
    "rezoom",
    "recolor_blocks",
    "column_at_frame",
    "palette_to_json",
    "palette_to_svg",
    "ALPHA_MIN",
    "ALPHA_MAX",
    "DEFAULT_ALPHA",
]

ALPHA_MIN = 0.2  # display units per sqrt(pixel) at zoom 0
ALPHA_MAX = 4.0  # at zoom 100
DEFAULT_ALPHA = (ALPHA_MIN + ALPHA_MAX) / 2  # palette opens at mid zoom

_BLACK = Lab(0.0, 0.0, 0.0)


@dataclass(frozen=True)
class FrozenOrder:
    """Immutable color ranking captured when the palette is first built."""

    ranks: dict  # Rgba -> int
    keys: dict  # Rgba -> DeltaE-from-black at freeze time

    @classmethod
    def from_colors(cls, colors) -> "FrozenOrder":
        keyed = [(delta_e(rgb_to_lab(c), _BLACK), c) for c in set(colors)]
        keyed.sort(key=lambda kc: (kc[0], kc[1].sort_token()))
        return cls(
            ranks={c: i for i, (_, c) in enumerate(keyed)},
            keys={c: k for k, c in keyed},
        )

    def extended(self, colors) -> "FrozenOrder":
        """Append ranks for colors this order has not seen (new paint values)."""
        missing = sorted(
            {c for c in colors if c not in self.ranks},
            key=lambda c: (delta_e(rgb_to_lab(c), _BLACK), c.sort_token()),
        )
        if not missing:
            return self
        ranks = dict(self.ranks)
        keys = dict(self.keys)
        base = max(ranks.values(), default=-1) + 1
        for i, c in enumerate(missing):
            ranks[c] = base + i
            keys[c] = delta_e(rgb_to_lab(c), _BLACK)
        return FrozenOrder(ranks, keys)

    def remapped(self, mapping: dict) -> "FrozenOrder":
        """Carry ranks through a recolor; collisions keep the earliest rank."""
        ranks: dict = {}
        keys: dict = {}
        for color, rank in sorted(self.ranks.items(), key=lambda cr: cr[1]):
            new = mapping.get(color, color)
            if new not in ranks or rank < ranks[new]:
                ranks[new] = rank
                keys[new] = self.keys[color]
        return FrozenOrder(ranks, keys)


@dataclass
class ColorBlock:
    color: Rgba
    height: float
    occurrences: list[ColorAddress]
    sort_key: float  # DeltaE-from-black captured at freeze time
    merged_area: float
    # Per-address areas, aligned with ``occurrences``. Keeping them lets a
    # later merge re-sum areas in address order, bit-identical to a rebuild.
    occurrence_areas: list[float] = field(default_factory=list)


@dataclass
class PaletteColumn:
    frame: float
    blocks: list[ColorBlock]


@dataclass
class ScenePalette:
    columns: list[PaletteColumn]
    alpha: float
    step: float
    order: FrozenOrder
    in_point: float
    out_point: float
    alpha_min: float = ALPHA_MIN
    alpha_max: float = ALPHA_MAX


def default_step(frame_rate: float) -> float:
    """Two columns per second, never below one frame."""
    return max(1.0, frame_rate / 2.0)


def build_palette(
    occurrence_set: OccurrenceSet,
    doc_bounds: tuple,
    step: "float | None" = None,
    alpha: float = DEFAULT_ALPHA,
    order: "FrozenOrder | None" = None,
    alpha_min: float = ALPHA_MIN,
    alpha_max: float = ALPHA_MAX,
) -> ScenePalette:
    """Sample the occurrence set into ordered, merged palette columns.

    ``order`` imports a previously frozen ranking (extended for any colors it
    has not seen); omitting it freezes a fresh one from this set.
    """
    in_point, out_point, frame_rate = doc_bounds
    if step is None:
        step = default_step(frame_rate)
    if step < 1:
        raise ValueError("column step must be >= 1 frame")
    if alpha <= 0:
        raise ValueError("alpha must be positive")

    colors = {o.color for o in occurrence_set.occurrences}
    order = order.extended(colors) if order else FrozenOrder.from_colors(colors)

    columns = []
    frame = in_point
    while frame < out_point:
        merged: dict[Rgba, list[tuple[ColorAddress, float]]] = {}
        for occ in occurrence_set.occurrences:
            if occ.start <= frame < occ.end:
                merged.setdefault(occ.color, []).append((occ.address, occ.area))
        blocks = []
        for color, contribs in merged.items():
            contribs.sort()
            area = sum(a for _, a in contribs)
            blocks.append(
                ColorBlock(
                    color=color,
                    height=alpha * math.sqrt(area),
                    occurrences=[addr for addr, _ in contribs],
                    sort_key=order.keys[color],
                    merged_area=area,
                    occurrence_areas=[a for _, a in contribs],
                )
            )
        blocks.sort(key=lambda b: order.ranks[b.color])
        columns.append(PaletteColumn(frame, blocks))
        frame += step

    return ScenePalette(
        columns, alpha, step, order, in_point, out_point, alpha_min, alpha_max
    )


def rezoom(palette: ScenePalette, zoom_percent: float) -> ScenePalette:
    """Rescale heights for a zoom slider position in [0, 100]."""
    if not 0 <= zoom_percent <= 100:
        raise OutOfBounds(f"zoom must be in [0, 100], got {zoom_percent}")
    alpha = palette.alpha_min + (zoom_percent / 100.0) * (
        palette.alpha_max - palette.alpha_min
    )
    columns = [
        PaletteColumn(
            col.frame,
            [replace(b, height=alpha * math.sqrt(b.merged_area)) for b in col.blocks],
        )
        for col in palette.columns
    ]
    return replace(palette, columns=columns, alpha=alpha)


def recolor_blocks(palette: ScenePalette, mapping: dict) -> ScenePalette:
    """Re-color blocks in place, keeping the frozen ranks and sort keys.

    Colors that collide after mapping merge into the earlier-ranked block
    (areas summed, heights recomputed); everything else keeps its position.
    """
    unknown = [c for c in mapping if c not in palette.order.ranks]
    if unknown:
        raise UnknownColor(
            "colors not present in palette: " + ", ".join(c.to_hex() for c in unknown)
        )
    order = palette.order.remapped(mapping)
    # Only sources and merge targets can change; other blocks pass through.
    touched = set(mapping) | {mapping[c] for c in mapping}

    columns = []
    for col in palette.columns:
        keep = []
        redo = []
        for block in col.blocks:
            (redo if block.color in touched else keep).append(block)
        if not redo:
            columns.append(col)
            continue
        by_color: dict[Rgba, ColorBlock] = {}
        # Columns are rank-sorted, so redo keeps the old-rank order that
        # decides which block a collision merges into.
        for block in redo:
            new_color = mapping.get(block.color, block.color)
            if new_color in by_color:
                target = by_color[new_color]
                contribs = sorted(
                    zip(target.occurrences + block.occurrences,
                        target.occurrence_areas + block.occurrence_areas)
                )
                target.occurrences = [addr for addr, _ in contribs]
                target.occurrence_areas = [a for _, a in contribs]
                # Re-sum in address order so a from-scratch rebuild matches.
                target.merged_area = sum(target.occurrence_areas)
                target.height = palette.alpha * math.sqrt(target.merged_area)
            else:
                by_color[new_color] = ColorBlock(
                    color=new_color,
                    height=block.height,
                    occurrences=list(block.occurrences),
                    sort_key=block.sort_key,
                    merged_area=block.merged_area,
                    occurrence_areas=list(block.occurrence_areas),
                )
        blocks = sorted(
            keep + list(by_color.values()), key=lambda b: order.ranks[b.color]
        )
        columns.append(PaletteColumn(col.frame, blocks))
    return replace(palette, columns=columns, order=order)


def column_at_frame(palette: ScenePalette, frame: float) -> PaletteColumn:
    """The column whose sample frame is the largest one <= frame."""
    if not palette.columns or not palette.in_point <= frame < palette.out_point:
        raise OutOfBounds(
            f"frame {frame} outside [{palette.in_point}, {palette.out_point})"
        )
    frames = [col.frame for col in palette.columns]
    return palette.columns[bisect_right(frames, frame) - 1]


def palette_to_json(palette: ScenePalette) -> dict:
    return {
        "alpha": palette.alpha,
        "step": palette.step,
        "in_point": palette.in_point,
        "out_point": palette.out_point,
        "columns": [
            {
                "frame": col.frame,
                "blocks": [
                    {
                        "color": b.color.to_hex(),
                        "height": b.height,
                        "area": b.merged_area,
                        "sort_key": b.sort_key,
                        "occurrences": [a.to_json() for a in b.occurrences],
                    }
                    for b in col.blocks
                ],
            }
            for col in palette.columns
        ],
    }


def palette_to_svg(palette: ScenePalette, column_width: float = 8.0) -> str:
    """Static mosaic (one rect per block) for documentation and visual diffs."""
    height = max(
        (sum(b.height for b in col.blocks) for col in palette.columns), default=0.0
    )
    width = column_width * len(palette.columns)
    rects = []
    for i, col in enumerate(palette.columns):
        y = 0.0
        for block in col.blocks:
            rects.append(
                '<rect x="%.3f" y="%.3f" width="%.3f" height="%.3f" fill="%s"/>'
                % (i * column_width, y, column_width, block.height, block.color.to_hex())
            )
            y += block.height
    body = "\n  ".join(rects)
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" width="%.3f" height="%.3f">\n  %s\n</svg>\n'
        % (width, height, body)
    )
