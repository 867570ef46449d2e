"""Extract every color's footprint from a document.

One ColorOccurrence per (paint, constant-color segment): its RGBA, the
bounding-box area of the geometry it paints, and the frame interval where
that color shows. Areas and durations multiply into the weights driving the
theme and palette views.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .colorspace import Rgba
from .errors import ZeroWeightDocument
from .lottie import (
    BezierPath,
    ColorAddress,
    Layer,
    LottieDocument,
    Mat2D,
    ShapeItem,
    color_at,
)

__all__ = [
    "ColorOccurrence",
    "OccurrenceSet",
    "bounding_box_area",
    "extract_occurrences",
    "proportion",
    "distinct_colors",
]


@dataclass(frozen=True)
class ColorOccurrence:
    address: ColorAddress
    color: Rgba
    opacity: float
    area: float
    start: float  # interval [start, end): inclusive start, exclusive end
    end: float
    element_id: str
    animated: bool

    @property
    def weight(self) -> float:
        return self.area * (self.end - self.start)

    def to_json(self) -> dict:
        return {
            "address": self.address.to_json(),
            "color": self.color.to_hex(),
            "opacity": self.opacity,
            "area": self.area,
            "interval": [self.start, self.end],
            "element_id": self.element_id,
            "animated": self.animated,
        }


@dataclass
class OccurrenceSet:
    occurrences: list[ColorOccurrence] = field(default_factory=list)
    total_weight: float = 0.0
    warnings: list[str] = field(default_factory=list)


def bounding_box_area(path: BezierPath, transform: Mat2D = Mat2D()) -> float:
    """Area of the axis-aligned box over anchor AND control points.

    Control points are included instead of flattening curves: cheap,
    deterministic, and never smaller than the true extent.
    """
    if not path.vertices:
        return 0.0
    xs: list[float] = []
    ys: list[float] = []
    for (vx, vy), (ix, iy), (ox, oy) in zip(
        path.vertices, path.in_tangents, path.out_tangents
    ):
        for px, py in ((vx, vy), (vx + ix, vy + iy), (vx + ox, vy + oy)):
            tx, ty = transform.apply(px, py)
            xs.append(tx)
            ys.append(ty)
    return (max(xs) - min(xs)) * (max(ys) - min(ys))


def element_id_for(layer: Layer, position: int) -> str:
    name = layer.name or f"Layer {layer.index if layer.index is not None else position}"
    return f"{name}#{position}"


def _paint_segments(
    item: ShapeItem, start: float, end: float
) -> list[tuple[float, float, Rgba, bool]]:
    """Split a paint's visible range into constant-color spans.

    Within a keyframe segment the starting color owns the whole span; the
    analysis wants discrete colors, not eased blends.
    """
    paint = item.paint
    if not paint.animated:
        return [(start, end, paint.static_value, False)]
    cuts = [start]
    for kf in paint.keyframes:
        if start < kf.frame < end:
            cuts.append(kf.frame)
    cuts.append(end)
    return [
        (a, b, color_at(paint, a, interpolate=False), True)
        for a, b in zip(cuts, cuts[1:])
        if a < b
    ]


def extract_occurrences(doc: LottieDocument) -> OccurrenceSet:
    """Walk the document and flatten every paint into color occurrences.

    A fill/stroke paints all path items that precede it among its siblings
    (the Lottie paint-scoping rule), so its area is the sum of their
    transformed bounding boxes.
    """
    result = OccurrenceSet()

    def walk(items, prefix, matrix, li, layer, vis):
        sibling_area = 0.0
        for idx, item in enumerate(items):
            where = f"$.layers[{li}]" + "".join(f"[{i}]" for i in prefix + (idx,))
            if item.kind == "group":
                group_matrix = matrix
                for child in item.children:
                    if child.kind == "transform":
                        group_matrix = matrix @ child.transform.matrix()
                        break
                walk(item.children, prefix + (idx,), group_matrix, li, layer, vis)
            elif item.kind == "path":
                if item.path is None or not item.path.vertices:
                    result.warnings.append(f"{where}: empty or unreadable path, area 0")
                else:
                    sibling_area += bounding_box_area(item.path, matrix)
            elif item.is_paint:
                addr = ColorAddress(li, prefix + (idx,), item.kind)
                for a, b, color, animated in _paint_segments(item, *vis):
                    result.occurrences.append(
                        ColorOccurrence(
                            address=addr,
                            color=color,
                            opacity=item.opacity,
                            area=sibling_area,
                            start=a,
                            end=b,
                            element_id=element_id_for(layer, li),
                            animated=animated,
                        )
                    )
            elif item.kind == "unsupported":
                ty = item.extra.get("ty")
                if ty in ("gf", "gs"):
                    result.warnings.append(f"{where}: unsupported paint ty={ty!r} skipped")
                elif ty in ("rc", "el", "sr"):
                    result.warnings.append(
                        f"{where}: parametric shape ty={ty!r} not counted toward area"
                    )

    for li, layer in enumerate(doc.layers):
        if layer.layer_type != "shape":
            continue
        start = max(layer.in_point, doc.in_point)
        end = min(layer.out_point, doc.out_point)
        if start >= end:
            continue  # never visible inside document bounds
        matrix = layer.transform.matrix() if layer.transform else Mat2D()
        walk(layer.shapes, (), matrix, li, layer, (start, end))

    result.total_weight = sum(o.weight for o in result.occurrences)
    return result


def proportion(occurrence_set: OccurrenceSet, color: Rgba) -> float:
    """Weight share of one exact RGBA value in [0, 1]."""
    if occurrence_set.total_weight <= 0:
        raise ZeroWeightDocument("document has no weighted color occurrences")
    owned = sum(o.weight for o in occurrence_set.occurrences if o.color == color)
    return owned / occurrence_set.total_weight


def distinct_colors(occurrence_set: OccurrenceSet) -> list[Rgba]:
    """Distinct RGBA values in first-appearance (document) order."""
    seen: dict[Rgba, None] = {}
    for occ in occurrence_set.occurrences:
        seen.setdefault(occ.color, None)
    return list(seen)
