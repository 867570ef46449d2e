"""Element List model: per-layer color bubbles, nested by the group tree.

Complements the palette with object-driven navigation: one entry per shape
layer, child entries mirroring its groups, each holding the color bubbles of
the paints it directly owns.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .colorspace import Rgba
from .lottie import ColorAddress, LottieDocument
from .occurrences import OccurrenceSet, element_id_for

__all__ = ["ColorBubble", "ElementEntry", "build_element_list", "elements_with_color"]


@dataclass(frozen=True)
class ColorBubble:
    color: Rgba
    address: ColorAddress
    area: float

    def to_json(self) -> dict:
        return {
            "color": self.color.to_hex(),
            "address": self.address.to_json(),
            "area": self.area,
        }


@dataclass
class ElementEntry:
    element_id: str
    display_name: str
    colors: list[ColorBubble] = field(default_factory=list)
    children: list["ElementEntry"] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "element_id": self.element_id,
            "display_name": self.display_name,
            "colors": [b.to_json() for b in self.colors],
            "children": [c.to_json() for c in self.children],
        }


def build_element_list(
    doc: LottieDocument, occurrence_set: OccurrenceSet
) -> list[ElementEntry]:
    """One top-level entry per shape layer, nesting mirroring the group tree.

    Bubbles come from the occurrence set (one per occurrence, so a keyframed
    paint contributes one bubble per color it takes), ordered by descending
    area within each entry.
    """
    by_prefix: dict[tuple, list[ColorBubble]] = {}
    for occ in occurrence_set.occurrences:
        owner = (occ.address.layer_index,) + occ.address.shape_path[:-1]
        by_prefix.setdefault(owner, []).append(
            ColorBubble(occ.color, occ.address, occ.area)
        )

    def bubbles_for(owner: tuple) -> list[ColorBubble]:
        found = by_prefix.get(owner, [])
        return sorted(
            found, key=lambda b: (-b.area, b.color.sort_token(), b.address)
        )

    def entry_for_group(item, owner, element_id):
        name = item.name or f"Group {owner[-1]}"
        entry = ElementEntry(element_id, name, bubbles_for(owner))
        for idx, child in enumerate(item.children):
            if child.kind == "group":
                entry.children.append(
                    entry_for_group(child, owner + (idx,), f"{element_id}/{idx}")
                )
        return entry

    entries = []
    for li, layer in enumerate(doc.layers):
        if layer.layer_type != "shape":
            continue
        element_id = element_id_for(layer, li)
        display = layer.name or f"Layer {layer.index if layer.index is not None else li}"
        entry = ElementEntry(element_id, display, bubbles_for((li,)))
        for idx, item in enumerate(layer.shapes):
            if item.kind == "group":
                entry.children.append(
                    entry_for_group(item, (li, idx), f"{element_id}/{idx}")
                )
        entries.append(entry)
    return entries


def elements_with_color(entries: list[ElementEntry], colors) -> list[str]:
    """Ids of entries owning at least one bubble with a color in ``colors``.

    Pre-order document traversal, each id at most once.
    """
    wanted = set(colors)
    hits: list[str] = []

    def visit(entry: ElementEntry):
        if any(b.color in wanted for b in entry.colors):
            hits.append(entry.element_id)
        for child in entry.children:
            visit(child)

    for entry in entries:
        visit(entry)
    return hits
