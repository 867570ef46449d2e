"""Invertible color edits over a document.

Three edit kinds: replace one color everywhere, shift one HSL channel across
a color group, and isolate a change to a single frame with a smooth ramp.
Set/shift edits key on color VALUE (identical colors across elements are
edited collectively, matching the merged palette); the frame-isolated edit
keys on a single paint address.

Documents are treated as immutable: every edit returns a new document,
sharing untouched layers with the old one.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field, replace
from typing import Optional

from .colorspace import Hsl, Rgba, hsl_to_rgb, rgb_to_hsl
from .errors import (
    AddressNotFound,
    EmptyGroup,
    EmptyLog,
    FrameOutOfRange,
    RgbEditNotAllowed,
    UnknownColor,
)
from .lottie import (
    LINEAR_EASE_IN,
    LINEAR_EASE_OUT,
    ColorAddress,
    ColorKeyframe,
    ColorProperty,
    LottieDocument,
    color_at,
    iter_paints,
    resolve_address,
)
from .occurrences import OccurrenceSet, distinct_colors
from .theme import similar_colors

__all__ = [
    "ColorGroup",
    "HslShift",
    "EditCommand",
    "EditLog",
    "DEFAULT_RAMP",
    "group_auto",
    "group_manual",
    "group_edit_members",
    "shift_color",
    "apply_group_shift",
    "apply_set_rgb",
    "apply_set_rgb_group",
    "apply_frame_isolated",
    "undo",
]

DEFAULT_RAMP = 6  # frames on each side of a frame-isolated edit

_CHANNELS = ("hue", "saturation", "lightness")


@dataclass(frozen=True)
class HslShift:
    channel: str  # hue | saturation | lightness
    delta: float  # degrees for hue, [-1, 1] for saturation/lightness

    def __post_init__(self):
        if self.channel not in _CHANNELS:
            raise ValueError(f"channel must be one of {_CHANNELS}")


@dataclass(frozen=True)
class ColorGroup:
    members: frozenset[Rgba]
    origin: str = "manual"  # "manual" or "auto(#hex, threshold)"

    def sorted_members(self) -> list[Rgba]:
        return sorted(self.members, key=lambda c: c.sort_token())


def group_auto(
    theme: Rgba, occurrence_set: OccurrenceSet, threshold: float
) -> ColorGroup:
    """Group the document colors within the DeltaE threshold of a theme color."""
    members = similar_colors(theme, distinct_colors(occurrence_set), threshold)
    if not members:
        raise EmptyGroup(
            f"no document color within DeltaE {threshold:g} of {theme.to_hex()}"
        )
    return ColorGroup(frozenset(members), f"auto({theme.to_hex()}, {threshold:g})")


def group_manual(colors) -> ColorGroup:
    members = frozenset(colors)
    if not members:
        raise EmptyGroup("manual group needs at least one color")
    return ColorGroup(members, "manual")


def group_edit_members(group: ColorGroup, add=(), remove=()) -> ColorGroup:
    members = (group.members | frozenset(add)) - frozenset(remove)
    if not members:
        raise EmptyGroup("group would become empty")
    return replace(group, members=members)


def shift_color(color: Rgba, shift: HslShift) -> Rgba:
    """Apply a single-channel HSL shift to one color, preserving alpha.

    Hue wraps around 360 degrees; saturation/lightness clamp to [0, 1]. Hue
    shifts leave achromatic colors alone (their hue is conventional). A
    no-op shift returns the color bit-identical.
    """
    hsl = rgb_to_hsl(color)
    if shift.channel == "hue":
        if hsl.s == 0.0:
            return color
        delta = shift.delta % 360.0
        if delta == 0.0:
            return color
        target = Hsl((hsl.h + delta) % 360.0, hsl.s, hsl.l)
    elif shift.channel == "saturation":
        s = min(1.0, max(0.0, hsl.s + shift.delta))
        if s == hsl.s:
            return color
        target = Hsl(hsl.h, s, hsl.l)
    else:
        l = min(1.0, max(0.0, hsl.l + shift.delta))
        if l == hsl.l:
            return color
        target = Hsl(hsl.h, hsl.s, l)
    return hsl_to_rgb(target, alpha=color.a)


def _rewrite_colors(
    doc: LottieDocument, mapping: dict
) -> tuple[LottieDocument, list[ColorAddress]]:
    """Replace every paint value found in ``mapping``, copying only touched layers."""
    changed: list[ColorAddress] = []
    touched_layers: dict[int, None] = {}
    for addr, item, _ in iter_paints(doc):
        if any(v in mapping for v in item.paint.values()):
            changed.append(addr)
            touched_layers.setdefault(addr.layer_index, None)
    if not changed:
        return doc, []
    layers = list(doc.layers)
    for li in touched_layers:
        layers[li] = copy.deepcopy(doc.layers[li])
    new_doc = replace(doc, layers=layers)
    for addr in changed:
        item = resolve_address(new_doc, addr)
        paint = item.paint
        if paint.animated:
            for kf in paint.keyframes:
                if kf.value in mapping:
                    kf.value = mapping[kf.value]
        elif paint.static_value in mapping:
            paint.static_value = mapping[paint.static_value]
    return new_doc, changed


def _document_colors(doc: LottieDocument) -> set[Rgba]:
    found: set[Rgba] = set()
    for _, item, _ in iter_paints(doc):
        found.update(item.paint.values())
    return found


def apply_group_shift(
    doc: LottieDocument, group: ColorGroup, shift: HslShift
) -> tuple[LottieDocument, dict, list[ColorAddress]]:
    """Shift every member color; returns (doc', old->new mapping, addresses).

    Non-member paints are left bit-identical; each member shifts exactly as
    it would alone, so out-of-range clamping on one never affects another.
    """
    present = _document_colors(doc)
    missing = [c for c in group.sorted_members() if c not in present]
    if missing:
        raise UnknownColor(
            "group members not in document: " + ", ".join(c.to_hex() for c in missing)
        )
    mapping = {m: shift_color(m, shift) for m in group.sorted_members()}
    effective = {old: new for old, new in mapping.items() if new != old}
    new_doc, changed = _rewrite_colors(doc, effective)
    return (new_doc if changed else doc), mapping, changed


def apply_set_rgb(
    doc: LottieDocument, old: Rgba, new: Rgba
) -> tuple[LottieDocument, list[ColorAddress]]:
    """Replace one exact color across all frames and elements."""
    if old not in _document_colors(doc):
        raise UnknownColor(f"color {old.to_hex()} not present in document")
    if new == old:
        return doc, []
    new_doc, changed = _rewrite_colors(doc, {old: new})
    return (new_doc if changed else doc), changed


def apply_set_rgb_group(
    doc: LottieDocument, group: ColorGroup, new: Rgba
) -> tuple[LottieDocument, list[ColorAddress]]:
    """set_rgb via a group is only legal for single-member groups."""
    if len(group.members) != 1:
        raise RgbEditNotAllowed(
            "RGB assignment over a multi-color group is not allowed; "
            "use a single-channel HSL shift"
        )
    (old,) = group.members
    return apply_set_rgb(doc, old, new)


def apply_frame_isolated(
    doc: LottieDocument,
    address: ColorAddress,
    frame: float,
    new_color: Rgba,
    ramp: float = DEFAULT_RAMP,
) -> tuple[LottieDocument, list[ColorAddress]]:
    """Change one paint at one frame only, ramping from/back to the original.

    The paint becomes keyframed: original at frame-ramp, the new color at
    the frame, original again at frame+ramp (clamped into the layer's
    interval); keyframes outside that window survive untouched.
    """
    if ramp < 1:
        raise ValueError("ramp must be at least one frame")
    resolve_address(doc, address)  # AddressNotFound on bad addresses
    layer = doc.layers[address.layer_index]
    if not layer.in_point <= frame <= layer.out_point:
        raise FrameOutOfRange(
            f"frame {frame} outside layer interval "
            f"[{layer.in_point}, {layer.out_point}]"
        )

    layers = list(doc.layers)
    layers[address.layer_index] = copy.deepcopy(layer)
    new_doc = replace(doc, layers=layers)
    item = resolve_address(new_doc, address)
    paint = item.paint

    t_pre = max(layer.in_point, frame - ramp)
    t_post = min(layer.out_point, frame + ramp)
    ease = {"o": dict(LINEAR_EASE_OUT), "i": dict(LINEAR_EASE_IN)}
    window: list[ColorKeyframe] = []
    if t_pre < frame:
        window.append(ColorKeyframe(t_pre, color_at(paint, t_pre), dict(ease)))
    window.append(ColorKeyframe(frame, new_color, dict(ease)))
    if t_post > frame:
        window.append(ColorKeyframe(t_post, color_at(paint, t_post), dict(ease)))

    kept = [
        kf for kf in paint.keyframes if kf.frame < t_pre or kf.frame > t_post
    ] if paint.animated else []
    keyframes = sorted(kept + window, key=lambda kf: kf.frame)
    item.paint = ColorProperty(True, keyframes=keyframes, extra=paint.extra)
    return new_doc, [address]


# ---------------------------------------------------------------------------
# Undo log
# ---------------------------------------------------------------------------


@dataclass
class EditCommand:
    """One applied edit plus the snapshots that make it invertible."""

    kind: str  # set_rgb | group_shift | frame_isolated
    before: LottieDocument
    after: LottieDocument
    mapping: dict = field(default_factory=dict)  # old Rgba -> new Rgba
    changed: list[ColorAddress] = field(default_factory=list)
    detail: dict = field(default_factory=dict)


@dataclass
class EditLog:
    applied: list[EditCommand] = field(default_factory=list)
    redo_slot: Optional[EditCommand] = None  # valid only right after an undo

    def push(self, command: EditCommand):
        self.applied.append(command)
        self.redo_slot = None

    def undo(self) -> EditCommand:
        if not self.applied:
            raise EmptyLog("nothing to undo")
        command = self.applied.pop()
        self.redo_slot = command
        return command

    def redo(self) -> EditCommand:
        if self.redo_slot is None:
            raise EmptyLog("redo is only valid immediately after an undo")
        command = self.redo_slot
        self.push(command)
        return command


def undo(doc: LottieDocument, log: EditLog) -> LottieDocument:
    """Pop the last command and return the document as it was before it."""
    command = log.undo()
    assert command.after is doc or command.after == doc
    return command.before
