"""Lottie (bodymovin dialect) document model: parse, serialize, address.

Only the subset needed for color work is typed: shape layers with groups,
Bezier paths, solid fills and strokes, and static or keyframed colors.
Everything else — unknown root fields, unsupported layer and item types,
easing payloads, transforms — is carried opaquely in ``extra`` dicts and
written back verbatim, so edits never destroy animation data this module
does not model.

Exporter tolerance: color arrays may have 3 or 4 components and use either a
0-1 or 0-255 channel scale (any component > 1 selects 0-255); both are
normalized to RGBA in [0, 1] on parse.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterator, Optional

from .colorspace import Rgba
from .errors import AddressNotFound, MalformedJson, UnsupportedDocument

__all__ = [
    "LottieDocument",
    "Layer",
    "ShapeItem",
    "BezierPath",
    "ColorProperty",
    "ColorKeyframe",
    "Transform2D",
    "ColorAddress",
    "parse_document",
    "serialize_document",
    "resolve_address",
    "color_at",
    "iter_paints",
]

LINEAR_EASE_OUT = {"x": [0.167], "y": [0.167]}
LINEAR_EASE_IN = {"x": [0.833], "y": [0.833]}


# ---------------------------------------------------------------------------
# Model types
# ---------------------------------------------------------------------------


@dataclass
class ColorKeyframe:
    frame: float
    value: Rgba
    extra: dict = field(default_factory=dict)  # easing etc., opaque


@dataclass
class ColorProperty:
    """A paint color: exactly one of static_value / keyframes is populated."""

    animated: bool
    static_value: Optional[Rgba] = None
    keyframes: list[ColorKeyframe] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def values(self) -> list[Rgba]:
        if self.animated:
            return [kf.value for kf in self.keyframes]
        return [self.static_value]


@dataclass
class BezierPath:
    vertices: list[tuple[float, float]]
    in_tangents: list[tuple[float, float]]  # offsets relative to each vertex
    out_tangents: list[tuple[float, float]]
    closed: bool = False


@dataclass
class Transform2D:
    """Static snapshot of a layer/group transform, sampled at first frame."""

    anchor: tuple[float, float] = (0.0, 0.0)
    position: tuple[float, float] = (0.0, 0.0)
    scale: tuple[float, float] = (1.0, 1.0)
    rotation: float = 0.0  # degrees

    def matrix(self) -> "Mat2D":
        m = Mat2D.translation(-self.anchor[0], -self.anchor[1])
        m = Mat2D.scaling(self.scale[0], self.scale[1]) @ m
        m = Mat2D.rotation(self.rotation) @ m
        return Mat2D.translation(self.position[0], self.position[1]) @ m


@dataclass(frozen=True)
class Mat2D:
    """Row-major 2x3 affine matrix."""

    a: float = 1.0
    b: float = 0.0
    c: float = 0.0
    d: float = 1.0
    tx: float = 0.0
    ty: float = 0.0

    @classmethod
    def translation(cls, x: float, y: float) -> "Mat2D":
        return cls(tx=x, ty=y)

    @classmethod
    def scaling(cls, sx: float, sy: float) -> "Mat2D":
        return cls(a=sx, d=sy)

    @classmethod
    def rotation(cls, degrees: float) -> "Mat2D":
        r = math.radians(degrees)
        co, si = math.cos(r), math.sin(r)
        return cls(a=co, b=-si, c=si, d=co)

    def __matmul__(self, other: "Mat2D") -> "Mat2D":
        return Mat2D(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.a * other.tx + self.b * other.ty + self.tx,
            self.c * other.tx + self.d * other.ty + self.ty,
        )

    def apply(self, x: float, y: float) -> tuple[float, float]:
        return (self.a * x + self.b * y + self.tx, self.c * x + self.d * y + self.ty)


@dataclass
class ShapeItem:
    """One entry of a shape layer's item tree.

    kind is one of group / path / fill / stroke / transform / unsupported.
    ``extra`` holds every raw field this module does not own; only a
    fill/stroke's color (``paint``) is ever rewritten.
    """

    kind: str
    extra: dict = field(default_factory=dict)
    children: list["ShapeItem"] = field(default_factory=list)
    path: Optional[BezierPath] = None
    paint: Optional[ColorProperty] = None
    opacity: float = 1.0
    transform: Optional[Transform2D] = None

    @property
    def name(self) -> Optional[str]:
        return self.extra.get("nm")

    @property
    def is_paint(self) -> bool:
        return self.kind in ("fill", "stroke")


@dataclass
class Layer:
    layer_type: str  # shape | precomposition | unsupported
    extra: dict = field(default_factory=dict)
    shapes: list[ShapeItem] = field(default_factory=list)
    transform: Optional[Transform2D] = None
    name: Optional[str] = None
    index: Optional[int] = None  # Lottie "ind"
    in_point: float = 0.0
    out_point: float = 0.0


@dataclass
class LottieDocument:
    frame_rate: float
    in_point: float
    out_point: float
    width: float
    height: float
    layers: list[Layer] = field(default_factory=list)
    extra: dict = field(default_factory=dict)  # unrecognized root fields


@dataclass(frozen=True, order=True)
class ColorAddress:
    """Stable handle for one fill/stroke item: layer position + child path."""

    layer_index: int
    shape_path: tuple[int, ...]
    slot: str  # fill | stroke

    def to_json(self) -> dict:
        return {
            "layer": self.layer_index,
            "path": list(self.shape_path),
            "slot": self.slot,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ColorAddress":
        return cls(int(data["layer"]), tuple(int(i) for i in data["path"]), data["slot"])


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def _fail(path: str, message: str):
    raise UnsupportedDocument(f"{path}: {message}")


def _require_number(raw: dict, key: str, path: str) -> float:
    v = raw.get(key)
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        _fail(f"{path}.{key}", "expected a number" if key in raw else "missing")
    return v


def _normalize_color(values: Any, path: str) -> Rgba:
    if not isinstance(values, list) or len(values) < 3:
        _fail(path, f"expected a color array of 3 or 4 numbers, got {values!r}")
    comps = values[:4]
    if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in comps):
        _fail(path, "color components must be numbers")
    comps = [float(v) for v in comps]
    if any(v > 1.0 for v in comps):  # exporter dialect: 0-255 scale
        comps = [v / 255.0 for v in comps]
    if len(comps) == 3:
        comps.append(1.0)
    return Rgba(*comps)


def _unwrap_keyframe_value(s: Any) -> Any:
    # Some exporters wrap keyframe values one list deeper: [[r,g,b,a]].
    if isinstance(s, list) and len(s) == 1 and isinstance(s[0], list):
        return s[0]
    return s


def _parse_color_property(raw: Any, path: str) -> ColorProperty:
    if not isinstance(raw, dict):
        _fail(path, "expected a property object")
    k = raw.get("k")
    animated = bool(raw.get("a", 0)) and isinstance(k, list) and any(
        isinstance(e, dict) for e in k
    )
    extra = {key: v for key, v in raw.items() if key not in ("a", "k")}
    if not animated:
        return ColorProperty(False, static_value=_normalize_color(k, f"{path}.k"), extra=extra)
    keyframes: list[ColorKeyframe] = []
    carried: Optional[Rgba] = None
    for i, kf in enumerate(k):
        kf_path = f"{path}.k[{i}]"
        if not isinstance(kf, dict):
            _fail(kf_path, "expected a keyframe object")
        t = _require_number(kf, "t", kf_path)
        if "s" in kf:
            value = _normalize_color(_unwrap_keyframe_value(kf["s"]), f"{kf_path}.s")
        elif carried is not None:
            value = carried  # legacy trailing keyframe without a start value
        else:
            _fail(kf_path, "keyframe has no value")
        if "e" in kf:
            carried = _normalize_color(_unwrap_keyframe_value(kf["e"]), f"{kf_path}.e")
        else:
            carried = value
        if keyframes and t <= keyframes[-1].frame:
            _fail(kf_path, "keyframe times must be strictly increasing")
        keyframes.append(
            ColorKeyframe(t, value, {key: v for key, v in kf.items() if key not in ("t", "s")})
        )
    return ColorProperty(True, keyframes=keyframes, extra=extra)


def _static_vector(raw: Any, default: tuple, scale: float = 1.0) -> tuple:
    """First-frame value of a (possibly animated) multi-dimensional property.

    ``default`` is in raw Lottie units; ``scale`` converts to model units.
    """
    fallback = (default[0] * scale, default[1] * scale)
    if not isinstance(raw, dict):
        return fallback
    if raw.get("s") is True and "x" in raw and "y" in raw:  # split position
        return (
            _static_scalar(raw.get("x"), default[0]) * scale,
            _static_scalar(raw.get("y"), default[1]) * scale,
        )
    k = raw.get("k")
    if isinstance(k, list) and k and isinstance(k[0], dict):  # animated
        k = _unwrap_keyframe_value(k[0].get("s", list(default)))
    if isinstance(k, list) and len(k) >= 2 and all(
        isinstance(v, (int, float)) for v in k[:2]
    ):
        return (float(k[0]) * scale, float(k[1]) * scale)
    return fallback


def _static_scalar(raw: Any, default: float = 0.0) -> float:
    if not isinstance(raw, dict):
        return float(raw) if isinstance(raw, (int, float)) else default
    k = raw.get("k")
    if isinstance(k, list) and k and isinstance(k[0], dict):
        k = k[0].get("s", default)
    if isinstance(k, list) and k:
        k = k[0]
    return float(k) if isinstance(k, (int, float)) else default


def _parse_transform(raw: Any) -> Transform2D:
    if not isinstance(raw, dict):
        return Transform2D()
    return Transform2D(
        anchor=_static_vector(raw.get("a"), (0.0, 0.0)),
        position=_static_vector(raw.get("p"), (0.0, 0.0)),
        scale=_static_vector(raw.get("s"), (100.0, 100.0), scale=1.0 / 100.0)
        if raw.get("s") is not None
        else (1.0, 1.0),
        rotation=_static_scalar(raw.get("r"), 0.0),
    )


def _parse_bezier(raw: Any, path: str) -> Optional[BezierPath]:
    """Geometry of a path item; animated paths contribute their first shape."""
    if not isinstance(raw, dict):
        return None
    k = raw.get("k")
    if isinstance(k, list) and k and isinstance(k[0], dict):
        s = k[0].get("s")
        k = s[0] if isinstance(s, list) and s and isinstance(s[0], dict) else s
    if not isinstance(k, dict):
        return None
    v, i, o = k.get("v"), k.get("i"), k.get("o")
    if not (isinstance(v, list) and isinstance(i, list) and isinstance(o, list)):
        return None
    if not (len(v) == len(i) == len(o)):
        _fail(path, "path v/i/o arrays must have equal length")

    def pts(arr):
        return [(float(p[0]), float(p[1])) for p in arr]

    return BezierPath(pts(v), pts(i), pts(o), bool(k.get("c", False)))


_ITEM_KINDS = {"gr": "group", "sh": "path", "fl": "fill", "st": "stroke", "tr": "transform"}


def _parse_shape_item(raw: Any, path: str) -> ShapeItem:
    if not isinstance(raw, dict):
        _fail(path, "expected a shape item object")
    kind = _ITEM_KINDS.get(raw.get("ty"), "unsupported")
    if kind == "unsupported":
        return ShapeItem("unsupported", extra=dict(raw))
    if kind == "group":
        items = raw.get("it", [])
        if not isinstance(items, list):
            _fail(f"{path}.it", "expected a list")
        children = [
            _parse_shape_item(item, f"{path}.it[{j}]") for j, item in enumerate(items)
        ]
        extra = {k: v for k, v in raw.items() if k not in ("ty", "it")}
        return ShapeItem("group", extra=extra, children=children)
    if kind == "path":
        extra = {k: v for k, v in raw.items() if k != "ty"}
        return ShapeItem("path", extra=extra, path=_parse_bezier(raw.get("ks"), f"{path}.ks"))
    if kind == "transform":
        extra = {k: v for k, v in raw.items() if k != "ty"}
        return ShapeItem("transform", extra=extra, transform=_parse_transform(raw))
    # fill / stroke
    paint = _parse_color_property(raw.get("c"), f"{path}.c")
    opacity = _static_scalar(raw.get("o"), 100.0) / 100.0
    extra = {k: v for k, v in raw.items() if k not in ("ty", "c")}
    return ShapeItem(kind, extra=extra, paint=paint, opacity=max(0.0, min(1.0, opacity)))


_LAYER_TYPES = {4: "shape", 0: "precomposition"}


def _parse_layer(raw: Any, path: str) -> Layer:
    if not isinstance(raw, dict):
        _fail(path, "expected a layer object")
    layer_type = _LAYER_TYPES.get(raw.get("ty"), "unsupported")
    if layer_type == "unsupported":
        return Layer("unsupported", extra=dict(raw))
    ip = _require_number(raw, "ip", path)
    op = _require_number(raw, "op", path)
    if ip > op:
        _fail(path, f"layer in_point {ip} exceeds out_point {op}")
    shapes: list[ShapeItem] = []
    owned = {"shapes"} if layer_type == "shape" else set()
    if layer_type == "shape":
        raw_shapes = raw.get("shapes", [])
        if not isinstance(raw_shapes, list):
            _fail(f"{path}.shapes", "expected a list")
        shapes = [
            _parse_shape_item(item, f"{path}.shapes[{j}]")
            for j, item in enumerate(raw_shapes)
        ]
    return Layer(
        layer_type,
        extra={k: v for k, v in raw.items() if k not in owned},
        shapes=shapes,
        transform=_parse_transform(raw.get("ks")),
        name=raw.get("nm") if isinstance(raw.get("nm"), str) else None,
        index=raw.get("ind") if isinstance(raw.get("ind"), int) else None,
        in_point=ip,
        out_point=op,
    )


def parse_document(data: "str | bytes") -> LottieDocument:
    """Parse Lottie JSON text into the typed document model."""
    try:
        raw = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedJson(f"input is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise UnsupportedDocument("$: document root must be a JSON object")
    fr = _require_number(raw, "fr", "$")
    ip = _require_number(raw, "ip", "$")
    op = _require_number(raw, "op", "$")
    if fr <= 0:
        _fail("$.fr", f"frame rate must be positive, got {fr}")
    if not ip < op:
        _fail("$", f"in_point {ip} must be below out_point {op}")
    raw_layers = raw.get("layers", [])
    if not isinstance(raw_layers, list):
        _fail("$.layers", "expected a list")
    layers = [_parse_layer(l, f"$.layers[{i}]") for i, l in enumerate(raw_layers)]
    return LottieDocument(
        frame_rate=fr,
        in_point=ip,
        out_point=op,
        width=raw.get("w", 0),
        height=raw.get("h", 0),
        layers=layers,
        extra={k: v for k, v in raw.items() if k != "layers"},
    )


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _color_array(c: Rgba) -> list[float]:
    return [c.r, c.g, c.b, c.a]


def _serialize_color_property(p: ColorProperty) -> dict:
    if not p.animated:
        return {"a": 0, "k": _color_array(p.static_value), **p.extra}
    frames = []
    for i, kf in enumerate(p.keyframes):
        entry = {"t": kf.frame, "s": _color_array(kf.value), **kf.extra}
        if "e" in entry:
            # Legacy end values must track the edited next keyframe.
            nxt = p.keyframes[i + 1] if i + 1 < len(p.keyframes) else kf
            entry["e"] = _color_array(nxt.value)
        frames.append(entry)
    return {"a": 1, "k": frames, **p.extra}


def _serialize_shape_item(item: ShapeItem) -> dict:
    if item.kind == "unsupported":
        return item.extra
    ty = {v: k for k, v in _ITEM_KINDS.items()}[item.kind]
    out: dict = {"ty": ty}
    if item.kind == "group":
        out.update(item.extra)
        out["it"] = [_serialize_shape_item(ch) for ch in item.children]
    elif item.kind in ("fill", "stroke"):
        out.update(item.extra)
        out["c"] = _serialize_color_property(item.paint)
    else:
        out.update(item.extra)
    return out


def _serialize_layer(layer: Layer) -> dict:
    if layer.layer_type != "shape":
        return layer.extra
    out = dict(layer.extra)
    out["shapes"] = [_serialize_shape_item(item) for item in layer.shapes]
    return out


def serialize_document(doc: LottieDocument, indent: "int | None" = None) -> str:
    """Serialize back to Lottie JSON; opaque fields are written unchanged."""
    out = dict(doc.extra)
    out["layers"] = [_serialize_layer(layer) for layer in doc.layers]
    return json.dumps(out, ensure_ascii=False, indent=indent)


# ---------------------------------------------------------------------------
# Addressing and evaluation
# ---------------------------------------------------------------------------

_SLOT_BY_KIND = {"fill": "fill", "stroke": "stroke"}


def resolve_address(doc: LottieDocument, addr: ColorAddress) -> ShapeItem:
    """Return the unique fill/stroke item the address points at."""
    if not 0 <= addr.layer_index < len(doc.layers):
        raise AddressNotFound(f"no layer at index {addr.layer_index}")
    layer = doc.layers[addr.layer_index]
    if layer.layer_type != "shape":
        raise AddressNotFound(f"layer {addr.layer_index} is not a shape layer")
    items = layer.shapes
    node: Optional[ShapeItem] = None
    for depth, idx in enumerate(addr.shape_path):
        if not 0 <= idx < len(items):
            raise AddressNotFound(
                f"no item at $.layers[{addr.layer_index}]"
                + "".join(f"[{i}]" for i in addr.shape_path[: depth + 1])
            )
        node = items[idx]
        items = node.children
    if node is None or _SLOT_BY_KIND.get(node.kind) != addr.slot:
        raise AddressNotFound(f"address {addr} does not point at a {addr.slot}")
    return node


def iter_paints(doc: LottieDocument) -> Iterator[tuple[ColorAddress, ShapeItem, Layer]]:
    """Yield every fill/stroke with its address, in document order."""

    def walk(items: list[ShapeItem], prefix: tuple[int, ...], li: int, layer: Layer):
        for idx, item in enumerate(items):
            if item.is_paint:
                yield ColorAddress(li, prefix + (idx,), item.kind), item, layer
            elif item.kind == "group":
                yield from walk(item.children, prefix + (idx,), li, layer)

    for li, layer in enumerate(doc.layers):
        if layer.layer_type == "shape":
            yield from walk(layer.shapes, (), li, layer)


def _lerp_color(a: Rgba, b: Rgba, t: float) -> Rgba:
    return Rgba(
        a.r + (b.r - a.r) * t,
        a.g + (b.g - a.g) * t,
        a.b + (b.b - a.b) * t,
        a.a + (b.a - a.a) * t,
    )


def color_at(paint: ColorProperty, frame: float, interpolate: bool = True) -> Rgba:
    """Evaluate a paint at a frame.

    ``interpolate=True`` blends linearly between keyframes (display
    semantics); ``interpolate=False`` holds each keyframe's value until the
    next one (segment semantics used by occurrence extraction).
    """
    if not paint.animated:
        return paint.static_value
    kfs = paint.keyframes
    if frame <= kfs[0].frame:
        return kfs[0].value
    for i in range(len(kfs) - 1):
        if frame < kfs[i + 1].frame:
            if not interpolate:
                return kfs[i].value
            span = kfs[i + 1].frame - kfs[i].frame
            t = (frame - kfs[i].frame) / span if span > 0 else 0.0
            return _lerp_color(kfs[i].value, kfs[i + 1].value, t)
    return kfs[-1].value
