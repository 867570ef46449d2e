"""Independent reference implementations used to cross-check the library.

Everything here is written from the underlying math or the raw JSON layout,
never by calling into the package, so a test that compares both routes is a
genuine two-author check.
"""

from __future__ import annotations

import itertools
import math

# ---------------------------------------------------------------------------
# Color math
# ---------------------------------------------------------------------------

_SRGB_TO_XYZ = (
    (0.4124564, 0.3575761, 0.1804375),
    (0.2126729, 0.7151522, 0.0721750),
    (0.0193339, 0.1191920, 0.9503041),
)
# Reference white taken as the matrix image of RGB (1,1,1) so that pure white
# is exactly neutral by construction.
_WHITE_XYZ = tuple(sum(row) for row in _SRGB_TO_XYZ)

_EPS = 216.0 / 24389.0
_KAPPA = 24389.0 / 27.0


def _gamma_expand(channel: float) -> float:
    if channel <= 0.04045:
        return channel / 12.92
    return ((channel + 0.055) / 1.055) ** 2.4


def lab_reference(r: float, g: float, b: float) -> tuple:
    """sRGB in [0,1] to CIE LAB under D65, by the standard formulas."""
    linear = [_gamma_expand(c) for c in (r, g, b)]
    xyz = []
    for row, white in zip(_SRGB_TO_XYZ, _WHITE_XYZ):
        value = row[0] * linear[0] + row[1] * linear[1] + row[2] * linear[2]
        xyz.append(value / white)

    def f(t: float) -> float:
        if t > _EPS:
            return t ** (1.0 / 3.0)
        return (_KAPPA * t + 16.0) / 116.0

    fx, fy, fz = (f(t) for t in xyz)
    if xyz[1] > _EPS:
        lightness = 116.0 * fy - 16.0
    else:
        lightness = _KAPPA * xyz[1]
    return (lightness, 500.0 * (fx - fy), 200.0 * (fy - fz))


def delta_e_reference(lab1: tuple, lab2: tuple) -> float:
    return math.sqrt(sum((p - q) ** 2 for p, q in zip(lab1, lab2)))


def hsl_reference(r: float, g: float, b: float) -> tuple:
    """RGB in [0,1] to (hue degrees, saturation, lightness), textbook form."""
    high = max(r, g, b)
    low = min(r, g, b)
    lightness = (high + low) / 2.0
    if high == low:
        return (0.0, 0.0, lightness)
    chroma = high - low
    if lightness > 0.5:
        saturation = chroma / (2.0 - high - low)
    else:
        saturation = chroma / (high + low)
    if high == r:
        hue = ((g - b) / chroma) % 6.0
    elif high == g:
        hue = (b - r) / chroma + 2.0
    else:
        hue = (r - g) / chroma + 4.0
    return (hue * 60.0, saturation, lightness)


def hsl_to_rgb_reference(h: float, s: float, l: float) -> tuple:
    """(hue degrees, saturation, lightness) back to RGB via the sector table."""
    h = h % 360.0
    chroma = (1.0 - abs(2.0 * l - 1.0)) * s
    x = chroma * (1.0 - abs((h / 60.0) % 2.0 - 1.0))
    m = l - chroma / 2.0
    sector = int(h // 60.0) % 6
    r, g, b = (
        (chroma, x, 0.0),
        (x, chroma, 0.0),
        (0.0, chroma, x),
        (0.0, x, chroma),
        (x, 0.0, chroma),
        (chroma, 0.0, x),
    )[sector]
    return (r + m, g + m, b + m)


# ---------------------------------------------------------------------------
# JSON tree comparison
# ---------------------------------------------------------------------------


def diff_paths(a, b, tol: float = 1e-9, path: str = "$") -> list:
    """JSONPath strings where the two trees differ beyond the tolerance."""
    a_num = isinstance(a, (int, float)) and not isinstance(a, bool)
    b_num = isinstance(b, (int, float)) and not isinstance(b, bool)
    if a_num and b_num:
        return [] if abs(a - b) <= tol else [path]
    if isinstance(a, dict) and isinstance(b, dict):
        diffs = []
        for key in sorted(set(a) | set(b)):
            here = f"{path}.{key}"
            if key not in a or key not in b:
                diffs.append(here)
            else:
                diffs.extend(diff_paths(a[key], b[key], tol, here))
        return diffs
    if isinstance(a, list) and isinstance(b, list):
        if len(a) != len(b):
            return [path]
        diffs = []
        for i, (x, y) in enumerate(zip(a, b)):
            diffs.extend(diff_paths(x, y, tol, f"{path}[{i}]"))
        return diffs
    return [] if a == b else [path]


def semantic_equal(a, b, tol: float = 1e-9) -> bool:
    return not diff_paths(a, b, tol)


# ---------------------------------------------------------------------------
# Raw-JSON paint evaluation
# ---------------------------------------------------------------------------


def normalize_color_values(values) -> tuple:
    comps = [float(v) for v in values[:4]]
    if any(v > 1.0 for v in comps):
        comps = [v / 255.0 for v in comps]
    if len(comps) == 3:
        comps.append(1.0)
    return tuple(comps)


def _keyframe_value(entry):
    value = entry
    if isinstance(value, list) and len(value) == 1 and isinstance(value[0], list):
        value = value[0]
    return normalize_color_values(value)


def raw_color_at(raw_doc, layer_index, shape_path, slot, frame) -> tuple:
    """Evaluate a fill/stroke color straight from the JSON, linear easing."""
    item = raw_shape_item(raw_doc, layer_index, shape_path)
    expected_ty = {"fill": "fl", "stroke": "st"}[slot]
    assert item["ty"] == expected_ty, f"item at {shape_path} is {item['ty']}"
    prop = item["c"]
    if not prop.get("a"):
        return normalize_color_values(prop["k"])
    frames = prop["k"]
    if frame <= frames[0]["t"]:
        return _keyframe_value(frames[0]["s"])
    for current, nxt in zip(frames, frames[1:]):
        if frame >= nxt["t"]:
            continue
        start = _keyframe_value(current["s"])
        if "e" in current:
            end = _keyframe_value(current["e"])
        else:
            end = _keyframe_value(nxt["s"])
        span = nxt["t"] - current["t"]
        u = (frame - current["t"]) / span
        return tuple(p + (q - p) * u for p, q in zip(start, end))
    last = frames[-1]
    return _keyframe_value(last.get("s", last.get("e")))


def raw_shape_item(raw_doc, layer_index, shape_path) -> dict:
    items = raw_doc["layers"][layer_index]["shapes"]
    for depth, index in enumerate(shape_path):
        if depth == len(shape_path) - 1:
            return items[index]
        items = items[index]["it"]
    raise AssertionError("empty shape path")


# ---------------------------------------------------------------------------
# Exhaustive weighted clustering
# ---------------------------------------------------------------------------


def brute_force_inertia(points: list, weights: list, k: int) -> float:
    """Optimal weighted within-cluster inertia over every k-labeling.

    Feasible for the small fixtures it guards (k^n assignments).
    """
    n = len(points)
    assert n >= k >= 1
    best = math.inf
    for labels in itertools.product(range(k), repeat=n):
        if len(set(labels)) != k:
            continue
        total = 0.0
        for cluster in range(k):
            idx = [i for i in range(n) if labels[i] == cluster]
            mass = sum(weights[i] for i in idx)
            if mass == 0.0:
                continue
            center = [
                sum(weights[i] * points[i][d] for i in idx) / mass for d in range(3)
            ]
            total += sum(
                weights[i]
                * sum((points[i][d] - center[d]) ** 2 for d in range(3))
                for i in idx
            )
        if total < best:
            best = total
    return best


def partition_inertia(clusters: list) -> float:
    """Inertia of an explicit [(point, weight), ...] per-cluster grouping."""
    total = 0.0
    for members in clusters:
        mass = sum(w for _, w in members)
        if mass == 0.0:
            continue
        center = [sum(w * p[d] for p, w in members) / mass for d in range(3)]
        total += sum(
            w * sum((p[d] - center[d]) ** 2 for d in range(3)) for p, w in members
        )
    return total
