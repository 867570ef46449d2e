"""Builders for synthetic Lottie documents used across the test suite.

Everything is constructed as raw JSON dicts, the same shape a real exporter
would emit, so tests exercise the full parse path.
"""

from __future__ import annotations

import random

from oracles import hsl_reference, hsl_to_rgb_reference

# ---------------------------------------------------------------------------
# Hex helpers (raw, independent of the package)
# ---------------------------------------------------------------------------


def hex_to_components(value: str) -> list:
    value = value.lstrip("#")
    return [int(value[i : i + 2], 16) / 255.0 for i in (0, 2, 4)]


def components_to_hex(rgb) -> str:
    return "#" + "".join(format(round(c * 255), "02x") for c in rgb[:3])


def hue_shifted_hex(value: str, degrees: float, dl: float = 0.0) -> str:
    h, s, l = hsl_reference(*hex_to_components(value))
    l = max(0.0, min(1.0, l + dl))
    return components_to_hex(hsl_to_rgb_reference(h + degrees, s, l))


# ---------------------------------------------------------------------------
# Shape/layer/document builders
# ---------------------------------------------------------------------------


def rect_path(width: float, height: float, x: float = 0.0, y: float = 0.0) -> dict:
    zeros = [[0, 0], [0, 0], [0, 0], [0, 0]]
    return {
        "ty": "sh",
        "ks": {
            "a": 0,
            "k": {
                "c": True,
                "v": [[x, y], [x + width, y], [x + width, y + height], [x, y + height]],
                "i": zeros,
                "o": zeros,
            },
        },
    }


def fill_item(color: str, opacity: float = 100.0, **extra) -> dict:
    return {
        "ty": "fl",
        "c": {"a": 0, "k": hex_to_components(color) + [1.0]},
        "o": {"a": 0, "k": opacity},
        **extra,
    }


def stroke_item(color: str, width: float = 2.0, opacity: float = 100.0) -> dict:
    return {
        "ty": "st",
        "c": {"a": 0, "k": hex_to_components(color) + [1.0]},
        "o": {"a": 0, "k": opacity},
        "w": {"a": 0, "k": width},
    }


def keyframed_fill(stops, legacy_end: bool = False, wrapped: bool = False) -> dict:
    """Fill whose color animates through (frame, hex) stops."""
    frames = []
    for i, (t, color) in enumerate(stops):
        value = hex_to_components(color) + [1.0]
        if wrapped:
            value = [value]
        if legacy_end and i == len(stops) - 1:
            frames.append({"t": t})  # value carried by the previous "e"
            continue
        entry = {"t": t, "s": value}
        if legacy_end and i + 1 < len(stops):
            nxt = hex_to_components(stops[i + 1][1]) + [1.0]
            entry["e"] = [nxt] if wrapped else nxt
        frames.append(entry)
    return {"ty": "fl", "c": {"a": 1, "k": frames}, "o": {"a": 0, "k": 100}}


def transform_item(
    position=(0.0, 0.0), anchor=(0.0, 0.0), scale=(100.0, 100.0), rotation=0.0
) -> dict:
    return {
        "ty": "tr",
        "p": {"a": 0, "k": list(position)},
        "a": {"a": 0, "k": list(anchor)},
        "s": {"a": 0, "k": list(scale)},
        "r": {"a": 0, "k": rotation},
        "o": {"a": 0, "k": 100},
    }


def group(*items, name=None) -> dict:
    out = {"ty": "gr", "it": list(items)}
    if name:
        out["nm"] = name
    return out


def shape_layer(shapes, name="layer", ip=0, op=60, index=None, **extra) -> dict:
    out = {
        "ty": 4,
        "nm": name,
        "ip": ip,
        "op": op,
        "st": 0,
        "ks": {},
        "shapes": shapes,
        **extra,
    }
    if index is not None:
        out["ind"] = index
    return out


def document(layers, fr=30, ip=0, op=60, w=512, h=512, **extra) -> dict:
    return {
        "v": "5.7.4",
        "fr": fr,
        "ip": ip,
        "op": op,
        "w": w,
        "h": h,
        "nm": "fixture",
        "layers": layers,
        **extra,
    }


def simple_rect_doc(color="#0000ff", width=100.0, height=50.0, **doc_kwargs) -> dict:
    return document(
        [
            shape_layer(
                [group(rect_path(width, height), fill_item(color), transform_item())],
                name="rect",
            )
        ],
        **doc_kwargs,
    )


# ---------------------------------------------------------------------------
# Roundtrip corpus
# ---------------------------------------------------------------------------


def static_fill_doc() -> dict:
    return simple_rect_doc("#336699")


def keyframed_fill_doc() -> dict:
    layer = shape_layer(
        [
            group(
                rect_path(120, 80),
                keyframed_fill([(0, "#ff0000"), (20, "#00ff00"), (40, "#0000ff")]),
                transform_item(position=(30, 30)),
            )
        ],
        name="pulse",
    )
    return document([layer])


def nested_groups_doc() -> dict:
    inner = group(
        rect_path(40, 40),
        fill_item("#aa00aa"),
        transform_item(position=(5, 5), rotation=30),
        name="inner",
    )
    outer = group(
        rect_path(200, 100),
        fill_item("#00aaaa"),
        inner,
        transform_item(position=(50, 50), scale=(150, 50)),
        name="outer",
    )
    return document([shape_layer([outer], name="nested")])


def stroke_fill_doc() -> dict:
    layer = shape_layer(
        [
            group(
                rect_path(90, 90),
                fill_item("#224488"),
                stroke_item("#ffcc00", width=4),
                transform_item(),
            )
        ],
        name="outlined",
    )
    return document([layer])


def opaque_layer_doc() -> dict:
    """Mixes a supported shape layer with structures kept opaquely."""
    solid = {
        "ty": 1,
        "nm": "backdrop",
        "ip": 0,
        "op": 60,
        "sc": "#ff00ff",
        "sw": 512,
        "sh": 512,
        "weird": {"nested": [1, 2, {"deep": True}]},
    }
    gradient = {
        "ty": "gf",
        "o": {"a": 0, "k": 100},
        "g": {"p": 2, "k": {"a": 0, "k": [0, 1, 0, 0, 1, 0, 0, 1]}},
    }
    star = {"ty": "sr", "pt": {"a": 0, "k": 5}}
    layer = shape_layer(
        [
            group(
                rect_path(64, 64),
                gradient,
                star,
                fill_item("#123456", bm=3, custom_flag="kept"),
                transform_item(),
            )
        ],
        name="mixed",
        ddd=0,
        markers=[{"tm": 10, "cm": "scene"}],
    )
    return document([solid, layer], meta={"generator": "tests", "a": [1, 2]})


def roundtrip_corpus() -> dict:
    return {
        "static_fill": static_fill_doc(),
        "keyframed_fill": keyframed_fill_doc(),
        "nested_groups": nested_groups_doc(),
        "stroke_fill": stroke_fill_doc(),
        "opaque_layer": opaque_layer_doc(),
    }


# ---------------------------------------------------------------------------
# Analysis fixtures
# ---------------------------------------------------------------------------


def shared_color_doc() -> dict:
    """Three layers painting the same color, plus one odd layer."""
    layers = [
        shape_layer(
            [group(rect_path(50, 50), fill_item("#888800"), transform_item())],
            name=f"twin{i}",
            ip=0,
            op=40 + 10 * i,
        )
        for i in range(3)
    ]
    layers.append(
        shape_layer(
            [group(rect_path(20, 20), fill_item("#004488"), transform_item())],
            name="odd",
        )
    )
    return document(layers)


def dialect_doc() -> dict:
    """Exporter quirks: 0-255 channels, 3-component colors, wrapped values."""
    plain = {
        "ty": "fl",
        "c": {"a": 0, "k": [140, 80, 255]},  # 0-255 scale, no alpha
        "o": {"a": 0, "k": 100},
    }
    wrapped = keyframed_fill([(0, "#ff8800"), (30, "#0088ff")], wrapped=True)
    legacy = keyframed_fill([(0, "#112233"), (25, "#445566")], legacy_end=True)
    layers = [
        shape_layer([group(rect_path(30, 30), plain, transform_item())], name="plain"),
        shape_layer([group(rect_path(40, 40), wrapped, transform_item())], name="wrap"),
        shape_layer([group(rect_path(50, 50), legacy, transform_item())], name="old"),
    ]
    return document(layers)


def random_doc(rng: random.Random, max_layers=4, palette=None) -> dict:
    """Small random document; colors drawn from a bounded palette."""
    palette = palette or [
        "#d32f2f", "#1976d2", "#388e3c", "#fbc02d", "#7b1fa2", "#00838f",
        "#5d4037", "#c2185b",
    ]
    layers = []
    for li in range(rng.randint(1, max_layers)):
        items = [rect_path(rng.randint(10, 200), rng.randint(10, 200))]
        if rng.random() < 0.3:
            stops = sorted(rng.sample(range(0, 60), 2))
            items.append(
                keyframed_fill(
                    [(stops[0], rng.choice(palette)), (stops[1], rng.choice(palette))]
                )
            )
        else:
            items.append(fill_item(rng.choice(palette)))
        if rng.random() < 0.5:
            items.append(stroke_item(rng.choice(palette)))
        items.append(transform_item(position=(rng.randint(0, 400), rng.randint(0, 400))))
        ip = rng.choice([0, 0, 10])
        layers.append(
            shape_layer([group(*items)], name=f"L{li}", ip=ip, op=rng.randint(30, 60))
        )
    return document(layers)


# ---------------------------------------------------------------------------
# Scenario fixtures
# ---------------------------------------------------------------------------

RETARGET_TARGETS = ["#023e73", "#085ca6", "#8c4265", "#d9b97e"]
RETARGET_HUE_DELTA = 40.0
RETARGET_THRESHOLD = 14.0
RETARGET_SOURCES = [hue_shifted_hex(t, RETARGET_HUE_DELTA) for t in RETARGET_TARGETS]
_ACCENT_GRAY = "#2b2b2b"


def four_scene_doc() -> dict:
    """Four back-to-back scenes, one color family per scene.

    Scene colors are the retarget sources (hue-rotated away from the target
    palette); rose and gold scenes carry a lighter shade accent, every scene
    carries a small neutral gray. 120 frames at 30 fps.
    """
    scene_len = 30
    sizes = [512, 500, 488, 476]
    layers = []
    for i, source in enumerate(RETARGET_SOURCES):
        ip, op = i * scene_len, (i + 1) * scene_len
        items = [
            group(
                rect_path(sizes[i], sizes[i]),
                fill_item(source),
                transform_item(),
                name=f"bg{i}",
            )
        ]
        if i >= 2:  # shade accents only where families stay separable
            shade = hue_shifted_hex(source, 0.0, dl=0.08)
            items.append(
                group(
                    rect_path(80, 80),
                    fill_item(shade),
                    transform_item(position=(60, 60)),
                    name=f"accent{i}",
                )
            )
        items.append(
            group(
                rect_path(24, 24),
                fill_item(_ACCENT_GRAY),
                transform_item(position=(400, 30)),
                name=f"dot{i}",
            )
        )
        layers.append(shape_layer(items, name=f"scene{i}", ip=ip, op=op, index=i + 1))
    return document(layers, op=4 * scene_len)


def big_doc(shapes=200, fr=30, seconds=60, distinct=40) -> dict:
    """Many-shape document for throughput checks."""
    rng = random.Random(7)
    op = fr * seconds
    palette = []
    while len(palette) < distinct:
        color = "#" + "".join(format(rng.randint(0, 255), "02x") for _ in range(3))
        if color not in palette:
            palette.append(color)
    per_layer = 10
    layers = []
    for li in range(shapes // per_layer):
        items = []
        for si in range(per_layer):
            idx = (li * per_layer + si) % distinct
            items.append(
                group(
                    rect_path(20 + (si * 13) % 150, 20 + (li * 7) % 150),
                    fill_item(palette[idx]),
                    transform_item(position=((si * 40) % 480, (li * 25) % 480)),
                    name=f"g{li}_{si}",
                )
            )
        layers.append(shape_layer(items, name=f"L{li}", ip=0, op=op))
    return document(layers, fr=fr, op=op)
