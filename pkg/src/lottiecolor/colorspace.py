"""Color representations and conversions: sRGB, HSL, CIE LAB, DeltaE (CIE76).

All conversions assume sRGB with the D65 white point. The reference white is
taken from the row sums of the forward matrix so that pure white maps to
exactly L*=100, a*=b*=0.
"""

from __future__ import annotations

import colorsys
import math
from dataclasses import dataclass

__all__ = [
    "Rgba",
    "Hsl",
    "Lab",
    "rgb_to_lab",
    "lab_to_rgb",
    "rgb_to_hsl",
    "hsl_to_rgb",
    "delta_e",
    "rgb_delta_e",
]


def _clamp01(v: float) -> float:
    return 0.0 if v < 0.0 else 1.0 if v > 1.0 else v


@dataclass(frozen=True)
class Rgba:
    """A color with channels in [0, 1]. Out-of-range inputs are clamped."""

    r: float
    g: float
    b: float
    a: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "r", _clamp01(float(self.r)))
        object.__setattr__(self, "g", _clamp01(float(self.g)))
        object.__setattr__(self, "b", _clamp01(float(self.b)))
        object.__setattr__(self, "a", _clamp01(float(self.a)))

    @classmethod
    def from_hex(cls, text: str) -> "Rgba":
        """Parse #rgb, #rrggbb or #rrggbbaa (case-insensitive)."""
        s = text.strip().lstrip("#")
        if len(s) == 3:
            s = "".join(ch * 2 for ch in s)
        if len(s) not in (6, 8) or any(c not in "0123456789abcdefABCDEF" for c in s):
            raise ValueError(f"not a hex color: {text!r}")
        r = int(s[0:2], 16) / 255.0
        g = int(s[2:4], 16) / 255.0
        b = int(s[4:6], 16) / 255.0
        a = int(s[6:8], 16) / 255.0 if len(s) == 8 else 1.0
        return cls(r, g, b, a)

    def to_hex(self) -> str:
        """Lowercase #rrggbb; the alpha channel is not encoded."""
        return "#%02x%02x%02x" % (
            round(self.r * 255),
            round(self.g * 255),
            round(self.b * 255),
        )

    def sort_token(self) -> tuple:
        """Deterministic total-order key (hex first, exact channels after)."""
        return (self.to_hex(), self.r, self.g, self.b, self.a)


@dataclass(frozen=True)
class Hsl:
    """Hue in degrees [0, 360); saturation and lightness in [0, 1]."""

    h: float
    s: float
    l: float

    def __post_init__(self):
        object.__setattr__(self, "h", float(self.h) % 360.0)
        object.__setattr__(self, "s", _clamp01(float(self.s)))
        object.__setattr__(self, "l", _clamp01(float(self.l)))


@dataclass(frozen=True)
class Lab:
    L: float
    a: float
    b: float


# sRGB <-> XYZ (D65). White point = row sums, keeping white exactly neutral.
_M_FWD = (
    (0.4124564, 0.3575761, 0.1804375),
    (0.2126729, 0.7151522, 0.0721750),
    (0.0193339, 0.1191920, 0.9503041),
)


def _invert_3x3(m: tuple) -> tuple:
    (a, b, c), (d, e, f), (g, h, i) = m
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return (
        ((e * i - f * h) / det, (c * h - b * i) / det, (b * f - c * e) / det),
        ((f * g - d * i) / det, (a * i - c * g) / det, (c * d - a * f) / det),
        ((d * h - e * g) / det, (b * g - a * h) / det, (a * e - b * d) / det),
    )


# The published rounded inverse leaves ~2e-6 roundtrip residue on saturated
# colors; inverting the forward matrix directly keeps roundtrips tight.
_M_INV = _invert_3x3(_M_FWD)
_WHITE = tuple(sum(row) for row in _M_FWD)

_LAB_EPS = 216.0 / 24389.0
_LAB_KAPPA = 24389.0 / 27.0


def _srgb_to_linear(u: float) -> float:
    return u / 12.92 if u <= 0.04045 else ((u + 0.055) / 1.055) ** 2.4


def _linear_to_srgb(u: float) -> float:
    if u <= 0.0:
        return 0.0
    return 12.92 * u if u <= 0.0031308 else 1.055 * u ** (1.0 / 2.4) - 0.055


def _lab_f(t: float) -> float:
    return t ** (1.0 / 3.0) if t > _LAB_EPS else (_LAB_KAPPA * t + 16.0) / 116.0


def rgb_to_lab(c: Rgba) -> Lab:
    """sRGB -> linear -> XYZ (D65) -> CIE LAB. Alpha is ignored."""
    rl, gl, bl = _srgb_to_linear(c.r), _srgb_to_linear(c.g), _srgb_to_linear(c.b)
    xyz = [
        _M_FWD[i][0] * rl + _M_FWD[i][1] * gl + _M_FWD[i][2] * bl for i in range(3)
    ]
    xr, yr, zr = (xyz[i] / _WHITE[i] for i in range(3))
    # Exact form for L* keeps black at precisely (0, 0, 0).
    L = 116.0 * yr ** (1.0 / 3.0) - 16.0 if yr > _LAB_EPS else _LAB_KAPPA * yr
    fx, fy, fz = _lab_f(xr), _lab_f(yr), _lab_f(zr)
    return Lab(L, 500.0 * (fx - fy), 200.0 * (fy - fz))


def lab_to_rgb(c: Lab) -> Rgba:
    """Inverse of rgb_to_lab; out-of-gamut results are clamped per channel."""
    fy = (c.L + 16.0) / 116.0
    fx = fy + c.a / 500.0
    fz = fy - c.b / 200.0
    xr = fx**3 if fx**3 > _LAB_EPS else (116.0 * fx - 16.0) / _LAB_KAPPA
    yr = fy**3 if c.L > _LAB_KAPPA * _LAB_EPS else c.L / _LAB_KAPPA
    zr = fz**3 if fz**3 > _LAB_EPS else (116.0 * fz - 16.0) / _LAB_KAPPA
    x, y, z = xr * _WHITE[0], yr * _WHITE[1], zr * _WHITE[2]
    rl = _M_INV[0][0] * x + _M_INV[0][1] * y + _M_INV[0][2] * z
    gl = _M_INV[1][0] * x + _M_INV[1][1] * y + _M_INV[1][2] * z
    bl = _M_INV[2][0] * x + _M_INV[2][1] * y + _M_INV[2][2] * z
    return Rgba(_linear_to_srgb(rl), _linear_to_srgb(gl), _linear_to_srgb(bl))


def rgb_to_hsl(c: Rgba) -> Hsl:
    """Standard bi-hexcone HSL; achromatic colors normalize to h=0."""
    if max(c.r, c.g, c.b) + min(c.r, c.g, c.b) == 2.0:
        # Within one ulp of white the saturation denominator underflows.
        return Hsl(0.0, 0.0, 1.0)
    h, l, s = colorsys.rgb_to_hls(c.r, c.g, c.b)
    return Hsl(h * 360.0 if s != 0.0 else 0.0, s, l)


def hsl_to_rgb(c: Hsl, alpha: float = 1.0) -> Rgba:
    r, g, b = colorsys.hls_to_rgb(c.h / 360.0, c.l, c.s)
    return Rgba(r, g, b, alpha)


def delta_e(x: Lab, y: Lab) -> float:
    """CIE76 color difference: Euclidean distance in LAB."""
    return math.dist((x.L, x.a, x.b), (y.L, y.a, y.b))


def rgb_delta_e(x: Rgba, y: Rgba) -> float:
    return delta_e(rgb_to_lab(x), rgb_to_lab(y))
