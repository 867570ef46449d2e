"""Color analysis and recoloring for Lottie vector animations.

The pipeline: parse a document, extract color occurrences (who paints what,
where, when), cluster them into a theme, lay them out as a per-column scene
palette and an element tree, then recolor through invertible edits. A CLI
and an HTTP session service wrap the same library calls.
"""

from .colorspace import (
    Hsl,
    Lab,
    Rgba,
    delta_e,
    hsl_to_rgb,
    lab_to_rgb,
    rgb_delta_e,
    rgb_to_hsl,
    rgb_to_lab,
)
from .elements import ColorBubble, ElementEntry, build_element_list, elements_with_color
from .errors import (
    AddressNotFound,
    EmptyDocument,
    EmptyGroup,
    EmptyLog,
    FrameOutOfRange,
    LottieColorError,
    MalformedJson,
    OutOfBounds,
    RgbEditNotAllowed,
    UnknownColor,
    UnknownSession,
    UnsupportedDocument,
    ZeroWeightDocument,
)
from .lottie import (
    ColorAddress,
    ColorKeyframe,
    ColorProperty,
    Layer,
    LottieDocument,
    ShapeItem,
    color_at,
    iter_paints,
    parse_document,
    resolve_address,
    serialize_document,
)
from .occurrences import (
    ColorOccurrence,
    OccurrenceSet,
    distinct_colors,
    extract_occurrences,
    proportion,
)
from .palette import (
    ALPHA_MAX,
    ALPHA_MIN,
    DEFAULT_ALPHA,
    ColorBlock,
    FrozenOrder,
    PaletteColumn,
    ScenePalette,
    build_palette,
    column_at_frame,
    default_step,
    palette_to_json,
    palette_to_svg,
    recolor_blocks,
    rezoom,
)
from .recolor import (
    ColorGroup,
    EditCommand,
    EditLog,
    HslShift,
    apply_frame_isolated,
    apply_group_shift,
    apply_set_rgb,
    apply_set_rgb_group,
    group_auto,
    group_edit_members,
    group_manual,
    shift_color,
    undo,
)
from .service import ServiceConfig, SessionStore, create_app
from .theme import (
    DEFAULT_SIMILARITY_THRESHOLD,
    ThemeConfig,
    ThemeSwatch,
    color_weights,
    extract_theme,
    similar_colors,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # colorspace
    "Rgba",
    "Hsl",
    "Lab",
    "rgb_to_lab",
    "lab_to_rgb",
    "rgb_to_hsl",
    "hsl_to_rgb",
    "delta_e",
    "rgb_delta_e",
    # document
    "LottieDocument",
    "Layer",
    "ShapeItem",
    "ColorProperty",
    "ColorKeyframe",
    "ColorAddress",
    "parse_document",
    "serialize_document",
    "resolve_address",
    "iter_paints",
    "color_at",
    # occurrences
    "ColorOccurrence",
    "OccurrenceSet",
    "extract_occurrences",
    "proportion",
    "distinct_colors",
    # theme
    "ThemeConfig",
    "ThemeSwatch",
    "color_weights",
    "extract_theme",
    "similar_colors",
    "DEFAULT_SIMILARITY_THRESHOLD",
    # palette
    "ScenePalette",
    "PaletteColumn",
    "ColorBlock",
    "FrozenOrder",
    "build_palette",
    "default_step",
    "rezoom",
    "recolor_blocks",
    "column_at_frame",
    "palette_to_json",
    "palette_to_svg",
    "ALPHA_MIN",
    "ALPHA_MAX",
    "DEFAULT_ALPHA",
    # elements
    "ElementEntry",
    "ColorBubble",
    "build_element_list",
    "elements_with_color",
    # recolor
    "ColorGroup",
    "HslShift",
    "EditCommand",
    "EditLog",
    "group_auto",
    "group_manual",
    "group_edit_members",
    "shift_color",
    "apply_group_shift",
    "apply_set_rgb",
    "apply_set_rgb_group",
    "apply_frame_isolated",
    "undo",
    # service
    "ServiceConfig",
    "SessionStore",
    "create_app",
    # errors
    "LottieColorError",
    "MalformedJson",
    "UnsupportedDocument",
    "AddressNotFound",
    "UnknownColor",
    "EmptyGroup",
    "EmptyDocument",
    "ZeroWeightDocument",
    "OutOfBounds",
    "FrameOutOfRange",
    "EmptyLog",
    "RgbEditNotAllowed",
    "UnknownSession",
]
