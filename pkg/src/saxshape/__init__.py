"""SAX words for time-series and binary shapes, and nearest-word shape classification."""
from .classifier import (
    ClassificationResult,
    WordSetDatabase,
    build_word_sets,
    classify,
    classify_image,
    rotation_variants,
)
from .errors import (
    DegenerateClassError,
    DegenerateShapeError,
    EmptyShapeError,
    InvalidInputError,
    ParseError,
    SaxError,
    UnsupportedAlphabetError,
)
from .sax import (
    NormalizationStats,
    SaxConfig,
    SaxWord,
    TransitionEvent,
    breakpoints,
    detect_transitions,
    discretize,
    paa,
    sax_transform,
    word_distance,
    znormalize,
)
from .signature import (
    BinaryImage,
    Centroid,
    ShapeSignature,
    centroid,
    extract_contour,
    rotate_image,
    signature,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryImage",
    "Centroid",
    "ClassificationResult",
    "DegenerateClassError",
    "DegenerateShapeError",
    "EmptyShapeError",
    "InvalidInputError",
    "NormalizationStats",
    "ParseError",
    "SaxConfig",
    "SaxError",
    "SaxWord",
    "ShapeSignature",
    "TransitionEvent",
    "UnsupportedAlphabetError",
    "WordSetDatabase",
    "breakpoints",
    "build_word_sets",
    "centroid",
    "classify",
    "classify_image",
    "detect_transitions",
    "discretize",
    "extract_contour",
    "paa",
    "rotate_image",
    "rotation_variants",
    "sax_transform",
    "signature",
    "word_distance",
    "znormalize",
]
