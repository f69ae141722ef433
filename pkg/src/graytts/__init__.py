"""Twofold triple systems with cyclic 2-intersecting Gray codes."""

from .design import (
    TripleSystem,
    ValidationReport,
    normalize_certificate,
    validate_tts,
    verify_certificate,
)
from .graphs import IntersectionGraph, build_ibig, girth, is_bipartite, is_connected

__all__ = [
    "TripleSystem",
    "ValidationReport",
    "IntersectionGraph",
    "build_ibig",
    "girth",
    "is_bipartite",
    "is_connected",
    "normalize_certificate",
    "validate_tts",
    "verify_certificate",
]

__version__ = "0.1.0"
